"""Deterministic property/acceptance suite over one root-datum preset.

Every check is seeded per-name, so the report is byte-stable for a fixed
preset, seed, and bounds.  A failing check always carries a counterexample
payload with element literals and a command line that reproduces the
offending computation.  Checks are mutually independent (each builds its
state from the engine and its own seed) and could run in parallel; this
runner executes them sequentially and assembles the report in order.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .engine import Engine, build_engine
from .errors import BoundsTooLarge, Unrepresentable
from .ext_weyl import ExtWeylElement
from .groth_calc import COVERMA, FiltrationMultiset
from .laurent import ONE, ZERO, LaurentPolynomial
from .parabolic import in_awext, in_awext_s, min_rep
from .root_datum import pair, vec_add, vec_neg, vec_scale

MAX_KL_LEN = 14
MAX_WINDOW = 12
MAX_SAMPLES = 20000

DEFAULT_KL_LEN = {"A1_adj": 12, "A2_adj": 8, "B2_adj": 6, "A1xA1_adj": 8}
POINCARE_DEGREES = {
    "A1_adj": (2,),
    "A2_adj": (2, 3),
    "B2_adj": (2, 4),
    "A1xA1_adj": (2, 2),
}


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" or "fail"
    detail: str = ""
    counterexample: dict | None = None
    duration: float = 0.0


@dataclass
class SuiteReport:
    preset: str
    seed: int
    samples: int
    kl_maxlen: int
    window: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "preset": self.preset,
            "seed": self.seed,
            "samples": self.samples,
            "kl_maxlen": self.kl_maxlen,
            "window": self.window,
            "passed": self.passed,
            "checks": [],
        }
        for c in self.checks:
            entry = {"name": c.name, "status": c.status, "detail": c.detail}
            if c.counterexample is not None:
                entry["counterexample"] = c.counterexample
            if timings:
                entry["duration_s"] = round(c.duration, 3)
            out["checks"].append(entry)
        return out

    def to_tsv(self, timings: bool = False) -> str:
        lines = []
        for c in self.checks:
            cols = [c.name, c.status, c.detail]
            if c.counterexample is not None:
                cols.append(json.dumps(c.counterexample, sort_keys=True))
            if timings:
                cols.append(f"{c.duration:.3f}")
            lines.append("\t".join(cols))
        lines.append(f"overall\t{'pass' if self.passed else 'fail'}\t")
        return "\n".join(lines) + "\n"


class _Env:
    def __init__(self, engine: Engine, preset, seed, samples, kl_maxlen, window, fault):
        self.engine = engine
        self.preset = preset
        self.seed = seed
        self.samples = samples
        self.kl_maxlen = kl_maxlen
        self.window = window
        self.fault = fault
        self.shared: dict = {}

    def rng(self, name: str) -> random.Random:
        return random.Random(f"{self.seed}:{name}")

    def fmt(self, x: ExtWeylElement) -> str:
        return self.engine.ext.format_element(x)

    def cmd(self, *parts: str) -> str:
        return "alcove-hecke " + " ".join(parts)

    def length_fn(self):
        if self.fault == "length-sign-flip":
            # flip the sign condition on w(alpha) in the length formula;
            # note the naive |1+c| -> |1-c| flip is absorbed by the
            # complement identity and would not be detected there
            eng = self.engine

            def flipped(x: ExtWeylElement) -> int:
                d = eng.datum
                flips = d.root_sign_flips(x.w)
                total = 0
                for k, alpha in enumerate(d.positive_roots):
                    c = pair(alpha, x.t)
                    total += abs(c) if flips[k] else abs(1 + c)
                return total

            return flipped
        return self.engine.ext.length


# -- enumeration helpers ----------------------------------------------------


def antidominant_translations(engine: Engine, maxlen: int):
    d = engine.datum
    for cs in itertools.product(range(-maxlen, 1), repeat=d.rank):
        lam = d.section_lift(cs)
        if engine.ext.length(engine.ext.translation(lam)) <= maxlen:
            yield lam


def spherical_window(engine: Engine, maxlen: int) -> list[ExtWeylElement]:
    out = set()
    for y in engine.alc.restricted_elements():
        for lam in antidominant_translations(engine, maxlen):
            w = engine.ext.mul(y, engine.ext.translation(lam))
            if engine.ext.length(w) <= maxlen:
                out.add(w)
    return sorted(out)


def awext_window(engine: Engine, a, bound: int) -> list[ExtWeylElement]:
    out = []
    reps = [
        y for y in engine.alc.restricted_elements() if in_awext_s(engine.alc, y, a)
    ]
    for y in reps:
        for t in itertools.product(range(-bound, bound + 1), repeat=engine.datum.y_rank):
            out.append(engine.ext.mul(y, engine.ext.translation(t)))
    return sorted(set(out))


def _parabolic_cases(env: _Env):
    eng = env.engine
    cases = [("empty", eng.parabolic([]))]
    first = eng.ext.generators[0]
    cases.append((first.name, eng.parabolic([first.name])))
    if env.preset == "A1_adj":
        cases.append(("s0a", eng.parabolic(["s0a"])))
    if env.preset == "A2_adj":
        cases.append(("s1+s2", eng.parabolic(["s1", "s2"])))
    if env.preset == "B2_adj":
        cases.append(("s1+s2", eng.parabolic(["s1", "s2"])))
        cases.append(("s1+s0a", eng.parabolic(["s1", "s0a"])))
    return cases


# -- individual checks --------------------------------------------------------


def check_datum_invariants(env: _Env):
    eng = env.engine
    d = eng.datum
    for i, alpha_vee in enumerate(d.simple_coroots):
        if pair(d.two_rho, alpha_vee) != 2:
            return False, f"<2rho, coroot {i}> != 2", None
    # a simple reflection permutes the positive roots other than its own
    pos = set(d.positive_roots)
    for i, beta in enumerate(d.simple_roots):
        beta_vee = d.simple_coroots[i]
        image = set()
        for gamma in d.positive_roots:
            if gamma == beta:
                continue
            refl = tuple(
                g - pair(gamma, beta_vee) * b for g, b in zip(gamma, beta)
            )
            image.add(refl)
        if not image <= pos or len(image) != len(pos) - 1:
            return False, f"reflection in simple root {beta} does not permute the rest", None
    degrees = POINCARE_DEGREES.get(env.preset)
    if degrees is not None:
        got = LaurentPolynomial()
        for el in d.weyl_elements:
            got = got + LaurentPolynomial.monomial(2 * el.length)
        want = ONE
        for deg in degrees:
            factor = LaurentPolynomial({2 * i: 1 for i in range(deg)})
            want = want * factor
        if got != want:
            return False, f"Poincare polynomial {got} != {want}", None
    return True, f"|W|={d.weyl_order}, |R+|={len(d.positive_roots)}", None


def check_length_formula(env: _Env):
    eng = env.engine
    ext = eng.ext
    radius = 6
    dist = {ext.identity: 0}
    frontier = [ext.identity]
    for step in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for g in ext.generators:
                y = ext.mul(ext.gen_element(g), x)
                if y not in dist:
                    dist[y] = step
                    nxt.append(y)
        frontier = nxt
    for x, d0 in dist.items():
        if ext.length(x) != d0:
            ce = {"element": env.fmt(x), "formula": ext.length(x), "bfs": d0,
                  "command": env.cmd("wext", "len", "--datum", env.preset, "--elt", f"'{env.fmt(x)}'")}
            return False, "length formula disagrees with Cayley-graph distance", ce
    rng = env.rng("length-formula")
    omegas = ext.enumerate_omega(2)
    for _ in range(env.samples):
        x = ext.random_element(rng, 4)
        word, _ = ext.reduced_expression(x)
        if len(word) != ext.length(x):
            return False, "reduced word length mismatch", {"element": env.fmt(x)}
        om = omegas[rng.randrange(len(omegas))]
        if ext.length(ext.mul(om, x)) != ext.length(x) or ext.length(ext.mul(x, om)) != ext.length(x):
            return False, "length not invariant under length-zero factors", {"element": env.fmt(x)}
        y = ext.random_element(rng, 4)
        if ext.length(ext.mul(x, y)) > ext.length(x) + ext.length(y):
            return False, "length superadditive", {"lhs": env.fmt(x), "rhs": env.fmt(y)}
    return True, f"BFS ball of radius {radius}: {len(dist)} elements", None


def check_res_complement(env: _Env):
    eng = env.engine
    ext = eng.ext
    length = env.length_fn()
    base = ext.mul(ext.translation(eng.datum.varsigma), ext.w0)
    total = length(base)
    for x in eng.alc.restricted_elements():
        y = ext.mul(base, ext.inv(x))
        if length(x) + length(y) != total:
            ce = {
                "x": env.fmt(x),
                "y": env.fmt(y),
                "lengths": [length(x), length(y), total],
                "command": env.cmd("wext", "len", "--datum", env.preset, "--elt", f"'{env.fmt(x)}'"),
            }
            return False, "length complement identity fails", ce
    return True, f"exhaustive over {len(eng.alc.restricted_elements())} restricted elements", None


def check_lengths_add(env: _Env):
    eng = env.engine
    ext = eng.ext
    bound = min(10, env.kl_maxlen + 2)
    count = 0
    for w in spherical_window(eng, bound):
        for lam in antidominant_translations(eng, bound):
            t = ext.translation(lam)
            if ext.length(ext.mul(w, t)) != ext.length(w) + ext.length(t):
                ce = {"w": env.fmt(w), "lambda": list(lam),
                      "command": env.cmd("wext", "len", "--datum", env.preset, "--elt", f"'{env.fmt(ext.mul(w, t))}'")}
                return False, "lengths do not add", ce
            count += 1
    return True, f"exhaustive over {count} pairs (bound {bound})", None


def check_per_order_properties(env: _Env):
    eng = env.engine
    ext, order = eng.ext, eng.order
    rng = env.rng("per-order")
    target = env.samples
    gens = ext.generators
    counts = {1: 0, 2: 0, 4: 0, 5: 0}
    attempts = 0
    while min(counts.values()) < target and attempts < 400 * target:
        attempts += 1
        y = ext.random_element(rng, 2)
        g = gens[rng.randrange(len(gens))]
        sy = ext.mul(ext.gen_element(g), y)
        ce = {"y": env.fmt(y), "gen": g.name,
              "command": env.cmd("wext", "porder", "--datum", env.preset,
                                 "--lhs", f"'{env.fmt(sy)}'", "--rhs", f"'{env.fmt(y)}'")}
        if counts[1] < target:
            if not (order.leq(sy, y) or order.leq(y, sy)):
                return False, "part 1: neither sy nor y is below the other", ce
            counts[1] += 1
        # a partner biased toward comparability: stay in one affine coset
        word = [gens[rng.randrange(len(gens))] for _ in range(rng.randrange(3))]
        y2 = ext.mul(ext.word_to_element(word), y)
        if rng.randrange(2):
            shift = eng.datum.simple_coroots[rng.randrange(eng.datum.rank)]
            y2 = ext.mul(y2, ext.translation(vec_scale(rng.randint(-1, 1), shift)))
        ce["y2"] = env.fmt(y2)
        if counts[2] < target:
            mu = tuple(rng.randint(-2, 2) for _ in range(eng.datum.y_rank))
            tmu = ext.translation(mu)
            if order.leq(y, y2) != order.leq(ext.mul(y, tmu), ext.mul(y2, tmu)):
                return False, "part 2: order not translation invariant", ce
            counts[2] += 1
        if order.leq(y, y2):
            a, b = y, y2
        elif order.leq(y2, y):
            a, b = y2, y
        else:
            continue
        sa = ext.mul(ext.gen_element(g), a)
        sb = ext.mul(ext.gen_element(g), b)
        if counts[4] < target and order.leq(sa, a):
            if not (order.leq(sa, b) and order.leq(sa, sb)):
                return False, "part 4: descent compatibility fails", ce
            counts[4] += 1
        if counts[5] < target and order.leq(b, sb):
            if not (order.leq(a, sb) and order.leq(sa, sb)):
                return False, "part 5: ascent compatibility fails", ce
            counts[5] += 1
    if min(counts.values()) < target:
        return False, f"could not collect {target} instances per part", None
    # part 3: on the spherical window the periodic order is the Bruhat order
    window = spherical_window(eng, min(6, env.kl_maxlen))
    for x in window:
        for y in window:
            if order.leq(x, y) != ext.bruhat_leq(x, y):
                return False, "part 3: orders disagree on W_ext^S", {
                    "lhs": env.fmt(x), "rhs": env.fmt(y)}
    return True, f"{target} instances per part; part 3 on {len(window)} elements", None


def check_per_order_lambda_independence(env: _Env):
    eng = env.engine
    ext = eng.ext
    rng = env.rng("lambda-independence")
    for _ in range(200):
        x = ext.random_element(rng, 3)
        y = ext.random_element(rng, 3)
        # two different admissible pushdowns
        npush = max(eng.order._push_steps(x), eng.order._push_steps(y))
        results = []
        for extra in (0, 1, 3):
            push = ext.translation(vec_scale(-(npush + extra), eng.datum.varsigma))
            xs, ys = ext.mul(x, push), ext.mul(y, push)
            if not (eng.alc.in_wexts(xs) and eng.alc.in_wexts(ys)):
                return False, "pushdown landed outside W_ext^S", {"lhs": env.fmt(x)}
            results.append(ext.bruhat_leq(xs, ys))
        if len(set(results)) != 1:
            return False, "comparison depends on the pushdown", {
                "lhs": env.fmt(x), "rhs": env.fmt(y),
                "command": env.cmd("wext", "porder", "--datum", env.preset,
                                   "--lhs", f"'{env.fmt(x)}'", "--rhs", f"'{env.fmt(y)}'")}
    return True, "200 random pairs, three pushdowns each", None


def check_per_order_weights(env: _Env):
    eng = env.engine
    ext, d = eng.ext, eng.datum
    rng = env.rng("per-order-weights")
    w0 = d.w0
    for _ in range(min(200, env.samples)):
        y = rng.choice(eng.alc.restricted_elements())
        nu = tuple(rng.randint(-2, 2) for _ in range(d.y_rank))
        mu = nu
        for cv in d.positive_coroots:
            mu = vec_add(mu, vec_scale(rng.randint(0, 1), cv))
        lhs = ext.mul(y, ext.translation(d.act_y(w0, nu)))
        rhs = ext.mul(y, ext.translation(d.act_y(w0, mu)))
        if not eng.order.leq(lhs, rhs):
            return False, "dominance-order monotonicity fails", {
                "lhs": env.fmt(lhs), "rhs": env.fmt(rhs),
                "command": env.cmd("wext", "porder", "--datum", env.preset,
                                   "--lhs", f"'{env.fmt(lhs)}'", "--rhs", f"'{env.fmt(rhs)}'")}
    return True, "random dominance steps from restricted elements", None


def check_bruhat_order(env: _Env):
    eng = env.engine
    ext = eng.ext
    rng = env.rng("bruhat")
    # lifting recursion vs the subword characterization (independent routes)
    for _ in range(min(300, env.samples)):
        x = ext.random_element(rng, 2)
        lower = ext.bruhat_lower_set(x)
        sample = [ext.random_element(rng, 2) for _ in range(10)] + list(lower)[:10]
        for y in sample:
            if ext.bruhat_leq(y, x) != (y in lower):
                return False, "lifting recursion disagrees with subword test", {
                    "lhs": env.fmt(y), "rhs": env.fmt(x),
                    "command": env.cmd("wext", "bruhat", "--datum", env.preset,
                                       "--lhs", f"'{env.fmt(y)}'", "--rhs", f"'{env.fmt(x)}'")}
    # antisymmetry and transitivity on a small window
    window = spherical_window(eng, 4)
    for x in window:
        for y in window:
            if ext.bruhat_leq(x, y) and ext.bruhat_leq(y, x) and x != y:
                return False, "antisymmetry fails", {"lhs": env.fmt(x), "rhs": env.fmt(y)}
    for _ in range(300):
        x, y, z = (window[rng.randrange(len(window))] for _ in range(3))
        if ext.bruhat_leq(x, y) and ext.bruhat_leq(y, z) and not ext.bruhat_leq(x, z):
            return False, "transitivity fails", {"lhs": env.fmt(x), "rhs": env.fmt(z)}
    return True, "subword cross-check plus order axioms", None


def check_awext_representatives(env: _Env):
    eng = env.engine
    ext = eng.ext
    for label, a in _parabolic_cases(env):
        seen = set()
        rng = env.rng(f"awext-{label}")
        for _ in range(500):
            x = ext.random_element(rng, 3)
            key = frozenset(ext.mul(v, x) for v in a.elements)
            if key in seen:
                continue
            seen.add(key)
            try:
                rep = min_rep(eng.alc, x, a)
            except Unrepresentable as exc:
                return False, f"A={label}: {exc}", {
                    "element": env.fmt(x),
                    "command": env.cmd("parabolic", "rep", "--datum", env.preset,
                                       "--gens", label, "--elt", f"'{env.fmt(x)}'")}
            for v in a.elements:
                if min_rep(eng.alc, ext.mul(v, x), a) != rep:
                    return False, f"A={label}: representative not coset-constant", {
                        "element": env.fmt(x)}
        env.shared[f"cosets-{label}"] = len(seen)
    return True, "unique representative on all sampled cosets", None


def check_tri_bijection(env: _Env):
    eng = env.engine
    ext, alc = eng.ext, eng.alc
    for label, a in _parabolic_cases(env):
        window = awext_window(eng, a, 2)
        image = {}
        for w in window:
            target = ext.mul(a.longest, alc.triangle(w))
            if not in_awext(alc, w, a):
                return False, f"A={label}: window element outside the representative set", {
                    "element": env.fmt(w)}
            if not in_awext(alc, target, a):
                return False, f"A={label}: image leaves the representative set", {
                    "element": env.fmt(w)}
            if target in image:
                return False, f"A={label}: map not injective", {
                    "element": env.fmt(w), "other": env.fmt(image[target])}
            image[target] = w
        # pointwise surjectivity: invert through the triangle inverse
        for v in window:
            w = alc.triangle_inverse(ext.mul(a.longest, v))
            if not in_awext(alc, w, a) or ext.mul(a.longest, alc.triangle(w)) != v:
                return False, f"A={label}: inversion fails", {
                    "element": env.fmt(v),
                    "command": env.cmd("wext", "triangle", "--datum", env.preset,
                                       "--elt", f"'{env.fmt(w)}'")}
        del image
    return True, "bijection verified pointwise on translation windows", None


def check_triangle_geometry(env: _Env):
    eng = env.engine
    ext, alc = eng.ext, eng.alc
    rng = env.rng("triangle")
    lw0 = ext.length(ext.w0)
    for _ in range(env.samples):
        x = ext.random_element(rng, 4)
        tri = alc.triangle(x)
        if alc.triangle_inverse(tri) != x:
            return False, "triangle round trip fails", {"element": env.fmt(x)}
        if (ext.length(x) + ext.length(tri) + lw0) % 2 != 0:
            return False, "parity of the length sum fails", {"element": env.fmt(x)}
        lam = tuple(rng.randint(-2, 2) for _ in range(eng.datum.y_rank))
        if alc.triangle(ext.mul(x, ext.translation(lam))) != ext.mul(tri, ext.translation(lam)):
            return False, "triangle does not commute with translations", {"element": env.fmt(x)}
        if alc.in_wexts(x) and not alc.in_wexts(tri):
            return False, "triangle leaves W_ext^S", {"element": env.fmt(x)}
    # the complement element sends x to t_varsigma w0 and the triangle to its twist
    base = ext.mul(ext.translation(eng.datum.varsigma), ext.w0)
    top = ext.translation(eng.datum.act_y(eng.datum.w0, eng.datum.varsigma))
    for x in alc.restricted_elements():
        y = ext.mul(base, ext.inv(x))
        if ext.mul(y, x) != base:
            return False, "complement product is off", {"element": env.fmt(x)}
        if ext.mul(y, alc.triangle(x)) != top:
            return False, "complement does not send the triangle to the twist", {
                "element": env.fmt(x)}
        if ext.length(ext.mul(y, x)) != ext.length(y) + ext.length(x):
            return False, "lengths do not add against the complement", {"element": env.fmt(x)}
        if ext.length(ext.mul(y, alc.triangle(x))) != ext.length(alc.triangle(x)) - ext.length(y):
            return False, "triangle length drop is off", {"element": env.fmt(x)}
    return True, "round trips, parity, translation equivariance, complements", None


def check_kl_dihedral(env: _Env):
    if env.preset != "A1_adj":
        return True, "dihedral closed form is specific to A1_adj; skipped", None
    eng = env.engine
    ext, hecke = eng.ext, eng.hecke
    maxlen = min(10, env.kl_maxlen)
    checked = 0
    for x in _waff_ball(eng, maxlen):
        table = hecke.kl_basis(x)
        for y, p in table.items():
            want = LaurentPolynomial.monomial(ext.length(x) - ext.length(y))
            if p != want:
                return False, "closed form fails", {
                    "x": env.fmt(x), "y": env.fmt(y), "got": str(p),
                    "command": env.cmd("hecke", "kl", "--datum", env.preset,
                                       "--x", f"'{env.fmt(y)}'", "--y", f"'{env.fmt(x)}'")}
        if ext.length(x) <= 6:
            solved = bar_invariance_solver(eng, x)
            if solved != {y: p for y, p in table.items()}:
                return False, "bar-invariance solver disagrees", {"x": env.fmt(x)}
        checked += 1
    return True, f"{checked} elements against closed form (solver to length 6)", None


def _waff_ball(engine: Engine, maxlen: int):
    ext = engine.ext
    seen = {ext.identity}
    frontier = [ext.identity]
    for _ in range(maxlen):
        nxt = []
        for x in frontier:
            for g in ext.generators:
                y = ext.mul(ext.gen_element(g), x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def bar_invariance_solver(engine: Engine, x: ExtWeylElement):
    """Solve the defining conditions of the canonical basis directly.

    Unknown polynomials c_y in v*Z[v] for y < x are determined by the linear
    system bar(H_x + sum c_y H_y) = H_x + sum c_y H_y, assembled through the
    standard-basis bar expansion and solved by Gaussian elimination over Q.
    Independent of the mu-coefficient recursion and valid over any preset.
    """
    ext, hecke = engine.ext, engine.hecke
    lower = sorted(ext.bruhat_lower_set(x) - {x}, key=lambda z: (ext.length(z), z))
    lx = ext.length(x)
    variables = []
    for y in lower:
        for k in range(1, lx - ext.length(y) + 1):
            variables.append((y, k))
    bars = {y: hecke.bar(hecke.standard(y)) for y in lower + [x]}
    # rows: (z, exponent) -> linear equation sum coef*var = rhs
    rows: dict[tuple, dict] = {}

    def add_term(z, exp, var, coef):
        rows.setdefault((z, exp), {})[var] = rows.get((z, exp), {}).get(var, 0) + coef

    def add_rhs(z, exp, value):
        rows.setdefault((z, exp), {})
        rows[(z, exp)]["__rhs__"] = rows[(z, exp)].get("__rhs__", 0) + value

    # bar(u) - u = 0 with u = H_x + sum a_{y,k} v^k H_y
    for z, p in bars[x].items():
        for exp, c in p.coeffs.items():
            add_rhs(z, exp, -c)  # move constants to the rhs with a sign flip
    add_rhs(x, 0, 1)
    for (y, k) in variables:
        for z, p in bars[y].items():
            for exp, c in p.coeffs.items():
                add_term(z, exp - k, (y, k), c)
        add_term(y, k, (y, k), -1)
    # Gaussian elimination over Q
    var_index = {v: i for i, v in enumerate(variables)}
    matrix = []
    for (z, exp), entries in sorted(rows.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])):
        row = [Fraction(0)] * (len(variables) + 1)
        for var, c in entries.items():
            if var == "__rhs__":
                row[-1] = Fraction(c)
            else:
                row[var_index[var]] = Fraction(c)
        matrix.append(row)
    ncols = len(variables)
    pivot_rows = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(matrix)) if matrix[i][col] != 0), None)
        if piv is None:
            raise ArithmeticError("underdetermined bar-invariance system")
        matrix[r], matrix[piv] = matrix[piv], matrix[r]
        matrix[r] = [c / matrix[r][col] for c in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col] != 0:
                f = matrix[i][col]
                matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[r])]
        pivot_rows.append((r, col))
        r += 1
    for i in range(r, len(matrix)):
        if matrix[i][-1] != 0:
            raise ArithmeticError("inconsistent bar-invariance system")
    solution = {}
    for rrow, col in pivot_rows:
        val = matrix[rrow][-1]
        assert val.denominator == 1
        solution[variables[col]] = int(val)
    out = {x: ONE}
    for y in lower:
        poly = LaurentPolynomial(
            {k: solution[(y, k)] for k in range(1, lx - ext.length(y) + 1)}
        )
        if poly:
            out[y] = poly
    return out


def check_kl_invariance(env: _Env):
    eng = env.engine
    ext, hecke = eng.ext, eng.hecke
    rng = env.rng("kl-bar")
    positive = True
    solver_hits = 0
    for _ in range(min(40, env.samples)):
        x = ext.random_element(rng, 3)
        table = hecke.kl_basis(x)
        if hecke.bar(table) != table:
            return False, "canonical basis element is not bar invariant", {
                "element": env.fmt(x)}
        omegas = ext.enumerate_omega(2)
        om = omegas[rng.randrange(len(omegas))]
        shifted = hecke.kl_basis(ext.mul(om, x))
        if {ext.mul(om, y): p for y, p in table.items()} != dict(shifted.items()):
            return False, "length-zero relabeling fails", {"element": env.fmt(x)}
        for _, p in table.items():
            if any(c < 0 for c in p.coeffs.values()):
                positive = False
        # independent cross-check: re-derive the element from bar invariance
        if solver_hits < 3 and 2 <= ext.length(x) <= 5:
            if bar_invariance_solver(eng, x) != dict(table.items()):
                return False, "bar-invariance solver disagrees", {"element": env.fmt(x)}
            solver_hits += 1
    note = "all computed coefficients nonnegative" if positive else "negative coefficient observed (recorded, not asserted)"
    return True, f"{note}; solver cross-check on {solver_hits} elements", None


def check_spherical_identities(env: _Env):
    eng = env.engine
    ext, hecke = eng.ext, eng.hecke
    window = spherical_window(eng, min(4, env.kl_maxlen))
    rng = env.rng("spherical")
    # matrix identity on one interval
    x = window[-1]
    lower = hecke.spherical_lower_set(x)
    for y in lower:
        acc = ZERO
        for z in lower:
            imz = hecke.inverse_m(x, z)
            mz = hecke.spherical_m(y, z, verify=False)
            if imz and mz:
                term = imz * mz
                acc = acc + (term if (ext.length(z) + ext.length(x)) % 2 == 0 else -term)
        want = ONE if y == x else ZERO
        if acc != want:
            return False, "inverse matrix identity fails", {
                "x": env.fmt(x), "y": env.fmt(y),
                "command": env.cmd("hecke", "inverse-m", "--datum", env.preset,
                                   "--x", f"'{env.fmt(x)}'", "--y", f"'{env.fmt(y)}'")}
    # coset-representative consistency built into spherical_m(verify=True)
    for _ in range(20):
        w = window[rng.randrange(len(window))]
        y = window[rng.randrange(len(window))]
        hecke.spherical_m(y, w)
    # zeta: the spherical canonical element pairs with the longest-element
    # canonical element to the canonical element of w w0
    from .hecke import HeckeElement

    w = window[min(3, len(window) - 1)]
    total = HeckeElement()
    for y in hecke.spherical_lower_set(w):
        m = hecke.spherical_m(y, w, verify=False)
        if m:
            total = total + hecke.mul(hecke.standard(y), hecke.kl_basis(ext.w0)).scaled(m)
    if total != hecke.kl_basis(ext.mul(w, ext.w0)):
        return False, "zeta compatibility fails", {"element": env.fmt(w)}
    return True, f"matrix identity on {len(lower)} labels; zeta at {env.fmt(w)}", None


def check_m_triangle(env: _Env):
    eng = env.engine
    ext, alc, hecke = eng.ext, eng.alc, eng.hecke
    lw0 = ext.length(ext.w0)
    want = LaurentPolynomial.monomial(lw0)
    values = {}
    for w in spherical_window(eng, env.kl_maxlen):
        tri = alc.triangle(w)
        got = hecke.inverse_m(tri, w)
        values[w] = (got, tri)
        if got != want:
            return False, "inverse polynomial is not v^{len(w0)}", {
                "w": env.fmt(w), "triangle": env.fmt(tri), "got": str(got),
                "command": env.cmd("hecke", "inverse-m", "--datum", env.preset,
                                   "--x", f"'{env.fmt(tri)}'", "--y", f"'{env.fmt(w)}'")}
    env.shared["mtriangle"] = values
    return True, f"exact on {len(values)} elements up to length {env.kl_maxlen}", None


def check_mult_triangle(env: _Env):
    eng = env.engine
    ext = eng.ext
    lw0 = ext.length(ext.w0)
    values = env.shared.get("mtriangle")
    if values is None:
        ok, detail, ce = check_m_triangle(env)
        if not ok:
            return ok, detail, ce
        values = env.shared["mtriangle"]
    for w, (poly, tri) in values.items():
        sign = -1 if (ext.length(w) + ext.length(tri)) % 2 else 1
        if sign * poly.evaluate(-1) != 1:
            return False, "signed evaluation at v=-1 is not 1", {
                "w": env.fmt(w), "triangle": env.fmt(tri)}
        if (ext.length(w) + ext.length(tri) + lw0) % 2 != 0:
            return False, "length parity fails", {"w": env.fmt(w)}
    return True, f"exact on {len(values)} elements", None


def check_proj_filtration(env: _Env):
    eng = env.engine
    ext, alc, groth = eng.ext, eng.alc, eng.groth
    base = ext.mul(ext.translation(eng.datum.varsigma), ext.w0)
    for x in alc.restricted_elements():
        y = ext.mul(base, ext.inv(x))
        filt = groth.projective_filtration(x)  # endpoint/sandwich asserted inside
        if filt.total() != eng.datum.weyl_order * 2 ** ext.length(y):
            return False, "total multiplicity is off", {
                "element": env.fmt(x), "total": filt.total(),
                "command": env.cmd("groth", "proj-filtration", "--datum", env.preset,
                                   "--elt", f"'{env.fmt(x)}'")}
        if groth.duality(filt).mults != filt.mults:
            return False, "dual multiset differs", {"element": env.fmt(x)}
    return True, f"exhaustive over {len(alc.restricted_elements())} restricted elements", None


def check_word_independence(env: _Env):
    eng = env.engine
    groth = eng.groth
    strategies = ("min", "max", f"random:{env.seed}", f"random:{env.seed + 1}")
    for x in eng.alc.restricted_elements():
        results = [groth.projective_filtration(x, strategy=s) for s in strategies]
        if any(r.mults != results[0].mults for r in results[1:]):
            return False, "filtration depends on the reduced expression", {
                "element": env.fmt(x),
                "command": env.cmd("groth", "proj-filtration", "--datum", env.preset,
                                   "--elt", f"'{env.fmt(x)}'")}
        pairings = {groth.dim_hom(groth.duality(r), r) for r in results}
        if len(pairings) != 1:
            return False, "self-pairing depends on the reduced expression", {
                "element": env.fmt(x)}
    return True, "deterministic and randomized descent strategies agree", None


def check_whittaker_compat(env: _Env):
    eng = env.engine
    ext, alc, groth, order = eng.ext, eng.alc, eng.groth, eng.order
    for label, a in _parabolic_cases(env):
        if not a.generators:
            continue
        for x in alc.restricted_elements():
            base = groth.projective_filtration(x)
            filt = groth.av_psi(base, a)
            bottom = min_rep(alc, x, a)
            top = min_rep(alc, alc.triangle(x), a)
            if filt.mult(bottom) == 0 or filt.mult(top) == 0:
                return False, f"A={label}: endpoint labels missing", {
                    "element": env.fmt(x),
                    "command": env.cmd("groth", "proj-filtration", "--datum", env.preset,
                                       "--elt", f"'{env.fmt(x)}'")}
            # collapsing rule: output multiplicity is the coset sum of inputs
            for z in filt.support():
                if filt.mult(z) != sum(base.mult(ext.mul(v, z)) for v in a.elements):
                    return False, f"A={label}: coset-sum rule fails", {
                        "element": env.fmt(x), "label": env.fmt(z)}
                if not (order.leq(bottom, z) and order.leq(z, top)):
                    return False, f"A={label}: support escapes the sandwich", {
                        "element": env.fmt(x), "label": env.fmt(z)}
        # averaging composition: spread-after-collapse covers cosets
        rng = env.rng(f"whittaker-{label}")
        for _ in range(50):
            w = min_rep(alc, ext.random_element(rng, 2), a)
            f = FiltrationMultiset({w: 1}, COVERMA)
            spread = groth.av_star(f, a)
            if spread.total() != a.order or set(spread.support()) != {
                ext.mul(v, w) for v in a.elements
            }:
                return False, f"A={label}: averaging composition fails", {
                    "element": env.fmt(w)}
    return True, "endpoints, sandwich, and averaging composition", None


def check_freudenthal_kostant(env: _Env):
    eng = env.engine
    d, sat = eng.datum, eng.satake
    bound = 3 if d.rank > 1 else 6
    count = 0
    for cs in itertools.product(range(bound + 1), repeat=d.rank):
        mu = d.section_lift(cs)
        wm = sat.weight_multiplicities(mu)
        if wm.total() != sat.weyl_dimension(mu):
            return False, "dimension formula mismatch", {
                "mu": list(mu),
                "command": env.cmd("satake", "char", "--datum", env.preset,
                                   "--mu", ",".join(map(str, mu)))}
        for nu, m in wm.items():
            if sat.kostant_multiplicity(mu, nu) != m:
                return False, "Kostant oracle disagrees", {"mu": list(mu), "nu": list(nu)}
        count += 1
    return True, f"exhaustive agreement on {count} dominant weights", None


def check_phi_order(env: _Env):
    eng = env.engine
    ext, groth, order = eng.ext, eng.groth, eng.order
    rng = env.rng("phi-order")
    window = spherical_window(eng, min(6, env.kl_maxlen))
    for _ in range(min(60, env.samples)):
        w = window[rng.randrange(len(window))]
        cv = groth.phi_of_simple(w)
        _, lam = eng.alc.res_decompose(w)
        mu = eng.datum.act_y(eng.datum.w0, lam)
        if cv.total() != eng.satake.weyl_dimension(mu):
            return False, "class total does not match the module dimension", {
                "element": env.fmt(w),
                "command": env.cmd("groth", "phi-simple", "--datum", env.preset,
                                   "--elt", f"'{env.fmt(w)}'")}
        for label in cv.coords:
            if not order.leq(groth.label_element(label), w):
                return False, "output label not below the input", {
                    "element": env.fmt(w), "label": env.fmt(groth.label_element(label))}
    return True, "labels below the input, totals match dimensions", None


def check_groth_basics(env: _Env):
    eng = env.engine
    ext, groth = eng.ext, eng.groth
    seed = groth.seed_filtration()
    if seed.total() != eng.datum.weyl_order or len(seed.support()) != eng.datum.weyl_order:
        return False, "seed filtration has wrong cardinality", None
    g = ext.generators[0]
    doubled = groth.xi_s(seed, g)
    if doubled.total() != 2 * seed.total():
        return False, "wall-crossing does not double the total", None
    omegas = ext.enumerate_omega(2)
    if groth.xi_omega(seed, ext.identity).mults != seed.mults:
        return False, "identity relabeling is not the identity", None
    rng = env.rng("groth-basics")
    for _ in range(50):
        x = ext.random_element(rng, 3)
        nu = tuple(rng.randint(-2, 2) for _ in range(eng.datum.y_rank))
        f = FiltrationMultiset({x: 1}, COVERMA)
        round_trip = groth.grading_shift(groth.grading_shift(f, nu), vec_neg(nu))
        if round_trip.mults != f.mults:
            return False, "grading shift is not invertible", None
        if groth.duality(groth.duality(f)) != f:
            return False, "duality is not an involution", None
        lbl = groth.simple_label(x)
        if groth.label_element(lbl) != x:
            return False, "canonical split does not reassemble", {"element": env.fmt(x)}
        # right translations are absorbed by the class
        if groth.forget_grading(ext.mul(x, ext.translation(nu))) != groth.forget_grading(x):
            return False, "forget-grading not shift absorbing", {"element": env.fmt(x)}
    om = omegas[-1]
    relabeled = groth.xi_omega(seed, om)
    if sorted(relabeled.support()) != sorted(ext.mul(om, w) for w in seed.support()):
        return False, "length-zero relabeling is off", None
    return True, "seed, wall-crossing, shifts, duality, labels", None


CHECKS = [
    ("datum-invariants", check_datum_invariants),
    ("length-formula", check_length_formula),
    ("res-complement", check_res_complement),
    ("lengths-add", check_lengths_add),
    ("bruhat-order", check_bruhat_order),
    ("per-order-properties", check_per_order_properties),
    ("per-order-lambda-independence", check_per_order_lambda_independence),
    ("per-order-weights", check_per_order_weights),
    ("awext-representatives", check_awext_representatives),
    ("tri-bijection", check_tri_bijection),
    ("triangle-geometry", check_triangle_geometry),
    ("kl-dihedral", check_kl_dihedral),
    ("kl-bar-invariance", check_kl_invariance),
    ("spherical-identities", check_spherical_identities),
    ("m-triangle", check_m_triangle),
    ("mult-triangle", check_mult_triangle),
    ("proj-filtration", check_proj_filtration),
    ("proj-word-independence", check_word_independence),
    ("whittaker-compat", check_whittaker_compat),
    ("freudenthal-kostant", check_freudenthal_kostant),
    ("phi-order", check_phi_order),
    ("groth-basics", check_groth_basics),
]


def run_suite(
    preset: str,
    *,
    seed: int = 0,
    samples: int = 500,
    kl_maxlen: int | None = None,
    window: int = 2,
    fault: str | None = None,
    names: list[str] | None = None,
) -> SuiteReport:
    if kl_maxlen is None:
        kl_maxlen = DEFAULT_KL_LEN.get(preset, 6)
    if kl_maxlen > MAX_KL_LEN:
        raise BoundsTooLarge(f"kl_maxlen {kl_maxlen} > {MAX_KL_LEN}")
    if window > MAX_WINDOW:
        raise BoundsTooLarge(f"window {window} > {MAX_WINDOW}")
    if samples > MAX_SAMPLES:
        raise BoundsTooLarge(f"samples {samples} > {MAX_SAMPLES}")
    engine = build_engine(preset)
    env = _Env(engine, preset, seed, samples, kl_maxlen, window, fault)
    report = SuiteReport(preset, seed, samples, kl_maxlen, window)
    for name, fn in CHECKS:
        if names is not None and name not in names:
            continue
        start = time.monotonic()
        try:
            ok, detail, ce = fn(env)
        except Exception as exc:  # a crashing check is a failing check
            ok, detail, ce = False, f"exception: {exc!r}", None
        if not ok:
            ce = dict(ce or {})
            ce.setdefault(
                "command",
                f"alcove-hecke suite run --preset {preset} --seed {seed} "
                f"--samples {samples} --maxlen {kl_maxlen} --window {window}",
            )
        report.checks.append(
            CheckResult(
                name=name,
                status="pass" if ok else "fail",
                detail=detail,
                counterexample=ce,
                duration=time.monotonic() - start,
            )
        )
    return report

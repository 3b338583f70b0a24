"""Based root data with exact integer pairings.

A root datum is given by matching lists of simple roots (coordinates in the
character lattice X) and simple coroots (coordinates in the cocharacter
lattice Y); the pairing X x Y -> Z is the coordinate dot product.  The loader
validates the data (finite-type Cartan matrix, torsion-free X/ZR) and derives
everything downstream modules need: positive roots and coroots, the finite
Weyl group with its action matrices, the longest element, the sum of positive
roots, and the distinguished coweight pairing to 1 with every simple root.

>>> d = load_root_datum("A2_adj")
>>> d.weyl_order, len(d.positive_roots), d.two_rho, d.varsigma
(6, 3, (2, 2), (1, 1))
>>> pair(d.two_rho, d.simple_coroots[0])
2

All structures are immutable after construction and safe for concurrent
reads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    CartanNotFiniteType,
    DimensionMismatch,
    MalformedInput,
    NoVarsigma,
    TorsionQuotient,
    UnknownPreset,
)

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]

PRESETS: dict[str, dict] = {
    # Adjoint data: X is the root lattice, so X/ZR is trivially torsion-free.
    "A1_adj": {"simple_roots": [[1]], "simple_coroots": [[2]]},
    "A2_adj": {"simple_roots": [[1, 0], [0, 1]], "simple_coroots": [[2, -1], [-1, 2]]},
    "B2_adj": {"simple_roots": [[1, 0], [0, 1]], "simple_coroots": [[2, -1], [-2, 2]]},
    "A1xA1_adj": {"simple_roots": [[1, 0], [0, 1]], "simple_coroots": [[2, 0], [0, 2]]},
}

SEMISIMPLE_PRESETS = ("A1_adj", "A2_adj", "B2_adj", "A1xA1_adj")


def pair(xvec: Vector, yvec: Vector) -> int:
    """The pairing <.,.>: X x Y -> Z (coordinate dot product)."""
    if len(xvec) != len(yvec):
        raise DimensionMismatch(f"cannot pair {xvec} with {yvec}")
    return sum(a * b for a, b in zip(xvec, yvec))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def vec_scale(c: int, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def mat_apply(m: Matrix, v: Vector) -> Vector:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


# --- small exact integer linear algebra (Smith normal form based) ---


def smith_normal_form(mat: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return (U, D, V) with U*mat*V = D diagonal, U and V unimodular.

    The diagonal entries satisfy the divisibility chain d1 | d2 | ... so they
    are the invariant factors of the integer matrix.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    d = [list(r) for r in mat]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, c):  # row_i += c * row_j
        d[i] = [a + c * b for a, b in zip(d[i], d[j])]
        u[i] = [a + c * b for a, b in zip(u[i], u[j])]

    def add_col(i, j, c):  # col_i += c * col_j
        for r in d:
            r[i] += c * r[j]
        for r in v:
            r[i] += c * r[j]

    t = 0
    while t < min(rows, cols):
        # find the nonzero entry of smallest magnitude in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, rows):
            if d[i][t] != 0:
                add_row(i, t, -(d[i][t] // d[t][t]))
                if d[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if d[t][j] != 0:
                add_col(j, t, -(d[t][j] // d[t][t]))
                if d[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility of the remaining block by the pivot
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, d, v


def solve_integer(mat: list[list[int]], rhs: list[int]) -> list[int] | None:
    """One integer solution x of mat*x = rhs, or None; deterministic."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    u, d, v = smith_normal_form(mat)
    c = [sum(u[i][k] * rhs[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        di = d[i][i] if i < cols else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di != 0:
                return None
            y[i] = c[i] // di
    return [sum(v[i][k] * y[k] for k in range(cols)) for i in range(cols)]


def kernel_basis(mat: list[list[int]]) -> list[Vector]:
    """Basis of the integer kernel of x |-> mat*x."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    _, d, v = smith_normal_form(mat)
    basis = []
    for k in range(cols):
        dk = d[k][k] if k < rows else 0
        if dk == 0:
            basis.append(tuple(v[i][k] for i in range(cols)))
    return basis


def _invariant_factors(mat: list[list[int]]) -> list[int]:
    _, d, _ = smith_normal_form(mat)
    n = min(len(d), len(d[0]) if d else 0)
    return [d[i][i] for i in range(n) if d[i][i] != 0]


def _principal_minors_positive(c: list[list[int]]) -> bool:
    """True iff every principal minor of the square matrix is positive.

    This is the exact finite-type criterion for a generalized Cartan matrix.
    """
    n = len(c)
    for mask in range(1, 1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        sub = [[c[i][j] for j in idx] for i in idx]
        if _det(sub) <= 0:
            return False
    return True


def _det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _det(minor)
    return total


def cartan_components(cartan: Matrix) -> list[list[int]]:
    """Connected components of the Dynkin graph, as sorted index lists."""
    n = len(cartan)
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp = []
        stack = [start]
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            comp.append(i)
            for j in range(n):
                if j != i and cartan[i][j] != 0:
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def symmetrizer(cartan: Matrix) -> tuple[int, ...]:
    """Minimal positive integers d with d_i * C_ij == d_j * C_ji."""
    from fractions import Fraction
    from math import gcd

    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for comp in cartan_components(cartan):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    stack.append(j)
        denom = 1
        for i in comp:
            denom = denom * d[i].denominator // gcd(denom, d[i].denominator)
        for i in comp:
            d[i] = d[i] * denom
        g = 0
        for i in comp:
            g = gcd(g, int(d[i]))
        for i in comp:
            d[i] = Fraction(int(d[i]) // g)
    return tuple(int(x) for x in d)


@dataclass(frozen=True)
class WeylElement:
    """One element of the finite Weyl group, with cached action data."""

    index: int
    word: tuple[int, ...]  # reduced word in simple reflection indices
    x_action: Matrix  # action on X-vectors
    y_action: Matrix  # action on Y-vectors

    @property
    def length(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class RootDatum:
    x_rank: int
    y_rank: int
    simple_roots: Matrix
    simple_coroots: Matrix
    cartan: Matrix
    positive_roots: Matrix
    positive_coroots: Matrix
    root_heights: tuple[int, ...]
    coroot_in_simple: Matrix  # coordinates of each positive coroot in simple coroots
    weyl_elements: tuple[WeylElement, ...]
    weyl_mult: Matrix  # multiplication table on Weyl indices
    weyl_inv: Vector
    w0: int
    two_rho: Vector
    varsigma: Vector
    components: tuple[tuple[int, ...], ...]
    highest_roots: Matrix  # per component
    highest_short_coroots: Matrix  # per component; translation part of affine generators
    section: Matrix  # right inverse of Y -> Hom(ZR, Z), one column per simple root
    orthogonal_basis: Matrix  # basis of {y in Y : <alpha, y> = 0 for all roots}
    dual_symmetrizer: Vector
    name: str = "custom"

    # -- basic queries ---------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def weyl_order(self) -> int:
        return len(self.weyl_elements)

    def check_y(self, v: Vector) -> Vector:
        v = tuple(int(c) for c in v)
        if len(v) != self.y_rank:
            raise DimensionMismatch(f"expected {self.y_rank} coordinates, got {len(v)}")
        return v

    def is_dominant(self, lam: Vector) -> bool:
        lam = self.check_y(lam)
        return all(pair(alpha, lam) >= 0 for alpha in self.simple_roots)

    def is_strictly_dominant(self, lam: Vector) -> bool:
        lam = self.check_y(lam)
        return all(pair(alpha, lam) > 0 for alpha in self.simple_roots)

    def is_antidominant(self, lam: Vector) -> bool:
        lam = self.check_y(lam)
        return all(pair(alpha, lam) <= 0 for alpha in self.simple_roots)

    def act_x(self, w: int, v: Vector) -> Vector:
        return mat_apply(self.weyl_elements[w].x_action, v)

    def act_y(self, w: int, v: Vector) -> Vector:
        return mat_apply(self.weyl_elements[w].y_action, v)

    def root_sign_flips(self, w: int) -> tuple[bool, ...]:
        """For each positive root alpha, whether w(alpha) is negative."""
        return self._flips[w]

    def section_lift(self, coords: tuple[int, ...]) -> Vector:
        """Lift a functional on ZR (values on the simple roots) to Y."""
        if len(coords) != self.rank:
            raise DimensionMismatch("one value per simple root required")
        return tuple(
            sum(self.section[i][j] * coords[j] for j in range(self.rank))
            for i in range(self.y_rank)
        )

    def coroot_lattice_contains(self, lam: Vector) -> bool:
        lam = self.check_y(lam)
        mat = [[self.simple_coroots[j][i] for j in range(self.rank)] for i in range(self.y_rank)]
        return solve_integer(mat, list(lam)) is not None

    def coroot_coordinates(self, corootvec: Vector) -> Vector:
        """Coordinates of a coroot-lattice vector in the simple coroots."""
        mat = [[self.simple_coroots[j][i] for j in range(self.rank)] for i in range(self.y_rank)]
        sol = solve_integer(mat, list(corootvec))
        if sol is None:
            raise NoLift(f"{corootvec} is not in the coroot lattice")
        return tuple(sol)

    def dual_form(self, lam: Vector, coroot_coords: Vector) -> int:
        """W-invariant form B(lam, beta^vee) with beta^vee given in simple-coroot coordinates."""
        return sum(
            c * self.dual_symmetrizer[i] * pair(self.simple_roots[i], lam)
            for i, c in enumerate(coroot_coords)
        )


def _generate_root_system(simple_roots: Matrix, simple_coroots: Matrix):
    """Closure of the simple root/coroot pairs under simple reflections."""
    rank = len(simple_roots)
    pos = {simple_roots[i]: simple_coroots[i] for i in range(rank)}
    frontier = list(simple_roots)
    while frontier:
        beta = frontier.pop()
        beta_vee = pos[beta]
        for i in range(rank):
            # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, same shape on coroots
            c = pair(beta, simple_coroots[i])
            new_root = vec_sub(beta, vec_scale(c, simple_roots[i]))
            cc = pair(simple_roots[i], beta_vee)
            new_coroot = vec_sub(beta_vee, vec_scale(cc, simple_coroots[i]))
            if new_root in pos or vec_neg(new_root) in pos:
                continue
            pos[new_root] = new_coroot
            frontier.append(new_root)
    # keep only the positive ones (nonnegative simple-root coordinates)
    root_mat = [[simple_roots[j][i] for j in range(rank)] for i in range(len(simple_roots[0]))]
    roots, coroots, heights = [], [], []
    for beta, beta_vee in pos.items():
        coords = solve_integer(root_mat, list(beta))
        if coords is None:
            raise MalformedInput(f"generated root {beta} outside the root lattice")
        if all(c >= 0 for c in coords):
            roots.append(beta)
            coroots.append(beta_vee)
            heights.append(sum(coords))
    order = sorted(range(len(roots)), key=lambda k: (heights[k], roots[k]))
    return (
        tuple(roots[k] for k in order),
        tuple(coroots[k] for k in order),
        tuple(heights[k] for k in order),
    )


def _enumerate_weyl(datum_dim: int, simple_roots: Matrix, simple_coroots: Matrix):
    rank = len(simple_roots)
    n = datum_dim

    def refl_x(i) -> Matrix:
        return tuple(
            tuple(
                (1 if r == c else 0) - simple_roots[i][r] * simple_coroots[i][c]
                for c in range(n)
            )
            for r in range(n)
        )

    def refl_y(i) -> Matrix:
        return tuple(
            tuple(
                (1 if r == c else 0) - simple_coroots[i][r] * simple_roots[i][c]
                for c in range(n)
            )
            for r in range(n)
        )

    gens_x = [refl_x(i) for i in range(rank)]
    gens_y = [refl_y(i) for i in range(rank)]
    ident = identity_matrix(n)
    elements = [WeylElement(0, (), ident, ident)]
    index_of = {ident: 0}
    queue = [0]
    while queue:
        cur = queue.pop(0)
        el = elements[cur]
        for i in range(rank):
            mx = mat_mul(el.x_action, gens_x[i])
            if mx in index_of:
                continue
            my = mat_mul(el.y_action, gens_y[i])
            idx = len(elements)
            elements.append(WeylElement(idx, el.word + (i,), mx, my))
            index_of[mx] = idx
            queue.append(idx)
    mult = tuple(
        tuple(index_of[mat_mul(a.x_action, b.x_action)] for b in elements) for a in elements
    )
    inv = []
    for a in elements:
        for j, b in enumerate(elements):
            if mult[a.index][j] == 0:
                inv.append(j)
                break
    return tuple(elements), mult, tuple(inv)


def load_root_datum(spec) -> RootDatum:
    """Load and validate a root datum from a preset name or descriptor.

    Accepts a preset name, a descriptor dict ({"preset": ...} or explicit
    {"simple_roots": ..., "simple_coroots": ...}), or a path to a JSON file
    containing such a dict.
    """
    name = "custom"
    if isinstance(spec, str):
        if spec in PRESETS:
            name = spec
            spec = PRESETS[spec]
        elif spec.endswith(".json"):
            with open(spec, encoding="utf-8") as fh:
                spec = json.load(fh)
        else:
            raise UnknownPreset(f"unknown preset {spec!r}; available: {', '.join(PRESETS)}")
    if not isinstance(spec, dict):
        raise MalformedInput("descriptor must be a preset name or a dict")
    if "preset" in spec:
        pname = spec["preset"]
        if pname not in PRESETS:
            raise UnknownPreset(f"unknown preset {pname!r}; available: {', '.join(PRESETS)}")
        name = pname
        spec = PRESETS[pname]

    try:
        simple_roots = tuple(tuple(int(c) for c in row) for row in spec["simple_roots"])
        simple_coroots = tuple(tuple(int(c) for c in row) for row in spec["simple_coroots"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad root-datum descriptor: {exc}") from exc
    if len(simple_roots) != len(simple_coroots):
        raise MalformedInput("must give equally many simple roots and coroots")
    if not simple_roots:
        raise MalformedInput("at least one simple root is required")
    dims = {len(r) for r in simple_roots} | {len(c) for c in simple_coroots}
    if len(dims) != 1:
        raise MalformedInput("all vectors must have the same number of coordinates")
    dim = dims.pop()
    rank = len(simple_roots)
    if rank > dim:
        raise MalformedInput("more simple roots than lattice rank")

    cartan = tuple(
        tuple(pair(simple_roots[i], simple_coroots[j]) for j in range(rank)) for i in range(rank)
    )
    for i in range(rank):
        if cartan[i][i] != 2:
            raise CartanNotFiniteType(f"Cartan diagonal entry {cartan[i][i]} != 2")
        for j in range(rank):
            if i != j and cartan[i][j] > 0:
                raise CartanNotFiniteType("positive off-diagonal Cartan entry")
            if i != j and (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise CartanNotFiniteType("non-symmetric zero pattern in Cartan matrix")
    if not _principal_minors_positive([list(r) for r in cartan]):
        raise CartanNotFiniteType("Cartan matrix is not of finite type")

    root_rows = [list(r) for r in simple_roots]
    if any(f != 1 for f in _invariant_factors(root_rows)) or len(
        _invariant_factors(root_rows)
    ) != rank:
        raise TorsionQuotient("X/ZR has torsion (Smith form has invariant factor != 1)")

    # fixed right inverse of the restriction Y -> Hom(ZR, Z)
    section_cols = []
    for j in range(rank):
        rhs = [1 if i == j else 0 for i in range(rank)]
        col = solve_integer(root_rows, rhs)
        if col is None:
            raise NoVarsigma("restriction Y -> Hom(ZR, Z) is not surjective")
        section_cols.append(col)
    section = tuple(tuple(section_cols[j][i] for j in range(rank)) for i in range(dim))
    varsigma = tuple(sum(section[i][j] for j in range(rank)) for i in range(dim))
    assert all(pair(alpha, varsigma) == 1 for alpha in simple_roots)

    pos_roots, pos_coroots, heights = _generate_root_system(simple_roots, simple_coroots)
    two_rho = tuple(sum(beta[i] for beta in pos_roots) for i in range(dim))

    elements, mult, inv = _enumerate_weyl(dim, simple_roots, simple_coroots)
    w0 = max(range(len(elements)), key=lambda k: elements[k].length)
    if elements[w0].length != len(pos_roots):
        raise MalformedInput("longest-element length does not match the root count")
    neg = {vec_neg(beta) for beta in pos_roots}
    if {mat_apply(elements[w0].x_action, beta) for beta in pos_roots} != neg:
        raise MalformedInput("w0 does not send positive roots to negative roots")

    comps = cartan_components(cartan)
    dual_sym = _dual_symmetrizer(cartan)
    coroot_rows = [[simple_coroots[j][i] for j in range(rank)] for i in range(dim)]
    coroot_coords = []
    for cv in pos_coroots:
        sol = solve_integer(coroot_rows, list(cv))
        assert sol is not None
        coroot_coords.append(tuple(sol))
    highest_roots, highest_short = [], []
    for comp in comps:
        in_comp = [
            k
            for k in range(len(pos_roots))
            if all(coroot_coords[k][i] == 0 for i in range(rank) if i not in comp)
        ]
        # maximal short coroot: maximize height among coroots of minimal
        # squared length under the symmetrized invariant form
        def sq(k):
            cc = coroot_coords[k]
            return sum(
                cc[i] * cc[j] * dual_sym[i] * cartan[i][j] for i in comp for j in comp
            )

        min_sq = min(sq(k) for k in in_comp)
        short = [k for k in in_comp if sq(k) == min_sq]
        top = max(short, key=lambda k: sum(coroot_coords[k]))
        highest_short.append(pos_coroots[top])
        highest_roots.append(pos_roots[top])

    datum = RootDatum(
        x_rank=dim,
        y_rank=dim,
        simple_roots=simple_roots,
        simple_coroots=simple_coroots,
        cartan=cartan,
        positive_roots=pos_roots,
        positive_coroots=pos_coroots,
        root_heights=heights,
        coroot_in_simple=tuple(coroot_coords),
        weyl_elements=elements,
        weyl_mult=mult,
        weyl_inv=inv,
        w0=w0,
        two_rho=two_rho,
        varsigma=varsigma,
        components=tuple(tuple(c) for c in comps),
        highest_roots=tuple(highest_roots),
        highest_short_coroots=tuple(highest_short),
        section=section,
        orthogonal_basis=tuple(kernel_basis(root_rows)),
        dual_symmetrizer=dual_sym,
        name=name,
    )
    flips = tuple(
        tuple(mat_apply(w.x_action, beta) not in set(pos_roots) for beta in pos_roots)
        for w in elements
    )
    object.__setattr__(datum, "_flips", flips)
    return datum


def _dual_symmetrizer(cartan: Matrix) -> Vector:
    """Minimal positive integers d making (d_i * C_ij) symmetric.

    With this d the assignment B(lam, alpha_i^vee) = d_i * <alpha_i, lam>
    extends to the W-invariant integer form on the coroot lattice used both
    for detecting short coroots and in the weight-multiplicity recursion.
    """
    return symmetrizer(cartan)


def is_dominant(lam: Vector, datum: RootDatum) -> bool:
    return datum.is_dominant(lam)


def is_strictly_dominant(lam: Vector, datum: RootDatum) -> bool:
    return datum.is_strictly_dominant(lam)

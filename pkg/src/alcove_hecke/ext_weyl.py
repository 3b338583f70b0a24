"""The extended affine Weyl group W x Y.

Elements are stored in the form w * t_lambda (finite Weyl part, translation
coweight); the Iwahori-Matsumoto formula turns this pair directly into a
length.  On top of the group arithmetic this module provides the affine
simple generators, the length-zero subgroup, reduced expressions, and the
Bruhat order.

All operations are pure over an immutable root datum.  The length and Bruhat
memo tables are per-instance dicts: confine an instance to one execution
context, or guard it for concurrent reads with exclusive writes.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple

from .errors import MalformedInput
from .root_datum import RootDatum, Vector, pair, vec_add, vec_neg

GEN_LETTERS = "abcdefgh"


class ExtWeylElement(NamedTuple):
    """The element w * t_lambda: a finite Weyl index and a translation."""

    w: int
    t: Vector


class AffineGenerator(NamedTuple):
    kind: str  # "finite" or "affine"
    index: int  # simple-reflection index, or irreducible-component index

    @property
    def name(self) -> str:
        if self.kind == "finite":
            return f"s{self.index + 1}"
        return f"s0{GEN_LETTERS[self.index]}"


class ExtWeyl:
    """Arithmetic context for W_ext over a fixed root datum."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.identity = ExtWeylElement(0, (0,) * datum.y_rank)
        self._len_cache: dict[ExtWeylElement, int] = {}
        self._bruhat_cache: dict[tuple[ExtWeylElement, ExtWeylElement], bool] = {}
        self._waff_cache: dict[Vector, bool] = {}

        self._simple_refl_index = []
        for i in range(datum.rank):
            for el in datum.weyl_elements:
                if el.word == (i,):
                    self._simple_refl_index.append(el.index)
                    break

        self.generators: list[AffineGenerator] = [
            AffineGenerator("finite", i) for i in range(datum.rank)
        ] + [AffineGenerator("affine", c) for c in range(len(datum.components))]
        self._gen_elements: dict[AffineGenerator, ExtWeylElement] = {}
        for g in self.generators:
            if g.kind == "finite":
                self._gen_elements[g] = ExtWeylElement(
                    self._simple_refl_index[g.index], self.identity.t
                )
            else:
                theta = datum.highest_roots[g.index]
                theta_vee = datum.highest_short_coroots[g.index]
                widx = self._reflection_index(theta, theta_vee)
                # t_{theta^vee} s_theta  =  s_theta t_{-theta^vee}
                self._gen_elements[g] = ExtWeylElement(widx, vec_neg(theta_vee))
        self._gen_by_element = {el: g for g, el in self._gen_elements.items()}
        self._gen_by_name = {g.name: g for g in self.generators}
        if len(datum.components) == 1:
            self._gen_by_name.setdefault("s0", self.generators[-1])

        self.w0 = ExtWeylElement(datum.w0, self.identity.t)

    def _reflection_index(self, root: Vector, coroot: Vector) -> int:
        n = self.datum.x_rank
        mat = tuple(
            tuple((1 if r == c else 0) - root[r] * coroot[c] for c in range(n))
            for r in range(n)
        )
        for el in self.datum.weyl_elements:
            if el.x_action == mat:
                return el.index
        raise MalformedInput(f"reflection in {root} not found in the Weyl group")

    # -- group arithmetic ------------------------------------------------

    def element(self, w: int, t: Iterable[int]) -> ExtWeylElement:
        return ExtWeylElement(w, self.datum.check_y(tuple(t)))

    def translation(self, lam: Iterable[int]) -> ExtWeylElement:
        return ExtWeylElement(0, self.datum.check_y(tuple(lam)))

    def gen_element(self, g: AffineGenerator) -> ExtWeylElement:
        return self._gen_elements[g]

    def gen_by_name(self, name: str) -> AffineGenerator:
        try:
            return self._gen_by_name[name]
        except KeyError:
            raise MalformedInput(f"unknown generator {name!r}") from None

    def mul(self, a: ExtWeylElement, b: ExtWeylElement) -> ExtWeylElement:
        # (w1 t1)(w2 t2) = (w1 w2) t_{w2^{-1}(t1) + t2}
        d = self.datum
        w = d.weyl_mult[a.w][b.w]
        t = vec_add(d.act_y(d.weyl_inv[b.w], a.t), b.t)
        return ExtWeylElement(w, t)

    def mul_many(self, *els: ExtWeylElement) -> ExtWeylElement:
        acc = self.identity
        for e in els:
            acc = self.mul(acc, e)
        return acc

    def inv(self, a: ExtWeylElement) -> ExtWeylElement:
        d = self.datum
        return ExtWeylElement(d.weyl_inv[a.w], vec_neg(d.act_y(a.w, a.t)))

    # -- length and the length-zero subgroup -----------------------------

    def length(self, x: ExtWeylElement) -> int:
        cached = self._len_cache.get(x)
        if cached is not None:
            return cached
        d = self.datum
        flips = d.root_sign_flips(x.w)
        total = 0
        for k, alpha in enumerate(d.positive_roots):
            c = pair(alpha, x.t)
            total += abs(1 + c) if flips[k] else abs(c)
        self._len_cache[x] = total
        return total

    def is_omega(self, x: ExtWeylElement) -> bool:
        return self.length(x) == 0

    def enumerate_omega(self, bound: int) -> list[ExtWeylElement]:
        """All length-zero elements whose translation has sup-norm <= bound."""
        found = []
        for w in range(self.datum.weyl_order):
            for t in itertools.product(range(-bound, bound + 1), repeat=self.datum.y_rank):
                x = ExtWeylElement(w, t)
                if self.length(x) == 0:
                    found.append(x)
        return sorted(found)

    # -- reduced expressions ----------------------------------------------

    def left_descents(self, x: ExtWeylElement) -> list[AffineGenerator]:
        lx = self.length(x)
        return [g for g in self.generators if self.length(self.mul(self._gen_elements[g], x)) < lx]

    def reduced_expression(
        self, x: ExtWeylElement, strategy: str = "min"
    ) -> tuple[list[AffineGenerator], ExtWeylElement]:
        """Write x = s_1 ... s_r * omega with r = length(x), omega length zero.

        Descents are peeled greedily; `strategy` picks the smallest ("min",
        default) or largest ("max") available generator index at each step,
        or a seeded randomized choice ("random:<seed>"), so every choice is
        reproducible.
        """
        rng = None
        if strategy.startswith("random"):
            import random

            rng = random.Random(strategy)
        word: list[AffineGenerator] = []
        cur = x
        while self.length(cur) > 0:
            descents = self.left_descents(cur)
            if rng is not None:
                g = descents[rng.randrange(len(descents))]
            else:
                g = descents[0] if strategy == "min" else descents[-1]
            word.append(g)
            cur = self.mul(self._gen_elements[g], cur)
        return word, cur

    def omega_left_form(
        self, x: ExtWeylElement, strategy: str = "min"
    ) -> tuple[ExtWeylElement, list[AffineGenerator]]:
        """Write x = omega * s_1' ... s_r' (length-zero part on the left).

        The conjugated letters stay in S_aff because the length-zero subgroup
        acts on the affine Weyl group by Coxeter group automorphisms.
        """
        word, omega = self.reduced_expression(x, strategy=strategy)
        omega_inv = self.inv(omega)
        out = []
        for g in word:
            conj = self.mul_many(omega_inv, self._gen_elements[g], omega)
            out.append(self._gen_by_element[conj])
        return omega, out

    def omega_right_split(self, x: ExtWeylElement) -> tuple[ExtWeylElement, ExtWeylElement]:
        """Split x = a * omega with a in the affine Weyl group."""
        _, omega = self.reduced_expression(x)
        a = self.mul(x, self.inv(omega))
        return a, omega

    def word_to_element(self, word: Iterable[AffineGenerator]) -> ExtWeylElement:
        return self.mul_many(*(self._gen_elements[g] for g in word))

    def in_affine_subgroup(self, x: ExtWeylElement) -> bool:
        cached = self._waff_cache.get(x.t)
        if cached is None:
            cached = self.datum.coroot_lattice_contains(x.t)
            self._waff_cache[x.t] = cached
        return cached

    # -- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, x: ExtWeylElement, y: ExtWeylElement) -> bool:
        """Extended Bruhat order: comparable only within one W_aff-coset."""
        if x == y:
            return True
        if not self.in_affine_subgroup(self.mul(x, self.inv(y))):
            return False
        return self._bruhat_aff(x, y)

    def _bruhat_aff(self, x: ExtWeylElement, y: ExtWeylElement) -> bool:
        # x and y lie in one coset W_aff * omega; lifting-property recursion
        if x == y:
            return True
        ly = self.length(y)
        if self.length(x) >= ly:
            return False
        if ly == 0:
            return False
        key = (x, y)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        g = self.left_descents(y)[0]
        ge = self._gen_elements[g]
        sy = self.mul(ge, y)
        sx = self.mul(ge, x)
        if self.length(sx) < self.length(x):
            res = self._bruhat_aff(sx, sy)
        else:
            res = self._bruhat_aff(x, sy)
        self._bruhat_cache[key] = res
        return res

    def bruhat_lower_set(self, x: ExtWeylElement) -> set[ExtWeylElement]:
        """All y <= x, via subword products of one reduced expression."""
        word, omega = self.reduced_expression(x)
        partial = {self.identity}
        for g in word:
            ge = self._gen_elements[g]
            partial |= {self.mul(p, ge) for p in partial}
        return {self.mul(p, omega) for p in partial}

    # -- element literals ---------------------------------------------------

    def parse_element(self, literal: str) -> ExtWeylElement:
        """Parse "w : t" with w a word in named generators, t a Y-vector."""
        text = literal.strip()
        if not text:
            raise MalformedInput("empty element literal")
        word_part, _, trans_part = text.partition(":")
        acc = self.identity
        for tok in word_part.split():
            if tok == "e":
                continue
            acc = self.mul(acc, self._gen_elements[self.gen_by_name(tok)])
        trans_part = trans_part.strip()
        if trans_part:
            try:
                coords = tuple(int(c) for c in trans_part.split(","))
            except ValueError as exc:
                raise MalformedInput(f"bad translation in {literal!r}") from exc
            acc = self.mul(acc, self.translation(coords))
        return acc

    def format_element(self, x: ExtWeylElement) -> str:
        word = self.datum.weyl_elements[x.w].word
        head = " ".join(f"s{i + 1}" for i in word) if word else "e"
        return f"{head} : {','.join(str(c) for c in x.t)}"

    def random_element(self, rng, bound: int) -> ExtWeylElement:
        w = rng.randrange(self.datum.weyl_order)
        t = tuple(rng.randint(-bound, bound) for _ in range(self.datum.y_rank))
        return ExtWeylElement(w, t)

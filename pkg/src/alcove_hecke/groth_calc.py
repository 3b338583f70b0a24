"""Multiplicity-level model of the graded module category over the regular
object: simple-class vectors, filtration multisets for the standard and
costandard one-parameter families, wall-crossing and averaging transforms,
the constructive projective-injective filtrations, the dim-Hom pairing,
duality, and forgetting the grading.

Objects are represented by filtration multisets rather than composition
series: the filtration multiplicities are determined combinatorially, while
composition multiplicities in positive characteristic are not.  For the same
reason filtration multisets are never expanded into simple-class vectors;
what downstream checks rely on is the order constraint that each filtration
label is the strict periodic minimum of its member's support, which keeps
distinct labels independent.  The Krull-Schmidt decomposition of the
constructed projective objects is likewise field-dependent and deliberately
not computed; callers get the full multiset together with the order
constraints that hold for its support.

All transforms are pure over immutable inputs and safe to parallelize.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .alcove import AlcoveModel
from .errors import FlavorMismatch, NotRestricted, NotSpherical
from .ext_weyl import AffineGenerator, ExtWeylElement
from .orders import PeriodicOrder
from .parabolic import FinitarySubset, in_awext, in_awext_s, min_rep
from .root_datum import Vector, vec_add, vec_neg, vec_sub
from .satake_char import SatakeChar

COVERMA = "coVerma"
VERMA = "Verma"


class SimpleLabel(NamedTuple):
    """A simple-object label in canonical split form: section rep * t_shift."""

    rep: ExtWeylElement
    shift: Vector


@dataclass(frozen=True)
class ClassVector:
    coords: dict[SimpleLabel, int]

    def __post_init__(self):
        object.__setattr__(
            self, "coords", {k: v for k, v in self.coords.items() if v != 0}
        )

    def mult(self, label: SimpleLabel) -> int:
        return self.coords.get(label, 0)

    def total(self) -> int:
        return sum(self.coords.values())

    def items(self):
        return sorted(self.coords.items())


@dataclass(frozen=True)
class FiltrationMultiset:
    mults: dict[ExtWeylElement, int]
    flavor: str = COVERMA

    def __post_init__(self):
        assert self.flavor in (COVERMA, VERMA)
        clean = {}
        for w, m in self.mults.items():
            if m < 0:
                raise ValueError(f"negative multiplicity at {w}")
            if m:
                clean[w] = m
        object.__setattr__(self, "mults", clean)

    def mult(self, w: ExtWeylElement) -> int:
        return self.mults.get(w, 0)

    def total(self) -> int:
        return sum(self.mults.values())

    def support(self) -> list[ExtWeylElement]:
        return sorted(self.mults)

    def items(self):
        return sorted(self.mults.items())


class GrothCalc:
    def __init__(self, alc: AlcoveModel, order: PeriodicOrder | None = None):
        self.alc = alc
        self.ext = alc.ext
        self.datum = alc.datum
        self.order = order if order is not None else PeriodicOrder(alc)
        self.satake = SatakeChar(alc.datum)
        self._orth_rows = _hermite_rows(self.datum.orthogonal_basis)

    # -- labels ------------------------------------------------------------

    def _reduce_orthogonal(self, tau: Vector) -> Vector:
        """Canonical representative of tau modulo the root-orthogonal sublattice."""
        cur = list(tau)
        for row, pivot_col in self._orth_rows:
            q = cur[pivot_col] // row[pivot_col]
            if q:
                for i in range(len(cur)):
                    cur[i] -= q * row[i]
        return tuple(cur)

    def simple_label(self, x: ExtWeylElement) -> SimpleLabel:
        """Canonical split x = rep * t_shift through the fixed section."""
        y, lam = self.alc.res_decompose(x)
        tau_red = self._reduce_orthogonal(y.t)
        moved = vec_sub(y.t, tau_red)
        rep = ExtWeylElement(y.w, tau_red)
        return SimpleLabel(rep, vec_add(moved, lam))

    def label_element(self, label: SimpleLabel) -> ExtWeylElement:
        return self.ext.mul(label.rep, self.ext.translation(label.shift))

    def forget_grading(self, x: ExtWeylElement) -> ExtWeylElement:
        """The equivalence class of x: its canonical section representative."""
        return self.simple_label(x).rep

    # -- class vectors -------------------------------------------------------

    def phi_of_simple(self, w: ExtWeylElement, a: FinitarySubset | None = None) -> ClassVector:
        """Class of the free module on the simple object labeled by w.

        Valid at the level of characteristic-zero character data; the labels
        and the translation pattern are characteristic-free.
        """
        if a is None:
            if not self.alc.in_wexts(w):
                raise NotSpherical(f"{w} is not a minimal coset representative")
        elif not in_awext_s(self.alc, w, a):
            raise NotSpherical(f"{w} fails the Whittaker minimality test")
        x, lam = self.alc.res_decompose(w)
        mu = self.datum.act_y(self.datum.w0, lam)
        assert self.datum.is_dominant(mu)
        weights = self.satake.weight_multiplicities(mu)
        out: dict[SimpleLabel, int] = {}
        for xi, m in weights.items():
            nu = self.datum.act_y(self.datum.w0, xi)
            label = self.simple_label(self.ext.mul(x, self.ext.translation(nu)))
            out[label] = out.get(label, 0) + m
        return ClassVector(out)

    # -- filtration multisets ---------------------------------------------------

    def grading_shift(self, obj, nu: Vector):
        """The shift-of-grading transform: relabels w -> w t_{-nu}."""
        nu = self.datum.check_y(nu)
        tneg = self.ext.translation(vec_neg(nu))
        if isinstance(obj, ClassVector):
            out: dict[SimpleLabel, int] = {}
            for label, m in obj.coords.items():
                shifted = self.simple_label(self.ext.mul(self.label_element(label), tneg))
                out[shifted] = out.get(shifted, 0) + m
            return ClassVector(out)
        return FiltrationMultiset(
            {self.ext.mul(w, tneg): m for w, m in obj.mults.items()}, obj.flavor
        )

    def seed_filtration(self) -> FiltrationMultiset:
        """Costandard filtration of the free module on the fundamental-box
        tilting seed: one label w t_{w0(varsigma)} for each finite Weyl w."""
        shift = self.ext.translation(self.datum.act_y(self.datum.w0, self.datum.varsigma))
        mults = {}
        for el in self.datum.weyl_elements:
            w = ExtWeylElement(el.index, self.ext.identity.t)
            mults[self.ext.mul(w, shift)] = 1
        return FiltrationMultiset(mults, COVERMA)

    def _require_coverma(self, f: FiltrationMultiset) -> None:
        if f.flavor != COVERMA:
            raise FlavorMismatch(f"expected {COVERMA} flavor, got {f.flavor}")

    def xi_s(self, f: FiltrationMultiset, g: AffineGenerator) -> FiltrationMultiset:
        """Wall-crossing along one affine generator: F |-> F + s.F."""
        self._require_coverma(f)
        ge = self.ext.gen_element(g)
        out = dict(f.mults)
        for w, m in f.mults.items():
            sw = self.ext.mul(ge, w)
            out[sw] = out.get(sw, 0) + m
        return FiltrationMultiset(out, COVERMA)

    def xi_omega(self, f: FiltrationMultiset, omega: ExtWeylElement) -> FiltrationMultiset:
        """Wall-crossing along a length-zero element: relabel w -> omega w."""
        self._require_coverma(f)
        assert self.ext.length(omega) == 0
        return FiltrationMultiset(
            {self.ext.mul(omega, w): m for w, m in f.mults.items()}, COVERMA
        )

    def projective_filtration(
        self, x: ExtWeylElement, strategy: str = "min"
    ) -> FiltrationMultiset:
        """Costandard filtration of the constructive projective-injective
        object attached to a restricted x.

        The wall-crossing word is read off a reduced expression of
        t_varsigma w0 x^{-1}; the result has x and its triangle image each
        with multiplicity one and support sandwiched between them in the
        periodic order.
        """
        if not self.alc.in_wres(x):
            raise NotRestricted(f"{x} is not restricted")
        ext = self.ext
        y = ext.mul_many(ext.translation(self.datum.varsigma), ext.w0, ext.inv(x))
        omega, word = ext.omega_left_form(y, strategy=strategy)
        f = self.xi_omega(self.seed_filtration(), ext.inv(omega))
        for g in word:
            f = self.xi_s(f, g)
        tri = self.alc.triangle(x)
        assert f.mult(x) == 1, f"bottom multiplicity {f.mult(x)} at {x}"
        assert f.mult(tri) == 1, f"top multiplicity {f.mult(tri)} at {tri}"
        for z in f.support():
            assert self.order.leq(x, z) and self.order.leq(z, tri), (x, z, tri)
        return f

    # -- averaging ---------------------------------------------------------------

    def av_psi(self, f: FiltrationMultiset, a: FinitarySubset) -> FiltrationMultiset:
        """Collapse labels onto their periodic coset representatives."""
        out: dict[ExtWeylElement, int] = {}
        for w, m in f.mults.items():
            rep = min_rep(self.alc, w, a)
            out[rep] = out.get(rep, 0) + m
        return FiltrationMultiset(out, f.flavor)

    def av_star(self, f: FiltrationMultiset, a: FinitarySubset) -> FiltrationMultiset:
        """Spread labels over their W_A-cosets."""
        out: dict[ExtWeylElement, int] = {}
        for w, m in f.mults.items():
            if not in_awext(self.alc, w, a):
                raise NotSpherical(f"label {w} is not a periodic coset representative")
            for v in a.elements:
                vw = self.ext.mul(v, w)
                out[vw] = out.get(vw, 0) + m
        return FiltrationMultiset(out, f.flavor)

    # av_! has the same effect on multiplicity data as av_star (their classes
    # in the Grothendieck group agree), so it is exposed as an alias
    av_shriek = av_star

    # -- pairings and duality ---------------------------------------------------

    def dim_hom(self, f: FiltrationMultiset, g: FiltrationMultiset) -> int:
        """dim Hom between an object with a standard-family filtration (f)
        and one with a costandard-family filtration (g)."""
        if f.flavor != VERMA or g.flavor != COVERMA:
            raise FlavorMismatch(f"need ({VERMA}, {COVERMA}); got ({f.flavor}, {g.flavor})")
        return sum(m * g.mult(w) for w, m in f.mults.items())

    def duality(self, obj):
        """The duality involution: trivial on classes, flavor swap on filtrations."""
        if isinstance(obj, ClassVector):
            return obj
        return FiltrationMultiset(dict(obj.mults), VERMA if obj.flavor == COVERMA else COVERMA)


def _hermite_rows(basis) -> list[tuple[list[int], int]]:
    """Row-echelon form over Z of the given lattice basis, with pivot columns.

    Used to pick canonical coset representatives modulo the lattice; empty
    for semisimple data.
    """
    rows = [list(v) for v in basis]
    out: list[tuple[list[int], int]] = []
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        nonzero = [r for r in rows if r[col] != 0]
        if not nonzero:
            col += 1
            continue
        piv = min(nonzero, key=lambda r: abs(r[col]))
        rows.remove(piv)
        if piv[col] < 0:
            piv = [-c for c in piv]
        reduced = []
        for r in rows:
            q = r[col] // piv[col]
            reduced.append([a - q * b for a, b in zip(r, piv)])
        rows = [r for r in reduced if any(r)]
        if any(r[col] != 0 for r in rows):
            rows.append(piv)
            continue
        out.append((piv, col))
        col += 1
    return out

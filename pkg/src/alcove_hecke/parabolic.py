"""Finitary generator subsets and their coset-representative sets.

For a finitary A inside the affine generator set, this module enumerates the
finite parabolic subgroup W_A, finds its longest element, and implements the
three representative tests (minimal-spherical, restricted, and the periodic
representative set) together with the coset representative map.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alcove import AlcoveModel
from .errors import NotFinitary, Unrepresentable
from .ext_weyl import AffineGenerator, ExtWeyl, ExtWeylElement
from .root_datum import pair, vec_neg


@dataclass(frozen=True)
class FinitarySubset:
    generators: tuple[AffineGenerator, ...]
    elements: tuple[ExtWeylElement, ...]  # all of W_A, sorted by length
    longest: ExtWeylElement

    @property
    def order(self) -> int:
        return len(self.elements)


def _affine_cartan_entry(ext: ExtWeyl, a: AffineGenerator, b: AffineGenerator) -> int:
    d = ext.datum

    def root_coroot(g: AffineGenerator):
        if g.kind == "finite":
            return d.simple_roots[g.index], d.simple_coroots[g.index]
        return vec_neg(d.highest_roots[g.index]), vec_neg(d.highest_short_coroots[g.index])

    root_a, _ = root_coroot(a)
    _, coroot_b = root_coroot(b)
    return pair(root_a, coroot_b)


def is_finitary(ext: ExtWeyl, gens) -> bool:
    """Exact finite-type test on the affine Cartan submatrix (no size cap)."""
    gens = tuple(gens)
    n = len(gens)
    cartan = [[_affine_cartan_entry(ext, a, b) for b in gens] for a in gens]
    from .root_datum import _principal_minors_positive

    return n == 0 or _principal_minors_positive(cartan)


def make_parabolic(ext: ExtWeyl, gens) -> FinitarySubset:
    gens = tuple(sorted(set(gens)))
    if not is_finitary(ext, gens):
        raise NotFinitary(f"generators {[g.name for g in gens]} span an infinite group")
    elements = {ext.identity}
    frontier = [ext.identity]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = ext.mul(ext.gen_element(g), cur)
            if nxt not in elements:
                elements.add(nxt)
                frontier.append(nxt)
    ordered = sorted(elements, key=lambda e: (ext.length(e), e))
    longest = ordered[-1]
    lengths = [ext.length(e) for e in ordered]
    assert lengths.count(lengths[-1]) == 1, "longest element must be unique"
    return FinitarySubset(generators=gens, elements=tuple(ordered), longest=longest)


def in_awext_s(alc: AlcoveModel, x: ExtWeylElement, a: FinitarySubset) -> bool:
    """Membership in the Whittaker-spherical representative set.

    Characterized by lengths adding in w_A * x * w0.
    """
    ext = alc.ext
    prod = ext.mul_many(a.longest, x, ext.w0)
    return ext.length(prod) == ext.length(a.longest) + ext.length(x) + ext.length(ext.w0)


def in_awext_res(alc: AlcoveModel, x: ExtWeylElement, a: FinitarySubset) -> bool:
    return alc.in_wres(x) and in_awext_s(alc, x, a)


def in_awext(alc: AlcoveModel, x: ExtWeylElement, a: FinitarySubset) -> bool:
    """Membership in the periodic representative set for W_A cosets."""
    y, _ = alc.res_decompose(x)
    return in_awext_res(alc, y, a)


def min_rep(alc: AlcoveModel, x: ExtWeylElement, a: FinitarySubset) -> ExtWeylElement:
    """The unique representative of W_A x in the periodic representative set.

    Brute force over the finite coset; the representative is the minimum of
    the coset for the periodic order.
    """
    ext = alc.ext
    hits = [c for v in a.elements if in_awext(alc, (c := ext.mul(v, x)), a)]
    if len(hits) != 1:
        raise Unrepresentable(f"coset of {x} has {len(hits)} periodic representatives")
    return hits[0]

"""Alcove geometry for W_ext: membership tests, boxes, and the triangle map.

Every test is decided on the single interior sample point p0 = varsigma / h,
where h is one plus the maximal height of a positive root, so all pairings
<beta, p0> = height(beta) / h are exact with one shared denominator.  Points
are stored as integer numerator vectors over that denominator.
"""

from __future__ import annotations

from typing import NamedTuple

from .ext_weyl import ExtWeyl, ExtWeylElement
from .root_datum import Vector, pair, vec_add, vec_neg, vec_scale, vec_sub


class AlcovePoint(NamedTuple):
    """Numerators of a rational point of Y x R over the model denominator."""

    nums: Vector


class AlcoveModel:
    def __init__(self, ext: ExtWeyl):
        self.ext = ext
        self.datum = ext.datum
        self.denominator = 1 + max(self.datum.root_heights)
        self.base_point = AlcovePoint(self.datum.varsigma)
        # p0 lies in the fundamental alcove: 0 < <beta, p0> < 1 for beta > 0
        for beta in self.datum.positive_roots:
            c = pair(beta, self.base_point.nums)
            assert 0 < c < self.denominator

    def act(self, x: ExtWeylElement, p: AlcovePoint) -> AlcovePoint:
        """(w t_lambda) . p = w(p) + w(lambda), exactly."""
        d = self.datum
        moved = d.act_y(x.w, p.nums)
        shift = vec_scale(self.denominator, d.act_y(x.w, x.t))
        return AlcovePoint(vec_add(moved, shift))

    def _inverse_base_pairings(self, x: ExtWeylElement, roots) -> list[int]:
        p = self.act(self.ext.inv(x), self.base_point)
        return [pair(beta, p.nums) for beta in roots]

    def in_wexts(self, x: ExtWeylElement) -> bool:
        """Minimal-coset-representative test: x^{-1}(A_fund) in the dominant cone."""
        return all(c > 0 for c in self._inverse_base_pairings(x, self.datum.positive_roots))

    def in_wres(self, x: ExtWeylElement) -> bool:
        """Restricted test: x^{-1}(A_fund) inside the fundamental box."""
        h = self.denominator
        return all(0 < c < h for c in self._inverse_base_pairings(x, self.datum.simple_roots))

    def box_coords(self, x: ExtWeylElement) -> tuple[int, ...]:
        h = self.denominator
        return tuple(-((-c) // h) for c in self._inverse_base_pairings(x, self.datum.simple_roots))

    def box_of(self, x: ExtWeylElement) -> Vector:
        """Canonical mu in Y with <alpha, mu> = ceil <alpha, x^{-1}.p0>."""
        return self.datum.section_lift(self.box_coords(x))

    def triangle(self, x: ExtWeylElement) -> ExtWeylElement:
        e = self.ext
        mu = self.box_of(x)
        return e.mul_many(x, e.translation(mu), e.w0, e.translation(vec_neg(mu)))

    def triangle_inverse(self, v: ExtWeylElement) -> ExtWeylElement:
        e = self.ext
        nu = self.box_of(v)
        shift = vec_sub(nu, self.datum.varsigma)
        return e.mul_many(v, e.translation(shift), e.w0, e.translation(vec_neg(shift)))

    def res_decompose(self, x: ExtWeylElement) -> tuple[ExtWeylElement, Vector]:
        """Split x = y t_lambda with y restricted, deterministically.

        lambda is the canonical lift of alpha |-> 1 - <alpha, box_of(x)>; the
        restricted factor is then y = x t_{-lambda}.
        """
        coords = self.box_coords(x)
        lam = self.datum.section_lift(tuple(1 - c for c in coords))
        y = self.ext.mul(x, self.ext.translation(vec_neg(lam)))
        assert self.in_wres(y), (x, y, lam)
        return y, lam

    def restricted_elements(self) -> list[ExtWeylElement]:
        """All restricted elements (finite for semisimple data).

        A restricted element w t_lambda has <alpha, lambda> in {-1, 0} for
        every simple alpha, so for semisimple data it is enough to scan the
        lifts of those pairing patterns.
        """
        import itertools

        d = self.datum
        if d.orthogonal_basis:
            raise ValueError("restricted elements form an infinite set for this datum")
        out = []
        for w in range(d.weyl_order):
            for cs in itertools.product((-1, 0), repeat=d.rank):
                x = ExtWeylElement(w, d.section_lift(cs))
                if self.in_wres(x):
                    out.append(x)
        return sorted(out)

"""Weight multiplicities of highest-weight modules for the dual group.

The dual group has weight lattice Y and roots the coroots of the datum.  The
multiplicities are those of the characteristic-zero simple module (equal to
the Weyl/induced-module character), computed by the Freudenthal recursion in
exact integer arithmetic; a brute-force Kostant-partition evaluation and the
Weyl dimension formula are provided as independent cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoLift, NotDominant
from .root_datum import RootDatum, Vector, pair, vec_add, vec_scale, vec_sub


@dataclass(frozen=True)
class WeightMultiset:
    multiplicities: dict[Vector, int]

    def mult(self, nu: Vector) -> int:
        return self.multiplicities.get(tuple(nu), 0)

    def total(self) -> int:
        return sum(self.multiplicities.values())

    def items(self):
        return sorted(self.multiplicities.items())


class SatakeChar:
    def __init__(self, datum: RootDatum):
        self.datum = datum
        self._char_cache: dict[Vector, WeightMultiset] = {}
        self._partition_cache: dict[tuple, int] = {}
        # coroot data in simple-coroot coordinates
        self._coroot_coords = list(datum.coroot_in_simple)
        self._two_rho_vee = (0,) * datum.y_rank
        for cv in datum.positive_coroots:
            self._two_rho_vee = vec_add(self._two_rho_vee, cv)

    # -- lattice helpers ---------------------------------------------------

    def _simple_reflect(self, i: int, nu: Vector) -> Vector:
        c = pair(self.datum.simple_roots[i], nu)
        return vec_sub(nu, vec_scale(c, self.datum.simple_coroots[i]))

    def dominant_representative(self, nu: Vector) -> Vector:
        cur = tuple(nu)
        while True:
            for i, alpha in enumerate(self.datum.simple_roots):
                if pair(alpha, cur) < 0:
                    cur = self._simple_reflect(i, cur)
                    break
            else:
                return cur

    def _gap_coords(self, mu: Vector, nu: Vector) -> Vector | None:
        """Coordinates of mu - nu in the simple coroots, or None."""
        diff = vec_sub(mu, nu)
        try:
            return self.datum.coroot_coordinates(diff)
        except NoLift:
            return None

    # -- Freudenthal recursion ----------------------------------------------

    def weight_multiplicities(self, mu: Vector) -> WeightMultiset:
        mu = self.datum.check_y(mu)
        if not self.datum.is_dominant(mu):
            raise NotDominant(f"{mu} is not dominant")
        cached = self._char_cache.get(mu)
        if cached is not None:
            return cached

        d = self.datum
        lowest = d.act_y(d.w0, mu)
        span = self._gap_coords(mu, lowest)
        assert span is not None and all(c >= 0 for c in span)

        # candidate weights: mu minus box combinations of simple coroots
        import itertools

        grid: list[tuple[Vector, Vector]] = []  # (weight, gap coords)
        for cs in itertools.product(*(range(c + 1) for c in span)):
            nu = mu
            for i, k in enumerate(cs):
                nu = vec_sub(nu, vec_scale(k, d.simple_coroots[i]))
            grid.append((nu, cs))

        dominant = [(nu, cs) for nu, cs in grid if d.is_dominant(nu)]
        dominant.sort(key=lambda t: (sum(t[1]), t[0]))

        mult: dict[Vector, int] = {}
        for nu, cs in dominant:
            if nu == mu:
                mult[nu] = 1
                continue
            numerator = 0
            for idx, beta in enumerate(d.positive_coroots):
                bc = self._coroot_coords[idx]
                k = 1
                while True:
                    higher = vec_add(nu, vec_scale(k, beta))
                    gap = tuple(
                        a - k * b for a, b in zip(cs, bc)
                    )
                    if any(g < 0 for g in gap):
                        break
                    m_h = mult.get(self.dominant_representative(higher), 0)
                    if m_h:
                        numerator += 2 * m_h * d.dual_form(higher, bc)
                    k += 1
            # denominator |mu+rho|^2 - |nu+rho|^2 = B(mu+nu+2rho, mu-nu)
            denom = d.dual_form(
                vec_add(vec_add(mu, nu), self._two_rho_vee), cs
            )
            assert denom > 0, (mu, nu)
            assert numerator % denom == 0, (mu, nu, numerator, denom)
            m = numerator // denom
            if m:
                mult[nu] = m

        full: dict[Vector, int] = {}
        for nu, _ in grid:
            m = mult.get(self.dominant_representative(nu), 0)
            if m:
                full[nu] = m
        result = WeightMultiset(full)
        assert result.mult(mu) == 1
        self._char_cache[mu] = result
        return result

    # -- independent oracles --------------------------------------------------

    def kostant_partition(self, coords: Vector) -> int:
        """Number of ways to write a coroot-lattice vector (given in
        simple-coroot coordinates) as a nonnegative sum of positive coroots."""
        coords = tuple(coords)
        if any(c < 0 for c in coords):
            return 0
        if all(c == 0 for c in coords):
            return 1
        return self._partition_count(coords, 0)

    def _partition_count(self, coords: Vector, idx: int) -> int:
        if all(c == 0 for c in coords):
            return 1
        if idx >= len(self._coroot_coords):
            return 0
        key = (coords, idx)
        cached = self._partition_cache.get(key)
        if cached is not None:
            return cached
        beta = self._coroot_coords[idx]
        total = 0
        k = 0
        cur = coords
        while all(c >= 0 for c in cur):
            total += self._partition_count(cur, idx + 1)
            cur = tuple(a - b for a, b in zip(cur, beta))
            k += 1
        self._partition_cache[key] = total
        return total

    def kostant_multiplicity(self, mu: Vector, nu: Vector) -> int:
        """Weight multiplicity by the Kostant alternating sum (brute force)."""
        mu = self.datum.check_y(mu)
        nu = self.datum.check_y(nu)
        if not self.datum.is_dominant(mu):
            raise NotDominant(f"{mu} is not dominant")
        d = self.datum
        total = 0
        for el in d.weyl_elements:
            shifted = vec_sub(d.act_y(el.index, self._two_rho_vee), self._two_rho_vee)
            assert all(c % 2 == 0 for c in shifted)
            r_w = tuple(c // 2 for c in shifted)  # w(rho_vee) - rho_vee
            arg = vec_add(d.act_y(el.index, mu), vec_sub(r_w, nu))
            coords = self._gap_coords(arg, (0,) * d.y_rank)
            if coords is None:
                continue
            p = self.kostant_partition(coords)
            total += -p if el.length % 2 else p
        return total

    def weyl_dimension(self, mu: Vector) -> int:
        """Dimension of the highest-weight module, as an exact integer."""
        mu = self.datum.check_y(mu)
        if not self.datum.is_dominant(mu):
            raise NotDominant(f"{mu} is not dominant")
        d = self.datum
        dim = Fraction(1)
        top = vec_add(vec_scale(2, mu), self._two_rho_vee)
        for bc in self._coroot_coords:
            dim *= Fraction(d.dual_form(top, bc), d.dual_form(self._two_rho_vee, bc))
        assert dim.denominator == 1
        return int(dim)

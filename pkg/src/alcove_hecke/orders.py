"""The periodic order on W_ext.

Two elements are compared by translating both into the minimal-representative
set W_ext^S with a common antidominant push and comparing there in Bruhat
order; the result does not depend on the chosen push.  Comparisons are
memoized because the multiplicity calculator asks the same ones repeatedly.
"""

from __future__ import annotations

from .alcove import AlcoveModel
from .ext_weyl import ExtWeylElement
from .root_datum import pair, vec_scale


class PeriodicOrder:
    def __init__(self, alc: AlcoveModel):
        self.alc = alc
        self.ext = alc.ext
        self._cache: dict[tuple[ExtWeylElement, ExtWeylElement], bool] = {}

    def _push_steps(self, x: ExtWeylElement) -> int:
        """Smallest N >= 0 with x t_{-N varsigma} in W_ext^S."""
        _, lam = self.alc.res_decompose(x)
        return max(
            [0] + [pair(alpha, lam) for alpha in self.alc.datum.simple_roots]
        )

    def leq(self, x: ExtWeylElement, y: ExtWeylElement) -> bool:
        if x == y:
            return True
        key = (x, y)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        n = max(self._push_steps(x), self._push_steps(y))
        push = self.ext.translation(vec_scale(-n, self.alc.datum.varsigma))
        xs = self.ext.mul(x, push)
        ys = self.ext.mul(y, push)
        assert self.alc.in_wexts(xs) and self.alc.in_wexts(ys)
        res = self.ext.bruhat_leq(xs, ys)
        self._cache[key] = res
        return res

"""Integer-coefficient Laurent polynomials in one variable v.

Stored as a finitely supported exponent -> coefficient map with no explicit
zeros; all arithmetic is exact.

>>> v = LaurentPolynomial.monomial(1)
>>> str((v + v.bar()) * v)
'1*v^0+1*v^2'
>>> (v - v).is_zero()
True
>>> parse_poly("1*v^-1-1*v^1").evaluate(-1)
0
"""

from __future__ import annotations


class LaurentPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    def coeff(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        return isinstance(other, LaurentPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial(out)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) - c
        return LaurentPolynomial(out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({k: c * other for k, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def bar(self) -> "LaurentPolynomial":
        """The involution v -> v^{-1}."""
        return LaurentPolynomial({-k: c for k, c in self.coeffs.items()})

    def evaluate(self, value: int) -> int:
        """Exact evaluation at a nonzero integer (negative exponents allowed)."""
        total = 0
        for k, c in self.coeffs.items():
            if k >= 0:
                total += c * value**k
            else:
                q, r = divmod(c, value ** (-k))
                if r != 0:
                    raise ValueError(f"evaluation at {value} is not integral")
                total += q
        return total

    def min_exponent(self) -> int:
        return min(self.coeffs)

    def max_exponent(self) -> int:
        return max(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            if parts:
                parts.append("+" if c > 0 else "-")
                parts.append(f"{abs(c)}*v^{k}")
            else:
                parts.append(f"{c}*v^{k}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial({0: 1})
V = LaurentPolynomial({1: 1})
V_INV = LaurentPolynomial({-1: 1})


def parse_poly(text: str) -> LaurentPolynomial:
    """Parse the serialization produced by str(): "c*v^k" terms joined by +/-."""
    s = text.strip().replace(" ", "")
    if s in ("", "0"):
        return ZERO
    terms: list[str] = []
    cur = ""
    for i, ch in enumerate(s):
        # a sign starts a new term unless it follows '^' or '*' or leads
        if ch in "+-" and i > 0 and s[i - 1] not in "^*":
            terms.append(cur)
            cur = "" if ch == "+" else "-"
        else:
            cur += ch
    terms.append(cur)
    out: dict[int, int] = {}
    for t in terms:
        coeff_text, sep, exp_text = t.partition("*v^")
        if not sep:
            raise ValueError(f"bad polynomial term {t!r}")
        try:
            c = int(coeff_text)
            k = int(exp_text)
        except ValueError as exc:
            raise ValueError(f"bad polynomial term {t!r}") from exc
        out[k] = out.get(k, 0) + c
    return LaurentPolynomial(out)

"""Alexander polynomials of zero t-exponent one-relator presentations.

For a relator rewritten over the letters ``a[n]`` the abelianised Fox
derivative with respect to ``a`` is, up to a unit ``+-t^k``, the signed sum
of ``t^n`` over its letters.  Positive real roots are counted exactly with a
Sturm sequence over the rationals.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping

from .words import Word, reduce


class LaurentPoly:
    """Integer Laurent polynomial in ``t`` stored as ``{exponent: coefficient}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = defaultdict(int)
        for e, c in items:
            acc[int(e)] += int(c)
        self.coeffs = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def from_ascending(cls, coefficients: Iterable[int]) -> "LaurentPoly":
        return cls(enumerate(coefficients))

    def is_zero(self) -> bool:
        return not self.coeffs

    def normalized(self) -> "LaurentPoly":
        """Multiply by ``+-t^k`` so the lowest exponent is 0 with a positive coefficient."""
        if not self.coeffs:
            return self
        lo = min(self.coeffs)
        sign = 1 if self.coeffs[lo] > 0 else -1
        return LaurentPoly({e - lo: sign * c for e, c in self.coeffs.items()})

    def ascending(self) -> list[int]:
        """Coefficients from ``t^0`` upward; requires no negative exponents."""
        if not self.coeffs:
            return []
        if min(self.coeffs) < 0:
            raise ValueError("polynomial has negative exponents; normalize first")
        out = [0] * (max(self.coeffs) + 1)
        for e, c in self.coeffs.items():
            out[e] = c
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(
            (e1 + e2, c1 * c2) for e1, c1 in self.coeffs.items() for e2, c2 in other.coeffs.items()
        )

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self.coeffs.items()]

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in sorted(self.coeffs.items(), key=lambda ec: -ec[0]):
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            terms.append(("-" if c < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])

    def __repr__(self):
        return f"LaurentPoly({self.coeffs})"


def alexander_poly(r: Word) -> LaurentPoly:
    """Normalized Alexander polynomial of an indexed (Magnus-rewritten) relator."""
    if r.alphabet == "ta":
        raise ValueError("alexander_poly expects an indexed relator")
    r = reduce(r)
    if not r:
        raise ValueError("empty relator")
    return LaurentPoly((n, sign) for n, sign in r.letters).normalized()


# -- exact univariate polynomial arithmetic (ascending Fraction lists) ------


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _deriv(p):
    return _trim([i * c for i, c in enumerate(p)][1:])


def _rem(a, b):
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        factor = a[-1] / lead
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a = _trim(a)
    return a


def _div(a, b):
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    while a and len(a) - 1 >= db:
        factor = a[-1] / lead
        shift = len(a) - 1 - db
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a = _trim(a)
    return _trim(q)


def _gcd(a, b):
    while b:
        a, b = b, _rem(a, b)
    return [c / a[-1] for c in a]


def _variations(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _as_fraction_poly(p: LaurentPoly) -> list[Fraction]:
    if p.is_zero():
        raise ValueError("zero polynomial")
    lo = min(p.coeffs)
    return [Fraction(c) for c in LaurentPoly({e - lo: c for e, c in p.coeffs.items()}).ascending()]


def sturm_sequence(p: list[Fraction]) -> list[list[Fraction]]:
    seq = [p, _deriv(p)]
    while seq[-1]:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def positive_real_root_count(p: LaurentPoly) -> int:
    """Number of distinct roots in ``(0, oo)``."""
    f = _as_fraction_poly(p)
    if len(f) == 1:
        return 0
    sq = _div(f, _gcd(f, _deriv(f)))
    seq = sturm_sequence(sq)
    at_zero = _variations([s[0] for s in seq])
    at_inf = _variations([s[-1] for s in seq])
    return at_zero - at_inf


def descartes_positive_bound(p: LaurentPoly) -> int:
    """Sign variations of the coefficient sequence."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    return _variations([c for _, c in sorted(p.coeffs.items())])


def alexander_report(r: Word) -> dict:
    poly = alexander_poly(r)
    return {
        "poly": poly.to_json(),
        "positive_real_roots": positive_real_root_count(poly),
        "descartes_bound": descartes_positive_bound(poly),
    }

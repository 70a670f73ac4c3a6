"""Exact arithmetic in Z[1/m] and in BS(1, m) = <alpha, beta | alpha beta alpha^-1 = beta^m>.

Elements of BS(1, m) are pairs ``(i, l)`` standing for ``alpha^i beta^l`` with
``l`` in Z[1/m].  Words over {t, a} are read with ``t = alpha`` and
``a = beta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .words import Word


def _check_base(x: "MAdic", y: "MAdic"):
    if x.base != y.base:
        raise ValueError(f"base mismatch: {x.base} vs {y.base}")


@dataclass(frozen=True)
class MAdic:
    """``numerator / base**exponent``, kept canonical (exponent 0 or base does not divide numerator)."""

    numerator: int
    exponent: int
    base: int

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if self.exponent < 0:
            raise ValueError("exponent must be nonnegative; use MAdic.make")
        if self.exponent > 0 and self.numerator % self.base == 0:
            raise ValueError("non-canonical MAdic; use MAdic.make")

    @classmethod
    def make(cls, numerator: int, exponent: int, base: int) -> "MAdic":
        """Build the canonical form of ``numerator / base**exponent`` (any integer exponent)."""
        if exponent < 0:
            numerator *= base ** (-exponent)
            exponent = 0
        if numerator == 0:
            return cls(0, 0, base)
        while exponent > 0 and numerator % base == 0:
            numerator //= base
            exponent -= 1
        return cls(numerator, exponent, base)

    @classmethod
    def zero(cls, base: int) -> "MAdic":
        return cls(0, 0, base)

    @classmethod
    def from_fraction(cls, value: Fraction, base: int) -> "MAdic":
        value = Fraction(value)
        rest = value.denominator
        while (g := gcd(rest, base)) > 1:
            rest //= g
        if rest != 1:
            raise ValueError(f"{value} is not in Z[1/{base}]")
        q = 0
        while base**q % value.denominator:
            q += 1
        return cls.make(value.numerator * (base**q // value.denominator), q, base)

    def __add__(self, other: "MAdic") -> "MAdic":
        _check_base(self, other)
        q = max(self.exponent, other.exponent)
        num = self.numerator * self.base ** (q - self.exponent) + other.numerator * other.base ** (
            q - other.exponent
        )
        return MAdic.make(num, q, self.base)

    def __neg__(self) -> "MAdic":
        return MAdic(-self.numerator, self.exponent, self.base)

    def __sub__(self, other: "MAdic") -> "MAdic":
        return self + (-other)

    def scale_by_power(self, k: int) -> "MAdic":
        """Multiply by ``base**k``."""
        return MAdic.make(self.numerator, self.exponent - k, self.base)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def sign(self) -> int:
        return (self.numerator > 0) - (self.numerator < 0)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.base**self.exponent)

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{self.base}^{self.exponent}"


def madic_add(x: MAdic, y: MAdic) -> MAdic:
    return x + y


def madic_scale_by_power(x: MAdic, k: int) -> MAdic:
    return x.scale_by_power(k)


@dataclass(frozen=True)
class BSElement:
    alpha_exp: int
    beta_exp: MAdic

    @property
    def base(self) -> int:
        return self.beta_exp.base

    @classmethod
    def identity(cls, m: int) -> "BSElement":
        return cls(0, MAdic.zero(m))

    @classmethod
    def alpha(cls, m: int, i: int = 1) -> "BSElement":
        return cls(i, MAdic.zero(m))

    @classmethod
    def beta(cls, m: int, l: int | Fraction | MAdic = 1) -> "BSElement":
        if not isinstance(l, MAdic):
            l = MAdic.from_fraction(Fraction(l), m)
        return cls(0, l)

    def __mul__(self, other: "BSElement") -> "BSElement":
        return bs_mul(self, other)

    def inverse(self) -> "BSElement":
        return bs_inverse(self)

    def is_identity(self) -> bool:
        return self.alpha_exp == 0 and self.beta_exp.is_zero()

    def to_json(self) -> dict:
        return {
            "i": self.alpha_exp,
            "num": self.beta_exp.numerator,
            "den_exp": self.beta_exp.exponent,
            "base": self.base,
        }

    @classmethod
    def from_json(cls, data: dict) -> "BSElement":
        return cls(data["i"], MAdic.make(data["num"], data["den_exp"], data["base"]))

    def __str__(self):
        l = self.beta_exp
        frac = str(l.numerator) if l.exponent == 0 else f"{l.numerator}/{l.base}^{l.exponent}"
        return f"a^{self.alpha_exp} b^({frac})"


def bs_mul(g: BSElement, h: BSElement) -> BSElement:
    """``(i1, l1)(i2, l2) = (i1 + i2, l1 * m^-i2 + l2)``."""
    return BSElement(g.alpha_exp + h.alpha_exp, g.beta_exp.scale_by_power(-h.alpha_exp) + h.beta_exp)


def bs_inverse(g: BSElement) -> BSElement:
    return BSElement(-g.alpha_exp, -g.beta_exp.scale_by_power(g.alpha_exp))


def bs_normal_form(w: Word, m: int) -> BSElement:
    """Normal form of a word over {t, a} read as ``t = alpha``, ``a = beta``."""
    if w.is_indexed:
        raise ValueError("bs_normal_form expects a word over {t, a}")
    result = BSElement.identity(m)
    alpha, beta = BSElement.alpha(m), BSElement.beta(m)
    gens = {("t", 1): alpha, ("t", -1): bs_inverse(alpha), ("a", 1): beta, ("a", -1): bs_inverse(beta)}
    for letter in w:
        result = bs_mul(result, gens[letter])
    return result


def bs_in_alpha(g: BSElement) -> int | None:
    """``i`` when ``g = alpha^i``, otherwise ``None``."""
    return g.alpha_exp if g.beta_exp.is_zero() else None

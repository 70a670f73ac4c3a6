"""Exact arithmetic in Z[1/m] and the normal form alpha^i beta^l of BS(1, m)."""

from fractions import Fraction

from onerel.bsarith import BSElement, MAdic, bs_in_alpha, bs_normal_form
from onerel.words import parse_word

x = MAdic.make(5, 3, 2)  # 5/8
y = MAdic.from_fraction(Fraction(3, 4), 2)
print(x, "+", y, "=", x + y)
print("scale 3 by 2^-2:", MAdic(3, 0, 2).scale_by_power(-2))

for m in (2, 3, 5):
    alpha, beta = BSElement.alpha(m), BSElement.beta(m)
    print(f"m={m}: alpha beta alpha^-1 =", alpha * beta * alpha.inverse())

# words over {t, a} read with t = alpha, a = beta
g = bs_normal_form(parse_word("t^-1 a t"), 2)
print("t^-1 a t ->", g, g.to_json())

# <alpha> membership is exact
print(bs_in_alpha(BSElement.alpha(2, 3)), bs_in_alpha(g))

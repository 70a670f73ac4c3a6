"""Words over {t, a}, the shift action and Magnus rewriting."""

from onerel import GAMMA, GAMMA_RELATOR, TowerParams, build_gamma_presentation, build_relator
from onerel.words import a_exponent_sum, canonicalize, cyclic_reduce, format_word, magnus_rewrite, parse_word, shift, t_exponent_sum, unrewrite

# the relator of Gamma, typed the way it is usually written
r = GAMMA_RELATOR
print("relator:", r)
print("t-sum", t_exponent_sum(r), " a-sum", a_exponent_sum(r))

# zero t-sum, so it lives in H = <a[n] = t^n a t^-n>
h = magnus_rewrite(r)
print("rewritten:", h)  # b a c b^-1 (a c)^-2 with a, b, c = a[0], a[1], a[2]
assert unrewrite(h) == r

# t acts on H by shifting indices
print("shifted by 3:", shift(h, 3))

# cyclic reduction splits off a conjugator
print(cyclic_reduce(parse_word("a[0]^-1 a[1] a[2] a[0]")))

# the family Gamma_W: pick s, m and a positive word W over a[0..s-1]
p = TowerParams.parse("2,3,a[0] a[1]")
print("R_0 =", format_word(build_relator(p, 0)))
print("R_1 =", format_word(build_relator(p, 1)))
print(build_gamma_presentation(p))

# non-spanning W gets narrowed to its index window
p = TowerParams(3, 2, parse_word("a[1]"))
print(p, "->", canonicalize(p), canonicalize(p) == GAMMA)

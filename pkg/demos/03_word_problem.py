"""Deciding words in Gamma_W through the tower G_n = G_{n-1} *_C BS(1, m)."""

import random

from onerel import GAMMA, Tower, TowerParams, Verdict
from onerel.tower import sample_normal_closure
from onerel.words import build_relator, parse_word

tower = Tower(GAMMA)

# a[2] at level 2 becomes a[0]^-1 x, with x = a[0] a[2] generating the BS(1,2) side
print(tower.decide(parse_word("a[2]"), 2).to_json())

# the relator is trivial, the commutator [a[1], x] is not
print(tower.is_trivial(build_relator(GAMMA, 0)).value)
print(tower.is_trivial(parse_word("a[1] a[0] a[2] a[1]^-1 a[2]^-1 a[0]^-1")).value)

# words over {t, a} go through Magnus rewriting first
b, ac = parse_word("t a t^-1"), parse_word("a t^2 a t^-2")
print("[b, ac] is", tower.is_trivial_in_gamma(b * ac * b.inverse() * ac.inverse()).value)

# membership in C = <a[n-1]> comes from the abelianization plus one recursive check
print(tower.membership_in_c(parse_word("a[1]^5"), 2), tower.membership_in_c(parse_word("a[0] a[2]"), 3))

# random products of conjugates of relators should all be trivial
rng = random.Random(1)
for params in (GAMMA, TowerParams.parse("2,3,a[0] a[1]")):
    t = Tower(params)
    verdicts = [t.is_trivial(sample_normal_closure(params, rng)) for _ in range(50)]
    print(params, "all trivial:", all(v is Verdict.TRIVIAL for v in verdicts), dict(t.stats))

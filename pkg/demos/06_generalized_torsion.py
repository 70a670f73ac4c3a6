"""Bounded search for generalized torsion.

In the Klein bottle group <a, b | b a b^-1 = a^-1> the element a is
generalized torsion: a (b a b^-1) = 1.  In Gamma and in BS(1, 2) a small
search turns up nothing, which is all such a search can say.
"""

from onerel import SearchConfig, check_finding, gt_product, search
from onerel.oracles import BSOracle, GammaOracle, KleinOracle
from onerel.words import format_word, parse_word

klein = KleinOracle()
report = search(klein, SearchConfig(tau_max_length=2, conjugator_radius=1, max_factors=2, max_findings=1))
f = report.findings[0]
print("Klein:", f.to_json(), "after", report.examined, "products")
print("replay:", check_finding(f, klein))

# the product by hand (b is t here)
a, b = parse_word("a"), parse_word("t")
print(format_word(gt_product(a, [parse_word("1"), b])), "->", klein.is_trivial(gt_product(a, [parse_word("1"), b])).value)

# small bounds so this runs in a second or two
config = SearchConfig(tau_max_length=3, conjugator_radius=1, max_factors=3, shift_range=1)
for oracle in (BSOracle(2), GammaOracle()):
    rep = search(oracle, config)
    print(f"{oracle.name}: {len(rep.findings)} findings, {rep.examined} products, "
          f"{rep.inconclusive} inconclusive, {rep.elapsed_ms} ms")

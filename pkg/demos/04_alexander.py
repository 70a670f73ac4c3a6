"""Alexander polynomials and exact positive-root counts."""

from onerel import GAMMA, TowerParams, alexander_poly, positive_real_root_count
from onerel.alexander import LaurentPoly, alexander_report, descartes_positive_bound
from onerel.words import build_relator, canonicalize

print("Gamma:", alexander_poly(build_relator(GAMMA, 0)))
print(alexander_report(build_relator(GAMMA, 0)))

# over the family the coefficients stay positive, so no root in (0, oo)
for text in ("2,3,a[0] a[1]", "1,3,a[0]", "2,2,a[0] a[0] a[1]", "3,5,a[2] a[0] a[0]"):
    p = canonicalize(TowerParams.parse(text))
    poly = alexander_poly(build_relator(p, 0))
    print(f"{text:>20}: {poly}  roots in (0,oo): {positive_real_root_count(poly)}")

# Sturm counts are exact; Descartes only bounds
f = LaurentPoly.from_ascending([1, 0, -1, 1])  # t^3 - t^2 + 1
print(f, positive_real_root_count(f), descartes_positive_bound(f))

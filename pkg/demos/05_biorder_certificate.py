"""Certificates that no bi-order exists, checked by replay.

The prover splits on the sign of a few elements, derives a chain of
inequalities in each branch that contradicts the relator, and sends the
equality branches to the word problem.  The checker needs none of the
search, only the recorded steps.
"""

import json

from onerel import GAMMA, TowerParams, check_certificate, prove_non_biorderable
from onerel.biorder import default_names, render_chain
from onerel.oracles import BSOracle, FreeOracle, GammaOracle
from onerel.words import canonicalize

oracle = GammaOracle(GAMMA)
pres = oracle.presentation()
cert = prove_non_biorderable(pres, oracle.is_trivial)

names = default_names(GAMMA)
for chain in cert.chains():
    print(render_chain(chain, names))

# the certificate survives a JSON round trip and replays independently
data = json.loads(json.dumps(cert.to_json()))
print("check:", check_certificate(data, pres, oracle.is_trivial).to_json())



# tamper with one step and the checker says where
def leaves(node):
    if "split" in node:
        for child in node["cases"].values():
            yield from leaves(child)
    else:
        yield node



leaf = next(n for n in leaves(data["tree"]) if n.get("derivation"))
leaf["derivation"][-1]["rule"] = "hyp"
print("tampered:", check_certificate(data, pres, oracle.is_trivial).to_json())

# other members of the family
p = canonicalize(TowerParams.parse("2,3,a[0] a[1]"))
o = GammaOracle(p)
c = prove_non_biorderable(o.presentation(), o.is_trivial)
print(p, "->", "certificate" if c else "inconclusive")

# bi-orderable groups never get one; the answer is just inconclusive
for control in (FreeOracle(), BSOracle(2)):
    print(control.name, "->", prove_non_biorderable(control.presentation(), control.is_trivial))

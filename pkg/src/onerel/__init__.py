"""Tools for the one-relator groups Gamma_W.

``Gamma_W = <t, a | r>`` is built from a positive word ``W``; rewritten over
``a[n] = t^n a t^-n`` its relator becomes ``b X b^-1 = X^m``.  The package
decides the word problem through an amalgamated-product tower, computes
Alexander polynomials, produces checkable certificates that no bi-order
exists and searches for generalized torsion.
"""

from .alexander import LaurentPoly, alexander_poly, alexander_report, positive_real_root_count
from .biorder import Certificate, check_certificate, prove_non_biorderable
from .bsarith import BSElement, MAdic, bs_normal_form
from .gentorsion import Finding, SearchConfig, check_finding, gt_product, search
from .oracles import make_oracle
from .tower import Inconclusive, Tower, Verdict
from .words import (
    GAMMA,
    GAMMA_RELATOR,
    Presentation,
    TowerParams,
    Word,
    build_gamma_presentation,
    build_relator,
    format_word,
    magnus_rewrite,
    parse_word,
    reduce,
    unrewrite,
)

__version__ = "0.1.0"

__all__ = [
    "BSElement",
    "Certificate",
    "Finding",
    "GAMMA",
    "GAMMA_RELATOR",
    "Inconclusive",
    "LaurentPoly",
    "MAdic",
    "Presentation",
    "SearchConfig",
    "Tower",
    "TowerParams",
    "Verdict",
    "Word",
    "alexander_poly",
    "alexander_report",
    "bs_normal_form",
    "build_gamma_presentation",
    "build_relator",
    "check_certificate",
    "check_finding",
    "format_word",
    "gt_product",
    "magnus_rewrite",
    "make_oracle",
    "parse_word",
    "positive_real_root_count",
    "prove_non_biorderable",
    "reduce",
    "search",
    "unrewrite",
]

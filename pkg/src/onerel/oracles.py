"""Word-problem oracles for Gamma_W and the control groups.

Every group here is a one-relator group ``<t, a | r>`` whose relator has zero
t-exponent sum, so ``t`` generates a quotient onto Z and ``H`` (the normal
closure of ``a``) is spanned by ``a[n] = t^n a t^-n``.  Each oracle decides
words over {t, a} and indexed words alike.

=========  ==============================  ===============================
name       group                           relator
=========  ==============================  ===============================
gamma      Gamma_W (default (1,2,a[0]))    see :func:`build_gamma_presentation`
free       F_2                             none
bs         BS(1, m), t = alpha, a = beta   t a t^-1 a^-m
klein      Klein bottle group, b = t       t a t^-1 a
=========  ==============================  ===============================
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .bsarith import bs_normal_form
from .tower import Tower, Verdict
from .words import (
    GAMMA,
    Presentation,
    TowerParams,
    Word,
    build_gamma_presentation,
    magnus_rewrite,
    parse_word,
    reduce,
    t_exponent_sum,
    unrewrite,
)


class Oracle:
    """Base class.  Subclasses implement :meth:`_decide` on words over {t, a}."""

    name = "oracle"
    #: generators used to enumerate conjugators
    generators: tuple = ("t", "a")
    #: whether ``t^n (.) t^-n`` shifts are meaningful for the search
    has_shift = True

    def presentation(self) -> Presentation:
        raise NotImplementedError

    def _decide(self, w: Word) -> Verdict:
        raise NotImplementedError

    def is_trivial(self, w: Word) -> Verdict:
        if w.is_indexed:
            w = unrewrite(w)
        w = reduce(w)
        if not w:
            return Verdict.TRIVIAL
        if t_exponent_sum(w) != 0:
            return Verdict.NONTRIVIAL
        return self._decide(w)

    def shift_word(self, w: Word, k: int) -> Word:
        if w.is_indexed:
            return Word((g + k, s) for g, s in w.letters)
        return reduce(Word.gen("t", k) * w * Word.gen("t", -k)) if k else w

    def abelian(self, w: Word):
        """A homomorphic invariant of zero-t-sum words, or ``None`` if unavailable.

        Values are tuples that add coordinatewise; a trivial word maps to zero.
        """
        return None

    def abelian_sum_is_zero(self, images) -> bool:
        """Whether the images returned by :meth:`abelian` add up to zero."""
        return all(sum(col) == 0 for col in zip(*images))

    def describe(self) -> str:
        return f"{self.name}: {self.presentation()}"


class GammaOracle(Oracle):
    def __init__(self, params: TowerParams = GAMMA, p_max: int = 64):
        self.tower = Tower(params, p_max=p_max)
        self.params = self.tower.params
        self.name = "gamma" if self.params == GAMMA else f"gamma({self.params})"

    def presentation(self):
        return build_gamma_presentation(self.params)

    def is_trivial(self, w: Word) -> Verdict:
        if w.is_indexed:
            return self.tower.is_trivial(w)
        return self.tower.is_trivial_in_gamma(w)

    def abelian(self, w: Word):
        idx = w if w.is_indexed else magnus_rewrite(w)
        return self.tower.abelian_image(idx)


class GammaHOracle(GammaOracle):
    """Gamma_W restricted to ``H``: words in ``a[0..k]``, shifts act on indices."""

    def __init__(self, params: TowerParams = GAMMA, window: int | None = None, p_max: int = 64):
        super().__init__(params, p_max)
        window = self.params.s + 1 if window is None else window
        self.generators = tuple(range(window + 1))
        self.name = "gamma-h" if self.params == GAMMA else f"gamma-h({self.params})"


class FreeOracle(Oracle):
    name = "free"
    has_shift = False

    def presentation(self):
        return Presentation(Word(), name="free")

    def _decide(self, w):
        return Verdict.NONTRIVIAL

    def abelian(self, w):
        idx = w if w.is_indexed else magnus_rewrite(w)
        counts = Counter()
        for k, s in idx:
            counts[k] += s
        return tuple(sorted((k, v) for k, v in counts.items() if v))

    def abelian_sum_is_zero(self, images):
        total = Counter()
        for img in images:
            for k, v in img:
                total[k] += v
        return not any(total.values())


class BSOracle(Oracle):
    """BS(1, m) with ``t = alpha``, ``a = beta``."""

    has_shift = False

    def __init__(self, m: int = 2):
        self.m = m
        self.name = f"bs{m}" if m != 2 else "bs"

    def presentation(self):
        return Presentation(parse_word(f"t a t^-1 a^-{self.m}"), name=f"BS(1,{self.m})")

    def _decide(self, w):
        return Verdict.TRIVIAL if bs_normal_form(w, self.m).is_identity() else Verdict.NONTRIVIAL

    def abelian(self, w):
        if w.is_indexed:
            w = unrewrite(w)
        l = bs_normal_form(w, self.m).beta_exp
        return (l.to_fraction(),)


class KleinOracle(Oracle):
    """``<a, b | b a b^-1 = a^-1>`` written with ``b = t``; normal form ``t^q a^p``."""

    name = "klein"
    has_shift = False

    def presentation(self):
        return Presentation(parse_word("t a t^-1 a"), name="klein")

    @staticmethod
    def normal_form(w: Word) -> tuple[int, int]:
        q = p = 0
        for g, s in w:
            if g == "t":
                q += s
                p = -p
            else:
                p += s
        return q, p

    def _decide(self, w):
        return Verdict.TRIVIAL if self.normal_form(w) == (0, 0) else Verdict.NONTRIVIAL

    def abelian(self, w):
        if w.is_indexed:
            w = unrewrite(w)
        return (Fraction(self.normal_form(w)[1]),)


def make_oracle(name: str, params: TowerParams | None = None, m: int = 2) -> Oracle:
    if name == "gamma":
        return GammaOracle(params or GAMMA)
    if name == "gamma-h":
        return GammaHOracle(params or GAMMA)
    if name == "free":
        return FreeOracle()
    if name == "bs":
        return BSOracle(m)
    if name == "klein":
        return KleinOracle()
    raise ValueError(f"unknown oracle {name!r}; choose gamma, gamma-h, free, bs or klein")


ORACLE_NAMES = ("gamma", "gamma-h", "free", "bs", "klein")

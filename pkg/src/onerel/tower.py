"""Word problem for the groups Gamma_W through their amalgamated-product tower.

``G_n`` is the subgroup of ``H`` generated by ``a[0..n]``; it has the staggered
presentation with relators ``R_0 .. R_{n-s-1}``.  Levels ``n <= s`` are free.
Above that, ``G_n = G_{n-1} *_C B`` where ``C = <a[n-1]>`` and ``B`` is the
copy of BS(1, m) generated by ``c = a[n-1]`` and ``x = W_{n-s-1} a[n]``
(``W_j`` is ``W`` shifted by ``j``).  A word is decided by rewriting ``a[n]``
as ``W_{n-s-1}^-1 x``, pinching syllables that lie in ``C`` and reading off the
alternating form: two or more surviving syllables mean the word is
nontrivial, a single ``G_{n-1}`` syllable is decided one level down.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .bsarith import BSElement, bs_in_alpha, bs_mul
from .words import (
    TowerParams,
    Word,
    build_relator,
    canonicalize,
    format_word,
    magnus_rewrite,
    reduce,
    t_exponent_sum,
)


class Verdict(str, enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"
    INCONCLUSIVE = "inconclusive"


class Inconclusive(Exception):
    """Raised when the bounded membership fallback cannot decide."""


@dataclass(frozen=True)
class Syllable:
    tag: str  # "A": word over a[0..n-1]; "B": element of BS(1, m)
    payload: Union[Word, BSElement]

    def is_identity(self) -> bool:
        if self.tag == "A":
            return not self.payload
        return self.payload.is_identity()

    def render(self) -> str:
        if self.tag == "A":
            return f"A[{format_word(self.payload)}]"
        b = self.payload
        l = b.beta_exp
        parts = []
        if b.alpha_exp:
            parts.append("c" if b.alpha_exp == 1 else f"c^{b.alpha_exp}")
        if not l.is_zero():
            lv = str(l.numerator) if l.exponent == 0 else f"({l.numerator}/{l.base}^{l.exponent})"
            parts.append("x" if lv == "1" else f"x^{lv}")
        return f"B[{' '.join(parts) or '1'}]"

    def to_json(self):
        if self.tag == "A":
            return {"tag": "A", "word": format_word(self.payload)}
        return {"tag": "B", "element": self.payload.to_json()}


@dataclass
class Decision:
    verdict: Verdict
    level: int
    syllables: list[Syllable] | None = None
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "level": self.level,
            "syllables": None if self.syllables is None else [s.render() for s in self.syllables],
            "stats": dict(self.stats),
        }


def _free_reduce(letters):
    stack = []
    for letter in letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class Tower:
    """Word-problem engine for one ``Gamma_W``.

    Verdicts are memoised per instance; ``p_max`` bounds the power search used
    only when the abelian image of ``a[n-1]`` vanishes.
    """

    def __init__(self, params: TowerParams, p_max: int = 64):
        self.params = canonicalize(params)
        self.p_max = p_max
        self.s = self.params.s
        self.m = self.params.m
        self._w = tuple(self.params.W.letters)
        self._weights = self.params.weights
        self._images: dict[int, tuple[Fraction, ...]] = {}
        self._verdicts: dict[tuple, Verdict] = {}
        self._members: dict[tuple, int | None] = {}
        self.stats = Counter(pinches=0, recursive_calls=0)

    # -- abelianisation -------------------------------------------------

    def image_of_index(self, k: int) -> tuple[Fraction, ...]:
        """Image of ``a[k]`` in ``H_ab (x) Q`` on the basis ``a[0..s]``."""
        if k in self._images:
            return self._images[k]
        s, w = self.s, self._weights
        if 0 <= k <= s:
            vec = tuple(Fraction(int(i == k)) for i in range(s + 1))
        elif k > s:
            j = k - s - 1
            vec = tuple(-sum(w[i] * self.image_of_index(j + i)[c] for i in range(s)) for c in range(s + 1))
        else:
            later = [self.image_of_index(k + i) for i in range(1, s)]
            top = self.image_of_index(k + s + 1)
            vec = tuple(
                -(top[c] + sum(w[i] * later[i - 1][c] for i in range(1, s))) / w[0] for c in range(s + 1)
            )
        self._images[k] = vec
        return vec

    def abelian_image(self, w: Word) -> tuple[Fraction, ...]:
        total = [Fraction(0)] * (self.s + 1)
        for k, sign in w.letters:
            for c, v in enumerate(self.image_of_index(k)):
                total[c] += sign * v
        return tuple(total)

    # -- syllables ------------------------------------------------------

    def _check_level(self, n: int):
        if n < self.s + 1:
            raise ValueError(f"level {n} is free; amalgam levels start at {self.s + 1}")

    def substitute_top(self, w: Word, n: int) -> list[Syllable]:
        """Replace ``a[n]`` by ``W_{n-s-1}^-1 x`` and group into syllables."""
        self._check_level(n)
        letters = reduce(w).letters
        shift = n - self.s - 1
        wj = tuple((g + shift, 1) for g, _ in self._w)
        wj_inv = tuple((g, -1) for g, _ in reversed(wj))
        x, x_inv = BSElement.beta(self.m, 1), BSElement.beta(self.m, -1)
        raw: list[tuple[str, object]] = []
        for g, sign in letters:
            if not 0 <= g <= n:
                raise ValueError(f"index {g} outside window [0, {n}]")
            if g < n:
                raw.append(("A", ((g, sign),)))
            elif sign == 1:
                raw.append(("A", wj_inv))
                raw.append(("B", x))
            else:
                raw.append(("B", x_inv))
                raw.append(("A", wj))
        return self._merge(raw)

    def _merge(self, raw) -> list[Syllable]:
        out: list[list] = []
        for tag, payload in raw:
            if out and out[-1][0] == tag:
                if tag == "A":
                    out[-1][1] = out[-1][1] + tuple(payload)
                else:
                    out[-1][1] = bs_mul(out[-1][1], payload)
            else:
                out.append([tag, tuple(payload) if tag == "A" else payload])
        result = []
        changed = False
        for tag, payload in out:
            if tag == "A":
                payload = _free_reduce(payload)
                if not payload:
                    changed = True
                    continue
                result.append(("A", payload))
            else:
                if payload.is_identity():
                    changed = True
                    continue
                result.append(("B", payload))
        if changed:
            return self._merge(result)
        return [Syllable(tag, Word(p) if tag == "A" else p) for tag, p in result]

    def pinch_reduce(self, syllables: list[Syllable], n: int) -> list[Syllable]:
        """Pinch syllables lying in ``C = <a[n-1]>`` until every syllable is outside ``C``."""
        self._check_level(n)
        c = n - 1
        syls = self._merge([(s.tag, s.payload.letters if s.tag == "A" else s.payload) for s in syllables])
        while len(syls) > 1:
            for idx, syl in enumerate(syls):
                if syl.tag == "B":
                    p = bs_in_alpha(syl.payload)
                    new = ("A", ((c, 1 if p > 0 else -1),) * abs(p)) if p is not None else None
                else:
                    p = self.membership_in_c(syl.payload, n)
                    new = ("B", BSElement.alpha(self.m, p)) if p is not None else None
                if new is not None:
                    self.stats["pinches"] += 1
                    raw = [(s.tag, s.payload.letters if s.tag == "A" else s.payload) for s in syls]
                    raw[idx] = new
                    syls = self._merge(raw)
                    break
            else:
                break
        return syls

    # -- membership -----------------------------------------------------

    def membership_in_c(self, g: Word, n: int) -> int | None:
        """``p`` with ``g = a[n-1]^p`` in ``G_{n-1}``, ``None`` if no such ``p``.

        Raises :class:`Inconclusive` if the fallback power search runs out.
        """
        letters = _free_reduce(g.letters)
        c = n - 1
        if any(not 0 <= k <= c for k, _ in letters):
            raise ValueError(f"membership_in_c expects a word over a[0..{c}]")
        if not letters:
            return 0
        if all(k == c for k, _ in letters):
            return sum(s for _, s in letters)
        key = (letters, n)
        if key in self._members:
            return self._members[key]
        img_g = self.abelian_image(Word(letters))
        img_c = self.image_of_index(c)
        if any(img_c):
            i = next(i for i, v in enumerate(img_c) if v)
            p = img_g[i] / img_c[i]
            if p.denominator != 1 or any(gv != p * cv for gv, cv in zip(img_g, img_c)):
                result = None
            else:
                result = int(p) if self._trivial_times_c_power(letters, c, int(p)) else None
        else:
            result = None
            for p in sorted(range(-self.p_max, self.p_max + 1), key=abs):
                if self._trivial_times_c_power(letters, c, p):
                    result = p
                    break
            else:
                raise Inconclusive(f"no power of a[{c}] within {self.p_max}")
        self._members[key] = result
        return result

    def _trivial_times_c_power(self, letters, c, p) -> bool:
        tail = ((c, -1 if p > 0 else 1),) * abs(p)
        return self._verdict(_free_reduce(letters + tail)) is Verdict.TRIVIAL

    # -- deciding -------------------------------------------------------

    def _verdict(self, letters: tuple) -> Verdict:
        if not letters:
            return Verdict.TRIVIAL
        lo = min(k for k, _ in letters)
        if lo:
            letters = tuple((k - lo, s) for k, s in letters)
        n = max(k for k, _ in letters)
        if n <= self.s:
            return Verdict.NONTRIVIAL
        cached = self._verdicts.get(letters)
        if cached is not None:
            return cached
        self.stats["recursive_calls"] += 1
        syls = self.pinch_reduce(self.substitute_top(Word(letters), n), n)
        if not syls:
            verdict = Verdict.TRIVIAL
        elif len(syls) >= 2:
            verdict = Verdict.NONTRIVIAL
        elif syls[0].tag == "B":
            verdict = Verdict.TRIVIAL if syls[0].payload.is_identity() else Verdict.NONTRIVIAL
        else:
            verdict = self._verdict(syls[0].payload.letters)
        self._verdicts[letters] = verdict
        return verdict

    def is_trivial(self, w: Word, n: int | None = None) -> Verdict:
        """Decide ``w = 1`` in ``G_n`` (equivalently in ``H``)."""
        if w.alphabet == "ta":
            raise ValueError("is_trivial expects an indexed word; see is_trivial_in_gamma")
        letters = _free_reduce(w.letters)
        if n is not None and any(not 0 <= k <= n for k, _ in letters):
            raise ValueError(f"word has indices outside [0, {n}]")
        try:
            return self._verdict(letters)
        except Inconclusive:
            return Verdict.INCONCLUSIVE

    def is_trivial_in_gamma(self, w: Word) -> Verdict:
        if w.is_indexed:
            return self.is_trivial(w)
        if t_exponent_sum(w) != 0:
            return Verdict.NONTRIVIAL
        return self.is_trivial(magnus_rewrite(w))

    def syllable_decomposition(self, w: Word, n: int) -> list[Syllable]:
        """Stable alternating form of ``w`` at level ``n``."""
        return self.pinch_reduce(self.substitute_top(w, n), n)

    def decide(self, w: Word, n: int | None = None) -> Decision:
        """:meth:`is_trivial` plus the top-level syllables and work counters."""
        before = Counter(self.stats)
        if w.alphabet == "ta":
            verdict = self.is_trivial_in_gamma(w)
            w = magnus_rewrite(w) if t_exponent_sum(w) == 0 else None
        else:
            verdict = self.is_trivial(w, n)
        syllables, level = None, n or 0
        if w is not None and reduce(w):
            w = reduce(w)
            if n is None:
                lo = min(k for k, _ in w.letters)
                level = max(k for k, _ in w.letters) - lo
                w = Word((k - lo, s) for k, s in w.letters)
            if level >= self.s + 1:
                try:
                    syllables = self.syllable_decomposition(w, level)
                except Inconclusive:
                    syllables = None
        delta = {k: self.stats[k] - before[k] for k in ("pinches", "recursive_calls")}
        return Decision(verdict, level, syllables, delta)


def abelian_image(w: Word, params: TowerParams) -> tuple[Fraction, ...]:
    return Tower(params).abelian_image(w)


# -- random instances for property runs ---------------------------------------


def random_indexed_word(rng, max_length: int, window: int) -> Word:
    """Freely reduced word of length at most ``max_length`` over ``a[0..window]``."""
    letters = [(rng.randint(0, window), rng.choice((1, -1))) for _ in range(rng.randint(0, max_length))]
    return Word(_free_reduce(tuple(letters)))


def sample_normal_closure(params: TowerParams, rng, max_factors: int = 8, window: int = 6, max_conjugator: int = 10) -> Word:
    """Product of conjugates of shifted relators ``R_j^+-1`` inside ``a[0..window]``."""
    p = canonicalize(params)
    span = p.s + 1
    if window < span:
        raise ValueError(f"window must be at least {span}")
    letters: list = []
    for _ in range(rng.randint(1, max_factors)):
        r = build_relator(p, rng.randint(0, window - span))
        if rng.random() < 0.5:
            r = r.inverse()
        g = random_indexed_word(rng, max_conjugator, window)
        letters.extend((g * r * g.inverse()).letters)
    return Word(_free_reduce(tuple(letters)))

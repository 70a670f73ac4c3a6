"""Free-group words over {t, a} and over the indexed alphabet {a[n]}.

A word is a tuple of letters ``(gen, sign)`` where ``gen`` is ``'t'``, ``'a'``
or an integer index ``n`` standing for ``a[n] = t^n a t^-n``.  Words never mix
the two alphabets; the empty word belongs to both.

Text syntax::

    word := '1' | term (WS term)*
    term := gen ('^' int)?
    gen  := 't' | 'a' | 'a[' int ']'

>>> w = Word.parse("t a t^-1")
>>> magnus_rewrite(w)
Word('a[1]')
>>> str(unrewrite(Word.parse("a[0] a[2]")))
'a t^2 a t^-2'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

Gen = Union[str, int]


class Letter(NamedTuple):
    gen: Gen
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)


def _alphabet(gen: Gen) -> str:
    return "indexed" if isinstance(gen, int) else "ta"


class Word:
    """An immutable sequence of letters from a single alphabet.

    Equality is letter-wise, not equality in a group; call :func:`reduce`
    first when free equality is meant.
    """

    __slots__ = ("letters", "alphabet")

    def __init__(self, letters: Iterable = ()):
        letters = tuple(Letter(g, s) for g, s in letters)
        alphabet = None
        for gen, sign in letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")
            if isinstance(gen, bool) or not (isinstance(gen, int) or gen in ("t", "a")):
                raise ValueError(f"unknown generator {gen!r}")
            kind = _alphabet(gen)
            if alphabet is None:
                alphabet = kind
            elif alphabet != kind:
                raise ValueError("word mixes the {t, a} and indexed alphabets")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "alphabet", alphabet)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)

    @classmethod
    def gen(cls, g: Gen, exponent: int = 1) -> "Word":
        sign = 1 if exponent > 0 else -1
        return cls([(g, sign)] * abs(exponent))

    @property
    def is_indexed(self) -> bool:
        return self.alphabet == "indexed"

    def inverse(self) -> "Word":
        return Word(Letter(g, -s) for g, s in reversed(self.letters))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __lt__(self, other: "Word"):
        return _sort_key(self) < _sort_key(other)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


def _sort_key(w: Word):
    return (len(w), [(str(g), -s) for g, s in w.letters])


EMPTY = Word()

_TERM_RE = re.compile(r"(t|a\[(-?\d+)\]|a)(?:\^(-?\d+))?$")


def parse_word(text: str) -> Word:
    """Parse the whitespace-separated term syntax; ``'1'`` is the identity."""
    text = text.strip()
    if text in ("", "1"):
        return Word()
    letters = []
    for term in text.split():
        match = _TERM_RE.match(term)
        if match is None:
            raise ValueError(f"malformed term {term!r} in {text!r}")
        head, index, exp = match.groups()
        gen: Gen = int(index) if index is not None else head
        exp = 1 if exp is None else int(exp)
        sign = 1 if exp > 0 else -1
        letters.extend([(gen, sign)] * abs(exp))
    return Word(letters)


def _gen_str(gen: Gen) -> str:
    return f"a[{gen}]" if isinstance(gen, int) else gen


def format_word(w: Word) -> str:
    """Canonical text: runs collapsed into exponents, single spaces."""
    if not w.letters:
        return "1"
    terms = []
    run_gen, run_exp = None, 0
    for gen, sign in w.letters:
        if gen == run_gen and (run_exp > 0) == (sign > 0):
            run_exp += sign
            continue
        if run_gen is not None:
            terms.append((run_gen, run_exp))
        run_gen, run_exp = gen, sign
    terms.append((run_gen, run_exp))
    return " ".join(_gen_str(g) if e == 1 else f"{_gen_str(g)}^{e}" for g, e in terms)


def reduce(w: Word) -> Word:
    """Freely reduce ``w``."""
    stack: list = []
    for letter in w.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return Word(stack)


def is_reduced(w: Word) -> bool:
    return all(
        not (x[0] == y[0] and x[1] == -y[1]) for x, y in zip(w.letters, w.letters[1:])
    )


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split a reduced word as ``conjugator * core * conjugator^-1``.

    >>> [str(x) for x in cyclic_reduce(Word.parse("a[0]^-1 a[1] a[2] a[0]"))]
    ['a[0]^-1', 'a[1] a[2]']
    """
    letters = reduce(w).letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        i += 1
        j -= 1
    return Word(letters[:i]), Word(letters[i : j + 1])


def cyclic_permutations(w: Word) -> list[Word]:
    n = len(w)
    return [Word(w.letters[i:] + w.letters[:i]) for i in range(max(n, 1))]


def shift(w: Word, k: int) -> Word:
    """Conjugate an indexed word by ``t^k``: every ``a[n]`` becomes ``a[n+k]``."""
    if w.alphabet == "ta":
        raise ValueError("shift acts on indexed words")
    return Word((g + k, s) for g, s in w.letters)


def exponent_sum(w: Word, gen: Gen) -> int:
    return sum(s for g, s in w.letters if g == gen)


def t_exponent_sum(w: Word) -> int:
    return exponent_sum(w, "t")


def a_exponent_sum(w: Word) -> int:
    if w.is_indexed:
        return sum(s for _, s in w.letters)
    return exponent_sum(w, "a")


def index_window(w: Word) -> tuple[int, int] | None:
    """``(min, max)`` index of an indexed word, ``None`` when empty."""
    if not w.letters:
        return None
    if not w.is_indexed:
        raise ValueError("index_window needs an indexed word")
    idx = [g for g, _ in w.letters]
    return min(idx), max(idx)


def magnus_rewrite(w: Word) -> Word:
    """Rewrite a zero t-exponent word over {t, a} in the letters ``a[n]``."""
    if w.is_indexed:
        raise ValueError("magnus_rewrite expects a word over {t, a}")
    if t_exponent_sum(w) != 0:
        raise ValueError("t-exponent sum must be zero for Magnus rewriting")
    level = 0
    out = []
    for gen, sign in w.letters:
        if gen == "t":
            level += sign
        else:
            out.append((level, sign))
    return reduce(Word(out))


def unrewrite(w: Word) -> Word:
    """Substitute ``a[n] -> t^n a t^-n`` and reduce."""
    if w.alphabet == "ta":
        raise ValueError("unrewrite expects an indexed word")
    out = []
    for n, sign in w.letters:
        out.extend([("t", 1 if n > 0 else -1)] * abs(n))
        out.append(("a", sign))
        out.extend([("t", -1 if n > 0 else 1)] * abs(n))
    return reduce(Word(out))


@dataclass(frozen=True)
class TowerParams:
    """``(s, m, W)`` with ``W`` a positive word over ``a[0..s-1]``."""

    s: int
    m: int
    W: Word

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("s must be >= 1")
        if self.m < 2:
            raise ValueError("m must be >= 2")
        if not self.W or not self.W.is_indexed:
            raise ValueError("W must be a nonempty indexed word")
        if any(sign != 1 for _, sign in self.W):
            raise ValueError("W must be a positive word")
        if any(not 0 <= g < self.s for g, _ in self.W):
            raise ValueError(f"W must use only a[0..{self.s - 1}]")

    @classmethod
    def parse(cls, text: str) -> "TowerParams":
        """Parse ``"s,m,W"``, e.g. ``"1,2,a[0]"``."""
        parts = text.split(",", 2)
        if len(parts) != 3:
            raise ValueError(f"expected 's,m,W', got {text!r}")
        return cls(int(parts[0]), int(parts[1]), parse_word(parts[2].strip().strip('"')))

    @property
    def is_canonical(self) -> bool:
        lo, hi = index_window(self.W)
        return lo == 0 and hi == self.s - 1

    @property
    def weights(self) -> tuple[int, ...]:
        """Number of occurrences of each ``a[i]`` in ``W``, ``i < s``."""
        counts = [0] * self.s
        for g, _ in self.W:
            if 0 <= g < self.s:
                counts[g] += 1
        return tuple(counts)

    def __str__(self):
        return f"{self.s},{self.m},{format_word(self.W)}"


def canonicalize(p: TowerParams) -> TowerParams:
    """Slide ``W`` down to index 0 and shrink ``s`` to ``1 + max index``."""
    lo, hi = index_window(p.W)
    W = shift(p.W, -lo)
    return TowerParams(hi - lo + 1, p.m, W)


def build_relator(p: TowerParams, j: int = 0) -> Word:
    """``R_j = a[j+s] X a[j+s]^-1 X^-m`` with ``X = shift(W, j) a[j+s+1]``."""
    if not p.is_canonical:
        raise ValueError("TowerParams must be canonical; call canonicalize first")
    s = p.s
    X = shift(p.W, j) * Word([(j + s + 1, 1)])
    b = Word([(j + s, 1)])
    return reduce(b * X * b.inverse() * X ** (-p.m))


@dataclass(frozen=True)
class Presentation:
    """A one-relator presentation ``<t, a | relator>``."""

    relator: Word
    name: str = ""

    def __post_init__(self):
        if self.relator.is_indexed:
            raise ValueError("presentation relators are words over {t, a}")

    @property
    def indexed_relator(self) -> Word:
        return magnus_rewrite(self.relator)

    def __str__(self):
        return f"<t, a | {format_word(self.relator)}>"


def build_gamma_presentation(p: TowerParams) -> Presentation:
    return Presentation(unrewrite(build_relator(p, 0)), name=f"gamma({p})")


GAMMA = TowerParams(1, 2, Word([(0, 1)]))

# The relator of Gamma as printed, t a t^-1 a t^2 a t^-1 a^-1 t a^-1 t^-2 a^-1 t^2 a^-1 t^-2 a^-1.
GAMMA_RELATOR = parse_word(
    "t a t^-1 a t^2 a t^-1 a^-1 t a^-1 t^-2 a^-1 t^2 a^-1 t^-2 a^-1"
)

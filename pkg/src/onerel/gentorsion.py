"""Bounded search for generalized torsion.

A nontrivial ``tau`` is a generalized torsion element when some product

    (t^n1 g1 tau g1^-1 t^-n1) ... (t^nr gr tau gr^-1 t^-nr)

is trivial.  :func:`search` enumerates such products in a fixed order and
asks an oracle from :mod:`onerel.oracles` about each one.  Finding nothing
only means nothing exists within the bounds.

Enumeration order
-----------------
Candidates are visited by the cost tuple ``(|tau|, r, sum |g_i|, sum |n_i|)``.
Within one cost, ``tau`` runs over its representatives in word order and the
factor tuples run in word order.  Two symmetries are used:

* ``tau`` is taken up to cyclic permutation and inversion.  A product of
  conjugates of a cyclic permutation of ``tau^+-1`` is a product of
  conjugates of ``tau`` (or the inverse of one), with the conjugators
  changing by a prefix of ``tau``.
* A factor tuple is kept only if it is the least of its rotations, since
  rotating the factors conjugates the product.

Two cheap filters run before the oracle: a ``tau`` with nonzero t-exponent
sum is skipped (every such product has nonzero t-exponent sum) and a product
whose abelian image is nonzero is rejected without a word-problem call.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass, field

from .oracles import Oracle
from .tower import Inconclusive, Verdict
from .words import Word, format_word, parse_word, t_exponent_sum

Letters = tuple


@dataclass(frozen=True)
class SearchConfig:
    tau_max_length: int = 2
    conjugator_radius: int = 1
    max_factors: int = 2
    shift_range: int = 0
    budget: int = 10_000_000
    #: stop after this many findings; ``None`` collects all of them
    max_findings: int | None = None

    def __post_init__(self):
        for name in ("tau_max_length", "max_factors", "budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.conjugator_radius < 0 or self.shift_range < 0:
            raise ValueError("conjugator_radius and shift_range must be nonnegative")
        if self.max_findings is not None and self.max_findings < 1:
            raise ValueError("max_findings must be positive or None")

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Finding:
    tau: Word
    conjugators: tuple[Word, ...]
    shifts: tuple[int, ...]
    product: Word

    def to_json(self) -> dict:
        return {
            "tau": format_word(self.tau),
            "conjugators": [format_word(g) for g in self.conjugators],
            "shifts": list(self.shifts),
            "product": format_word(self.product),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Finding":
        return cls(
            parse_word(data["tau"]),
            tuple(parse_word(g) for g in data["conjugators"]),
            tuple(data["shifts"]),
            parse_word(data["product"]),
        )


@dataclass
class SearchReport:
    oracle: str
    config: SearchConfig
    findings: list[Finding] = field(default_factory=list)
    examined: int = 0
    inconclusive: int = 0
    elapsed_ms: int = 0
    exhausted: bool = False

    def to_json(self) -> dict:
        return {
            "oracle": self.oracle,
            "config": self.config.to_json(),
            "findings": [f.to_json() for f in self.findings],
            "examined": self.examined,
            "inconclusive": self.inconclusive,
            "elapsed_ms": self.elapsed_ms,
            "exhausted": self.exhausted,
        }


# -- letter-tuple helpers ---------------------------------------------------


def _reduce(letters) -> Letters:
    out = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def _inverse(letters) -> Letters:
    return tuple((g, -s) for g, s in reversed(letters))


def _shift_letters(letters, n: int, indexed: bool) -> Letters:
    if not n:
        return tuple(letters)
    if indexed:
        return tuple((g + n, s) for g, s in letters)
    return _reduce((("t", 1 if n > 0 else -1),) * abs(n) + tuple(letters) + (("t", -1 if n > 0 else 1),) * abs(n))


def gt_product(tau: Word, conjugators, shifts=None, oracle: Oracle | None = None) -> Word:
    """Reduced product of ``t^n_i g_i tau g_i^-1 t^-n_i`` over the factors."""
    conjugators = tuple(conjugators)
    shifts = tuple(shifts) if shifts is not None else (0,) * len(conjugators)
    if not conjugators or len(conjugators) != len(shifts):
        raise ValueError("conjugators and shifts must be nonempty and of equal length")
    if oracle is not None and not oracle.has_shift and any(shifts):
        raise ValueError(f"oracle {oracle.name!r} has no shift action; shifts must be zero")
    indexed = tau.is_indexed or any(g.is_indexed for g in conjugators)
    out = []
    for g, n in zip(conjugators, shifts):
        out.extend(_shift_letters(g.letters + tau.letters + _inverse(g.letters), n, indexed))
    return Word(_reduce(out))


# -- enumeration ------------------------------------------------------------


def _alphabet(oracle: Oracle) -> list[tuple]:
    """Letters in enumeration order: each generator, then its inverse."""
    return [(g, s) for g in oracle.generators for s in (1, -1)]


def _rank(alphabet) -> dict:
    return {letter: i for i, letter in enumerate(alphabet)}


def reduced_words(alphabet, length: int):
    """Freely reduced words of exactly ``length`` letters, in alphabet order."""
    if length == 0:
        yield ()
        return
    for prefix in reduced_words(alphabet, length - 1):
        for letter in alphabet:
            if prefix and prefix[-1] == (letter[0], -letter[1]):
                continue
            yield prefix + (letter,)


def _is_cyclically_reduced(w: Letters) -> bool:
    return len(w) < 2 or w[0] != (w[-1][0], -w[-1][1])


def _key(w: Letters, rank: dict) -> tuple:
    return tuple(rank[x] for x in w)


def tau_representatives(oracle: Oracle, length: int) -> list[Word]:
    """Cyclically reduced words of ``length`` letters that are least among
    the cyclic permutations of themselves and their inverse."""
    alphabet = _alphabet(oracle)
    rank = _rank(alphabet)
    reps = []
    for w in reduced_words(alphabet, length):
        if not _is_cyclically_reduced(w):
            continue
        key = _key(w, rank)
        inv = _inverse(w)
        orbit = [w[i:] + w[:i] for i in range(len(w))] + [inv[i:] + inv[:i] for i in range(len(w))]
        if all(key <= _key(v, rank) for v in orbit):
            reps.append(Word(w))
    return reps


def _is_least_rotation(keys: tuple) -> bool:
    return all(keys <= keys[i:] + keys[:i] for i in range(1, len(keys)))


def _factor_tuples(conjugators, shifts, r: int):
    """``(cost, factors)`` for canonical factor tuples, sorted by cost then order.

    ``conjugators`` and ``shifts`` are already in enumeration order; a
    factor is a pair of positions into them.
    """
    factors = [(i, j) for i in range(len(conjugators)) for j in range(len(shifts))]
    out = []
    for combo in itertools.product(factors, repeat=r):
        if not _is_least_rotation(combo):
            continue
        cost = (sum(len(conjugators[i]) for i, _ in combo), sum(abs(shifts[j]) for _, j in combo))
        out.append((cost, combo))
    out.sort()
    return out


def _shift_values(bound: int) -> list[int]:
    return [0] + [v for k in range(1, bound + 1) for v in (k, -k)]


def _verdict(oracle: Oracle, w: Word) -> Verdict:
    try:
        return oracle.is_trivial(w)
    except Inconclusive:
        return Verdict.INCONCLUSIVE


def search(oracle: Oracle, config: SearchConfig) -> SearchReport:
    """Run the bounded search; see the module docstring for the order."""
    start = time.perf_counter()
    report = SearchReport(oracle.name, config)
    alphabet = _alphabet(oracle)
    indexed = all(isinstance(g, int) for g in oracle.generators)
    conjugators = [w for n in range(config.conjugator_radius + 1) for w in reduced_words(alphabet, n)]
    shifts = _shift_values(config.shift_range) if oracle.has_shift else [0]
    tuples_by_r = {}

    def done():
        return report.exhausted or (
            config.max_findings is not None and len(report.findings) >= config.max_findings
        )

    for length in range(1, config.tau_max_length + 1):
        taus = []
        for tau in tau_representatives(oracle, length):
            if not indexed and t_exponent_sum(tau) != 0:
                continue
            v = _verdict(oracle, tau)
            if v is Verdict.INCONCLUSIVE:
                report.inconclusive += 1
            if v is Verdict.NONTRIVIAL:
                taus.append(tau)
        if not taus:
            continue
        for r in range(1, config.max_factors + 1):
            if r not in tuples_by_r:
                tuples_by_r[r] = _factor_tuples(conjugators, shifts, r)
            for _, group in itertools.groupby(tuples_by_r[r], key=lambda item: item[0]):
                group = [combo for _, combo in group]
                for tau in taus:
                    _scan(oracle, tau, group, conjugators, shifts, indexed, config, report)
                    if done():
                        break
                if done():
                    break
            if done():
                break
        if done():
            break
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def _scan(oracle, tau, group, conjugators, shifts, indexed, config, report):
    """Examine every factor tuple of one cost class against ``tau``."""
    table = {}
    for i, g in enumerate(conjugators):
        for j, n in enumerate(shifts):
            letters = _shift_letters(_reduce(g + tau.letters + _inverse(g)), n, indexed)
            image = oracle.abelian(Word(letters)) if letters else None
            table[i, j] = (letters, image)
    for combo in group:
        if report.examined >= config.budget:
            report.exhausted = True
            return
        report.examined += 1
        parts = [table[f] for f in combo]
        images = [img for _, img in parts]
        if all(img is not None for img in images) and not oracle.abelian_sum_is_zero(images):
            continue
        product = Word(_reduce(itertools.chain.from_iterable(p for p, _ in parts)))
        v = _verdict(oracle, product)
        if v is Verdict.INCONCLUSIVE:
            report.inconclusive += 1
        elif v is Verdict.TRIVIAL:
            report.findings.append(
                Finding(
                    tau,
                    tuple(Word(conjugators[i]) for i, _ in combo),
                    tuple(shifts[j] for _, j in combo),
                    product,
                )
            )
            if config.max_findings is not None and len(report.findings) >= config.max_findings:
                return


@dataclass(frozen=True)
class FindingCheck:
    valid: bool
    reason: str = ""

    def __bool__(self):
        return self.valid


def check_finding(finding: Finding, oracle: Oracle) -> FindingCheck:
    """Replay a finding: ``tau`` must be nontrivial and the product trivial."""
    try:
        product = gt_product(finding.tau, finding.conjugators, finding.shifts, oracle)
    except ValueError as exc:
        return FindingCheck(False, str(exc))
    if product != Word(_reduce(finding.product.letters)):
        return FindingCheck(False, "recorded product does not match the factors")
    if _verdict(oracle, finding.tau) is not Verdict.NONTRIVIAL:
        return FindingCheck(False, "tau is not nontrivial")
    if _verdict(oracle, product) is not Verdict.TRIVIAL:
        return FindingCheck(False, "product is not trivial")
    return FindingCheck(True)

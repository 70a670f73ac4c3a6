"""Certificates of non-bi-orderability by positive-cone reasoning.

Facts are statements ``g in P`` for the positive cone ``P`` of a hypothetical
bi-order, written as indexed words (elements of ``H``; ``u < v`` is the fact
``u^-1 v``).  Rules, each valid in every bi-ordered group:

=========  ==============================================================
``hyp``    a case hypothesis on the current branch
``shift``  ``g in P  =>  t^k g t^-k in P``            (conjugation, R2)
``conj``   ``g in P  =>  h g h^-1 in P``               (conjugation, R2)
``mul``    ``g, h in P  =>  g h in P``                 (products, R1/R4)
``pow``    ``g in P  =>  g^n in P``, ``n >= 1``        (R5)
``relator`` delete or insert a cyclic permutation of a shifted relator
           or its inverse                              (R3)
=========  ==============================================================

A branch is closed when some derived fact is the empty word (``1 in P``).
The prover first closes the hypotheses under the rules on words of length at
most two, then searches for a chain ``L = w_0 < w_1 < ... < w_k = R`` between
the two sides of a splitting ``r = L R^-1`` of the relator.  Each link applies
one known comparison inside a context and is justified by a single ``conj``;
the links are multiplied together and the relator deletes what remains.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Callable

from .tower import Verdict
from .words import (
    Presentation,
    Word,
    cyclic_permutations,
    cyclic_reduce,
    format_word,
    magnus_rewrite,
    parse_word,
    reduce,
    shift,
    t_exponent_sum,
)

DEFAULT_BUDGET = 20000


def _as_fact(w: Word) -> Word:
    if w.alphabet == "ta":
        if t_exponent_sum(w) != 0:
            raise ValueError(f"facts must lie in H (zero t-exponent sum): {w}")
        return magnus_rewrite(w)
    return reduce(w)


# -- relator pieces -------------------------------------------------------


class RelatorPieces:
    """Recognises cyclic permutations of shifts of ``core^{+-1}``."""

    def __init__(self, relator: Word):
        self.relator = reduce(relator)
        _, self.core = cyclic_reduce(self.relator)
        self._normal: set[tuple] = set()
        if self.core:
            lo = min(g for g, _ in self.core)
            base = shift(self.core, -lo)
            for w in (base, base.inverse()):
                for p in cyclic_permutations(w):
                    self._normal.add(p.letters)

    def __bool__(self):
        return bool(self.core)

    def is_piece(self, w: Word) -> bool:
        if not w or not self._normal:
            return False
        lo = min(g for g, _ in w)
        return shift(w, -lo).letters in self._normal

    def deletion(self, w: Word) -> int | None:
        """Position of a piece whose deletion leaves a freely trivial word."""
        w = reduce(w)
        u, core = cyclic_reduce(w)
        if self.is_piece(core) and len(u) * 2 + len(core) == len(w):
            return len(u)
        return None


# -- derivations -----------------------------------------------------------


@dataclass
class Step:
    rule: str
    inputs: tuple[int, ...]
    output: Word
    arg: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"rule": self.rule, "inputs": list(self.inputs), "output": format_word(self.output)}
        for k, v in self.arg.items():
            out[k] = format_word(v) if isinstance(v, Word) else v
        return out


class Derivation:
    def __init__(self):
        self.steps: list[Step] = []

    def add(self, rule, inputs, output, **arg) -> int:
        self.steps.append(Step(rule, tuple(inputs), reduce(output), arg))
        return len(self.steps) - 1

    def __getitem__(self, i) -> Step:
        return self.steps[i]

    def __len__(self):
        return len(self.steps)

    def extract(self, final: int) -> "Derivation":
        """Ancestors of step ``final``, renumbered in order."""
        keep, todo = set(), [final]
        while todo:
            i = todo.pop()
            if i not in keep:
                keep.add(i)
                todo.extend(self.steps[i].inputs)
        order = sorted(keep)
        remap = {old: new for new, old in enumerate(order)}
        out = Derivation()
        for old in order:
            st = self.steps[old]
            out.steps.append(Step(st.rule, tuple(remap[i] for i in st.inputs), st.output, st.arg))
        return out

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


@dataclass
class Saturation:
    status: str  # "contradiction", "stable" or "budget"
    derivation: Derivation | None = None
    chain: list[Word] | None = None
    facts: list[Word] = field(default_factory=list)
    explored: int = 0

    @property
    def contradiction(self) -> bool:
        return self.status == "contradiction"


# -- chain search ----------------------------------------------------------


def _levenshtein(a, b) -> int:
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        cur = [i]
        for j, y in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y)))
        prev = cur
    return prev[-1]


def _edits(facts: dict[Word, int]) -> list[tuple[tuple, tuple, int, int]]:
    """``(X, Y, fact index, kind)`` with ``X^-1 Y`` a known fact.

    Only letters and comparisons are used; products of positive letters are
    reachable through successive single insertions.  ``kind`` orders edits:
    deletions first, then replacements, then insertions.
    """
    out = []
    for f, idx in facts.items():
        if len(f) == 2 and f[0][1] == f[1][1]:
            continue
        if len(f) > 2:
            continue
        for k in range(len(f) + 1):
            X = tuple((g, -s) for g, s in reversed(f.letters[:k]))
            Y = f.letters[k:]
            kind = 0 if not Y else (2 if not X else 1)
            out.append((X, Y, idx, kind))
    out.sort(key=lambda e: (e[3], len(e[0]), e[0], e[1]))
    return out


def _reduce_letters(letters) -> tuple:
    stack = []
    for x in letters:
        if stack and stack[-1][0] == x[0] and stack[-1][1] == -x[1]:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def _successors(w: tuple, edits, lo: int, hi: int, max_len: int):
    for X, Y, idx, kind in edits:
        n = len(X)
        positions = range(len(w) + 1) if n == 0 else (p for p in range(len(w) - n + 1) if w[p : p + n] == X)
        for p in positions:
            new = _reduce_letters(w[:p] + Y + w[p + n :])
            if len(new) > max_len or any(not lo <= g <= hi for g, _ in new):
                continue
            yield new, idx, w[p + n :], kind


def _drop_negative_segments(start: tuple, goal: tuple, edits, window):
    lo, hi = window
    deletions = sorted((e for e in edits if not e[1]), key=lambda e: -len(e[0]))
    prefix = []
    w = start
    while True:
        dist = _levenshtein(w, goal)
        for X, _, idx, _ in deletions:
            n = len(X)
            p = next((p for p in range(len(w) - n + 1) if w[p : p + n] == X), None)
            if p is None:
                continue
            new = _reduce_letters(w[:p] + w[p + n :])
            if _levenshtein(new, goal) <= dist:
                prefix.append((Word(new), idx, Word(w[p + n :])))
                w = new
                break
        else:
            return prefix, w


def find_chain(
    start: Word,
    goal: Word,
    facts: dict[Word, int],
    window: tuple[int, int],
    max_nodes: int,
    slack: int = 2,
    greedy_deletions: bool = False,
):
    """Best-first search for ``start < ... < goal`` by single edits.

    With ``greedy_deletions`` the search first drops the longest segments
    known to be negative (as long as that does not move away from ``goal``)
    and starts the best-first phase from there.

    Returns ``(path, expanded)`` where ``path`` lists ``(word, fact index,
    context)`` links, or ``None`` when the node budget runs out.
    """
    start, goal = reduce(start).letters, reduce(goal).letters
    edits = _edits(facts)
    if not edits:
        return None, 0
    lo, hi = window
    max_len = max(len(start), len(goal)) + slack
    prefix = []
    if greedy_deletions:
        prefix, start = _drop_negative_segments(start, goal, edits, window)
    tie = itertools.count()
    heap = [(_levenshtein(start, goal), 0, (), next(tie), start)]
    parent: dict[tuple, tuple | None] = {start: None}
    expanded = 0
    while heap and expanded < max_nodes:
        _, neg_g, kinds, _, w = heapq.heappop(heap)
        if w == goal:
            path = []
            while parent[w] is not None:
                prev, idx, ctx = parent[w]
                path.append((Word(w), idx, Word(ctx)))
                w = prev
            path.reverse()
            return prefix + path, expanded
        expanded += 1
        g = -neg_g + 1
        for new, idx, ctx, kind in _successors(w, edits, lo, hi, max_len):
            if new in parent:
                continue
            parent[new] = (w, idx, ctx)
            heapq.heappush(heap, (g + _levenshtein(new, goal), -g, kinds + (kind,), next(tie), new))
    return None, expanded


def _chain_steps(der: Derivation, start: Word, path) -> int:
    """Turn an edit path into conj + mul steps; return the index of ``start^-1 end``."""
    acc = None
    for _, idx, ctx in path:
        h = ctx.inverse()
        step = der.add("conj", [idx], h * der[idx].output * h.inverse(), by=h)
        acc = step if acc is None else der.add("mul", [acc, step], der[acc].output * der[step].output)
    return acc


# -- saturation --------------------------------------------------------------


def _window(words) -> tuple[int, int] | None:
    idx = [g for w in words for g, _ in w]
    return (min(idx), max(idx)) if idx else None


def _power_exponent(w: Word) -> int:
    """Largest ``e`` with ``w = u^e``."""
    n = len(w)
    for k in range(1, n // 2 + 1):
        if n % k == 0 and w.letters == w.letters[:k] * (n // k):
            return n // k
    return 1


def saturate(
    facts,
    relator: Word,
    budget: int = DEFAULT_BUDGET,
    splits_of_relator: bool = True,
) -> Saturation:
    """Forward-chain the rule catalog from ``facts`` over the given relator.

    ``facts`` are words (either alphabet, zero t-exponent) asserted positive;
    ``relator`` is a word over {t, a} or already rewritten.  Returns a
    contradiction with its derivation, a stable fact set, or ``budget`` when
    the fact/node budget is exhausted first.
    """
    r = _as_fact(relator) if relator else Word()
    pieces = RelatorPieces(r)
    hyps = [_as_fact(f) for f in facts]
    window = _window(hyps + [r])
    der = Derivation()
    store: dict[Word, int] = {}
    queue: list[int] = []

    def found(final: int, chain=None) -> Saturation:
        return Saturation("contradiction", der.extract(final), chain, list(store), len(store))

    def close(idx: int) -> int | None:
        """Contradiction step index reachable from fact ``idx`` in one move, if any."""
        f = der[idx].output
        if not f:
            return idx
        inv = f.inverse()
        if inv in store:
            return der.add("mul", [idx, store[inv]], f * inv)
        pos = pieces.deletion(f)
        if pos is not None:
            piece = Word(cyclic_reduce(f)[1].letters)
            return der.add("relator", [idx], f[:pos] * f[pos + len(piece) :], at=pos, piece=piece, mode="delete")
        return None

    def push(rule, inputs, output, **arg):
        output = reduce(output)
        if output in store or len(output) > 2:
            return None
        if window and output and not all(window[0] <= g <= window[1] for g, _ in output):
            return None
        idx = der.add(rule, inputs, output, **arg)
        store[output] = idx
        queue.append(idx)
        return close(idx)

    for h in hyps:
        if h in store:
            continue
        idx = der.add("hyp", [], h)
        store[h] = idx
        queue.append(idx)
        hit = close(idx)
        if hit is not None:
            return found(hit)
    if window is None:
        return Saturation("stable", None, None, list(store), 0)

    lo, hi = window
    letters = [Word([(k, s)]) for k in range(lo, hi + 1) for s in (1, -1)]
    while queue:
        if len(store) >= budget:
            return Saturation("budget", None, None, list(store), len(store))
        i = queue.pop(0)
        f = der[i].output
        fl, fh = min(g for g, _ in f), max(g for g, _ in f)
        for k in range(lo - fl, hi - fh + 1):
            if k:
                hit = push("shift", [i], shift(f, k), by=k)
                if hit is not None:
                    return found(hit)
        for h in letters:
            hit = push("conj", [i], h * f * h.inverse(), by=h)
            if hit is not None:
                return found(hit)
        for g, j in list(store.items()):
            for a, b in ((i, j), (j, i)):
                hit = push("mul", [a, b], der[a].output * der[b].output)
                if hit is not None:
                    return found(hit)
        if len(f) == 1:
            hit = push("pow", [i], f * f, n=2)
            if hit is not None:
                return found(hit)

    if not pieces or not splits_of_relator:
        return Saturation("stable", None, None, list(store), len(store))

    problems = []
    for rel in (r, r.inverse()):
        for i in range(1, len(rel)):
            L, R = rel[:i], rel[i:].inverse()
            key = (-max(_power_exponent(L), _power_exponent(R)), abs(2 * i - len(rel)), len(problems))
            problems.append((key, L, R))
    problems.sort(key=lambda p: p[0])
    per_problem = max(20, (budget - len(store)) // (4 * max(len(problems), 1)))
    explored = len(store)
    for _, L, R in problems:
        path, spent = find_chain(L, R, store, window, per_problem, greedy_deletions=True)
        if path is None:
            path, more = find_chain(L, R, store, window, per_problem)
            spent += more
        explored += spent
        if path:
            acc = _chain_steps(der, L, path)
            hit = close(acc)
            if hit is not None:
                chain = [reduce(L)] + [w for w, _, _ in path]
                return found(hit, chain)
    return Saturation("budget", None, None, list(store), explored)


# -- certificates ------------------------------------------------------------


@dataclass
class Leaf:
    derivation: Derivation
    chain: list[Word] | None = None

    def to_json(self) -> dict:
        out = {"derivation": self.derivation.to_json()}
        if self.chain:
            out["chain"] = [format_word(w) for w in self.chain]
        return out


@dataclass
class EqualityLeaf:
    word: Word
    verdict: Verdict

    def to_json(self) -> dict:
        return {"oracle": {"word": format_word(self.word), "verdict": self.verdict.value}}


@dataclass
class Split:
    word: Word
    pos: object
    neg: object
    eq: object

    def to_json(self) -> dict:
        return {
            "split": format_word(self.word),
            "cases": {"pos": self.pos.to_json(), "neg": self.neg.to_json(), "eq": self.eq.to_json()},
        }


@dataclass
class Certificate:
    presentation: Presentation
    tree: object

    def to_json(self) -> dict:
        return {
            "presentation": format_word(self.presentation.relator),
            "relator": format_word(self.presentation.indexed_relator) if self.presentation.relator else "1",
            "tree": self.tree.to_json(),
        }

    def leaves(self):
        todo = [self.tree]
        while todo:
            node = todo.pop(0)
            if isinstance(node, Split):
                todo.extend([node.pos, node.neg, node.eq])
            else:
                yield node

    def chains(self) -> list[list[Word]]:
        return [leaf.chain for leaf in self.leaves() if isinstance(leaf, Leaf) and leaf.chain]


def default_splits() -> list[Word]:
    """``a[0]`` against 1, then ``a[0]`` against ``a[1]``."""
    return [parse_word("a[0]"), parse_word("a[0]^-1 a[1]")]


def prove_non_biorderable(
    presentation: Presentation,
    oracle: Callable[[Word], Verdict],
    splits=None,
    budget: int = DEFAULT_BUDGET,
) -> Certificate | None:
    """Search for a certificate; ``None`` means inconclusive.

    ``oracle`` decides triviality of indexed words and closes the ``g = 1``
    branch of each trichotomy split.  ``splits`` are words whose sign is
    branched on in order; every branch must end in a contradiction.
    """
    relator = presentation.relator
    splits = [_as_fact(s) for s in (default_splits() if splits is None else splits)]

    def build(hyps, rest):
        sat = saturate(hyps, relator, budget, splits_of_relator=not rest)
        if sat.contradiction:
            return Leaf(sat.derivation, sat.chain)
        if not rest:
            return None
        g = rest[0]
        pos = build(hyps + [g], rest[1:])
        if pos is None:
            return None
        neg = build(hyps + [g.inverse()], rest[1:])
        if neg is None:
            return None
        verdict = oracle(g)
        if verdict is Verdict.NONTRIVIAL:
            eq = EqualityLeaf(g, verdict)
        elif verdict is Verdict.TRIVIAL:
            eq = build(hyps, rest[1:])
            if eq is None:
                return None
        else:
            return None
        return Split(g, pos, neg, eq)

    tree = build([], splits)
    return None if tree is None else Certificate(presentation, tree)


# -- checking ----------------------------------------------------------------


@dataclass
class CheckResult:
    valid: bool
    where: str = ""
    reason: str = ""

    def __bool__(self):
        return self.valid

    def to_json(self) -> dict:
        return {"valid": self.valid, "where": self.where, "reason": self.reason}


def _check_derivation(steps: list[dict], hyps: list[Word], pieces: RelatorPieces, where: str) -> CheckResult:
    outputs: list[Word] = []
    for n, st in enumerate(steps):
        here = f"{where}/step {n}"
        try:
            out = reduce(parse_word(st["output"]))
            ins = [outputs[i] for i in st.get("inputs", [])]
            if any(i >= n for i in st.get("inputs", [])):
                return CheckResult(False, here, "input refers forward")
            rule = st["rule"]
            if rule == "hyp":
                ok = not ins and out in hyps
            elif rule == "shift":
                ok = len(ins) == 1 and out == shift(ins[0], int(st["by"]))
            elif rule == "conj":
                h = parse_word(st["by"])
                ok = len(ins) == 1 and h.alphabet != "ta" and out == reduce(h * ins[0] * h.inverse())
            elif rule == "mul":
                ok = len(ins) == 2 and out == reduce(ins[0] * ins[1])
            elif rule == "pow":
                k = int(st["n"])
                ok = len(ins) == 1 and k >= 1 and out == reduce(ins[0] ** k)
            elif rule == "relator":
                piece = parse_word(st["piece"])
                at = int(st["at"])
                src = ins[0] if len(ins) == 1 else None
                if src is None or not pieces.is_piece(piece) or not 0 <= at <= len(src):
                    ok = False
                elif st.get("mode", "delete") == "delete":
                    ok = src[at : at + len(piece)] == piece and out == reduce(src[:at] * src[at + len(piece) :])
                else:
                    ok = out == reduce(src[:at] * piece * src[at:])
            else:
                return CheckResult(False, here, f"unknown rule {rule!r}")
        except (KeyError, ValueError, IndexError, TypeError) as exc:
            return CheckResult(False, here, f"malformed step: {exc}")
        if not ok:
            return CheckResult(False, here, f"not an instance of rule {st.get('rule')!r}")
        outputs.append(out)
    if not outputs or outputs[-1]:
        return CheckResult(False, where, "derivation does not end in 1 in P")
    return CheckResult(True)


def check_certificate(cert, presentation: Presentation, oracle: Callable[[Word], Verdict] | None = None) -> CheckResult:
    """Replay a certificate (object or JSON) against the rule catalog.

    ``oracle`` re-decides the ``g = 1`` branches; without it those leaves are
    rejected.
    """
    data = cert.to_json() if isinstance(cert, Certificate) else cert
    r = presentation.indexed_relator if presentation.relator else Word()
    pieces = RelatorPieces(r)

    def walk(node, hyps, where) -> CheckResult:
        if "split" in node:
            g = reduce(parse_word(node["split"]))
            cases = node.get("cases", {})
            if set(cases) != {"pos", "neg", "eq"}:
                return CheckResult(False, where, "split does not cover pos/neg/eq")
            for name, extra in (("pos", [g]), ("neg", [g.inverse()]), ("eq", [])):
                res = walk(cases[name], hyps + extra, f"{where}/{name}")
                if not res:
                    return res
                if name == "eq" and "oracle" in cases[name]:
                    if reduce(parse_word(cases[name]["oracle"]["word"])) != g:
                        return CheckResult(False, f"{where}/eq", "oracle leaf is about another word")
            return CheckResult(True)
        if "oracle" in node:
            if oracle is None:
                return CheckResult(False, where, "no oracle supplied for equality leaf")
            w = parse_word(node["oracle"]["word"])
            if oracle(w) is not Verdict.NONTRIVIAL:
                return CheckResult(False, where, "oracle does not confirm nontriviality")
            return CheckResult(True)
        if "derivation" in node:
            return _check_derivation(node["derivation"], hyps, pieces, where)
        return CheckResult(False, where, "unknown node")

    return walk(data["tree"], [], "root")


def derive_chain(hyps, chain, relator: Word, max_nodes: int = 2000) -> Leaf:
    """Build a leaf from an explicit chain ``w_0 < w_1 < ... < w_k``.

    ``w_0^-1 w_k`` must be freely conjugate to the relator or its inverse.
    Consecutive words are linked by the same single-edit search the prover
    uses; ``ValueError`` if some link cannot be justified.
    """
    r = _as_fact(relator)
    hyps = [_as_fact(h) for h in hyps]
    chain = [_as_fact(w) for w in chain]
    window = _window(hyps + [r] + chain)
    der = Derivation()
    closure = _closure(hyps, window, der, {})
    acc = None
    for u, v in zip(chain, chain[1:]):
        path, _ = find_chain(u, v, closure, window, max_nodes, slack=max(len(u), len(v)))
        if path is None:
            raise ValueError(f"cannot justify {u} < {v}")
        step = _chain_steps(der, u, path)
        acc = step if acc is None else der.add("mul", [acc, step], der[acc].output * der[step].output)
    pieces = RelatorPieces(r)
    f = der[acc].output
    pos = pieces.deletion(f)
    if pos is None:
        raise ValueError("chain endpoints are not related by the relator")
    piece = cyclic_reduce(f)[1]
    final = der.add("relator", [acc], f[:pos] * f[pos + len(piece) :], at=pos, piece=piece, mode="delete")
    if der[final].output:
        raise ValueError("relator deletion did not reach 1")
    return Leaf(der.extract(final), chain)


def _closure(hyps, window, der: Derivation, store: dict) -> dict:
    """The length-two closure used by :func:`saturate`, without contradiction checks."""
    lo, hi = window
    queue = []
    for h in hyps:
        if h not in store:
            store[h] = der.add("hyp", [], h)
            queue.append(store[h])
    letters = [Word([(k, s)]) for k in range(lo, hi + 1) for s in (1, -1)]

    def push(rule, inputs, output, **arg):
        output = reduce(output)
        if not output or output in store or len(output) > 2:
            return
        if not all(lo <= g <= hi for g, _ in output):
            return
        store[output] = der.add(rule, inputs, output, **arg)
        queue.append(store[output])

    while queue:
        i = queue.pop(0)
        f = der[i].output
        fl, fh = min(g for g, _ in f), max(g for g, _ in f)
        for k in range(lo - fl, hi - fh + 1):
            if k:
                push("shift", [i], shift(f, k), by=k)
        for h in letters:
            push("conj", [i], h * f * h.inverse(), by=h)
        for g, j in list(store.items()):
            push("mul", [i, j], f * g)
            push("mul", [j, i], g * f)
    return store


# -- pretty printing -----------------------------------------------------------


def default_names(params=None) -> dict[str, Word]:
    """``a = a[0]``, ``b = a[s]``, ``c = a[s+1]`` and ``D = W`` when ``W`` is not a single letter."""
    s = 1 if params is None else params.s
    names = {"a": parse_word("a[0]"), "b": Word([(s, 1)]), "c": Word([(s + 1, 1)])}
    if params is not None and len(params.W) > 1:
        names["D"] = params.W
    return names


def render(w: Word, names: dict[str, Word]) -> str:
    """Render with atom names, e.g. ``bacb^-1`` or ``(ac)^2``."""
    w = reduce(w)
    if not w:
        return "1"
    table = []
    for name, word in names.items():
        table.append((word.letters, name))
        table.append((word.inverse().letters, name + "^-1" if len(word) == 1 else f"({name})^-1"))
    table.sort(key=lambda e: -len(e[0]))
    tokens, i = [], 0
    letters = w.letters
    while i < len(letters):
        for pat, name in table:
            if pat and letters[i : i + len(pat)] == pat:
                tokens.append(name)
                i += len(pat)
                break
        else:
            tokens.append(format_word(Word([letters[i]])))
            i += 1
    n = len(tokens)
    for size in range(2, n // 2 + 1):
        if n % size == 0 and tokens == tokens[:size] * (n // size):
            return f"({''.join(tokens[:size])})^{n // size}"
    out, j = [], 0
    while j < n:
        k = j
        while k < n and tokens[k] == tokens[j] and not tokens[j].endswith("-1"):
            k += 1
        run = max(k - j, 1)
        out.append(tokens[j] if run == 1 else f"{tokens[j]}^{run}")
        j += run
    return "".join(out)


def render_chain(chain, names: dict[str, Word]) -> str:
    return " < ".join(render(w, names) for w in chain)

"""Command-line front end.

Exit codes: 0 success, 1 usage error (including rejected input such as an
invalid certificate), 2 inconclusive, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
from importlib import resources
import random
import sys

from . import __version__
from .alexander import alexander_poly, alexander_report
from .biorder import (
    DEFAULT_BUDGET,
    EqualityLeaf,
    Leaf,
    Split,
    check_certificate,
    default_names,
    prove_non_biorderable,
    render,
    render_chain,
)
from .gentorsion import SearchConfig, check_finding, search
from .oracles import ORACLE_NAMES, make_oracle
from .tower import Tower, Verdict, sample_normal_closure
from .words import (
    GAMMA,
    TowerParams,
    Word,
    build_gamma_presentation,
    build_relator,
    canonicalize,
    format_word,
    magnus_rewrite,
    parse_word,
    reduce,
    t_exponent_sum,
    unrewrite,
)

EXIT_OK, EXIT_USAGE, EXIT_INCONCLUSIVE, EXIT_INVARIANT = 0, 1, 2, 3
DEFAULT_SEED = 0


SCHEMA_VERSION = "v1"
SCHEMAS = ("wp", "rewrite", "relator", "alex", "biorder-prove", "biorder-check", "gts", "syll")


def load_schema(name: str) -> dict:
    """JSON schema shipped for the output of subcommand ``name``."""
    if name not in SCHEMAS:
        raise ValueError(f"no schema named {name!r}")
    path = resources.files("onerel") / "schemas" / SCHEMA_VERSION / f"{name}.schema.json"
    return json.loads(path.read_text())


class UsageError(Exception):
    pass


class InvariantViolation(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _params(text: str) -> TowerParams:
    try:
        return TowerParams.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _word(text: str) -> Word:
    try:
        return parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, payload: dict, text: str):
    if args.json:
        json.dump(payload, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    else:
        print(text)


# -- subcommands ---------------------------------------------------------------


def cmd_wp(args) -> int:
    if args.sample:
        return _wp_sample(args)
    if not args.words:
        raise UsageError("wp: give at least one word, or --sample N")
    oracle = _oracle(args)
    results = []
    for w in args.words:
        if args.level is not None:
            if args.oracle not in ("gamma", "gamma-h") or not w.is_indexed:
                raise UsageError("--level applies to indexed words with the gamma oracle")
            verdict = oracle.tower.is_trivial(w, args.level)
        else:
            verdict = oracle.is_trivial(w)
        results.append({"word": format_word(w), "verdict": verdict.value})
    payload = {"oracle": oracle.name, "results": results}
    if len(results) == 1:
        text = results[0]["verdict"]
    else:
        text = "\n".join(f"{r['verdict']:<12} {r['word']}" for r in results)
    _emit(args, payload, text)
    return EXIT_INCONCLUSIVE if any(r["verdict"] == Verdict.INCONCLUSIVE.value for r in results) else EXIT_OK


def _wp_sample(args) -> int:
    params = canonicalize(args.params)
    rng = random.Random(args.seed)
    tower = Tower(params)
    window = max(args.window, params.s + 1)
    counts = {v.value: 0 for v in Verdict}
    for _ in range(args.sample):
        counts[tower.is_trivial(sample_normal_closure(params, rng, window=window)).value] += 1
    payload = {"params": str(params), "seed": args.seed, "samples": args.sample, "window": window, "verdicts": counts}
    _emit(args, payload, f"{args.sample} normal-closure samples (seed {args.seed}): " + ", ".join(f"{k} {v}" for k, v in counts.items()))
    if counts["nontrivial"]:
        raise InvariantViolation("a product of relator conjugates was judged nontrivial")
    return EXIT_INCONCLUSIVE if counts["inconclusive"] else EXIT_OK


def cmd_rewrite(args) -> int:
    w = args.word
    if w.is_indexed:
        out, direction = unrewrite(w), "inverse"
    else:
        if t_exponent_sum(w) != 0:
            raise UsageError("rewrite: word must have zero t-exponent sum")
        out, direction = magnus_rewrite(w), "magnus"
    _emit(args, {"input": format_word(w), "output": format_word(out), "direction": direction}, format_word(out))
    return EXIT_OK


def cmd_relator(args) -> int:
    params = canonicalize(args.params)
    pres = build_gamma_presentation(params)
    rj = [{"j": j, "word": format_word(build_relator(params, j))} for j in args.j]
    payload = {"params": str(params), "presentation": str(pres), "relator": format_word(pres.relator), "R": rj}
    text = "\n".join([str(pres)] + [f"R_{r['j']} = {r['word']}" for r in rj])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_alex(args) -> int:
    if args.relator is not None:
        r = args.relator
        if not r.is_indexed:
            if t_exponent_sum(r) != 0:
                raise UsageError("alex: relator must have zero t-exponent sum")
            r = magnus_rewrite(r)
    else:
        r = build_relator(canonicalize(args.params), 0)
    report = alexander_report(r)
    poly = str(alexander_poly(r))
    payload = dict(report, text=poly)
    text = f"{poly}\npositive real roots: {report['positive_real_roots']}\nDescartes bound: {report['descartes_bound']}"
    _emit(args, payload, text)
    return EXIT_OK


def _oracle(args):
    if args.oracle in ("gamma", "gamma-h"):
        return make_oracle(args.oracle, params=canonicalize(args.params))
    return make_oracle(args.oracle, m=args.m)


def cmd_biorder_prove(args) -> int:
    oracle = _oracle(args)
    pres = oracle.presentation()
    cert = prove_non_biorderable(pres, oracle.is_trivial, budget=args.budget)
    if cert is None:
        _emit(args, {"status": "inconclusive", "oracle": oracle.name}, "inconclusive: no certificate within budget")
        return EXIT_INCONCLUSIVE
    check = check_certificate(cert, pres, oracle.is_trivial)
    if not check:
        raise InvariantViolation(f"prover emitted an invalid certificate: {check.where}: {check.reason}")
    payload = {"status": "certificate", "oracle": oracle.name, "certificate": cert.to_json()}
    names = default_names(getattr(oracle, "params", None))
    lines = [f"certificate for {pres}"]
    lines += _render_tree(cert.tree, names, "  ")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _render_tree(node, names, indent):
    if isinstance(node, Split):
        out = [f"{indent}split on {render(node.word, names)}"]
        for case, child in (("> 1", node.pos), ("< 1", node.neg), ("= 1", node.eq)):
            out.append(f"{indent}  case {render(node.word, names)} {case}:")
            out += _render_tree(child, names, indent + "    ")
        return out
    if isinstance(node, EqualityLeaf):
        return [f"{indent}{render(node.word, names)} != 1 ({node.verdict.value} by the word problem)"]
    if isinstance(node, Leaf):
        if node.chain:
            return [f"{indent}{render_chain(node.chain, names)}, contradicting the relator"]
        return [f"{indent}1 > 1 after {len(node.derivation)} steps"]
    return [f"{indent}?"]


def cmd_biorder_check(args) -> int:
    try:
        data = json.load(sys.stdin if args.file == "-" else open(args.file))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"biorder check: cannot read certificate: {exc}") from None
    if "certificate" in data:
        data = data["certificate"]
    oracle = _oracle(args)
    pres = oracle.presentation()
    try:
        if reduce(parse_word(data["presentation"])) != reduce(pres.relator):
            result = {"valid": False, "where": "root", "reason": "certificate is for another presentation"}
        else:
            result = check_certificate(data, pres, oracle.is_trivial).to_json()
    except (KeyError, TypeError, ValueError) as exc:
        result = {"valid": False, "where": "root", "reason": f"malformed certificate: {exc}"}
    text = "valid" if result["valid"] else f"invalid at {result['where']}: {result['reason']}"
    _emit(args, result, text)
    return EXIT_OK if result["valid"] else EXIT_USAGE


def cmd_gts(args) -> int:
    oracle = _oracle(args)
    try:
        config = SearchConfig(
            tau_max_length=args.tau_max,
            conjugator_radius=args.radius,
            max_factors=args.max_factors,
            shift_range=args.shifts if oracle.has_shift else 0,
            budget=args.budget,
            max_findings=args.max_findings or None,
        )
    except ValueError as exc:
        raise UsageError(f"gts: {exc}") from None
    report = search(oracle, config)
    for f in report.findings:
        if not check_finding(f, oracle):
            raise InvariantViolation(f"search emitted an invalid finding: {f.to_json()}")
    lines = [
        f"tau = {format_word(f.tau)}, conjugators ({', '.join(format_word(g) for g in f.conjugators)}), "
        f"shifts ({', '.join(map(str, f.shifts))})"
        for f in report.findings
    ]
    lines.append(
        f"{len(report.findings)} finding(s); {report.examined} products examined, "
        f"{report.inconclusive} inconclusive{', budget exhausted' if report.exhausted else ''}"
    )
    _emit(args, report.to_json(), "\n".join(lines))
    return EXIT_INCONCLUSIVE if report.inconclusive and not report.findings else EXIT_OK


def cmd_syll(args) -> int:
    tower = Tower(args.params)
    w = args.word
    if not w.is_indexed:
        if t_exponent_sum(w) != 0:
            raise UsageError("syll: word must have zero t-exponent sum")
        w = magnus_rewrite(w)
    w = reduce(w)
    level = args.level if args.level is not None else max((k for k, _ in w.letters), default=0)
    if level < tower.s + 1:
        raise UsageError(f"syll: level must be at least {tower.s + 1}")
    if any(not 0 <= k <= level for k, _ in w.letters):
        raise UsageError(f"syll: word has indices outside [0, {level}]")
    syls = tower.syllable_decomposition(w, level)
    verdict = tower.is_trivial(w, level)
    payload = {
        "params": str(tower.params),
        "level": level,
        "word": format_word(w),
        "syllables": [s.to_json() for s in syls],
        "verdict": verdict.value,
    }
    _emit(args, payload, f"{' '.join(s.render() for s in syls) or '1'}\n{verdict.value}")
    return EXIT_INCONCLUSIVE if verdict is Verdict.INCONCLUSIVE else EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--params", type=_params, default=GAMMA, help='s,m,W, e.g. 1,2,"a[0]" (default)')
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled runs")

    oracle = _Parser(add_help=False)
    oracle.add_argument("--oracle", choices=ORACLE_NAMES, default="gamma")
    oracle.add_argument("--m", type=int, default=2, help="m for the bs oracle")

    parser = _Parser(prog="onerel", description="One-relator towers, orders and generalized torsion.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("wp", parents=[common, oracle], help="word problem")
    p.add_argument("words", nargs="*", type=_word)
    p.add_argument("--level", type=int)
    p.add_argument("--sample", type=int, default=0, help="check N random normal-closure products instead")
    p.add_argument("--window", type=int, default=6)
    p.set_defaults(func=cmd_wp)

    p = sub.add_parser("rewrite", parents=[common], help="Magnus rewriting and its inverse")
    p.add_argument("word", type=_word)
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("relator", parents=[common], help="presentation of Gamma_W and R_j")
    p.add_argument("--j", type=int, nargs="+", default=[0])
    p.set_defaults(func=cmd_relator)

    p = sub.add_parser("alex", parents=[common], help="Alexander polynomial and root counts")
    p.add_argument("relator", nargs="?", type=_word, help="relator word (default: R_0 of --params)")
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("biorder", help="non-bi-orderability certificates")
    bsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = bsub.add_parser("prove", parents=[common, oracle])
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    q.set_defaults(func=cmd_biorder_prove)
    q = bsub.add_parser("check", parents=[common, oracle])
    q.add_argument("file", help="certificate JSON, or - for stdin")
    q.set_defaults(func=cmd_biorder_check)

    p = sub.add_parser("gts", parents=[common, oracle], help="generalized-torsion search")
    p.add_argument("--tau-max", type=int, default=2)
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--max-factors", type=int, default=2)
    p.add_argument("--shifts", type=int, default=0)
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("--max-findings", type=int, default=1, help="0 collects every finding")
    p.set_defaults(func=cmd_gts)

    p = sub.add_parser("syll", parents=[common], help="syllable decomposition at a tower level")
    p.add_argument("word", type=_word)
    p.add_argument("--level", type=int)
    p.set_defaults(func=cmd_syll)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

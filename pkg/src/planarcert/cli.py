"""Command-line front end.

Exit codes: 0 planar / certificate valid / campaign passed; 1 non-planar /
certificate invalid / campaign failed; 2 input error; 3 resource or
internal error.  Graph arguments are edge-list files, ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from .documents import (
    DocumentError,
    parse_edge_list,
    verdict_doc_is_valid,
    verdict_to_doc,
)
from .errors import CapacityError, InternalInconsistencyError, SearchBudgetExceeded
from .graphs import Graph
from .harness import (
    verify_chartrand_harary,
    verify_kuratowski,
    verify_kuratowski_classes,
    verify_lemma_characterization,
    verify_lifting,
    verify_menger_cubic,
)
from .lemmas import lemma_report
from .planarity import DecisionConfig, DecisionPath, decide

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read_text(path))


def _load_json(path: str):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None


def _config(args: argparse.Namespace) -> DecisionConfig:
    return DecisionConfig(
        node_budget=args.budget,
        edge_bound_prefilter=not args.no_prefilter,
        path=DecisionPath(args.via),
    )


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    verdict = decide(g, _config(args))
    doc = verdict_to_doc(g, verdict)
    if args.validate and not verdict_doc_is_valid(g, doc):
        print("error: emitted verdict failed re-validation", file=sys.stderr)
        return EXIT_RESOURCE
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK if verdict.planar else EXIT_NEGATIVE


def _cmd_certify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    doc = _load_json(args.verdict)
    return EXIT_OK if verdict_doc_is_valid(g, doc) else EXIT_NEGATIVE


def _cmd_lemmas(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = lemma_report(g)
    doc = {
        "condition1": report.condition1,
        "condition2": report.condition2,
        "condition3": report.condition3,
        "witnesses": [
            {"edge": list(edge), "reason": reason}
            for edge, reason in report.witnesses
        ],
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_harness(args: argparse.Namespace) -> int:
    if args.campaign == "kuratowski":
        report = verify_kuratowski(args.max_n)
    elif args.campaign == "kuratowski-classes":
        report = verify_kuratowski_classes(args.max_n)
    elif args.campaign == "lemma":
        report = verify_lemma_characterization(args.max_n)
    elif args.campaign == "chartrand-harary":
        report = verify_chartrand_harary(args.max_n)
    elif args.campaign == "menger-cubic":
        report = verify_menger_cubic(args.samples, args.seed)
    else:
        report = verify_lifting(args.samples, args.seed)
    if args.text:
        print(report.render_text())
    else:
        sys.stdout.write(report.to_kv())
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarcert",
        description="Decide planarity with a checkable certificate either way.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide planarity of an edge-list graph")
    check.add_argument("graph", help="edge-list file, or - for stdin")
    check.add_argument(
        "--via",
        choices=[p.value for p in DecisionPath],
        default=DecisionPath.SUBDIVISION.value,
        help="obstruction search used for the non-planar branch",
    )
    check.add_argument(
        "--validate",
        action="store_true",
        help="re-check the emitted verdict before printing",
    )
    check.add_argument("--budget", type=int, default=10**9, help="oracle node budget")
    check.add_argument(
        "--no-prefilter",
        action="store_true",
        help="disable the E <= 3V-6 edge-bound prefilter",
    )
    check.set_defaults(func=_cmd_check)

    certify = sub.add_parser(
        "certify", help="validate a verdict document against a graph"
    )
    certify.add_argument("graph", help="edge-list file, or - for stdin")
    certify.add_argument("verdict", help="verdict JSON file, or - for stdin")
    certify.set_defaults(func=_cmd_certify)

    lemmas = sub.add_parser(
        "lemmas", help="evaluate the edge-deletion conditions on a graph"
    )
    lemmas.add_argument("graph", help="edge-list file, or - for stdin")
    lemmas.set_defaults(func=_cmd_lemmas)

    harness = sub.add_parser("harness", help="run a verification campaign")
    harness.add_argument(
        "campaign",
        choices=[
            "kuratowski",
            "kuratowski-classes",
            "lemma",
            "chartrand-harary",
            "menger-cubic",
            "lifting",
        ],
    )
    harness.add_argument("--max-n", type=int, default=5)
    harness.add_argument("--samples", type=int, default=100)
    harness.add_argument("--seed", type=int, default=42)
    harness.add_argument(
        "--text", action="store_true", help="human-readable report instead of key-value"
    )
    harness.set_defaults(func=_cmd_harness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SearchBudgetExceeded, InternalInconsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

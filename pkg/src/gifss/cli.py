"""Command-line interface.

Subcommands: validate, union, intersect, subset, rel-inverse, rel-compose,
rank. Exit codes: 0 success (and subset holds), 1 domain error, 2 usage or
parse error, 3 subset does not hold.

The --norms flag selects the pair for union and intersect. Relation files
carry their own pair in the "norms" field. The rank pipeline is defined by
fixed formulas and ignores --norms.
"""

from __future__ import annotations

import argparse
import csv
import io as stringio
import json
import sys
from pathlib import Path

from . import decision
from .degrees import set_precision
from .errors import DatasetParseError, DegreeError, GifssError
from .io import (
    gifss_to_dict,
    load_gifss,
    load_relation,
    relation_to_dict,
)
from .norms import pair_from_name, pair_names
from .sets import Gifss, is_subset, intersect, union
from .relations import Gifsr, compose, inverse
from .tables import (
    Table,
    comparison_matrix_table,
    emit_table,
    final_score_table,
    reduced_value_table,
    score_vector_table,
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--norms", choices=pair_names(), default="product",
        help="norm pair for union/intersect (default: product)",
    )
    common.add_argument(
        "--precision", type=int, default=6, metavar="N",
        help="fractional digits for degrees and rounding (default: 6)",
    )
    common.add_argument(
        "--format", choices=("plain", "csv", "json"), default="plain",
        help="output format (default: plain)",
    )
    common.add_argument(
        "--output", metavar="PATH", help="write output to PATH instead of stdout"
    )
    common.add_argument(
        "--quiet", action="store_true", help="suppress intermediate output"
    )
    common.add_argument(
        "--allow-invalid-ifs", action="store_true",
        help="permit loading values with mu + nu > 1 (pre-reduced data)",
    )

    parser = argparse.ArgumentParser(
        prog="gifss",
        description="Set algebra, relations and comparison-table ranking "
        "for parameterised intuitionistic fuzzy data.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("validate", parents=[common], help="check a dataset file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("union", parents=[common], help="union of two datasets")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_union)

    p = sub.add_parser("intersect", parents=[common], help="intersection of two datasets")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_intersect)

    p = sub.add_parser(
        "subset", parents=[common],
        help="exit 0 if the first dataset is a subset of the second, else 3",
    )
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_subset)

    p = sub.add_parser("rel-inverse", parents=[common], help="invert a relation file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_rel_inverse)

    p = sub.add_parser(
        "rel-compose", parents=[common], help="compose two relation files"
    )
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_rel_compose)

    p = sub.add_parser(
        "rank", parents=[common],
        help="run the comparison-table ranking pipeline on a dataset",
    )
    p.add_argument("file")
    p.set_defaults(handler=_cmd_rank)

    return parser


def _render_gifss(g: Gifss, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(gifss_to_dict(g), indent=2) + "\n"
    if fmt == "csv":
        buf = stringio.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("parameter", "preference", "element", "mu", "nu"))
        for p, ifset, pref in g.entries():
            for x, v in ifset.items():
                writer.writerow((p, str(pref), x, str(v.mu), str(v.nu)))
        return buf.getvalue()
    lines = [f"universe: {' '.join(g.universe)}"]
    for p, ifset, pref in g.entries():
        lines.append(f"parameter {p} (preference {pref}):")
        for x, v in ifset.items():
            lines.append(f"  {x}: mu {v.mu}, nu {v.nu}")
    return "\n".join(lines) + "\n"


def _render_relation(r: Gifsr, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(relation_to_dict(r), indent=2) + "\n"
    if fmt == "csv":
        buf = stringio.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ("source_param", "target_param", "degree", "element", "mu", "nu")
        )
        for a, b, ifset, degree in r.cells():
            for x, v in ifset.items():
                writer.writerow((a, b, str(degree), x, str(v.mu), str(v.nu)))
        return buf.getvalue()
    lines = [
        f"relation over universe: {' '.join(r.source.universe)} "
        f"(norms: {r.pair.name})"
    ]
    for a, b, ifset, degree in r.cells():
        lines.append(f"({a}, {b}) degree {degree}:")
        for x, v in ifset.items():
            lines.append(f"  {x}: mu {v.mu}, nu {v.nu}")
    return "\n".join(lines) + "\n"


def _cmd_validate(args) -> tuple[int, str]:
    # Dataset and relation files have disjoint key sets; probe to pick a loader.
    path = Path(args.file)
    try:
        with open(path, encoding="utf-8") as fh:
            probe = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise DatasetParseError(f"cannot read {path}: {e}") from e
    if isinstance(probe, dict) and "entries" in probe:
        r = load_relation(path, args.allow_invalid_ifs)
        summary = (
            f"ok: relation with {len(r.source.params)}x{len(r.target.params)} "
            f"cells over a universe of {len(r.source.universe)}\n"
        )
    else:
        g = load_gifss(path, args.allow_invalid_ifs)
        summary = (
            f"ok: universe of {len(g.universe)}, {len(g.params)} parameters\n"
        )
    return 0, ("" if args.quiet else summary)


def _cmd_union(args) -> tuple[int, str]:
    pair = pair_from_name(args.norms)
    f = load_gifss(args.left, args.allow_invalid_ifs)
    g = load_gifss(args.right, args.allow_invalid_ifs)
    return 0, _render_gifss(union(f, g, pair), args.format)


def _cmd_intersect(args) -> tuple[int, str]:
    pair = pair_from_name(args.norms)
    f = load_gifss(args.left, args.allow_invalid_ifs)
    g = load_gifss(args.right, args.allow_invalid_ifs)
    return 0, _render_gifss(intersect(f, g, pair), args.format)


def _cmd_subset(args) -> tuple[int, str]:
    f = load_gifss(args.left, args.allow_invalid_ifs)
    g = load_gifss(args.right, args.allow_invalid_ifs)
    held = is_subset(f, g)
    text = "" if args.quiet else ("true\n" if held else "false\n")
    return (0 if held else 3), text


def _cmd_rel_inverse(args) -> tuple[int, str]:
    r = load_relation(args.file, args.allow_invalid_ifs)
    return 0, _render_relation(inverse(r), args.format)


def _cmd_rel_compose(args) -> tuple[int, str]:
    r1 = load_relation(args.left, args.allow_invalid_ifs)
    r2 = load_relation(args.right, args.allow_invalid_ifs)
    return 0, _render_relation(compose(r1, r2), args.format)


def _rank_tables(report: decision.DecisionReport) -> tuple[Table, ...]:
    return (
        reduced_value_table(report.reduced, "membership"),
        comparison_matrix_table(report.mem_comparison, "Membership comparison"),
        score_vector_table(report.mem_scores, "Membership scores"),
        reduced_value_table(report.reduced, "nonmembership"),
        comparison_matrix_table(report.nonmem_comparison, "Non-membership comparison"),
        score_vector_table(report.nonmem_scores, "Non-membership scores"),
        final_score_table(report.mem_scores, report.nonmem_scores, report.ranking),
    )


def _cmd_rank(args) -> tuple[int, str]:
    g = load_gifss(args.file, args.allow_invalid_ifs)
    report = decision.rank(g)
    ranking = report.ranking
    winner_score = ranking.final_score[
        ranking.universe.elements.index(ranking.winner)
    ]
    decision_line = f"Decision: {ranking.winner} with final score {winner_score}"

    if args.format == "json":
        payload = {}
        if not args.quiet:
            keys = (
                "reduced_membership", "membership_comparison", "membership_scores",
                "reduced_nonmembership", "nonmembership_comparison",
                "nonmembership_scores", "final_scores",
            )
            for key, table in zip(keys, _rank_tables(report)):
                payload[key] = json.loads(emit_table(table, "json"))
        payload["decision"] = {
            "winner": ranking.winner,
            "final_score": winner_score,
            "order": list(ranking.order),
            "tie_groups": [list(t) for t in ranking.tie_groups],
        }
        return 0, json.dumps(payload, indent=2) + "\n"

    parts = []
    if not args.quiet:
        parts = [emit_table(t, args.format) for t in _rank_tables(report)]
        ties = [t for t in ranking.tie_groups if len(t) > 1]
        if ties:
            tie_text = "; ".join(
                "{" + ", ".join(t) + "}" for t in ties
            )
            parts.append(f"Ties: {tie_text}\n")
    parts.append(decision_line + "\n")
    return 0, "\n".join(parts)


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code
        return code if isinstance(code, int) else 2
    try:
        set_precision(args.precision)
    except DegreeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        code, text = args.handler(args)
    except DatasetParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except GifssError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(cli_main())

"""Command-line front end.

Commands: analyze, chartable, search, fiber, theorem-b.  Exit codes follow a
CI-friendly contract: 0 when every assertion passed, 1 for usage or parse
errors, 2 when a reference-identity check failed (a bundled expectation
disagrees with what the engine computes), so discrepancies are machine
readable.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import decomposition as dec
from .characters import CharacterError
from .covering import CoveringError
from .cyclotomic import CyclotomicError
from .groups import GroupError, is_partition
from .reporting import (
    ReportDocument,
    action_section,
    admissibility_section,
    base_document,
    character_table_section,
    corollary1_section,
    factors_section,
    fiber_section,
    group_section,
    profile_entry,
    proposition1_section,
    proposition2_section,
    rational_classes_section,
    rational_rep_section,
    theorem1_section,
    theorem_b_section,
    theorem_c_section,
)
from .scenario import (
    CollectionSpec,
    ScenarioError,
    ScenarioFile,
    class_labels,
    dihedral_class_labels,
    parse_scenario,
)


class UsageError(ScenarioError):
    """Bad command usage that is not a parse failure of the scenario itself."""


def _parse_schur(items: Sequence[str]) -> dict[int, int]:
    overrides = {}
    for item in items or ():
        key, eq, value = item.partition("=")
        if not eq:
            raise UsageError(f"--schur expects INDEX=VALUE, got {item!r}")
        try:
            overrides[int(key)] = int(value)
        except ValueError:
            raise UsageError(f"--schur expects integers, got {item!r}") from None
    return overrides


def _discrepancy(collection: str | None, kind: str, expected, computed, detail: str) -> dict:
    return {
        "collection": collection,
        "kind": kind,
        "expected": expected,
        "computed": computed,
        "detail": detail,
    }


def _check_collection_expectations(
    spec: CollectionSpec,
    analysis: dec.ActionAnalysis,
    ambient: str,
    admissibility: dec.AdmissibilityReport,
    theorem1: dec.DecompositionReport | None,
) -> list[dict]:
    """Compare computed results against the scenario's reference expectations."""
    expect = spec.expect
    name = spec.name
    notes: list[dict] = []
    profiles = [analysis.profile(h) for h in spec.subgroups]

    if "genera" in expect:
        computed = [p.genus for p in profiles]
        expected = [int(g) for g in expect["genera"]]
        if computed != expected:
            notes.append(
                _discrepancy(
                    name, "genera", expected, computed,
                    f"quotient genera: reference {expected}, engine computes {computed}",
                )
            )

    if "complement_dim" in expect:
        computed = analysis.genus - sum(p.genus for p in profiles)
        expected = int(expect["complement_dim"])
        if computed != expected:
            notes.append(
                _discrepancy(
                    name, "complement_dim", expected, computed,
                    f"genus complement: reference {expected}, engine computes {computed}",
                )
            )

    key = "admissible" if ambient == "acting" else "join_admissible"
    if key in expect:
        expected = bool(expect[key])
        computed = admissibility.admissible
        if computed != expected:
            notes.append(
                _discrepancy(
                    name, key, expected, computed,
                    f"reference calls the collection {'' if expected else 'not '}"
                    f"admissible (ambient {ambient}); engine verdict is "
                    f"{'admissible' if computed else 'not admissible'}",
                )
            )

    if "dim_p" in expect:
        expected = int(expect["dim_p"])
        if theorem1 is None:
            notes.append(
                _discrepancy(
                    name, "dim_p", expected, None,
                    f"reference expects a decomposition with dim P = {expected}, "
                    f"but the collection is not admissible (ambient {ambient})",
                )
            )
        elif theorem1.dim_p != expected:
            notes.append(
                _discrepancy(
                    name, "dim_p", expected, theorem1.dim_p,
                    f"dim P: reference {expected}, engine computes {theorem1.dim_p}",
                )
            )

    if "full" in expect and theorem1 is not None:
        expected = bool(expect["full"])
        if theorem1.full != expected:
            notes.append(
                _discrepancy(
                    name, "full", expected, theorem1.full,
                    f"full decomposition: reference {expected}, engine {theorem1.full}",
                )
            )

    if "fixed_dims" in expect:
        table_spec = expect["fixed_dims"]
        labels = dihedral_class_labels(analysis)
        if labels is None:
            raise UsageError(
                "fixed_dims expectations need the dihedral preset labeling"
            )
        columns = list(table_spec["columns"])
        rows = table_spec["rows"]
        for i, (subgroup, row) in enumerate(zip(spec.subgroups, rows)):
            for label, expected_cell in zip(columns, row):
                rc = analysis.rational_classes[labels[label]]
                computed_cell = analysis.fixed_dims(subgroup)[labels[label]]
                expected_cell = int(expected_cell)
                if computed_cell != expected_cell:
                    notes.append(
                        _discrepancy(
                            name, "fixed_dims",
                            expected_cell, computed_cell,
                            f"fixed dim of {label} (degree {rc.degree}) under H{i + 1}: "
                            f"reference table gives {expected_cell}, engine computes "
                            f"{computed_cell}",
                        )
                    )
    return notes


def _cmd_analyze(scenario: ScenarioFile, args) -> ReportDocument:
    overrides = dict(scenario.schur_overrides)
    overrides.update(_parse_schur(args.schur))
    analysis = dec.analyze(scenario.action, overrides)
    labels = class_labels(analysis)

    doc = base_document("analyze", scenario)
    doc["options"] = {"ambient": args.ambient, "collections": args.collections or "all"}
    doc["group"] = group_section(scenario.group, analysis)
    doc["action"] = action_section(scenario)
    doc["character_table"] = character_table_section(analysis)
    doc["rational_classes"] = rational_classes_section(analysis, labels)
    doc["factors"] = factors_section(analysis, labels)
    doc["rational_rep"] = rational_rep_section(analysis.rational_rep(), labels)
    doc["collections"] = {}

    if args.collections:
        missing = [n for n in args.collections if n not in scenario.collections]
        if missing:
            raise UsageError(f"unknown collection(s): {', '.join(missing)}")
        selected = [(n, scenario.collections[n]) for n in args.collections]
    else:
        selected = list(scenario.collections.items())

    for name, spec in selected:
        body: dict = {}
        profiles = [analysis.profile(h) for h in spec.subgroups]
        body["profiles"] = [
            profile_entry(f"H{i + 1}", spec.word_lists[i], p, analysis, labels)
            for i, p in enumerate(profiles)
        ]

        if args.ambient == "join":
            join_analysis, translated, join = dec.induced_join_analysis(
                scenario.action, spec.subgroups
            )
            ambient_analysis, ambient_subgroups = join_analysis, translated
            body["join"] = {
                "order": join.order,
                "orbit_genus": join_analysis.orbit_genus,
                "dims": [f.dim for f in join_analysis.factors],
            }
            ambient_labels = [
                f"U{i + 1}" for i in range(len(join_analysis.rational_classes))
            ]
        else:
            ambient_analysis, ambient_subgroups = analysis, spec.subgroups
            body["join"] = None
            ambient_labels = labels

        admissibility = ambient_analysis.admissibility(ambient_subgroups)
        body["admissibility"] = admissibility_section(admissibility, ambient_labels)

        theorem1 = None
        if admissibility.admissible:
            theorem1 = ambient_analysis.theorem1(ambient_subgroups)
            body["theorem1"] = theorem1_section(theorem1, ambient_labels)
            body["corollary1"] = corollary1_section(
                [
                    ambient_analysis.corollary1(ambient_subgroups, k)
                    for k in range(len(ambient_subgroups))
                ]
            )
        else:
            body["theorem1"] = None
            body["theorem1_skipped"] = "collection is not admissible"

        if len(spec.subgroups) == 2:
            body["proposition2"] = proposition2_section(
                analysis.proposition2(*spec.subgroups), labels
            )
        body["proposition1"] = proposition1_section(
            analysis.proposition1(spec.subgroups), labels
        )
        body["theorem_c"] = theorem_c_section(analysis.theorem_c(spec.subgroups))

        notes = _check_collection_expectations(
            spec, analysis, args.ambient, admissibility, theorem1
        )
        body["discrepancies"] = notes
        doc["discrepancies"].extend(notes)
        doc["collections"][name] = body
    return ReportDocument(doc)


def _cmd_chartable(scenario: ScenarioFile, args) -> ReportDocument:
    overrides = dict(scenario.schur_overrides)
    overrides.update(_parse_schur(args.schur))
    analysis = dec.analyze(scenario.action, overrides)
    labels = class_labels(analysis)
    doc = base_document("chartable", scenario)
    doc["group"] = group_section(scenario.group, analysis)
    doc["character_table"] = character_table_section(analysis)
    doc["rational_classes"] = rational_classes_section(analysis, labels)
    return ReportDocument(doc)


def _cmd_search(scenario: ScenarioFile, args) -> ReportDocument:
    analysis = dec.analyze(scenario.action, scenario.schur_overrides)
    reports = analysis.search_admissible(
        max_t=args.max_t,
        require_full=args.require_full,
        dedupe_conjugates=args.dedupe_conjugates,
    )
    doc = base_document("search", scenario)
    doc["group"] = group_section(scenario.group, analysis)
    doc["action"] = action_section(scenario)
    doc["search"] = {
        "max_t": args.max_t,
        "require_full": args.require_full,
        "dedupe_conjugates": args.dedupe_conjugates,
    }
    results = []
    for index, report in enumerate(reports, start=1):
        genera = [analysis.profile(h).genus for h in report.subgroups]
        theorem1 = analysis.theorem1(report.subgroups)
        results.append(
            {
                "index": index,
                "subgroups": [h.describe() for h in report.subgroups],
                "orders": [h.order for h in report.subgroups],
                "genera": genera,
                "genus_sum": sum(genera),
                "dim_p": theorem1.dim_p,
                "full": theorem1.full,
            }
        )
    doc["results"] = results
    return ReportDocument(doc)


def _cmd_fiber(args) -> ReportDocument:
    if (args.genera is None) == (args.elliptic is None):
        raise UsageError("fiber needs exactly one of --genera or --elliptic")
    if args.genera is not None:
        try:
            genera = [int(x) for x in args.genera.split(",")]
        except ValueError:
            raise UsageError(f"--genera expects integers, got {args.genera!r}") from None
        plan = dec.fiber_product_action(genera)
    else:
        plan = dec.cor3_plan(args.elliptic)
    doc = base_document("fiber")
    doc["plan"] = fiber_section(plan)
    return ReportDocument(doc)


def _cmd_theorem_b(scenario: ScenarioFile, args) -> ReportDocument:
    analysis = dec.analyze(scenario.action, scenario.schur_overrides)
    name = args.collection
    if name is None:
        name = next(
            (n for n, s in scenario.collections.items() if s.expect.get("partition")),
            None,
        )
        if name is None:
            raise UsageError("no partition collection found; pass --collection NAME")
    if name not in scenario.collections:
        raise UsageError(f"unknown collection {name!r}")
    spec = scenario.collections[name]

    doc = base_document("theorem-b", scenario)
    doc["group"] = group_section(scenario.group, analysis)
    doc["action"] = action_section(scenario)

    verdict = is_partition(scenario.group, spec.subgroups)
    section: dict = {"collection": name, "t": len(spec.subgroups), "partition": bool(verdict)}
    if verdict:
        report = analysis.theorem_b(spec.subgroups)
        section.update(theorem_b_section(report))
        if not report.holds:
            doc["discrepancies"].append(
                _discrepancy(
                    name, "theorem_b", True, False,
                    "partition identities failed despite a valid partition",
                )
            )
    else:
        if spec.expect.get("partition"):
            doc["discrepancies"].append(
                _discrepancy(
                    name, "partition", True, False,
                    "reference marks the collection as a partition; engine disagrees",
                )
            )
        else:
            raise dec.NotAPartition(verdict)
    doc["theorem_b"] = section
    return ReportDocument(doc)


def run_command(command: str, scenario: ScenarioFile | None, args) -> tuple[ReportDocument, int]:
    """Execute one command and return its report plus the exit code."""
    if command == "analyze":
        doc = _cmd_analyze(scenario, args)
    elif command == "chartable":
        doc = _cmd_chartable(scenario, args)
    elif command == "search":
        doc = _cmd_search(scenario, args)
    elif command == "fiber":
        doc = _cmd_fiber(args)
    elif command == "theorem-b":
        doc = _cmd_theorem_b(scenario, args)
    else:
        raise UsageError(f"unknown command {command!r}")
    code = 0
    if doc.data["discrepancies"]:
        doc.data["status"] = "discrepancy"
        code = 2
    return doc, code


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, per the exit-code contract
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="jacdecomp",
        description=(
            "Exact decomposition bookkeeping for Jacobians with group action: "
            "character tables, isotypical factors, admissible collections."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, scenario_arg=True):
        if scenario_arg:
            p.add_argument(
                "scenario",
                help="preset reference (d2q?q=3, fiber?genera=1,1), JSON file path, or JSON text",
            )
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--schur", action="append", default=[], metavar="INDEX=VALUE",
                       help="override the Schur index of an orbit representative row")
        p.add_argument("--max-order", type=int, default=None,
                       help="cap on group order during construction")

    p_analyze = sub.add_parser("analyze", help="full decomposition report")
    add_common(p_analyze)
    p_analyze.add_argument("--collections", default=None,
                           help="comma-separated collection names (default: all)")
    p_analyze.add_argument("--ambient", choices=("acting", "join"), default="acting",
                           help="test admissibility against the acting group or the join")

    p_chartable = sub.add_parser("chartable", help="character table and rational classes")
    add_common(p_chartable)

    p_search = sub.add_parser("search", help="search admissible collections")
    add_common(p_search)
    p_search.add_argument("--max-t", type=int, default=3)
    p_search.add_argument("--require-full", action="store_true")
    p_search.add_argument("--dedupe-conjugates", action="store_true")

    p_fiber = sub.add_parser("fiber", help="fiber-product construction plan")
    add_common(p_fiber, scenario_arg=False)
    p_fiber.add_argument("--genera", default=None, help="comma-separated factor genera")
    p_fiber.add_argument("--elliptic", type=int, default=None,
                         help="plan for this many elliptic factors")

    p_tb = sub.add_parser("theorem-b", help="partition decomposition identities")
    add_common(p_tb)
    p_tb.add_argument("--collection", default=None,
                      help="collection name (default: the one marked as a partition)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        scenario = None
        if getattr(args, "scenario", None) is not None:
            scenario = parse_scenario(args.scenario, max_order=args.max_order)
        if hasattr(args, "collections") and isinstance(args.collections, str):
            args.collections = [n.strip() for n in args.collections.split(",") if n.strip()]
        doc, code = run_command(args.command, scenario, args)
    except (ScenarioError, GroupError, CoveringError, CharacterError,
            CyclotomicError, dec.DecompositionError) as exc:
        print(f"jacdecomp: error: {exc}", file=sys.stderr)
        return 1
    output = doc.to_json() if args.format == "json" else doc.to_text()
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

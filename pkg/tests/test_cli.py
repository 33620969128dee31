"""Command front end: exit codes, documents, golden reports, determinism."""

import json
import os
import re
import subprocess
import sys
from pathlib import Path

import pytest

from jacdecomp import cli
from jacdecomp.scenario import parse_scenario

GOLDEN_DIR = Path(__file__).parent / "goldens"


def run(argv):
    """Parse argv exactly as main does and return (document, exit code)."""
    parser = cli._build_parser()
    args = parser.parse_args(argv)
    scenario = None
    if getattr(args, "scenario", None) is not None:
        scenario = parse_scenario(args.scenario, max_order=args.max_order)
    if hasattr(args, "collections") and isinstance(args.collections, str):
        args.collections = [n.strip() for n in args.collections.split(",") if n.strip()]
    return cli.run_command(args.command, scenario, args)


# -- exit code contract ---------------------------------------------------------


def test_analyze_main_collection_passes():
    doc, code = run(["analyze", "d2q?q=3", "--collections", "main"])
    assert code == 0
    assert doc.data["status"] == "ok"
    body = doc.data["collections"]["main"]
    assert body["theorem1"]["dim_p"] == 0
    assert body["theorem1"]["full"] is True
    assert body["admissibility"]["admissible"] is True


def test_analyze_h1h4_emits_discrepancies_and_exit_2():
    doc, code = run(["analyze", "d2q?q=3", "--collections", "h1h4"])
    assert code == 2
    assert doc.data["status"] == "discrepancy"
    kinds = {d["kind"] for d in doc.data["discrepancies"]}
    assert kinds == {"admissible", "fixed_dims"}
    note = next(d for d in doc.data["discrepancies"] if d["kind"] == "fixed_dims")
    assert note["expected"] == 1
    assert note["computed"] == 2
    assert "V6" in note["detail"]


def test_analyze_h1h4_join_ambient_still_flags_table_cell():
    doc, code = run(
        ["analyze", "d2q?q=3", "--collections", "h1h4", "--ambient", "join"]
    )
    assert code == 2
    kinds = {d["kind"] for d in doc.data["discrepancies"]}
    assert kinds == {"fixed_dims"}  # the join verdict itself matches the reference
    body = doc.data["collections"]["h1h4"]
    assert body["join"]["order"] == 4
    assert body["admissibility"]["ambient"] == "join"
    assert body["admissibility"]["admissible"] is False


def test_analyze_whole_scenario_exits_2_because_of_h1h4():
    doc, code = run(["analyze", "d2q?q=3"])
    assert code == 2
    flagged = {d["collection"] for d in doc.data["discrepancies"]}
    assert flagged == {"h1h4"}


@pytest.mark.parametrize("q", [3, 5, 7])
def test_analyze_reference_collections_clean_for_all_q(q):
    doc, code = run(["analyze", f"d2q?q={q}", "--collections", "main,h1,h1h3"])
    assert code == 0


def test_fiber_command_matches_reference_numbers():
    doc, code = run(["fiber", "--genera", "1,1"])
    assert code == 0
    assert doc.data["plan"]["genus"] == 5
    assert doc.data["plan"]["dim_p"] == 3


def test_fiber_elliptic_command():
    doc, code = run(["fiber", "--elliptic", "5"])
    assert code == 0
    assert doc.data["plan"]["genus"] == 25
    assert doc.data["plan"]["dim_p"] == 20
    assert doc.data["plan"]["elliptic_count"] == 5


def test_fiber_requires_exactly_one_mode():
    with pytest.raises(cli.UsageError):
        run(["fiber"])
    with pytest.raises(cli.UsageError):
        run(["fiber", "--genera", "1,1", "--elliptic", "3"])


def test_theorem_b_command_dihedral():
    doc, code = run(["theorem-b", "d2q?q=3"])
    assert code == 0
    section = doc.data["theorem_b"]
    assert section["holds"] is True
    assert section["dimension_lhs"] == section["dimension_rhs"] == 66


def test_theorem_b_command_fiber():
    doc, code = run(["theorem-b", "fiber?genera=1,1"])
    assert code == 0
    assert doc.data["theorem_b"]["dimension_lhs"] == 10


def test_chartable_command():
    doc, code = run(["chartable", "d2q?q=5"])
    assert code == 0
    assert [r["degree"] for r in doc.data["character_table"]["rows"]] == [1, 1, 1, 1, 2, 2, 2, 2]


def test_search_command_counts():
    doc, code = run(["search", "d2q?q=3", "--max-t", "3", "--require-full"])
    assert code == 0
    assert len(doc.data["results"]) == 11
    assert all(r["genus_sum"] == 11 for r in doc.data["results"])


def test_unknown_collection_is_usage_error():
    with pytest.raises(cli.UsageError):
        run(["analyze", "d2q?q=3", "--collections", "nope"])


def test_main_exit_codes(capsys):
    assert cli.main(["analyze", "d2q?q=3", "--collections", "main"]) == 0
    capsys.readouterr()
    assert cli.main(["analyze", "d2q?q=3", "--collections", "h1h4"]) == 2
    capsys.readouterr()
    assert cli.main(["analyze", "no-such-scenario"]) == 1
    capsys.readouterr()
    assert cli.main(["analyze", "d2q?q=3", "--collections", "nope"]) == 1
    capsys.readouterr()
    assert cli.main(["not-a-command"]) == 1
    capsys.readouterr()
    assert cli.main(["analyze", "d2q?q=4"]) == 1
    capsys.readouterr()


def test_schur_flag_parsing(capsys):
    assert cli.main(["analyze", "d2q?q=3", "--collections", "main", "--schur", "bad"]) == 1
    capsys.readouterr()


def test_module_entry_point_subprocess():
    env = dict(os.environ)
    src = str(Path(__file__).resolve().parent.parent / "src")
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    result = subprocess.run(
        [sys.executable, "-m", "jacdecomp", "analyze", "d2q?q=3", "--collections", "h1h4"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert result.returncode == 2
    assert "DISCREPANCY" in result.stdout


# -- document properties ------------------------------------------------------------


def test_json_round_trips_losslessly():
    doc, _ = run(["analyze", "d2q?q=3"])
    assert json.loads(doc.to_json()) == doc.data


def test_reports_are_deterministic():
    doc1, _ = run(["analyze", "d2q?q=3"])
    doc2, _ = run(["analyze", "d2q?q=3"])
    assert doc1.to_text() == doc2.to_text()
    assert doc1.to_json() == doc2.to_json()


def _digit_tokens(text: str) -> set[str]:
    return set(re.findall(r"\d+", text))


def _collect_tokens(node, out: set[str]) -> None:
    if isinstance(node, bool) or node is None:
        return
    if isinstance(node, int):
        out.add(str(abs(node)))
    elif isinstance(node, str):
        out.update(_digit_tokens(node))
    elif isinstance(node, dict):
        for key, value in node.items():
            out.update(_digit_tokens(key))
            _collect_tokens(value, out)
    elif isinstance(node, (list, tuple)):
        for value in node:
            _collect_tokens(value, out)


@pytest.mark.parametrize("argv", [
    ["analyze", "d2q?q=3"],
    ["analyze", "fiber?genera=1,1"],
    ["search", "d2q?q=3", "--max-t", "2"],
    ["fiber", "--elliptic", "4"],
    ["theorem-b", "d2q?q=3"],
])
def test_every_number_in_text_exists_in_structured_record(argv):
    doc, _ = run(argv)
    structured: set[str] = set()
    _collect_tokens(doc.data, structured)
    assert _digit_tokens(doc.to_text()) <= structured


# -- golden reports --------------------------------------------------------------------


GOLDEN_CASES = {
    "analyze_d2q_q3.txt": ["analyze", "d2q?q=3"],
    "analyze_d2q_q5.txt": ["analyze", "d2q?q=5"],
    "analyze_d2q_q7.txt": ["analyze", "d2q?q=7"],
    "analyze_fiber_1_1.txt": ["analyze", "fiber?genera=1,1"],
    "analyze_fiber_1_1_1.txt": ["analyze", "fiber?genera=1,1,1"],
    "theorem_b_d2q_q3.txt": ["theorem-b", "d2q?q=3"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_reports(name):
    doc, _ = run(GOLDEN_CASES[name])
    rendered = doc.to_text()
    path = GOLDEN_DIR / name
    if os.environ.get("REGEN_GOLDENS") == "1":
        GOLDEN_DIR.mkdir(exist_ok=True)
        path.write_text(rendered, encoding="utf-8")
    assert path.exists(), f"golden file {name} missing; run with REGEN_GOLDENS=1"
    assert rendered == path.read_text(encoding="utf-8")

"""Problem parsing, report assembly, exit codes, CLI wiring."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from hypertoric.cli import main
from hypertoric.errors import (
    ProblemFormatError,
    ResourceBudgetError,
    UnsupportedShiftError,
)
from hypertoric.pipeline import (
    ANALYSES,
    PROBLEM_SCHEMA,
    Budget,
    load_problem,
    parse_problem,
    run,
)

CONIFOLD = {
    "torus_rank": 1,
    "half_weights": [[1], [1]],
    "chi": [1],
    "epsilon": [1],
}


def conifold_problem(**extra):
    data = dict(CONIFOLD)
    data.update(extra)
    return parse_problem(data)


# -- parsing -----------------------------------------------------------------


def test_parse_defaults():
    p = parse_problem(dict(CONIFOLD))
    assert p.truncation == 6
    assert p.depth == 4
    assert p.analyses == ANALYSES
    assert p.xi == (Fraction(0),)
    assert p.epsilon == (1,)


def test_parse_epsilon_omitted_means_auto():
    data = dict(CONIFOLD)
    del data["epsilon"]
    assert parse_problem(data).epsilon is None
    data["epsilon"] = None
    assert parse_problem(data).epsilon is None


def test_parse_xi_rationals():
    p = conifold_problem(xi=["1/2"])
    assert p.xi == (Fraction(1, 2),)
    p = conifold_problem(xi=[3])
    assert p.xi == (Fraction(3),)


def test_parse_rejects_boolean_xi():
    with pytest.raises(ProblemFormatError):
        conifold_problem(xi=[True])


@pytest.mark.parametrize(
    "mutation",
    [
        {"torus_rank": -1},
        {"half_weights": [[1, 0], [1]]},
        {"chi": [1, 2]},
        {"epsilon": [1, 2]},
        {"xi": [1, 2]},
        {"truncation": 1},
        {"depth": 0},
        {"analyses": ["windows"]},
        {"unknown_field": 1},
        {"chi": ["a"]},
    ],
)
def test_parse_rejects_malformed(mutation):
    data = dict(CONIFOLD)
    data.update(mutation)
    with pytest.raises(ProblemFormatError):
        parse_problem(data)


def test_parse_missing_required():
    with pytest.raises(ProblemFormatError) as info:
        parse_problem({"torus_rank": 1, "half_weights": [[1]]})
    assert "chi" in str(info.value)


def test_analyses_reordered_to_pipeline_order():
    p = conifold_problem(analyses=["window", "validation"])
    assert p.analyses == ("validation", "window")


def test_schema_doc_in_sync(problems_dir):
    with open(problems_dir.parent / "docs" / "problem.schema.json") as fh:
        on_disk = json.load(fh)
    assert on_disk == json.loads(json.dumps(PROBLEM_SCHEMA))


# -- report assembly ---------------------------------------------------------


def test_validation_only_report():
    report = run(conifold_problem(analyses=["validation"]))
    assert list(report.sections) == ["validation"]
    assert [c["name"] for c in report.checks] == ["faithful"]
    assert report.exit_code == 0


def test_window_only_report():
    report = run(conifold_problem(analyses=["window"]))
    assert list(report.sections) == ["window"]
    assert report.sections["window"]["points"] == [[0], [1]]


def test_auto_epsilon_recorded_but_not_echoed():
    data = dict(CONIFOLD)
    del data["epsilon"]
    report = run(parse_problem(data))
    eps = report.sections["genericity"]["epsilon"]
    assert eps["source"] == "auto"
    assert eps["value"] == [-1]
    echoed = json.loads(report.to_json())["input"]
    assert echoed["epsilon"] is None


def test_report_roundtrip_through_echoed_input():
    report = run(conifold_problem())
    echoed = json.loads(report.to_json())["input"]
    again = run(parse_problem(echoed))
    assert again.to_json() == report.to_json()


def test_failed_genericity_sets_exit_two(rep_b):
    p = parse_problem(
        {
            "torus_rank": 2,
            "half_weights": [[1, 0], [0, 1], [1, 1]],
            "chi": [1, 1],
            "epsilon": [2, 1],
            "analyses": ["validation", "genericity"],
        }
    )
    report = run(p)
    assert report.exit_code == 2
    chi = report.sections["genericity"]["chi"]
    assert not chi["generic"]
    assert chi["witness"] == [1, -1]


def test_nonzero_level_with_graded_analysis_rejected():
    with pytest.raises(UnsupportedShiftError):
        run(conifold_problem(xi=[1]))


def test_nonzero_level_allowed_off_the_graded_path():
    report = run(conifold_problem(xi=[1], analyses=["validation", "quadrics", "codimension"]))
    assert report.sections["quadrics"]["items"][0]["shift"] == 1
    assert report.sections["codimension"]["estimate"] is None
    assert report.exit_code == 0


def test_truncation_budget_guard():
    with pytest.raises(ResourceBudgetError):
        run(conifold_problem(truncation=12), budget=Budget(max_truncation=8))


def test_reduction_section_on_split_rep():
    p = parse_problem(
        {
            "torus_rank": 2,
            "half_weights": [[1, 0], [1, 0], [0, 1]],
            "chi": [1, 1],
            "epsilon": [1, 2],
            "analyses": ["validation", "reduction"],
        }
    )
    report = run(p)
    sec = report.sections["reduction"]
    assert sec["needed"] is True
    assert sec["steps"][0]["removed_pair"] == 2
    assert sec["reduced"]["torus_rank"] == 1
    assert sec["chi_reduced"] == [1]


def test_text_rendering_smoke():
    text = run(conifold_problem()).to_text()
    assert "== checks ==" in text
    assert "exit code: 0" in text
    assert "x1*y1 + x2*y2" in text


# -- CLI ---------------------------------------------------------------------


def test_cli_run_json(problems_dir, capsys):
    rc = main(["run", str(problems_dir / "conifold.json")])
    out = capsys.readouterr().out
    assert rc == 0
    payload = json.loads(out)
    assert payload["exit_code"] == 0
    assert payload["input"]["name"] == "conifold"


def test_cli_analyses_flag(problems_dir, capsys):
    rc = main(["run", str(problems_dir / "conifold.json"), "--analyses", "validation"])
    payload = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert list(payload["sections"]) == ["validation"]


def test_cli_overrides(problems_dir, capsys):
    rc = main(["run", str(problems_dir / "conifold.json"), "--N", "4", "--format", "text"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "H_4" in out and "H_5" not in out


def test_cli_bad_chi_exits_two(problems_dir, capsys):
    rc = main(["run", str(problems_dir / "hexagon_bad_chi.json")])
    assert rc == 2


def test_cli_budget_exceeded_exits_four(problems_dir, capsys):
    rc = main(["run", str(problems_dir / "conifold.json"), "--N", "20"])
    assert rc == 4
    assert "budget" in capsys.readouterr().err


def test_cli_invalid_input_exits_three(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"torus_rank": 1}')
    assert main(["run", str(bad)]) == 3
    not_json = tmp_path / "not.json"
    not_json.write_text("{")
    assert main(["run", str(not_json)]) == 3


def test_cli_non_faithful_exits_three(tmp_path, capsys):
    f = tmp_path / "nf.json"
    f.write_text(json.dumps({"torus_rank": 2, "half_weights": [[1, 0], [2, 0]], "chi": [0, 0]}))
    assert main(["run", str(f)]) == 3
    assert "input invalid" in capsys.readouterr().err


def test_cli_bad_flags(problems_dir, capsys):
    assert main(["run", str(problems_dir / "conifold.json"), "--analyses", "bogus"]) == 3
    assert main(["run", str(problems_dir / "conifold.json"), "--budget", "nope=1"]) == 3


def test_cli_usage_errors_map_to_three(capsys):
    assert main(["run"]) == 3
    assert main(["--help"]) == 0


def test_cli_subprocess_entry(problems_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "hypertoric", "run", str(problems_dir / "conifold.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["exit_code"] == 0


def test_golden_reports(problems_dir, golden_dir):
    for name in ("conifold", "hexagon"):
        report = run(load_problem(str(problems_dir / f"{name}.json")))
        golden = (golden_dir / f"{name}_report.json").read_text()
        assert report.to_json() == golden


def test_golden_text(problems_dir, golden_dir):
    report = run(load_problem(str(problems_dir / "conifold.json")))
    assert report.to_text() == (golden_dir / "conifold_report.txt").read_text()

"""Tests for the command line runner and report rendering."""

import json

import pytest

from rgdcheck import ConfigError
from rgdcheck.cli import (
    RunConfig,
    build_report,
    main,
    render_json,
    render_markdown,
    report_determinism_view,
    run,
)
from rgdcheck.models import build_model

FAST = ["--level-min", "-1", "--level-max", "1", "--samples", "2"]


def test_main_passes_and_prints_json(capsys):
    code = main(["--group", "sl", "--rank", "1", *FAST, "--suites", "rgd0,rgd3"])
    assert code == 0
    out = capsys.readouterr().out
    report = json.loads(out)
    assert report["summary"]["pass"] is True
    assert report["model"]["kind"] == "sl"
    assert [s["axiom"] for s in report["suites"]] == ["RGD0", "RGD3"]
    assert set(report["config"]) >= {"group", "level_min", "samples", "seed", "suites"}
    assert "generated_at" in report
    for suite in report["suites"]:
        assert set(suite) == {"axiom", "cases", "failures", "pass", "elapsed_ms"}


def test_main_runs_the_unitary_model(capsys):
    code = main(
        ["--group", "su", "--dim", "3", "--witt", "1", *FAST, "--suites", "rgd0"]
    )
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["model"]["dim"] == 3
    assert report["model"]["relative_system"] == "BC1"


def test_configuration_errors_exit_two(capsys):
    assert main(["--group", "sl"]) == 2  # missing rank
    assert main(["--group", "su", "--dim", "2", "--witt", "1"]) == 2
    assert main(["--group", "su", "--dim", "5"]) == 2  # missing witt
    assert main(["--group", "sl", "--rank", "1", "--suites", "rgd9"]) == 2
    assert main(["--group", "sl", "--rank", "1", "--level-min", "1"]) == 2
    err = capsys.readouterr().err
    assert "configuration error" in err


def test_markdown_format(capsys):
    code = main(
        [
            "--group",
            "sl",
            "--rank",
            "1",
            *FAST,
            "--suites",
            "rgd0",
            "--format",
            "md",
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("# rgdcheck report")
    assert "| RGD0 |" in out
    assert "summary: PASS" in out


def test_out_file_written(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(
        [
            "--group",
            "sl",
            "--rank",
            "1",
            *FAST,
            "--suites",
            "rgd0",
            "--out",
            str(target),
        ]
    )
    assert code == 0
    assert capsys.readouterr().out == ""
    report = json.loads(target.read_text())
    assert report["summary"]["pass"] is True


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(group="sp")
    with pytest.raises(ConfigError):
        RunConfig(group="sl")
    with pytest.raises(ConfigError):
        RunConfig(group="su", dim=4, witt=2)
    with pytest.raises(ConfigError):
        RunConfig(group="sl", rank=1, format="yaml")


def test_determinism_view_strips_volatile_fields():
    cfg = RunConfig(
        group="su",
        dim=3,
        witt=1,
        level_min=-1,
        level_max=1,
        samples=2,
        suites=("rgd0", "combinatorics"),
    )
    model = build_model("su", dim=3, witt=1)
    va = report_determinism_view(build_report(model, cfg))
    vb = report_determinism_view(build_report(model, cfg))
    assert va == vb
    assert "generated_at" not in va
    assert all("elapsed_ms" not in s for s in va["suites"])
    # rendered views are byte identical
    assert render_json(va) == render_json(vb)


def test_run_returns_code_and_report():
    cfg = RunConfig(
        group="sl", rank=1, level_min=-1, level_max=1, samples=2, suites=("rgd0",)
    )
    code, report = run(cfg)
    assert code == 0
    assert report["summary"]["pass"] is True


def test_markdown_renders_failures_section():
    report = {
        "model": {"kind": "sl", "rank": 1, "relative_system": "A1"},
        "config": {
            "group": "sl",
            "level_min": -1,
            "level_max": 1,
            "samples": 2,
            "seed": 0,
        },
        "generated_at": "2026-01-01T00:00:00+00:00",
        "suites": [
            {
                "axiom": "RGD1",
                "cases": 5,
                "failures": [
                    {"inputs": "alpha=x", "expected": "identity", "actual": "residue"}
                ],
                "pass": False,
                "elapsed_ms": 1.0,
            }
        ],
        "summary": {"pass": False},
    }
    text = render_markdown(report)
    assert "summary: FAIL" in text
    assert "## RGD1 failures" in text
    assert "inputs: alpha=x" in text


def test_module_runner_invokes_cli(tmp_path):
    import subprocess
    import sys

    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "rgdcheck",
            "--group",
            "sl",
            "--rank",
            "1",
            *FAST,
            "--suites",
            "rgd0",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["summary"]["pass"] is True

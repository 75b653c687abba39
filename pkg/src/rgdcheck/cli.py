"""Command line runner: build a model, run the axiom suites, emit a report.

Exit codes: 0 when every suite passes, 1 when some axiom check fails, 2 for
configuration problems.  Reports are reproducible: a fixed configuration
yields identical output except for the timestamp and the elapsed timings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from .errors import ConfigError, UnsupportedType
from .models import GroupModel, build_model
from .verify import ALL_SUITES, SuiteConfig, run_suites


@dataclass(frozen=True)
class RunConfig:
    group: str
    rank: int | None = None
    dim: int | None = None
    witt: int | None = None
    disc: int = -1
    level_min: int = -2
    level_max: int = 2
    samples: int = 8
    seed: int = 0
    suites: tuple[str, ...] = ALL_SUITES
    format: str = "json"
    out: str | None = None

    def __post_init__(self):
        if self.group not in ("sl", "su"):
            raise ConfigError(f"group must be sl or su, got {self.group!r}")
        if self.group == "sl":
            if self.rank is None or self.rank < 1:
                raise ConfigError("sl needs --rank >= 1")
        else:
            if self.dim is None or self.witt is None:
                raise ConfigError("su needs --dim and --witt")
            if self.witt < 1:
                raise ConfigError("su needs --witt >= 1")
            if self.dim < 2 * self.witt + 1:
                raise ConfigError(
                    f"su needs --dim >= 2*witt+1 = {2 * self.witt + 1}"
                )
        if self.format not in ("json", "md"):
            raise ConfigError(f"format must be json or md, got {self.format!r}")


def _make_model(cfg: RunConfig) -> GroupModel:
    try:
        if cfg.group == "sl":
            return build_model("sl", rank=cfg.rank)
        return build_model("su", dim=cfg.dim, witt=cfg.witt, disc=cfg.disc)
    except UnsupportedType as exc:
        raise ConfigError(str(exc)) from exc


def build_report(model: GroupModel, cfg: RunConfig) -> dict:
    suite_cfg = SuiteConfig(
        level_min=cfg.level_min,
        level_max=cfg.level_max,
        samples=cfg.samples,
        seed=cfg.seed,
        suites=cfg.suites,
    )
    reports = run_suites(model, suite_cfg)
    return {
        "model": model.descriptor(),
        "config": {
            "group": cfg.group,
            "rank": cfg.rank,
            "dim": cfg.dim,
            "witt": cfg.witt,
            "disc": cfg.disc,
            "level_min": cfg.level_min,
            "level_max": cfg.level_max,
            "samples": cfg.samples,
            "seed": cfg.seed,
            "suites": list(cfg.suites),
        },
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "suites": [r.to_dict() for r in reports],
        "summary": {"pass": all(r.passed for r in reports)},
    }


def report_determinism_view(report: dict) -> dict:
    """The report minus timestamp and timings, for byte-identity comparisons."""
    out = {k: v for k, v in report.items() if k != "generated_at"}
    out["suites"] = [
        {k: v for k, v in suite.items() if k != "elapsed_ms"}
        for suite in report["suites"]
    ]
    return out


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2)


def render_markdown(report: dict) -> str:
    model = report["model"]
    cfg = report["config"]
    lines = ["# rgdcheck report", ""]
    desc = " ".join(
        f"{k}={model[k]}" for k in ("kind", "rank", "dim", "witt", "disc") if k in model
    )
    lines.append(f"model: {desc} (relative system {model['relative_system']})")
    lines.append(
        f"config: levels [{cfg['level_min']}, {cfg['level_max']}], "
        f"samples {cfg['samples']}, seed {cfg['seed']}"
    )
    lines.append(f"generated: {report['generated_at']}")
    lines.append("")
    lines.append("| axiom | cases | failures | pass | elapsed_ms |")
    lines.append("|---|---|---|---|---|")
    for suite in report["suites"]:
        lines.append(
            f"| {suite['axiom']} | {suite['cases']} | {len(suite['failures'])} "
            f"| {'yes' if suite['pass'] else 'NO'} | {suite['elapsed_ms']} |"
        )
    lines.append("")
    lines.append(f"summary: {'PASS' if report['summary']['pass'] else 'FAIL'}")
    for suite in report["suites"]:
        if suite["failures"]:
            lines.append("")
            lines.append(f"## {suite['axiom']} failures")
            for f in suite["failures"]:
                lines.append(
                    f"- inputs: {f['inputs']}; expected: {f['expected']}; "
                    f"actual: {f['actual']}"
                )
    lines.append("")
    return "\n".join(lines)


def _parse_args(argv) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog="rgdcheck",
        description=(
            "verify root group data axioms for a matrix group over the "
            "rational Laurent ring"
        ),
    )
    parser.add_argument("--group", required=True, choices=("sl", "su"))
    parser.add_argument("--rank", type=int, help="rank of the split model")
    parser.add_argument("--dim", type=int, help="matrix size of the unitary model")
    parser.add_argument("--witt", type=int, help="Witt index of the hermitian form")
    parser.add_argument(
        "--disc",
        type=int,
        default=-1,
        help="squarefree negative discriminant of the quadratic extension",
    )
    parser.add_argument("--level-min", type=int, default=-2)
    parser.add_argument("--level-max", type=int, default=2)
    parser.add_argument("--samples", type=int, default=8)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--suites",
        default="all",
        help=f"comma separated subset of {','.join(ALL_SUITES)} (or 'all')",
    )
    parser.add_argument("--format", choices=("json", "md"), default="json")
    parser.add_argument("--out", help="write the report to this path")
    ns = parser.parse_args(argv)
    if ns.suites == "all":
        suites = ALL_SUITES
    else:
        suites = tuple(s.strip() for s in ns.suites.split(",") if s.strip())
    return RunConfig(
        group=ns.group,
        rank=ns.rank,
        dim=ns.dim,
        witt=ns.witt,
        disc=ns.disc,
        level_min=ns.level_min,
        level_max=ns.level_max,
        samples=ns.samples,
        seed=ns.seed,
        suites=suites,
        format=ns.format,
        out=ns.out,
    )


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Run the suites for a configuration; returns (exit_code, report)."""
    model = _make_model(cfg)
    report = build_report(model, cfg)
    code = 0 if report["summary"]["pass"] else 1
    return code, report


def main(argv=None) -> int:
    try:
        cfg = _parse_args(argv if argv is not None else sys.argv[1:])
        code, report = run(cfg)
    except ConfigError as exc:
        print(f"rgdcheck: configuration error: {exc}", file=sys.stderr)
        return 2
    text = render_json(report) if cfg.format == "json" else render_markdown(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Verify every axiom suite on the split SL3 model and print a summary table.

Run with:  python3 demos/02_split_rgd_run.py
"""

from rgdcheck import SuiteConfig, run_suites, split_sl


def main():
    model = split_sl(2)
    desc = model.descriptor()
    print(f"model: split special linear, rank {desc['rank']}, "
          f"matrices {desc['matrix_size']}x{desc['matrix_size']}, "
          f"relative system {desc['relative_system']}")
    cfg = SuiteConfig(level_min=-2, level_max=2, samples=6, seed=0)
    print(f"levels [{cfg.level_min}, {cfg.level_max}], {cfg.samples} samples, seed {cfg.seed}")
    print()
    reports = run_suites(model, cfg)
    print(f"{'axiom':<14}{'cases':>8}{'failures':>10}{'ms':>10}")
    for r in reports:
        print(f"{r.axiom:<14}{r.cases:>8}{len(r.failures):>10}{r.elapsed_ms:>10.1f}")
    print()
    print("every suite passed" if all(r.passed for r in reports) else "FAILURES FOUND")


if __name__ == "__main__":
    main()

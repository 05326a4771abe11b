"""Run every claim suite on its default corpus and print a summary table.

    python scripts/run_suites.py [--jobs N] [--budget N] [--only NAME ...]

Exits nonzero if any suite reports a violation.
"""

import argparse
import sys
from dataclasses import dataclass, field

from condogame.verify import SUITES, run_suite


@dataclass
class RunConfig:
    jobs: int | None = None
    node_budget: int | None = None
    suites: list[str] = field(default_factory=lambda: sorted(SUITES))


def run(cfg: RunConfig) -> bool:
    ok = True
    print(f"{'suite':<18} {'graphs':>6} {'checks':>7} {'bad':>4} {'skip':>4} {'secs':>7}")
    for name in cfg.suites:
        r = run_suite(name, jobs=cfg.jobs, node_budget=cfg.node_budget)
        ok &= r.passed
        print(f"{name:<18} {r.instances_checked:>6} {r.checks:>7} {len(r.violations):>4} {len(r.skipped):>4} {r.elapsed:>7.2f}")
        for w in r.violations[:3]:
            print("    witness:", w)
    return ok


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--jobs", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--only", nargs="+", choices=sorted(SUITES))
    a = p.parse_args()
    cfg = RunConfig(a.jobs, a.budget, a.only or sorted(SUITES))
    return 0 if run(cfg) else 1


if __name__ == "__main__":
    sys.exit(main())

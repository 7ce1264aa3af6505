"""Run the verification suites and summarize the reports.

Two scales are wired in: `quick` keeps every suite under a second or two
(useful while hacking), `full` runs the ranges the acceptance tests use.
Exit status is 0 only if every selected suite passes.

    python scripts/run_verification.py
    python scripts/run_verification.py --scale full --jobs 8 --out report.json
    python scripts/run_verification.py --suite clifford --suite zero-modes
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

from symvertex.verifier import SUITES

QUICK = {
    "reordering": dict(pis=[(2,), (1, 1)], window=(0, 3), test_degree=4),
    "zero-modes": dict(charge_range=(-3, 3)),
    "clifford": dict(pis=((), (2,)), mode_range=(-2, 2), degree_bound=3),
    "multivertex": dict(pis=((2,),), ms=(2,), window=(-2, 2)),
    "theorem2": dict(max_weight=4, max_length=2),
    "inverse-series": dict(max_sigma_weight=2, max_zweight=8),
}

FULL = {
    "reordering": dict(window=(0, 4), test_degree=5),
    "zero-modes": dict(charge_range=(-3, 3)),
    "clifford": dict(),
    "multivertex": dict(window=(-3, 3)),
    "theorem2": dict(max_weight=6, max_length=3, include_oracle=True),
    "inverse-series": dict(max_sigma_weight=3, max_zweight=12),
}


@dataclass
class RunConfig:
    suites: list = field(default_factory=lambda: sorted(SUITES))
    scale: str = "quick"
    jobs: int = 1
    perturb: bool = False
    out: str = ""


def parse_args(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", action="append", choices=sorted(SUITES),
                    help="repeatable; default is every suite")
    ap.add_argument("--scale", choices=("quick", "full"), default="quick")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--perturb", action="store_true",
                    help="run the deliberate mutations (suites must FAIL)")
    ap.add_argument("--out", default="", help="write the reports as JSON")
    a = ap.parse_args(argv)
    return RunConfig(suites=a.suite or sorted(SUITES), scale=a.scale,
                     jobs=a.jobs, perturb=a.perturb, out=a.out)


def main(argv=None):
    cfg = parse_args(argv)
    params = QUICK if cfg.scale == "quick" else FULL
    reports = []
    for suite in cfg.suites:
        rep = SUITES[suite](jobs=cfg.jobs, perturb=cfg.perturb,
                            **params[suite])
        reports.append(rep)
        for line in rep.summary_lines():
            print(line)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            json.dump([r.to_obj() for r in reports], fh, indent=2)
        print("wrote %s" % cfg.out)
    if cfg.perturb:
        # a mutated run is vacuous unless every suite caught it
        caught = all(not r.passed() for r in reports)
        print("mutations caught by every suite" if caught
              else "VACUOUS: some suite passed despite the mutation")
        return 0 if caught else 1
    return 0 if all(r.passed() for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())

"""Tabulate the deformed Schur functions over a range of shapes and labels.

For every shape pi up to --max-pi-weight and every label lambda up to
--max-lambda-weight, print the expansion of the deformed Schur function
(or the dual family with --dual) in the Schur basis, computed by every
route named with --route and cross-checked for agreement.

    python scripts/pi_schur_table.py --max-pi-weight 2 --max-lambda-weight 3
    python scripts/pi_schur_table.py --dual --route perp --route cauchy
    python scripts/pi_schur_table.py --out table.json --format json
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

from symvertex.jsonform import symfunc_to_obj
from symvertex.oracle import oracle_dual_pi_schur, oracle_pi_schur
from symvertex.partitions import format_partition, partitions_up_to
from symvertex.plethysm import (cauchy_dual_pi_schur, cauchy_pi_schur,
                                dual_pi_schur, pi_schur)
from symvertex.schurring import format_symfunc
from symvertex.vertexops import vertex_string

ROUTES = {
    "perp": (pi_schur, dual_pi_schur),
    "cauchy": (cauchy_pi_schur, cauchy_dual_pi_schur),
    "vertex": (lambda pi, lam: vertex_string(pi, lam),
               lambda pi, lam: vertex_string(pi, lam, dual=True)),
    "oracle": (oracle_pi_schur, oracle_dual_pi_schur),
}


@dataclass
class TableConfig:
    max_pi_weight: int = 2
    max_lambda_weight: int = 4
    max_lambda_length: int = 3
    dual: bool = False
    routes: list = field(default_factory=lambda: ["perp"])
    format: str = "text"
    out: str = ""


def parse_args(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-pi-weight", type=int, default=2)
    ap.add_argument("--max-lambda-weight", type=int, default=4)
    ap.add_argument("--max-lambda-length", type=int, default=3)
    ap.add_argument("--dual", action="store_true")
    ap.add_argument("--route", action="append", choices=sorted(ROUTES))
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--out", default="", help="also write the table here")
    a = ap.parse_args(argv)
    return TableConfig(max_pi_weight=a.max_pi_weight,
                       max_lambda_weight=a.max_lambda_weight,
                       max_lambda_length=a.max_lambda_length,
                       dual=a.dual, routes=a.route or ["perp"],
                       format=a.format, out=a.out)


def build_table(cfg):
    """List of row dicts; raises RuntimeError on any route disagreement."""
    pis = [p for p in partitions_up_to(cfg.max_pi_weight) if p]
    lams = partitions_up_to(cfg.max_lambda_weight,
                            max_length=cfg.max_lambda_length)
    rows = []
    for pi in pis:
        for lam in lams:
            values = [ROUTES[name][1 if cfg.dual else 0](pi, lam)
                      for name in cfg.routes]
            if any(v != values[0] for v in values[1:]):
                raise RuntimeError("routes disagree at pi=%s lambda=%s"
                                   % (format_partition(pi),
                                      format_partition(lam)))
            rows.append({"pi": format_partition(pi),
                         "lambda": format_partition(lam),
                         "value": values[0]})
    return rows


def main(argv=None):
    cfg = parse_args(argv)
    try:
        rows = build_table(cfg)
    except RuntimeError as e:
        print("ERROR: %s" % e, file=sys.stderr)
        return 1
    family = "dual " if cfg.dual else ""
    if cfg.format == "json":
        obj = {"family": "dual" if cfg.dual else "primary",
               "routes": cfg.routes,
               "rows": [{"pi": r["pi"], "lambda": r["lambda"],
                         "value": symfunc_to_obj(r["value"])}
                        for r in rows]}
        text = json.dumps(obj, indent=2)
    else:
        width = max(len(r["pi"]) + len(r["lambda"]) for r in rows) + 4
        lines = ["%s Schur table via %s (%d rows)"
                 % (family + "deformed", "+".join(cfg.routes), len(rows))]
        for r in rows:
            head = "%s %s" % (r["pi"], r["lambda"])
            lines.append("%-*s %s" % (width, head,
                                      format_symfunc(r["value"])))
        text = "\n".join(lines)
    print(text)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print("wrote %s" % cfg.out, file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())

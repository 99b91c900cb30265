"""Batch verification front-end.

Subcommands:

* expand      expand a named series to a given order (TSV or JSON)
* verify      run one catalog check, print a JSON report
* sweep       run a check over a parameter grid, optionally in parallel
* list-checks list catalog ids with parameter names

Exit codes: 0 all pass, 2 any failed proved check, 3 any conjectural
finding (fail wins over finding), 1 usage error.

Sweep reports are deterministic: they are sorted by parameter values and
carry elapsed_ms = 0 unless --timings is given, so re-runs (any job
count) are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import cmpp, funceq, hall_littlewood, multisums, products
from .funceq import ParamError
from .series import QSeries, poch, qbin


@dataclass
class VerificationReport:
    check_id: str
    params: dict
    order: int
    status: str  # pass | fail | finding
    first_mismatch: Optional[dict]
    elapsed_ms: int
    conjecture_status: str

    def to_json(self) -> str:
        obj = {
            "check": self.check_id,
            "params": {k: _param_to_json(v) for k, v in
                       sorted(self.params.items())},
            "order": self.order,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "elapsed_ms": self.elapsed_ms,
            "conjecture_status": self.conjecture_status,
        }
        return json.dumps(obj, sort_keys=True)


def _param_to_json(v):
    if isinstance(v, tuple):
        return list(v)
    return v


def run_check(check_id: str, params: dict, order: int,
              timings: bool = True) -> VerificationReport:
    t0 = time.monotonic()
    spec = funceq.catalog(check_id, params)
    _, mm = funceq.residual(spec, order)
    elapsed = int((time.monotonic() - t0) * 1000) if timings else 0
    if mm is None:
        status = "pass"
        cert = None
    else:
        status = "fail" if spec.status == "proved" else "finding"
        cert = {"dz": mm.dz, "dw": mm.dw, "dq": mm.dq,
                "lhs": str(mm.lhs), "rhs": str(mm.rhs)}
    return VerificationReport(check_id, params, order, status, cert,
                              elapsed, spec.status)


# -- parameter and series parsing ---------------------------------------------


def _parse_value(text: str):
    text = text.strip()
    if ":" in text:
        return tuple(int(v) for v in text.split(":"))
    try:
        return int(text)
    except ValueError:
        return text


def parse_params(text: str) -> dict:
    """k=1,a=2,weights=0:0:1,family=C -> dict."""
    out: dict = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise SystemExit("malformed param %r (expected name=value)"
                             % item)
        name, val = item.split("=", 1)
        out[name.strip()] = _parse_value(val)
    return out


SERIES_BUILDERS = {
    "gen_fun": lambda a, kw, N: cmpp.gen_fun(
        str(a[0]), int(a[1]), tuple(kw.get("boundary", a[2] if len(a) > 2
                                              else ())), N),
    "char_product": lambda a, kw, N: products.char_product(
        str(a[0]), str(a[1]), int(a[2]),
        tuple(kw.get("weight", a[3] if len(a) > 3 else ())), N),
    "theta": lambda a, kw, N: products.theta_q(int(a[0]), int(a[1]), N),
    "poch": lambda a, kw, N: poch(int(a[0]), int(a[1]), None, N),
    "qbin": lambda a, kw, N: qbin(int(a[0]), int(a[1]),
                                  int(a[2]) if len(a) > 2 else 1).truncate(N),
    "f_sum": lambda a, kw, N: multisums.f_sum(int(a[0]), int(a[1]),
                                              int(a[2]), N),
    "ag_sum": lambda a, kw, N: multisums.ag_sum(int(a[0]), int(a[1]), N),
    "shun": lambda a, kw, N: multisums.shun_sum(int(a[0]), N),
    "shun2": lambda a, kw, N: multisums.shun2_sum(int(a[0]), str(a[1]), N),
    "wz": lambda a, kw, N: multisums.wz_sum(str(a[0]), N,
                                            k=int(a[1]) if len(a) > 1 else 2),
    "s_series": lambda a, kw, N: multisums.s_series(
        int(a[0]), int(a[1]), int(a[2]), int(a[3]), N),
    "hl_chain": lambda a, kw, N: hall_littlewood.hl_chain_sum(
        int(a[0]), int(a[1]), N),
    "hl_inf": lambda a, kw, N: hall_littlewood.hl_inf_spec(
        tuple(kw["shape"] if "shape" in kw else a[0]),
        int(kw["m"] if "m" in kw else a[-1]), N),
    "gow": lambda a, kw, N: hall_littlewood.prop_gow_sum(
        int(a[0]), int(a[1]), int(a[2]), N),
    "gordon_product": lambda a, kw, N: products.expand(
        products.gordon_product(int(a[0]), int(a[1])), N),
}


def parse_series(text: str, order: int) -> QSeries:
    text = text.strip()
    if "(" not in text or not text.endswith(")"):
        raise SystemExit("malformed series %r (expected name(args))" % text)
    name, argstr = text.split("(", 1)
    name = name.strip()
    argstr = argstr[:-1]
    if name not in SERIES_BUILDERS:
        raise SystemExit("unknown series %r; known: %s"
                         % (name, ", ".join(sorted(SERIES_BUILDERS))))
    args: list = []
    kwargs: dict = {}
    if argstr.strip():
        for item in argstr.split(","):
            if "=" in item:
                k, v = item.split("=", 1)
                kwargs[k.strip()] = _parse_value(v)
            else:
                args.append(_parse_value(item))
    # normalise single ints given where tuples are needed
    for key in ("boundary", "weight", "shape"):
        if key in kwargs and isinstance(kwargs[key], int):
            kwargs[key] = (kwargs[key],)
    try:
        return SERIES_BUILDERS[name](args, kwargs, order)
    except (TypeError, IndexError) as exc:
        raise SystemExit("bad arguments for %s: %s" % (name, exc))


def _series_json(s: QSeries) -> str:
    rows = [{"dz": k[0], "dw": k[1], "dq": k[2], "coeff": str(s.terms[k])}
            for k in sorted(s.terms)]
    order = s.q_order
    if order is None:
        order = max((k[2] for k in s.terms), default=0)
    return json.dumps({"order": order, "floor": s.q_floor, "terms": rows},
                      sort_keys=True)


# -- sweep grids ---------------------------------------------------------------


def parse_grid(text: str) -> list[dict]:
    """k=0:3,a=0:k,family=C -> list of param dicts (inclusive ranges; an
    upper bound may name a previously bound parameter)."""
    axes: list[tuple[str, object]] = []
    for item in text.split(","):
        if "=" not in item:
            raise SystemExit("malformed grid entry %r" % item)
        name, val = item.split("=", 1)
        name, val = name.strip(), val.strip()
        if ":" in val:
            lo, hi = val.split(":", 1)
            axes.append((name, (lo.strip(), hi.strip())))
        else:
            axes.append((name, _parse_value(val)))
    points: list[dict] = []

    def rec(i: int, acc: dict):
        if i == len(axes):
            points.append(dict(acc))
            return
        name, val = axes[i]
        if isinstance(val, tuple) and len(val) == 2 and \
                isinstance(val[0], str):
            lo = int(val[0]) if val[0].lstrip("-").isdigit() else acc[val[0]]
            hi = int(val[1]) if val[1].lstrip("-").isdigit() else acc[val[1]]
            for v in range(lo, hi + 1):
                acc[name] = v
                rec(i + 1, acc)
            acc.pop(name, None)
        else:
            acc[name] = val
            rec(i + 1, acc)
            acc.pop(name, None)

    rec(0, {})
    return points


def _sweep_worker(job):
    check_id, params, order = job
    try:
        rep = run_check(check_id, params, order, timings=False)
    except ParamError:
        return None
    return rep


def run_sweep(check_id: str, grid: list[dict], order: int,
              jobs: int = 1, timings: bool = False
              ) -> list[VerificationReport]:
    tasks = [(check_id, p, order) for p in grid]
    if jobs > 1:
        import multiprocessing as mp
        with mp.Pool(jobs) as pool:
            results = pool.map(_sweep_worker, tasks)
    else:
        results = [_sweep_worker(t) for t in tasks]
    reports = [r for r in results if r is not None]
    reports.sort(key=lambda r: sorted(r.params.items()))
    return reports


# -- entry point ---------------------------------------------------------------


def _exit_code(reports) -> int:
    statuses = {r.status for r in reports}
    if "fail" in statuses:
        return 2
    if "finding" in statuses:
        return 3
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="cmpplab",
        description="exact series verification for coloured-partition "
                    "identities")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p_exp = sub.add_parser("expand", help="expand a named series")
    p_exp.add_argument("--series", required=True)
    p_exp.add_argument("--order", type=int, required=True)
    p_exp.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p_ver = sub.add_parser("verify", help="run one catalog check")
    p_ver.add_argument("--check", required=True)
    p_ver.add_argument("--params", default="")
    p_ver.add_argument("--order", type=int, required=True)

    p_sw = sub.add_parser("sweep", help="run a check over a grid")
    p_sw.add_argument("--check", required=True)
    p_sw.add_argument("--grid", required=True)
    p_sw.add_argument("--order", type=int, required=True)
    p_sw.add_argument("--jobs", type=int,
                      default=int(os.environ.get("CMPPLAB_JOBS", "1")))
    p_sw.add_argument("--timings", action="store_true",
                      help="include wall-clock times (breaks byte-for-byte "
                           "reproducibility)")

    sub.add_parser("list-checks", help="list catalog entries")

    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0

    if args.cmd == "expand":
        s = parse_series(args.series, args.order)
        if args.format == "tsv":
            sys.stdout.write(s.dump_tsv())
        else:
            print(_series_json(s))
        return 0

    if args.cmd == "verify":
        params = parse_params(args.params)
        try:
            rep = run_check(args.check, params, args.order)
        except (ParamError, KeyError) as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 1
        print(rep.to_json())
        return _exit_code([rep])

    if args.cmd == "sweep":
        grid = parse_grid(args.grid)
        try:
            reports = run_sweep(args.check, grid, args.order,
                                jobs=max(args.jobs, 1),
                                timings=args.timings)
        except KeyError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 1
        for rep in reports:
            print(rep.to_json())
        return _exit_code(reports)

    if args.cmd == "list-checks":
        for chk in funceq.list_checks():
            extra = sorted(set(chk.defaults) - set(chk.param_names))
            names = ", ".join(chk.param_names +
                              tuple("[%s]" % e for e in extra))
            print("%-22s (%s)  %s" % (chk.check_id, names, chk.doc))
        return 0

    return 1


if __name__ == "__main__":
    raise SystemExit(main())

"""Command line front-end: ``verify``, ``table`` and ``integrate``.

Exit codes: 0 when every relation passes, 1 when a relation fails or a numeric
computation does not converge, 2 for usage and configuration errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .report import SuiteReport

log = logging.getLogger("qclifford")

MAX_DEGREE_LIMIT = 10
MAX_M = 8


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# configuration

def _int_list(text: str) -> List[int]:
    """``"2,3"`` or ``"0..4"`` or a mix such as ``"1,3..5"``."""
    out: List[int] = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _float_list(text: str) -> List[float]:
    return [float(p) for p in str(text).split(",") if p.strip()]


def _str_list(text: str) -> List[str]:
    return [p.strip() for p in str(text).split(",") if p.strip()]


@dataclass
class RunConfig:
    m: List[int] = field(default_factory=lambda: [2, 3])
    max_degree: int = 6
    max_k: int = 2
    q0: List[float] = field(default_factory=lambda: [0.3, 0.7])
    suites: List[str] = field(default_factory=list)
    output_dir: Optional[str] = None
    format: str = "json"
    cache_dir: Optional[str] = None
    jobs: int = 1
    timings: bool = False

    _parsers = {
        "m": _int_list,
        "max_degree": int,
        "max_k": int,
        "q0": _float_list,
        "suites": _str_list,
        "output_dir": str,
        "format": str,
        "cache_dir": str,
        "jobs": int,
        "timings": lambda s: str(s).strip().lower() in ("1", "true", "yes", "on"),
    }

    @classmethod
    def parse_value(cls, key: str, value: str):
        key = key.strip().replace("-", "_")
        if key not in cls._parsers:
            raise ConfigError(f"unknown configuration key {key!r}")
        try:
            return key, cls._parsers[key](value)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key}: {value!r} ({exc})") from None

    @classmethod
    def from_file(cls, path: str) -> Dict[str, object]:
        """Flat ``key = value`` lines; ``#`` starts a comment."""
        values: Dict[str, object] = {}
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from None
        for n, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{n}: expected key = value")
            k, v = line.split("=", 1)
            key, val = cls.parse_value(k, v.strip())
            values[key] = val
        return values

    def validate(self) -> "RunConfig":
        if not self.m or any(m < 1 or m > MAX_M for m in self.m):
            raise ConfigError(f"m must be between 1 and {MAX_M}")
        if not 0 <= self.max_degree <= MAX_DEGREE_LIMIT:
            raise ConfigError(f"max_degree must be between 0 and {MAX_DEGREE_LIMIT}")
        if self.max_k < 0:
            raise ConfigError("max_k must be >= 0")
        if any(not 0.0 < x < 1.0 for x in self.q0):
            raise ConfigError("every q0 must lie in (0, 1)")
        if self.format not in ("json", "csv"):
            raise ConfigError("format must be json or csv")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ConfigError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
        return self


# ---------------------------------------------------------------------------
# suites

def _per_m(fn: Callable[[RunConfig, int], List[SuiteReport]]):
    def tasks(cfg: RunConfig) -> List[Tuple[str, Tuple]]:
        return [(fn.__name__, (m,)) for m in cfg.m]
    return tasks


def _once(fn):
    def tasks(cfg: RunConfig) -> List[Tuple[str, Tuple]]:
        return [(fn.__name__, ())]
    return tasks


def s_axioms(cfg, m):
    from .qoperators import axiom_suite
    return [axiom_suite(m, cfg.max_degree)]


def s_structure(cfg, m):
    from .qoperators import structure_suite
    return [structure_suite(m, cfg.max_degree, min(cfg.max_k, cfg.max_degree))]


def s_scalar_laplace(cfg, m):
    from .qoperators import scalar_laplace_check
    return [scalar_laplace_check(m, cfg.max_degree)]


def s_sl2q(cfg, m):
    from .qoperators import algebra_suite
    return [algebra_suite("sl2q", m, cfg.max_degree)]


def s_osp12q(cfg, m):
    from .qoperators import algebra_suite
    return [algebra_suite("osp12q", m, cfg.max_degree)]


def s_suq11_ops(cfg, m):
    from .qoperators import algebra_suite
    return [algebra_suite("suq11", m, cfg.max_degree)]


def s_cauchy(cfg, m):
    from .qintegrate import cauchy_suite
    return [cauchy_suite(m, min(3, cfg.max_degree))]


def s_changevar(cfg):
    from .qintegrate import changevar_suite
    return [changevar_suite(cfg.q0)]


def s_hermite(cfg):
    from .qpolynomials import q_hermite_suite
    return [q_hermite_suite(min(cfg.max_degree + 2, 12))]


def s_clifford_hermite(cfg, m):
    from .qpolynomials import qch_orthogonality, qch_suite
    return [qch_suite(m, cfg.max_degree, cfg.max_k), qch_orthogonality(m, cfg.max_degree, cfg.max_k)]


def s_laguerre(cfg):
    from .qpolynomials import q_laguerre_suite
    t = min(cfg.max_degree, 5)
    return [q_laguerre_suite(t, a) for a in (-1, 0, 1, 2, 3)]


def s_bridge(cfg, m):
    from .qpolynomials import ch_laguerre_bridge
    return [ch_laguerre_bridge(m, min(cfg.max_degree, 5), cfg.max_k)]


def s_suq11_realization(cfg, m):
    from .qpolynomials import suq11_realization
    return [suq11_realization(m, k, min(cfg.max_degree, 5)) for k in range(cfg.max_k + 1)]


def s_schrodinger(cfg, m):
    from .qpolynomials import schrodinger_suite
    return [schrodinger_suite(m, k, min(cfg.max_degree, 5)) for k in range(cfg.max_k + 1)]


def s_classical(cfg):
    from .qpolynomials import classical_limit_suite
    return [classical_limit_suite(min(cfg.max_degree, 5), tuple(cfg.m))]


_SUITE_FUNCS = {
    "axioms": (s_axioms, True),
    "decompLapl": (s_structure, True),
    "scalqLapl": (s_scalar_laplace, True),
    "sl2q": (s_sl2q, True),
    "osp12q": (s_osp12q, True),
    "suq11-operators": (s_suq11_ops, True),
    "cauchy": (s_cauchy, True),
    "changevar": (s_changevar, False),
    "hermite": (s_hermite, False),
    "clifford-hermite": (s_clifford_hermite, True),
    "laguerre": (s_laguerre, False),
    "bridge": (s_bridge, True),
    "suq11-realization": (s_suq11_realization, True),
    "schrodinger": (s_schrodinger, True),
    "classical": (s_classical, False),
}
SUITES = tuple(_SUITE_FUNCS)
_BY_FUNC = {fn.__name__: fn for fn, _ in _SUITE_FUNCS.values()}

# suites whose Fischer blocks need at least two variables
_NEEDS_M2 = {"cauchy", "clifford-hermite", "bridge", "suq11-realization", "schrodinger"}


def _tasks(cfg: RunConfig) -> List[Tuple[str, str, Tuple]]:
    out = []
    for name in cfg.suites or SUITES:
        fn, per_m = _SUITE_FUNCS[name]
        if per_m:
            for m in cfg.m:
                if m < 2 and name in _NEEDS_M2:
                    continue
                out.append((name, fn.__name__, (m,)))
        else:
            out.append((name, fn.__name__, ()))
    return out


def _run_task(args) -> List[dict]:
    cfg_dict, func_name, extra = args
    cfg = RunConfig(**cfg_dict)
    if cfg.cache_dir:
        os.environ["QCLIFFORD_CACHE_DIR"] = cfg.cache_dir
    reports = _BY_FUNC[func_name](cfg, *extra)
    return [r.to_json(timings=True) for r in reports]


def _strip_timings(rep: dict) -> dict:
    out = dict(rep)
    out["relations"] = [{k: v for k, v in r.items() if k != "wall_time"} for r in rep["relations"]]
    return out


def run_verify(cfg: RunConfig) -> Tuple[int, List[Tuple[str, List[dict]]]]:
    tasks = _tasks(cfg)
    cfg_dict = {f.name: getattr(cfg, f.name) for f in fields(cfg)}
    payloads = [(cfg_dict, fn, extra) for _, fn, extra in tasks]
    if cfg.jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_task, payloads))
    else:
        results = [_run_task(p) for p in payloads]
    merged = [(tasks[i][0] + (f"-m{tasks[i][2][0]}" if tasks[i][2] else ""), results[i]) for i in range(len(tasks))]
    ok = all(r["status"] != "fail" for _, reps in merged for rep in reps for r in rep["relations"])
    return (0 if ok else 1), merged


def _csv_rows(label: str, reports: List[dict], timings: bool) -> List[List[str]]:
    rows = []
    for rep in reports:
        params = json.dumps(rep["params"], sort_keys=True)
        for r in rep["relations"]:
            row = [label, rep["suite"], params, r["name"], r["anchor"], r["status"],
                   json.dumps(r.get("counterexample"), sort_keys=True) if r.get("counterexample") else ""]
            if timings:
                row.append(f"{r.get('wall_time', 0.0):.6f}")
            rows.append(row)
    return rows


def write_reports(cfg: RunConfig, merged: List[Tuple[str, List[dict]]]) -> None:
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    if cfg.format == "json":
        for label, reps in merged:
            body = [rep if cfg.timings else _strip_timings(rep) for rep in reps]
            (out / f"{label}.json").write_text(json.dumps(body, indent=2, sort_keys=True) + "\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["task", "suite", "params", "relation", "anchor", "status", "counterexample"]
        if cfg.timings:
            header.append("wall_time")
        w.writerow(header)
        for label, reps in merged:
            w.writerows(_csv_rows(label, reps, cfg.timings))
        (out / "report.csv").write_text(buf.getvalue())
    summary = {
        "tasks": [
            {"task": label, "relations": sum(len(r["relations"]) for r in reps),
             "failures": sum(1 for r in reps for x in r["relations"] if x["status"] == "fail")}
            for label, reps in merged
        ]
    }
    (out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# tables

def _fmt_float(x: float) -> str:
    return repr(float(x))


def table_rows(family: str, args) -> List[dict]:
    from .qfield import eval_at
    from .qpolynomials import q_clifford_hermite, q_hermite, q_laguerre

    rows = []
    q0s = args.q0 or []

    def emit(index: Dict[str, object], power: int, c):
        row = {"index": index, "power": power, "coeff": str(c)}
        row["values"] = {str(q0): _fmt_float(eval_at(c, q0)) for q0 in q0s}
        rows.append(row)

    if family == "qhermite":
        ks = _int_list(args.k or "0..4")
        if any(k < 0 or k > 30 for k in ks):
            raise ConfigError("k must lie in 0..30")
        for k in ks:
            for n, c in enumerate(q_hermite(k).coeffs):
                if c:
                    emit({"k": k}, n, c)
    elif family == "qch":
        ms = _int_list(args.m or "2")
        ks = _int_list(args.k or "0")
        js = _int_list(args.j or "0..4")
        if any(m < 1 for m in ms) or any(k < 0 for k in ks) or any(j < 0 or j > 30 for j in js):
            raise ConfigError("need m >= 1, k >= 0 and j in 0..30")
        for m in ms:
            for k in ks:
                for j in js:
                    for p, c in sorted(q_clifford_hermite(j, m, k).x_powers().items(), reverse=True):
                        emit({"j": j, "m": m, "k": k}, p, c)
    elif family == "qlaguerre":
        alphas = [Fraction(a) for a in _str_list(args.alpha or "0")]
        ts = _int_list(args.t or "0..3")
        for a in alphas:
            if (2 * a).denominator != 1 or a <= -1:
                raise ConfigError("alpha must be a half-integer > -1")
        if any(t < 0 or t > 30 for t in ts):
            raise ConfigError("t must lie in 0..30")
        for a in alphas:
            for t in ts:
                for n, c in enumerate(q_laguerre(t, int(2 * a)).poly.coeffs):
                    if c:
                        emit({"t": t, "alpha": str(a)}, n, c)
    else:
        raise ConfigError(f"unknown family {family!r}")
    return rows


def render_table(rows: List[dict], fmt: str, q0s: Sequence[float]) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "power", "coeff"] + [f"q={q0}" for q0 in q0s])
    for r in rows:
        idx = ";".join(f"{k}={v}" for k, v in r["index"].items())
        w.writerow([idx, r["power"], r["coeff"]] + [r["values"][str(q0)] for q0 in q0s])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# numeric integration

def _integrand_gaussian_radial(params, q0, tol):
    from .qintegrate import gaussian_radial, gaussian_radial_numeric

    nu = int(params.get("nu", 1))
    if nu < 1:
        raise ConfigError("nu must be >= 1")
    value = gaussian_radial_numeric(nu, q0)
    sym = gaussian_radial(nu)
    return value, str(sym), sym.evaluate(q0)


def _integrand_jackson_moment(params, q0, tol):
    from .qintegrate import jackson_numeric, jackson_poly
    from .univariate import QPoly1D

    k = int(params.get("k", 0))
    a = Fraction(params.get("a", "0"))
    b = Fraction(params.get("b", "1"))
    if k < 0:
        raise ConfigError("k must be >= 0")
    value = jackson_numeric(lambda t: t ** k, float(a), float(b), q0, tol)
    exact = jackson_poly(QPoly1D.monomial(k), a, b)
    return value, str(exact), float(exact.subs(Fraction(q0)))


def _integrand_gamma_product(params, q0, tol):
    from .qfield import qfactorial, qgamma_numeric

    t = float(Fraction(params.get("t", "1")))
    value = qgamma_numeric(t, q0)
    if t.is_integer() and t >= 1:
        exact = qfactorial(int(t) - 1)
        return value, str(exact), float(exact.subs(Fraction(q0)))
    return value, None, None


INTEGRANDS = {
    "gaussian_radial": _integrand_gaussian_radial,
    "jackson-moment": _integrand_jackson_moment,
    "gamma-product": _integrand_gamma_product,
}


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qclifford", description="Exact verification of q-deformed Clifford analysis.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--config", help="flat key = value configuration file")
    v.add_argument("--suites", help=f"comma separated; available: {', '.join(SUITES)}")
    v.add_argument("--m", help="dimensions, e.g. 2,3 or 1..4")
    v.add_argument("--max-degree", type=int)
    v.add_argument("--max-k", type=int)
    v.add_argument("--q0", help="comma separated values in (0,1)")
    v.add_argument("--output-dir")
    v.add_argument("--format", choices=("json", "csv"))
    v.add_argument("--cache-dir")
    v.add_argument("--jobs", type=int)
    v.add_argument("--timings", action="store_true", default=None, help="include wall times in report files")

    t = sub.add_parser("table", help="coefficient tables")
    t.add_argument("family", choices=("qhermite", "qlaguerre", "qch"))
    t.add_argument("--k")
    t.add_argument("--j")
    t.add_argument("--m")
    t.add_argument("--t")
    t.add_argument("--alpha")
    t.add_argument("--q0", type=_float_list)
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.add_argument("--output-dir")

    i = sub.add_parser("integrate", help="numeric Jackson integration of a named integrand")
    i.add_argument("name", choices=sorted(INTEGRANDS))
    i.add_argument("--nu")
    i.add_argument("--k")
    i.add_argument("--t")
    i.add_argument("--a")
    i.add_argument("--b")
    i.add_argument("--q0", type=float, default=0.5)
    i.add_argument("--tol", type=float, default=1e-14)
    return p


def _config_from_args(args) -> RunConfig:
    values: Dict[str, object] = {}
    if args.config:
        values.update(RunConfig.from_file(args.config))
    for key in ("suites", "m", "q0"):
        raw = getattr(args, key)
        if raw is not None:
            values[key] = RunConfig.parse_value(key, raw)[1]
    for key in ("max_degree", "max_k", "output_dir", "format", "cache_dir", "jobs", "timings"):
        raw = getattr(args, key)
        if raw is not None:
            values[key] = raw
    return RunConfig(**values).validate()


def cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    code, merged = run_verify(cfg)
    for label, reps in merged:
        for rep in reps:
            n = len(rep["relations"])
            bad = [r for r in rep["relations"] if r["status"] == "fail"]
            print(f"{label:28s} {rep['suite']:32s} {n - len(bad)}/{n} pass")
            for r in bad:
                print(f"    FAIL {r['name']}  [{r['anchor']}]")
    if cfg.output_dir:
        write_reports(cfg, merged)
    return code


def cmd_table(args) -> int:
    rows = table_rows(args.family, args)
    text = render_table(rows, args.format, args.q0 or [])
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{args.family}.{args.format}").write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_integrate(args) -> int:
    if not 0.0 < args.q0 < 1.0:
        raise ConfigError("q0 must lie in (0, 1)")
    params = {k: getattr(args, k) for k in ("nu", "k", "t", "a", "b") if getattr(args, k) is not None}
    try:
        value, symbolic, sym_value = INTEGRANDS[args.name](params, args.q0, args.tol)
    except ArithmeticError as exc:
        print(json.dumps({"integrand": args.name, "error": str(exc)}, sort_keys=True))
        return 1
    out = {"integrand": args.name, "params": params, "q0": args.q0, "value": value}
    if symbolic is not None:
        out["symbolic"] = symbolic
        out["symbolic_value"] = sym_value
        out["delta"] = abs(value - sym_value)
    print(json.dumps(out, sort_keys=True))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "table":
            return cmd_table(args)
        return cmd_integrate(args)
    except ConfigError as exc:
        print(f"qclifford: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end: one subcommand per experiment, one report per run.

Exit status is 0 on success, 2 on invalid input, 1 on internal failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

import numpy as np

from . import appell, arith, continuity, ramanujan, series, special

LIMIT_ENV = "DAVENPORT_TABLE_LIMIT"


class ConfigError(ValueError):
    pass


def default_limit() -> int:
    raw = os.environ.get(LIMIT_ENV)
    if raw is None:
        return arith.DEFAULT_LIMIT
    try:
        value = int(float(raw))
    except ValueError:
        raise ConfigError(f"{LIMIT_ENV} must be an integer, got {raw!r}") from None
    return value


def jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, Fraction):
        return special.format_rational(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    return obj


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([repr(float(v)) if isinstance(v, (float, np.floating)) else v for v in r])
    return buf.getvalue()


def _func(text: str) -> arith.ArithmeticFunctionId:
    try:
        return arith.ArithmeticFunctionId.parse(text)
    except ValueError as exc:
        raise ConfigError(f"--func: {exc}") from None


def _terms(value, flag: str) -> int:
    value = int(value)
    if not 1 <= value <= arith.MAX_LIMIT:
        raise ConfigError(f"{flag} must be in [1, {arith.MAX_LIMIT}], got {value}")
    return value


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConfigError(message)


def resolved_config(args) -> dict:
    # execution details that must not change the report bytes
    skip = {"handler", "workers", "out"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


# -- subcommands ------------------------------------------------------------

def run_coeffs(args):
    a = _func(args.func)
    _require(args.N >= 1, f"--N must be >= 1, got {args.N}")
    M = _terms(args.terms, "--terms")
    if args.table == "fk":
        tab = arith.compute_Fk(a, args.N, M, workers=args.workers)
        if args.format == "csv":
            buf = io.StringIO()
            tab.to_csv(buf)
            return buf.getvalue()
        return {"F": tab.entries[:, 1:]}
    c = series.fourier_coefficients(a, args.N, M, weight=args.weight, workers=args.workers)
    if args.format == "csv":
        return _csv(["n", "a_n", "b_n"], ((n, c.a[n], c.b[n]) for n in range(1, M + 1)))
    return {"a": c.a[1:], "b": c.b[1:]}


def run_verify(args):
    a = _func(args.func)
    _require(args.N >= 1, f"--N must be >= 1, got {args.N}")
    _require(args.x > 0, f"--x must be > 0, got {args.x}")
    p = series.ExpansionParams(a, args.N, args.x, _terms(args.terms_lhs, "--terms-lhs"),
                               _terms(args.terms_rhs, "--terms-rhs"), args.cesaro)
    rep = series.verify_identity(p, weight=args.weight, workers=args.workers).to_dict()
    if args.format == "csv":
        keys = [k for k in rep if k != "params"]
        return _csv(keys, [[rep[k] for k in keys]])
    return rep


def run_classic(args):
    a = _func(args.func)
    _require(args.x > 0, f"--x must be > 0, got {args.x}")
    return series.classic_davenport(a, args.x, _terms(args.terms, "--terms"), workers=args.workers)


def _modulus(args) -> continuity.ModulusSpec:
    if args.modulus == "increasing_weight":
        return continuity.ModulusSpec("increasing_weight", a=_func(args.weight_func or args.func))
    if args.modulus == "power_alpha":
        _require(args.alpha > 0, f"--alpha must be > 0, got {args.alpha}")
        return continuity.ModulusSpec("power_alpha", alpha=args.alpha)
    return continuity.ModulusSpec("log_m")


def run_continuity(args):
    a = _func(args.func)
    _require(args.N >= 1, f"--N must be >= 1, got {args.N}")
    spec = _modulus(args)
    M = _terms(args.terms, "--terms")
    if args.mode == "growth":
        _require(2 <= args.m_min < args.m_max <= M, "--m-min/--m-max must satisfy 2 <= m-min < m-max <= terms")
        coeffs = series.fourier_coefficients(a, args.N, M, weight=args.weight, workers=args.workers)
        grid = continuity.default_m_grid(args.m_min, args.m_max)
        rep = continuity.coefficient_growth(coeffs, grid, spec, part=args.part)
        if args.format == "csv":
            return _csv(["m", "S1", "S2", "ratio1", "ratio2"], rep.rows())
        return rep.to_dict()
    _require(args.samples >= 1, f"--samples must be >= 1, got {args.samples}")
    p = series.ExpansionParams(a, args.N, 0.5)
    samples = continuity.increment_probe(p, spec, args.samples, scheme=args.scheme,
                                         seed=args.seed, terms=M, workers=args.workers)
    if args.format == "csv":
        return _csv(["x", "h", "delta", "bound"], ((s.x, s.h, s.delta, s.bound) for s in samples))
    return {
        "samples": [[s.x, s.h, s.delta, s.bound] for s in samples],
        "max_ratio": max(s.ratio for s in samples if s.bound),
        "verdict": continuity.increment_verdict(samples),
        "lipschitz_exponent": continuity.lipschitz_exponent_fit(samples),
    }


def run_ramanujan(args):
    M = _terms(args.terms, "--terms")
    if args.check == "bound":
        _require(args.q >= 1 and args.n >= 1, "--q and --n must be >= 1")
        return ramanujan.check_bound(args.q, args.n, workers=args.workers)
    if args.check == "26":
        _require(args.s > 1, f"--s must be > 1, got {args.s}")
        _require(args.q >= 1, "--q must be >= 1")
        return ramanujan.verify_dirichlet_series_identity(args.q, args.s, M)
    if args.check == "27":
        _require(args.s > 1, f"--s must be > 1, got {args.s}")
        _require(args.n >= 1, "--n must be >= 1")
        return ramanujan.verify_divisor_sigma_identity(args.n, args.s, M)
    _require(args.n >= 1, "--n must be >= 1")
    return ramanujan.verify_vanishing_sum(args.n, M)


def run_zeta(args):
    if args.negative is not None:
        _require(args.negative >= 0, f"--negative must be >= 0, got {args.negative}")
        value = special.zeta_nonpositive(args.negative)
    elif args.bernoulli is not None:
        _require(args.bernoulli >= 0, "--bernoulli must be >= 0")
        value = special.bernoulli(args.bernoulli)
    elif args.constant is not None:
        _require(args.constant >= 1, f"--constant must be >= 1, got {args.constant}")
        value = special.pn_constant(args.constant)
    elif args.harmonic is not None:
        _require(args.harmonic >= 1, "--harmonic must be >= 1")
        value = special.harmonic_estimate(args.harmonic)
    else:
        _require(args.s is not None and args.s > 1, f"--s must be > 1, got {args.s}")
        value = special.zeta_real(args.s)
    if args.format == "text":
        return _text(value)
    return {"config": resolved_config(args), "result": value}


def _text(value) -> str:
    if isinstance(value, Fraction):
        return special.format_rational(value) + "\n"
    if isinstance(value, dict):
        return "".join(f"{k} {v:.15g}\n" for k, v in value.items())
    return f"{value:.15g}\n"


def run_appell(args):
    a = _func(args.func)
    _require(args.k != 0, "--k must be nonzero")
    _require(0 <= args.n < args.K, f"--n must satisfy 0 <= n < K={args.K}")
    _require(args.grid >= 1, "--grid must be >= 1")
    g = appell.g_coefficients(a, args.x, args.K, _terms(args.terms, "--terms"), weight=args.weight)
    poly = appell.appell_from_g(g, args.n)
    check = appell.verify_spectral_identity(g, args.n, args.k)
    z = (np.arange(args.grid) + 0.5) / args.grid * 0.8 + 0.1
    syn = appell.synthesize(g, args.n, args.modes, z)
    if args.format == "csv":
        return _csv(["z", "reconstruction", "reference"],
                    zip(z, syn["reconstruction"], syn["reference"]))
    return {
        "g": g.g,
        "pbar": poly.pbar_scalar,
        "z_coeffs": poly.z_coeffs,
        "spectral": check,
        "synthesis": {"interior_sup_error": syn["interior_sup_error"],
                      "max_abs_reference": float(np.max(np.abs(syn["reference"])))},
    }


def run_segal(args):
    a = _func(args.func)
    _require(args.k >= 0, f"--k must be >= 0, got {args.k}")
    return arith.segal_limit(a, args.k, _terms(args.terms, "--terms"))


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    limit = default_limit()

    def common(sp, formats=("json", "csv")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--out", help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="davenport", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, handler, help_, formats=("json", "csv")):
        sp = sub.add_parser(name, help=help_)
        common(sp, formats)
        sp.set_defaults(handler=handler)
        return sp

    weight = dict(choices=series.WEIGHTS, default="two_pi")

    sp = add("coeffs", run_coeffs, "Fourier coefficients or F_k kernel table")
    sp.add_argument("--func", default="mobius")
    sp.add_argument("--N", type=int, default=1)
    sp.add_argument("--terms", type=int, default=limit)
    sp.add_argument("--table", choices=("fourier", "fk"), default="fourier")
    sp.add_argument("--weight", **weight)

    sp = add("verify", run_verify, "both sides of the expansion and their residual")
    sp.add_argument("--func", default="mobius")
    sp.add_argument("--N", type=int, default=1)
    sp.add_argument("--x", type=float, default=math.sqrt(2) - 1)
    sp.add_argument("--terms-lhs", type=int, default=limit)
    sp.add_argument("--terms-rhs", type=int, default=limit)
    sp.add_argument("--cesaro", action="store_true")
    sp.add_argument("--weight", **weight)

    sp = add("classic", run_classic, "the N = 1 sine-series pair")
    sp.add_argument("--func", default="mobius")
    sp.add_argument("--x", type=float, default=math.sqrt(2) - 1)
    sp.add_argument("--terms", type=int, default=limit)

    sp = add("continuity", run_continuity, "coefficient growth or increment probes")
    sp.add_argument("--mode", choices=("growth", "increment"), default="growth")
    sp.add_argument("--func", default="mobius")
    sp.add_argument("--N", type=int, default=2)
    sp.add_argument("--modulus", choices=continuity.MODULUS_KINDS, default="log_m")
    sp.add_argument("--alpha", type=float, default=1.0)
    sp.add_argument("--weight-func", help="catalog function for increasing_weight (default --func)")
    sp.add_argument("--part", choices=("sine", "cosine", "both"), default="both")
    sp.add_argument("--terms", type=int, default=limit)
    sp.add_argument("--m-min", type=int, default=10**2)
    sp.add_argument("--m-max", type=int, default=min(limit, 10**5))
    sp.add_argument("--samples", type=int, default=16)
    sp.add_argument("--scheme", choices=("sqrt2", "golden"), default="sqrt2")
    sp.add_argument("--weight", **weight)

    sp = add("ramanujan", run_ramanujan, "Ramanujan-sum identities and the sigma bound")
    sp.add_argument("--check", choices=("26", "27", "28", "bound"), default="bound",
                    help="26: Dirichlet series in n; 27: series in q against sigma; "
                         "28: vanishing sum at r = 1; bound: |c_q(n)| <= sigma_1(n)")
    sp.add_argument("--q", type=int, default=1)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--s", type=float, default=2.0)
    sp.add_argument("--terms", type=int, default=limit)

    sp = add("zeta", run_zeta, "exact zeta/Bernoulli values and numeric zeta",
             formats=("text", "json"))
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--negative", type=int, metavar="K", help="exact zeta(-K)")
    g.add_argument("--s", type=float, help="numeric zeta(s), s > 1")
    g.add_argument("--bernoulli", type=int, metavar="M")
    g.add_argument("--constant", type=int, metavar="N", help="exact constant C_N")
    g.add_argument("--harmonic", type=int, metavar="N")

    sp = add("appell", run_appell, "Appell polynomials and their spectral coefficients")
    sp.add_argument("--func", default="liouville")
    sp.add_argument("--x", type=float, default=math.sqrt(2) - 1)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--K", type=int, default=8)
    sp.add_argument("--modes", type=int, default=512)
    sp.add_argument("--grid", type=int, default=801)
    sp.add_argument("--terms", type=int, default=limit)
    sp.add_argument("--weight", **weight)

    sp = add("segal", run_segal, "truncated Segal convolution sum")
    sp.add_argument("--func", default="mobius")
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--terms", type=int, default=limit)
    return p


def dispatch(args) -> str:
    result = args.handler(args)
    if isinstance(result, str):
        return result
    if isinstance(result, dict) and "config" in result:
        report = result
    elif isinstance(result, dict):
        report = {"config": resolved_config(args), **result}
    else:
        report = {"config": resolved_config(args), "result": result}
    return json.dumps(jsonable(report), indent=2) + "\n"


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
    except ConfigError as exc:
        print(f"davenport: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = dispatch(args)
    except (ConfigError, ValueError) as exc:
        print(f"davenport {args.command}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"davenport {args.command}: internal error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line frontend: verification, simulation, search, and curve data.

Exit codes: 0 on success/pass, 1 on a semantic failure (a verification
that ran and said no), 2 on usage or input errors.  All output is
deterministic given the flags; the trailing timing line is suppressed
by --no-timing.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .channels import (
    KL_TOLERANCE,
    Channel,
    error_space_basis,
    identity_channel,
    kl_verify,
    synthesize_decoder,
    tensor_channels,
    verify_etd,
)
from .errors import GraphQECError
from .graphs import (
    build_isometry,
    find_uncorrectable_subset,
    graph_to_dict,
    load_graph,
    max_correctable_f,
)
from .noise import NoiseDescriptor
from .rates import (
    capacity_from_finite_coding,
    capacity_lower_bound_small_noise,
    emit_curves,
)
from .search import SearchConfig, run_search, singular_fraction_experiment

__all__ = ["main"]


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit a JSON object instead of text")
    parser.add_argument("--no-timing", action="store_true", help="suppress the timing line")
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        metavar="N",
        help="cap on worker threads; results never depend on it (the current "
        "implementation evaluates vectorized batches on one thread)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphqec",
        description="qudit graph codes: verify, simulate, search, and bound curves",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="certify that a graph code corrects f errors", allow_abbrev=False)
    p.add_argument("graph", help="path to a graph file (JSON)")
    p.add_argument("--f", type=int, required=True, help="number of errors to correct")
    _add_common(p)

    p = sub.add_parser("maxf", help="largest f the code corrects", allow_abbrev=False)
    p.add_argument("graph")
    _add_common(p)

    p = sub.add_parser("kl-check", help="numerical Knill-Laflamme verification", allow_abbrev=False)
    p.add_argument("graph")
    p.add_argument("--f", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("simulate", help="encode, apply noise, decode, report Choi distance", allow_abbrev=False)
    p.add_argument("graph")
    p.add_argument("--f", type=int, required=True)
    p.add_argument(
        "--noise",
        default=None,
        metavar="FAMILY:PARAMS",
        help="depolarizing:q, unitary-rotation:theta, or custom-kraus:file.json",
    )
    p.add_argument(
        "--sites",
        default=None,
        metavar="LIST",
        help="comma-separated output sites the noise acts on (default: none)",
    )
    _add_common(p)

    p = sub.add_parser("search", help="random code search with existence bound", allow_abbrev=False)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("singular-mc", help="Monte Carlo singular-fraction experiment", allow_abbrev=False)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--N", type=int, required=True, help="rows")
    p.add_argument("--M", type=int, required=True, help="columns")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("bounds", help="CSV curve data for the bound figures", allow_abbrev=False)
    p.add_argument("--fig", required=True, choices=["threshold", "region", "exponent"])
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--delta", default="1e-3,1e-4,1e-5,1e-6", help="comma-separated list")
    p.add_argument("-o", "--out", default=None, help="output path (default: stdout)")
    _add_common(p)

    p = sub.add_parser("capacity", help="capacity lower-bound formulas", allow_abbrev=False)
    p.add_argument("--d", type=int, default=None, help="with --eps: small-noise bound")
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--p", type=int, default=None, help="with --k/--delta: finite-coding bound")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--delta", type=float, default=None)
    _add_common(p)

    return parser


def _emit(args, payload: dict, lines: list[str], elapsed: float) -> None:
    if args.json:
        if not args.no_timing:
            payload = dict(payload, elapsed_s=round(elapsed, 6))
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
        if not args.no_timing:
            print(f"time: {elapsed:.3f}s")


def _parse_sites(text, n_sites: int) -> list[int]:
    if text is None:
        return []
    sites = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    for s in sites:
        if not 0 <= s < n_sites:
            raise ValueError(f"site {s} outside the output range [0, {n_sites})")
    if len(set(sites)) != len(sites):
        raise ValueError(f"sites {sites} contain repeats")
    return sites


def _parse_noise(token: str, site_dim: int) -> Channel:
    family, _, params = token.partition(":")
    if family == "depolarizing":
        return NoiseDescriptor(family, site_dim, {"q": float(params)}).make_channel()
    if family == "unitary-rotation":
        return NoiseDescriptor(family, site_dim, {"theta": float(params)}).make_channel()
    if family == "custom-kraus":
        with open(params, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        kraus = [np.array(item["re"]) + 1j * np.array(item["im"]) for item in data]
        return NoiseDescriptor(family, site_dim, {"kraus": kraus}).make_channel()
    raise ValueError(
        f"unknown noise family {family!r}; use depolarizing, unitary-rotation, or custom-kraus"
    )


def _cmd_verify(args) -> int:
    code = load_graph(args.graph)
    start = time.perf_counter()
    witness = find_uncorrectable_subset(code, args.f)
    elapsed = time.perf_counter() - start
    passes = witness is None
    lines = [
        f"graph: d={code.d} m={code.m} n={code.n}",
        f"corrects f={args.f}: {'PASS' if passes else 'FAIL'}",
    ]
    if witness is not None:
        lines.append(f"failing subset Z: {list(witness)}")
    payload = {
        "d": code.d,
        "m": code.m,
        "n": code.n,
        "f": args.f,
        "passes": passes,
        "witness": None if witness is None else list(witness),
    }
    _emit(args, payload, lines, elapsed)
    return 0 if passes else 1


def _cmd_maxf(args) -> int:
    code = load_graph(args.graph)
    start = time.perf_counter()
    value = max_correctable_f(code)
    elapsed = time.perf_counter() - start
    _emit(
        args,
        {"d": code.d, "m": code.m, "n": code.n, "max_f": value},
        [f"max correctable f: {value}"],
        elapsed,
    )
    return 0


def _cmd_kl_check(args) -> int:
    code = load_graph(args.graph)
    start = time.perf_counter()
    v = build_isometry(code)
    basis = error_space_basis(code.n, code.d, args.f)
    report = kl_verify(v, basis)
    elapsed = time.perf_counter() - start
    lines = [
        f"error space: all words on <= {args.f} of {code.n} sites ({len(basis)} operators)",
        f"max deviation: {report.max_deviation:.3e} (tolerance {KL_TOLERANCE:.0e})",
        f"Knill-Laflamme: {'PASS' if report.correcting else 'FAIL'}",
    ]
    payload = {
        "f": args.f,
        "operators": len(basis),
        "max_deviation": report.max_deviation,
        "tolerance": KL_TOLERANCE,
        "passes": report.correcting,
    }
    _emit(args, payload, lines, elapsed)
    return 0 if report.correcting else 1


def _cmd_simulate(args) -> int:
    code = load_graph(args.graph)
    start = time.perf_counter()
    witness = find_uncorrectable_subset(code, args.f)
    if witness is not None:
        print(
            f"code does not correct f={args.f} (failing subset {list(witness)})",
            file=sys.stderr,
        )
        return 1
    sites = _parse_sites(args.sites, code.n)
    if args.noise is None and sites:
        raise ValueError("--sites given without --noise")
    site_channel = None
    if args.noise is not None:
        site_channel = _parse_noise(args.noise, code.d)
        if not sites:
            raise ValueError("--noise given without --sites")
    v = build_isometry(code)
    encoder = Channel((v,))
    decoder = synthesize_decoder(v, error_space_basis(code.n, code.d, args.f))
    noise = identity_channel(1)
    for site in range(code.n):
        stage = site_channel if site in sites else identity_channel(code.d)
        noise = tensor_channels(noise, stage)
    distance = verify_etd(encoder, noise, decoder)
    elapsed = time.perf_counter() - start
    corrected = distance < KL_TOLERANCE
    lines = [
        f"noise: {args.noise or 'none'} on sites {sites}",
        f"Choi trace distance of decode(noise(encode)) from identity: {distance:.6e}",
        f"corrected: {'yes' if corrected else 'no'}",
    ]
    payload = {
        "f": args.f,
        "noise": args.noise,
        "sites": sites,
        "choi_trace_distance": distance,
        "corrected": corrected,
    }
    _emit(args, payload, lines, elapsed)
    return 0


def _cmd_search(args) -> int:
    cfg = SearchConfig(d=args.d, m=args.m, n=args.n, f=args.f, trials=args.trials, seed=args.seed)
    start = time.perf_counter()
    report = run_search(cfg)
    elapsed = time.perf_counter() - start
    payload = report.to_dict()
    lines = [
        f"trials: {cfg.trials} (seed {cfg.seed})",
        f"successes: {report.successes}  failures: {report.failures}",
        f"empirical failure fraction: {report.empirical_failure_fraction:.6g} "
        f"(99% upper limit {report.failure_fraction_upper99:.6g})",
        f"analytic bound: log2 P <= {report.bound_log2:.6g} (P <= {2.0 ** report.bound_log2:.6g})",
    ]
    if report.first_failure_witness is not None:
        lines.append(
            f"first failure: trial {report.first_failure_trial}, "
            f"subset {list(report.first_failure_witness)}"
        )
    if report.best_code is not None:
        lines.append("best code (graph-file format):")
        lines.append(json.dumps(graph_to_dict(report.best_code)))
    _emit(args, payload, lines, elapsed)
    return 0


def _cmd_singular_mc(args) -> int:
    start = time.perf_counter()
    empirical, bound = singular_fraction_experiment(
        args.d, args.N, args.M, args.trials, args.seed
    )
    elapsed = time.perf_counter() - start
    lines = [
        f"empirical singular fraction: {empirical:.6g}",
        f"analytic bound d^-(N-M): {bound:.6g}",
    ]
    payload = {
        "d": args.d,
        "N": args.N,
        "M": args.M,
        "trials": args.trials,
        "seed": args.seed,
        "empirical": empirical,
        "bound": bound,
    }
    _emit(args, payload, lines, elapsed)
    return 0


def _cmd_bounds(args) -> int:
    deltas = tuple(float(tok) for tok in args.delta.split(","))
    kind = {"threshold": "threshold-fig", "region": "rate-region-fig", "exponent": "exponent-fig"}[args.fig]
    csv = emit_curves(kind, d=args.d, p=args.p, k=args.k, deltas=deltas)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(csv)
        return 0
    if args.json:
        print(json.dumps({"fig": args.fig, "csv": csv}, indent=2, sort_keys=True))
    else:
        # no timing line here: the CSV stream must stay byte-clean
        sys.stdout.write(csv)
    return 0


def _cmd_capacity(args) -> int:
    start = time.perf_counter()
    small_noise = args.eps is not None
    finite = args.delta is not None
    if small_noise == finite:
        raise ValueError("choose one mode: --d/--eps or --p/--k/--delta")
    if small_noise:
        if args.d is None:
            raise ValueError("--eps needs --d")
        threshold, q_lower = capacity_lower_bound_small_noise(args.d, args.eps)
        lines = [
            f"cb-norm threshold: {threshold:.12g}",
            f"capacity lower bound: {q_lower:.12g} bits/use",
        ]
        if q_lower <= 0:
            lines.append("note: bound is non-positive (vacuous at this error rate)")
        payload = {
            "mode": "small-noise",
            "d": args.d,
            "eps": args.eps,
            "threshold": threshold,
            "q_lower": q_lower,
        }
    else:
        if args.p is None or args.k is None:
            raise ValueError("--delta needs --p and --k")
        value = capacity_from_finite_coding(args.p, args.k, args.delta)
        lines = [f"capacity lower bound: {value:.12g} bits/use"]
        payload = {
            "mode": "finite-coding",
            "p": args.p,
            "k": args.k,
            "delta": args.delta,
            "q_lower": value,
        }
    elapsed = time.perf_counter() - start
    _emit(args, payload, lines, elapsed)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "maxf": _cmd_maxf,
    "kl-check": _cmd_kl_check,
    "simulate": _cmd_simulate,
    "search": _cmd_search,
    "singular-mc": _cmd_singular_mc,
    "bounds": _cmd_bounds,
    "capacity": _cmd_capacity,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except (GraphQECError, ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

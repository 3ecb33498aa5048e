"""Command-line front end.

A thin client over the service layer: each subcommand builds the same
request model the HTTP endpoint accepts and dispatches it in-process, or to
a running server when --server is given. Reports go to stdout as JSON, or to
a CSV file with --out.

Exit codes: 0 success, 1 runtime error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import runners
from .bench import RunReport, reports_to_csv
from .brute import BudgetExceededError
from .graphs import DimacsError
from .service.models import (
    AdversaryRequest,
    BenchRequest,
    ColorRequest,
    KISRequest,
    MaximalISRequest,
    MaximumISRequest,
    OctRequest,
    VerifyRequest,
)

ENDPOINTS = {
    "maximal-is": ("/maximal-is", MaximalISRequest),
    "maximum-is": ("/maximum-is", MaximumISRequest),
    "k-is": ("/k-is", KISRequest),
    "oct": ("/oct", OctRequest),
    "color": ("/color", ColorRequest),
    "adversary": ("/adversary", AdversaryRequest),
    "bench": ("/bench", BenchRequest),
    "verify": ("/verify", VerifyRequest),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qisbench",
        description="Independent set algorithms under a quantum query cost model.",
    )
    parser.add_argument(
        "--server",
        help="base URL of a running qisbench service; default runs in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--input", help="path to a DIMACS edge-format file")
        group.add_argument(
            "--gen",
            help="generator spec: random:<n>:<p>[:<seed>], path:<n>, cycle:<n>, "
            "complete:<n>, gadgetA:<n>, gadgetB:<n>, petersen",
        )

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="write report(s) as CSV to this path")
        p.add_argument("--json", action="store_true", help="force JSON to stdout")

    p = sub.add_parser("maximal-is", help="greedy maximal independent set")
    add_source(p)
    add_common(p)
    p.add_argument("--model", choices=["matrix", "list"], default="matrix")
    p.add_argument("--fail-prob", type=float, default=0.0)

    p = sub.add_parser("maximum-is", help="amplified randomized maximum IS")
    add_source(p)
    add_common(p)
    p.add_argument("--budget-scale", type=float, default=1.0)

    p = sub.add_parser("k-is", help="independent set of size k via the complement")
    add_source(p)
    add_common(p)
    p.add_argument("-k", "--k", type=int, required=True)

    p = sub.add_parser("oct", help="minimum odd cycle transversal")
    add_source(p)
    add_common(p)
    p.add_argument("--inner", choices=["exact", "quantum"], default="exact")

    p = sub.add_parser("color", help="greedy coloring by maximal IS rounds")
    add_source(p)
    add_common(p)
    p.add_argument("--model", choices=["matrix", "list"], default="matrix")
    p.add_argument("--fail-prob", type=float, default=0.0)

    p = sub.add_parser("adversary", help="lower-bound gadget verification")
    p.add_argument("-n", "--n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bench", help="scaling sweep with exponent fit")
    p.add_argument("algorithm", choices=list(runners.BENCH_ALGORITHMS))
    p.add_argument("--sizes", required=True, help="comma-separated sizes, e.g. 32,64,128")
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--reps", type=int, default=20)
    p.add_argument("--model", choices=["matrix", "list"], default="matrix")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run oracle-equivalence suites")
    p.add_argument("--scope", action="append", dest="scopes", choices=list(
        ("graph", "grover", "success-prob", "oct", "gadgets", "eppstein")
    ))
    p.add_argument("--nmax", type=int)
    p.add_argument("--Nmax", type=int)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")

    return parser


def _read_input(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise runners.UsageError(f"cannot read input file {path!r}: {exc}") from exc


def build_request(args: argparse.Namespace):
    """Translate parsed flags into the endpoint's request model."""
    source = {}
    if getattr(args, "input", None):
        source["dimacs"] = _read_input(args.input)
    elif getattr(args, "gen", None):
        source["gen"] = args.gen
    cmd = args.command
    if cmd == "maximal-is":
        return MaximalISRequest(
            **source, model=args.model, seed=args.seed, fail_prob=args.fail_prob
        )
    if cmd == "maximum-is":
        return MaximumISRequest(
            **source, seed=args.seed, budget_scale=args.budget_scale
        )
    if cmd == "k-is":
        return KISRequest(**source, k=args.k)
    if cmd == "oct":
        return OctRequest(**source, inner=args.inner, seed=args.seed)
    if cmd == "color":
        return ColorRequest(
            **source, model=args.model, seed=args.seed, fail_prob=args.fail_prob
        )
    if cmd == "adversary":
        return AdversaryRequest(n=args.n)
    if cmd == "bench":
        try:
            sizes = [int(s) for s in args.sizes.split(",") if s]
        except ValueError as exc:
            raise runners.UsageError(f"bad --sizes {args.sizes!r}") from exc
        return BenchRequest(
            algorithm=args.algorithm,
            sizes=sizes,
            density=args.density,
            reps=args.reps,
            model=args.model,
            seed=args.seed,
        )
    if cmd == "verify":
        return VerifyRequest(scopes=args.scopes, nmax=args.nmax, Nmax=args.Nmax)
    raise AssertionError(f"unhandled command {cmd}")


def dispatch_local(command: str, request) -> dict:
    if command == "maximal-is":
        return runners.run_maximal_is(
            gen=request.gen,
            dimacs=request.dimacs,
            model=request.model,
            seed=request.seed,
            fail_prob=request.fail_prob,
        ).to_dict()
    if command == "maximum-is":
        return runners.run_maximum_is(
            gen=request.gen,
            dimacs=request.dimacs,
            seed=request.seed,
            budget_scale=request.budget_scale,
        ).to_dict()
    if command == "k-is":
        return runners.run_k_is(k=request.k, gen=request.gen, dimacs=request.dimacs).to_dict()
    if command == "oct":
        return runners.run_oct(
            gen=request.gen, dimacs=request.dimacs, inner=request.inner, seed=request.seed
        ).to_dict()
    if command == "color":
        return runners.run_color(
            gen=request.gen,
            dimacs=request.dimacs,
            model=request.model,
            seed=request.seed,
            fail_prob=request.fail_prob,
        ).to_dict()
    if command == "adversary":
        return runners.run_adversary(n=request.n)
    if command == "bench":
        result = runners.run_bench(
            algorithm=request.algorithm,
            sizes=request.sizes,
            density=request.density,
            reps=request.reps,
            model=request.model,
            seed=request.seed,
        )
        result["reports"] = [r.to_dict() for r in result["reports"]]
        return result
    if command == "verify":
        return runners.run_verify(
            scopes=request.scopes, nmax=request.nmax, Nmax=request.Nmax
        )
    raise AssertionError(f"unhandled command {command}")


def dispatch_remote(server: str, command: str, request) -> dict:
    import httpx

    path, _ = ENDPOINTS[command]
    response = httpx.post(
        server.rstrip("/") + path, json=request.model_dump(), timeout=600.0
    )
    response.raise_for_status()
    return response.json()


def _report_rows(command: str, payload: dict) -> Optional[list[RunReport]]:
    """Reports suitable for CSV output, when the command produces any."""
    if command == "bench":
        return [RunReport(**row) for row in payload["reports"]]
    if command in ("maximal-is", "maximum-is", "k-is", "oct", "color"):
        return [RunReport(**payload)]
    return None


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        request = build_request(args)
        if args.server:
            payload = dispatch_remote(args.server, args.command, request)
        else:
            payload = dispatch_local(args.command, request)
    except (runners.UsageError, DimacsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {exc}", file=sys.stderr)
        return 1

    out_path = getattr(args, "out", None)
    wrote_file = False
    if out_path:
        rows = _report_rows(args.command, payload)
        if rows is not None:
            Path(out_path).write_text(reports_to_csv(rows))
        else:
            Path(out_path).write_text(json.dumps(payload, sort_keys=True) + "\n")
        wrote_file = True
    if not wrote_file or getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())

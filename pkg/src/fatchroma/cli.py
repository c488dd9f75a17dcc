"""Command-line entry point: generate, verify, solve, spectrum and reproduce.

Exit codes: 0 success or accept, 1 reject or reproduction mismatch,
2 timeout (bounds only), 3 input error.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from dotenv import load_dotenv
from pydantic import BaseModel

from .coloring import format_coloring, infer_fat_parameters, parse_coloring, validate_partition, verify_fat
from .config import Config
from .errors import FatChromaError, SolveTimeout
from .generators import build_family, make_spec
from .graphs import get_codec
from .harness import all_passed, build_cases, format_table, run_cases
from .models import (
    FatWitness,
    Graph,
    ProperColoring,
    SolveReport,
    SpectrumReport,
    Theorem,
    format_fraction,
)
from .solver import chi_fat, chi_fat_upper_bound, chromatic_number, fat_spectrum

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_TIMEOUT = 2
EXIT_INPUT = 3


# ============================================================================
# Parser
# ============================================================================


def _global_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=["graph6", "dimacs"], default="graph6", help="Graph file format")
    parent.add_argument("--json", action="store_true", help="Emit JSON instead of text")
    parent.add_argument("--timeout", type=float, default=None, help="Seconds per solve (env FATCHROMA_TIMEOUT)")
    parent.add_argument("--deterministic", action="store_true", default=None, help="Reproducible witnesses")
    parent.add_argument("--threads", type=int, default=None, help="Worker processes (env FATCHROMA_THREADS)")
    parent.add_argument("--log-level", default=None, help="Logging level (env FATCHROMA_LOG_LEVEL)")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _global_flags()
    parser = argparse.ArgumentParser(prog="fatchroma", description="Exact FAT chromatic number toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    generate = sub.add_parser("generate", parents=[parent], help="Write a family instance")
    generate.add_argument("--family", required=True)
    generate.add_argument("--params", default="", help="k=v,k=v")
    generate.add_argument("--out", default=None, help="Output file (stdout when omitted)")

    verify = sub.add_parser("verify", parents=[parent], help="Check a coloring against the FAT condition")
    verify.add_argument("--graph", required=True)
    verify.add_argument("--coloring", required=True)
    verify.add_argument("--alpha", default=None, help="p/q; infer when omitted")
    verify.add_argument("--beta", default=None, help="p/q; infer when omitted")

    solve = sub.add_parser("solve", parents=[parent], help="Solve every graph in a file")
    solve.add_argument("--what", choices=["chi", "chifat", "spectrum", "bounds"], default="chifat")
    solve.add_argument("--in", dest="input", required=True, help="Graph file, or - for stdin")
    solve.add_argument("--witness-out", default=None, help="Write the witness as a coloring file")

    spectrum = sub.add_parser("spectrum", parents=[parent], help="Same as solve --what spectrum")
    spectrum.add_argument("--in", dest="input", required=True, help="Graph file, or - for stdin")

    reproduce = sub.add_parser("reproduce", parents=[parent], help="Check the theorem values")
    reproduce.add_argument("--theorem", choices=["all", *(t.value for t in Theorem)], default="all")
    reproduce.add_argument("--all", action="store_true", help="Same as --theorem all")
    reproduce.add_argument("--max-l2", type=int, default=4)
    reproduce.add_argument("--connected-n", type=int, nargs="+", default=None)
    reproduce.add_argument("--general-n", type=int, nargs="+", default=[3, 4, 5, 6])
    reproduce.add_argument("--include-large", action="store_true", help="Also run the n=7 connected instances")
    return parser


# ============================================================================
# Helpers
# ============================================================================


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graphs(path: str, fmt: str) -> list[Graph]:
    graphs = get_codec(fmt).parse_many(_read_text(path))
    if not graphs:
        raise ValueError(f"{path} contains no graphs")
    return graphs


def _parse_rational(name: str, text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"--{name} must be a rational p/q, got {text!r}") from None


def _print_json(payload: Any) -> None:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    print(json.dumps(payload))


def _describe_witness(witness: FatWitness) -> str:
    blocks = " | ".join(" ".join(map(str, block)) for block in witness.blocks)
    return f"k={witness.k} alpha={format_fraction(witness.alpha)} beta={format_fraction(witness.beta)} blocks: {blocks}"


def _witness_lines(witness: FatWitness | ProperColoring) -> str:
    if isinstance(witness, FatWitness):
        return format_coloring(witness)
    return "".join(f"{v} {c}\n" for v, c in enumerate(witness.colors))


# ============================================================================
# Commands
# ============================================================================


def cmd_generate(args: argparse.Namespace, config: Config) -> int:
    spec = make_spec(args.family, args.params)
    g = build_family(spec)
    text = get_codec(args.format).emit(g)
    logger.info(f"Generated {spec.family.value} with n={g.n}, m={g.edge_count}")
    if args.out:
        Path(args.out).write_text(text)
    if args.json:
        _print_json({"instance": spec.model_dump(mode="json"), "n": g.n, "m": g.edge_count, "graph": text})
    elif not args.out:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    graphs = _load_graphs(args.graph, args.format)
    if len(graphs) != 1:
        raise ValueError(f"{args.graph} holds {len(graphs)} graphs; verify takes exactly one")
    g = graphs[0]
    partition = parse_coloring(_read_text(args.coloring), g.n)

    if (args.alpha is None) != (args.beta is None):
        raise ValueError("--alpha and --beta must be given together")
    if args.alpha is not None:
        alpha, beta = _parse_rational("alpha", args.alpha), _parse_rational("beta", args.beta)
        verdict = verify_fat(g, partition, alpha, beta)
        canon = validate_partition(g, partition)
        witness = FatWitness(k=canon.k, blocks=canon.blocks, alpha=alpha, beta=beta) if verdict.accepted else None
        violation = verdict.violation
    else:
        outcome = infer_fat_parameters(g, partition)
        witness, violation = outcome.witness, outcome.violation

    if args.json:
        _print_json({"accepted": witness is not None, "witness": witness and witness.model_dump(mode="json"),
                     "violation": violation and violation.model_dump(mode="json")})
    elif witness is not None:
        print(f"ACCEPT {_describe_witness(witness)}")
    else:
        print(f"REJECT {violation.describe()}")
    return EXIT_OK if witness is not None else EXIT_REJECT


def _solve_one(g: Graph, what: str, config: Config) -> SolveReport | SpectrumReport:
    if what == "chi":
        return chromatic_number(g, timeout_sec=config.timeout_sec)
    if what == "chifat":
        return chi_fat(g, timeout_sec=config.timeout_sec, threads=config.threads, deterministic=config.deterministic)
    return fat_spectrum(
        g,
        cap=config.spectrum_cap,
        timeout_sec=config.timeout_sec,
        threads=config.threads,
        deterministic=config.deterministic,
    )


def _print_report(report: SolveReport | SpectrumReport) -> None:
    if isinstance(report, SpectrumReport):
        feasible = ", ".join(map(str, sorted(report.feasible)))
        print(f"chifat {report.chi_fat} feasible [{feasible}] infeasible {report.infeasible}")
        return
    if report.status == "timeout":
        print(f"{report.what} timeout bounds [{report.bounds.lower}, {report.bounds.upper}]")
        return
    print(f"{report.what} {report.value} ({report.stats.nodes} nodes, {report.stats.wall_time_sec:.3f}s)")
    if isinstance(report.witness, FatWitness):
        print(f"  {_describe_witness(report.witness)}")
    elif isinstance(report.witness, ProperColoring):
        print(f"  colors: {' '.join(map(str, report.witness.colors))}")


def cmd_solve(args: argparse.Namespace, config: Config) -> int:
    what = getattr(args, "what", "spectrum")
    graphs = _load_graphs(args.input, args.format)
    witness_out = getattr(args, "witness_out", None)
    if witness_out and len(graphs) != 1:
        raise ValueError("--witness-out needs an input with exactly one graph")

    code = EXIT_OK
    for g in graphs:
        if what == "bounds":
            bounds = chi_fat_upper_bound(g)
            if args.json:
                _print_json(bounds)
            else:
                print(f"bounds [{bounds.lower}, {bounds.upper}]: {bounds.lower_reason}; {bounds.upper_reason}")
            continue
        try:
            report = _solve_one(g, what, config)
        except SolveTimeout:
            # only fat_spectrum raises; the other solvers report timeouts in-band
            bounds = chi_fat_upper_bound(g)
            report = SolveReport(what=what, status="timeout", bounds=bounds)
        if isinstance(report, SolveReport) and report.status == "timeout":
            code = EXIT_TIMEOUT
        if args.json:
            _print_json(report)
        else:
            _print_report(report)
        if witness_out and isinstance(report, SolveReport) and report.witness is not None:
            Path(witness_out).write_text(_witness_lines(report.witness))
    return code


def cmd_reproduce(args: argparse.Namespace, config: Config) -> int:
    theorems: Optional[list[Theorem]] = None
    if args.theorem != "all" and not args.all:
        theorems = [Theorem(args.theorem)]
    cases = build_cases(
        theorems=theorems,
        max_l2=args.max_l2,
        connected_n=args.connected_n,
        general_n=args.general_n,
        include_large=args.include_large,
    )
    results = run_cases(cases, timeout_sec=config.timeout_sec, workers=config.threads)
    passed = all_passed(results)
    if args.json:
        rows = [{**result.model_dump(mode="json"), "gap": result.gap} for result in results]
        _print_json({"passed": passed, "results": rows})
    else:
        print(format_table(results))
    return EXIT_OK if passed else EXIT_REJECT


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "spectrum": cmd_solve,
    "reproduce": cmd_reproduce,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, configure logging and dispatch to a subcommand."""
    env_file = Path.cwd() / ".env"
    if env_file.exists():
        load_dotenv(env_file)

    args = build_parser().parse_args(argv)
    try:
        config = Config.from_env().with_overrides(
            threads=args.threads,
            timeout_sec=args.timeout,
            deterministic=args.deterministic,
            log_level=args.log_level.upper() if args.log_level else None,
        )
        logging.basicConfig(level=config.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    try:
        return COMMANDS[args.command](args, config)
    except (FatChromaError, ValueError, OSError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

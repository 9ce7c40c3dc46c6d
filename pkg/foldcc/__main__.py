#!/usr/bin/env python
"""
foldcc CLI - threshold tables, bound sweeps and coded-computing simulations.

Usage:
    foldcc thresholds --N=<N> --K=<K> --T=<T> --S=<S> --D2=<D2> --m=<grid> [--eps=<eps>] [options]
    foldcc bounds --which=<bound> --k=<k> [--q=<q>] [--n=<n>] [--l=<l>] [--t=<grid>] [--evals=<grid>] [options]
    foldcc simulate [--config=<path>] [--q=<q>] [--N=<N>] [--K=<K>] [--T=<T>] [--S=<S>] [--A=<A>] [--m=<m>] [--D2=<D2>] [--job=<name>] [--adversary=<kind>] [--mode=<mode>] [--t=<t>] [--trials=<n>] [--seed=<seed>] [--consistency-check] [options]
    foldcc roundtrip --q=<q> --m=<m> --n=<n> --k=<k> --s=<s> [--errors=<e>] [--erasures=<e>] [--trials=<n>] [--seed=<seed>] [--adversary=<kind>] [--mode=<mode>] [--t=<t>] [options]
    foldcc --help
    foldcc --version

Commands:
    thresholds   LCC and FLCC adversary thresholds for each folding parameter m
    bounds       Success-probability bounds of side-information pruning (ours, gr2016, saraf)
    simulate     Monte Carlo campaign of the FLCC protocol
    roundtrip    FRS encode, corrupt, list decode and prune without the protocol

Grids accept a:b[:step] ranges (inclusive) and comma-separated lists.

Options:
    --out=<path>      Write the CSV (sweeps) or JSON (runs) artifact to this file
    --mode=<mode>     Side information: deterministic, probabilistic or structured
    --n-jobs=<n>      Parallel trial workers (joblib)
    -v --verbose      Log at DEBUG level
    --help            Show this help message
    --version         Show version information

Exit codes: 0 success, 1 invalid parameters, 2 internal invariant violation or
silent error within the guarantee.
"""

import logging
import sys
from typing import Any, Callable, Dict, Optional

from docopt import docopt  # type: ignore[import-untyped]

from foldcc import __version__
from foldcc.config import ExperimentConfig
from foldcc.exceptions import InvariantViolation
from foldcc.sim.harness import run_campaign
from foldcc.sim.roundtrip import RoundtripConfig, run_roundtrip_campaign
from foldcc.sim.sweeps import sweep_bounds, sweep_thresholds
from foldcc.utils.ranges import parse_int_grid
from foldcc.utils.reports import format_table, rows_to_csv, summary_to_json, write_text

logger = logging.getLogger(__name__)

EXIT_INVALID = 1
EXIT_INVARIANT = 2


def _int(arguments: Dict[str, Any], flag: str) -> Optional[int]:
    value = arguments.get(flag)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{flag} expects an integer, got {value!r}") from None


def _require(arguments: Dict[str, Any], flag: str) -> int:
    value = _int(arguments, flag)
    if value is None:
        raise ValueError(f"missing required flag {flag}")
    return value


def _cmd_thresholds(arguments: Dict[str, Any]) -> int:
    """Handle 'thresholds' command."""
    N, K, T, S, D2 = (_require(arguments, f) for f in ("--N", "--K", "--T", "--S", "--D2"))
    m_list = parse_int_grid(arguments["--m"])
    print(f"📊 Thresholds for N={N}, K={K}, T={T}, S={S}, D2={D2}")
    rows = sweep_thresholds(N, K, T, S, D2, m_list, eps=arguments.get("--eps"))
    print(format_table(rows))
    _write(rows_to_csv(rows), arguments.get("--out"), f"{len(rows)} rows")
    return 0


def _cmd_bounds(arguments: Dict[str, Any]) -> int:
    """Handle 'bounds' command."""
    which = arguments["--which"]
    grid_flag = "--evals" if which == "gr2016" else "--t"
    if arguments.get(grid_flag) is None:
        raise ValueError(f"bound {which!r} needs {grid_flag}")
    rows = sweep_bounds(
        which,
        parse_int_grid(arguments[grid_flag]),
        k=_require(arguments, "--k"),
        q=_int(arguments, "--q"),
        n=_int(arguments, "--n"),
        l=_int(arguments, "--l"),
    )
    print(f"📈 Bound {which} over {len(rows)} points")
    print(format_table(rows))
    _write(rows_to_csv(rows), arguments.get("--out"), f"{len(rows)} rows")
    return 0


def _cmd_simulate(arguments: Dict[str, Any]) -> int:
    """Handle 'simulate' command."""
    flags = {
        name: _int(arguments, f"--{name}")
        for name in ("q", "N", "K", "T", "S", "A", "m", "D2", "t", "trials", "seed")
    }
    flags.update(
        job=arguments.get("--job"),
        adversary=arguments.get("--adversary"),
        mode=arguments.get("--mode"),
        n_jobs=_int(arguments, "--n-jobs"),
        out=arguments.get("--out"),
        consistency_check=True if arguments.get("--consistency-check") else None,
    )
    if arguments.get("--config"):
        config = ExperimentConfig.from_file(arguments["--config"], **flags)
    else:
        config = ExperimentConfig(**{k: v for k, v in flags.items() if v is not None})

    params = config.to_params()
    print(
        f"🎲 Simulating {config.trials} trials: N={params.N} m={params.m} A={params.A} "
        f"(guarantee {params.threshold_exact}), {config.adversary.value}, {config.mode}"
    )
    stats = run_campaign(config)
    summary = stats.summary()
    print(summary_to_json(summary), end="")
    _write(summary_to_json(summary), config.out, "summary")
    if stats.silent_errors:
        print(f"🚨 {stats.silent_errors} SILENT ERRORS within the guarantee", file=sys.stderr)
        return EXIT_INVARIANT
    return 0


def _cmd_roundtrip(arguments: Dict[str, Any]) -> int:
    """Handle 'roundtrip' command."""
    fields = {
        name: _int(arguments, f"--{name}")
        for name in ("q", "m", "n", "k", "s", "errors", "erasures", "trials", "seed", "t")
    }
    fields.update(
        adversary=arguments.get("--adversary"),
        mode=arguments.get("--mode"),
        n_jobs=_int(arguments, "--n-jobs"),
    )
    config = RoundtripConfig(**{k: v for k, v in fields.items() if v is not None})
    print(
        f"🔁 Roundtrip q={config.q} m={config.m} n={config.n} k={config.k} s={config.s}: "
        f"{config.errors} errors, {config.erasures} erasures"
    )
    summary = run_roundtrip_campaign(config)
    print(summary_to_json(summary), end="")
    _write(summary_to_json(summary), arguments.get("--out"), "summary")
    if summary["silent_errors"]:
        print(f"🚨 {summary['silent_errors']} SILENT ERRORS within the guarantee", file=sys.stderr)
        return EXIT_INVARIANT
    return 0


def _write(text: str, path: Optional[str], what: str) -> None:
    if path:
        write_text(text, path)
        print(f"✅ Wrote {what} to {path}")


COMMANDS: Dict[str, Callable[[Dict[str, Any]], int]] = {
    "thresholds": _cmd_thresholds,
    "bounds": _cmd_bounds,
    "simulate": _cmd_simulate,
    "roundtrip": _cmd_roundtrip,
}


def main(argv: Optional[list[str]] = None) -> None:
    """Main CLI entry point."""
    arguments = docopt(__doc__, argv=argv, version=f"foldcc {__version__}")
    logging.basicConfig(
        level=logging.DEBUG if arguments["--verbose"] else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    command = next((name for name in COMMANDS if arguments.get(name)), None)
    if command is None:
        # docopt only accepts the listed commands
        print(__doc__)
        sys.exit(EXIT_INVALID)

    try:
        code = COMMANDS[command](arguments)
    except InvariantViolation as e:
        logger.error(f"Internal invariant violated: {e}")
        print(f"❌ Internal invariant violated: {e}", file=sys.stderr)
        sys.exit(EXIT_INVARIANT)
    except ValueError as e:
        print(f"❌ Invalid parameters: {e}", file=sys.stderr)
        sys.exit(EXIT_INVALID)
    if code:
        sys.exit(code)


if __name__ == "__main__":
    main()

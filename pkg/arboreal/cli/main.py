"""Command line front end."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from contextlib import ExitStack
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from typing import Any, NoReturn, Optional

import regex

from ..algebra.factorization import NotSquarefreeError, UnsupportedFieldError
from ..algebra.fields import FieldMismatchError, NotPrimeError
from ..algebra.polynomials import ZeroPolynomialError, parse_poly
from ..caps import CAP_DEFAULTS, CapExceededError, use_caps
from ..dynamics.discriminants import disc_iterate_radical, disc_param
from ..dynamics.genericity import CharacteristicError, is_in_H
from ..dynamics.maps import InseparableMapError, NoCriticalPointsError, parse_map
from ..dynamics.orbits import BadPrimeError
from ..experiments.char2 import char2_affine_fpp, char2_quadratic_scan
from ..experiments.chebotarev import (
    ForbiddenParametersError,
    cheb_scan,
    field_of_order,
    frob_sample,
)
from ..experiments.orbit_primes import orbit_prime_density
from ..utils import progress
from ..wreath.distributions import fpp, fpp_threshold, pattern_distribution, sample_patterns
from ..wreath.trees import ShapeMismatchError
from .serialization import Char2FppReport, FppReport, OutputLike, SampleReport, dumps, save_report

__all__ = ["RunConfig", "UsageError", "COMMANDS", "run"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAP = 3


class UsageError(Exception):
    """Invalid command line."""


_INVALID: tuple[type[Exception], ...] = (
    UsageError,
    ValueError,
    ArithmeticError,
    FieldMismatchError,
    NotPrimeError,
    ZeroPolynomialError,
    NotSquarefreeError,
    UnsupportedFieldError,
    ShapeMismatchError,
    InseparableMapError,
    NoCriticalPointsError,
    BadPrimeError,
    CharacteristicError,
    ForbiddenParametersError,
)


@dataclass
class RunConfig:
    """Parsed command line.

    Attributes
    ----------
    command : str
        Subcommand.
    field : str
        Field tag, ``Q`` or ``q=P^K``.
    poly : str, optional
        Polynomial or rational map string.
    d, n, N, q, b, X : int, optional
        Numeric parameters.
    a0 : str
        Starting point of the orbit.
    samples : int, optional
        Number of random draws.
    seed : int, optional
        Seed of randomized commands.
    output : OutputLike
        ``csv`` or ``json``.
    out : str, optional
        File to write the report to instead of standard output.
    workers : int
        Worker processes for scans.
    show_progress : bool
        Whether to show progress bars.
    verbosity : int
        Number of ``-v`` flags.
    epsilon : float, optional
        Threshold for the fixed-point-proportion depth search.
    method : str, optional
        Computation method.
    caps : dict[str, int]
        Cap overrides.
    """

    command: str
    field: str = "Q"
    poly: Optional[str] = None
    d: Optional[int] = None
    n: Optional[int] = None
    N: Optional[int] = None
    q: Optional[int] = None
    b: Optional[int] = None
    X: Optional[int] = None
    a0: str = "0"
    samples: Optional[int] = None
    seed: Optional[int] = None
    output: OutputLike = "csv"
    out: Optional[str] = None
    workers: int = 1
    show_progress: bool = False
    verbosity: int = 0
    epsilon: Optional[float] = None
    method: Optional[str] = None
    caps: dict[str, int] = dataclass_field(default_factory=dict)

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> RunConfig:
        values = vars(ns)
        caps = dict(_parse_cap(c) for c in values.pop("cap") or [])
        return cls(**values, caps=caps)

    def require(self, *names: str) -> tuple[Any, ...]:
        """Returns the named parameters of a command, raising a :class:`UsageError` if one is missing."""
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            flags = ", ".join(f"--{name}" for name in missing)
            raise UsageError(f"{self.command} requires {flags}.")
        return tuple(getattr(self, name) for name in names)

    def validate(self) -> None:
        """Checks the command independent preconditions."""
        if self.workers < 1:
            raise UsageError(f"--workers must be positive, got {self.workers}.")
        if self.samples is not None and self.samples < 1:
            raise UsageError(f"--samples must be positive, got {self.samples}.")
        if self.seed is not None and not 0 <= self.seed < 2**64:
            raise UsageError("--seed must be a 64-bit unsigned integer.")


def _parse_cap(text: str) -> tuple[str, int]:
    match = regex.fullmatch(r"\s*(\w+)\s*=\s*(\d+)\s*", text)
    if match is None:
        raise UsageError(f"--cap expects NAME=VALUE, got {text!r}.")
    name, value = match.group(1), int(match.group(2))
    if name not in CAP_DEFAULTS:
        raise UsageError(f"Unknown cap {name}, expected one of {', '.join(CAP_DEFAULTS)}.")
    return name, value


# ----------------------------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------------------------


def _wreath_dist(config: RunConfig) -> Any:
    d, n = config.require("d", "n")
    return pattern_distribution(d, n)


def _wreath_fpp(config: RunConfig) -> Any:
    d, n = config.require("d", "n")
    method = config.method or "recursive"
    value = fpp(d, n, method)  # type: ignore[arg-type]
    n0 = fpp_threshold(d, config.epsilon) if config.epsilon is not None else None
    return FppReport(d, n, method, value, config.epsilon, n0)


def _wreath_sample(config: RunConfig) -> Any:
    d, n, samples, seed = config.require("d", "n", "samples", "seed")
    tallies = sample_patterns(d, n, samples, seed, config.workers)
    return SampleReport(d, n, samples, seed, dict(sorted(tallies.items())))


def _dyn_check_h(config: RunConfig) -> Any:
    poly, N = config.require("poly", "N")
    return is_in_H(parse_poly(poly, config.field), N)


def _dyn_disc(config: RunConfig) -> Any:
    (poly,) = config.require("poly")
    if config.n is not None:
        return disc_iterate_radical(parse_poly(poly, config.field), config.n)
    return disc_param(parse_map(poly, config.field))


def _exp_cheb_scan(config: RunConfig) -> Any:
    q, d, n, seed = config.require("q", "d", "n", "seed")
    b = config.b if config.b is not None else 1
    return cheb_scan(q, b, d, n, seed, config.workers)


def _exp_frob(config: RunConfig) -> Any:
    q, poly, n = config.require("q", "poly", "n")
    if config.samples is not None:
        config.require("seed")
    f = parse_poly(poly, field_of_order(q))
    return frob_sample(f, n, config.samples, config.seed, config.workers)


def _exp_orbit_primes(config: RunConfig) -> Any:
    poly, X = config.require("poly", "X")
    return orbit_prime_density(parse_poly(poly, "Q"), config.a0, X, config.epsilon)


def _exp_char2(config: RunConfig) -> Any:
    (n,) = config.require("n")
    method = config.method or "divisibility"
    values = {m: char2_affine_fpp(m, method) for m in range(1, n + 1)}  # type: ignore[arg-type]
    return Char2FppReport(method, values)


def _exp_char2_quad(config: RunConfig) -> Any:
    q, n = config.require("q", "n")
    if q < 2 or q & (q - 1):
        raise UsageError(f"--q must be a power of 2, got {q}.")
    return char2_quadratic_scan(q.bit_length() - 1, n)


COMMANDS: dict[str, tuple[Callable[[RunConfig], Any], str]] = {
    "wreath-dist": (_wreath_dist, "exact cycle-pattern distribution of [S_d]^n"),
    "wreath-fpp": (_wreath_fpp, "fixed-point proportion of [S_d]^n"),
    "wreath-sample": (_wreath_sample, "Monte Carlo cycle patterns of [S_d]^n"),
    "dyn-check-h": (_dyn_check_h, "membership conditions of a polynomial"),
    "dyn-disc": (_dyn_disc, "discriminant of phi(x) - T, or of f^n(x) - T with --n"),
    "exp-cheb-scan": (_exp_cheb_scan, "pattern census over all polynomials of degree d"),
    "exp-frob": (_exp_frob, "cycle patterns of f^n(x) - alpha"),
    "exp-orbit-primes": (_exp_orbit_primes, "density of primes dividing an orbit"),
    "exp-char2": (_exp_char2, "fixed-point proportions of the affine groups over F_2[Y]/(Y^n)"),
    "exp-char2-quad": (_exp_char2_quad, "factor degrees of iterated quadratics over GF(2^k)"),
}


# ----------------------------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", default="Q", help="field tag, Q or q=P^K (default: Q)")
    common.add_argument("--poly", help="ascending coefficients, e.g. 1,0,1, or num=..;den=..")
    common.add_argument("--d", type=int, help="degree")
    common.add_argument("--n", type=int, help="iterate or depth")
    common.add_argument("--N", type=int, help="orbit length of the collision check")
    common.add_argument("--q", type=int, help="field order")
    common.add_argument("--b", type=int, help="leading coefficient (default: 1)")
    common.add_argument("--X", type=int, help="prime bound")
    common.add_argument("--a0", default="0", help="rational starting point (default: 0)")
    common.add_argument("--samples", type=int, help="number of random draws")
    common.add_argument("--seed", type=int, help="seed, required by randomized commands")
    common.add_argument("--epsilon", type=float, help="threshold for the FPP depth search")
    common.add_argument("--method", help="computation method")
    common.add_argument("--output", choices=["csv", "json"], default="csv", help="encoding (default: csv)")
    common.add_argument("--out", help="write the report to this file")
    common.add_argument("--workers", type=int, default=1, help="worker processes (default: 1)")
    common.add_argument("--progress", dest="show_progress", action="store_true", help="show progress bars")
    common.add_argument("-v", dest="verbosity", action="count", default=0, help="more logging")
    common.add_argument("--cap", action="append", metavar="NAME=VALUE", help="override a budget cap")

    parser = _Parser(prog="arboreal", description="Galois groups of iterates, exact statistics.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        commands.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s"
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Runs one command and writes its report.

    Parameters
    ----------
    argv : Sequence[str], optional
        Arguments without the program name. Defaults to ``None`` (``sys.argv``).

    Returns
    -------
    int
        ``0`` on success, ``2`` on invalid input, ``3`` if a budget cap is exceeded.
    """
    try:
        config = RunConfig.from_namespace(_build_parser().parse_args(argv))
        config.validate()
    except UsageError as e:
        print(f"arboreal: error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as e:
        return int(e.code or 0)

    _configure_logging(config.verbosity)
    command, _ = COMMANDS[config.command]
    try:
        with ExitStack() as stack:
            stack.enter_context(use_caps(**config.caps))
            if config.show_progress:
                stack.enter_context(progress())
            report = command(config)
    except CapExceededError as e:
        print(f"arboreal: cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except _INVALID as e:
        print(f"arboreal: error: {e}", file=sys.stderr)
        return EXIT_INVALID

    if config.out is not None:
        save_report(report, config.out, config.output)
        logger.info("report written to %s", config.out)
    else:
        sys.stdout.write(dumps(report, config.output))
    return EXIT_OK


def main() -> None:
    sys.exit(run())

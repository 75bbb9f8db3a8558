"""CSV and JSON encodings of reports."""

from __future__ import annotations

import csv
import io
import json
import pathlib
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal, Optional, TypeAlias

from ..algebra.polynomials import Poly, format_poly, parse_poly
from ..dynamics.discriminants import DiscParam, IterateDiscriminant
from ..dynamics.genericity import ConditionVerdict, HReport, Verdict
from ..experiments.char2 import Char2QuadReport
from ..experiments.chebotarev import FrobReport, ScanReport
from ..experiments.orbit_primes import OrbitDensityReport
from ..wreath.distributions import PatternDistribution
from ..wreath.permutations import CyclePattern

__all__ = [
    "Table",
    "FppReport",
    "SampleReport",
    "Char2FppReport",
    "SCHEMAS",
    "to_table",
    "from_table",
    "dumps",
    "loads",
    "save_report",
    "OutputLike",
]

Cell: TypeAlias = int | float | str | bool
OutputLike: TypeAlias = Literal["csv", "json"]


@dataclass(frozen=True)
class FppReport:
    """Fixed-point proportion of ``[S_d]^n``, optionally with the least depth below ``epsilon``."""

    d: int
    n: int
    method: str
    value: Fraction
    epsilon: Optional[float] = None
    n0: Optional[int] = None


@dataclass(frozen=True)
class SampleReport:
    """Monte Carlo pattern tallies of uniform elements of ``[S_d]^n``."""

    d: int
    n: int
    samples: int
    seed: int
    tallies: dict[CyclePattern, int] = field(default_factory=dict)


@dataclass(frozen=True)
class Char2FppReport:
    """Fixed-point proportions of the affine groups ``R_m x| R_m^*`` for ``m = 1, ..., n``."""

    method: str
    values: dict[int, Fraction] = field(default_factory=dict)


@dataclass
class Table:
    """Flat intermediate form of a report.

    Attributes
    ----------
    kind : str
        Report kind, a key of :data:`SCHEMAS`.
    rows : list[dict[str, Cell]]
        Rows keyed by the columns of the schema.
    meta : dict[str, Cell]
        Non-tabular fields.
    """

    kind: str
    rows: list[dict[str, Cell]] = field(default_factory=list)
    meta: dict[str, Cell] = field(default_factory=dict)

    @property
    def columns(self) -> tuple[str, ...]:
        return SCHEMAS[self.kind]


SCHEMAS: dict[str, tuple[str, ...]] = {
    "dist": ("pattern", "numerator", "denominator"),
    "fpp": ("d", "n", "fpp_num", "fpp_den"),
    "sample": ("pattern", "count"),
    "h": ("condition", "verdict", "witness"),
    "disc": ("kind", "poly", "exponent"),
    "disc-iterate": ("kind", "poly"),
    "scan": ("q", "b", "d", "n", "pattern", "count", "rho_num", "rho_den", "deviation"),
    "frob": ("alpha_count", "pattern", "count", "skipped"),
    "orbit": ("X", "good_primes", "dividing", "density_num", "density_den", "bad_primes"),
    "char2": ("n", "fpp_num", "fpp_den"),
    "char2-quad": ("profile", "count"),
}


def _flag(value: Cell) -> bool:
    return value in (True, 1, "1", "True", "true")


def _fractions(text: Cell) -> tuple[Fraction, ...]:
    return tuple(Fraction(t) for t in str(text).split())


def _optional(meta: dict[str, Cell], key: str, cast: Callable[[Any], Any]) -> Any:
    value = meta.get(key)
    return None if value is None or value == "" else cast(value)


# ----------------------------------------------------------------------------------------
# encoders
# ----------------------------------------------------------------------------------------


def _encode_dist(dist: PatternDistribution) -> Table:
    rows: list[dict[str, Cell]] = [
        {"pattern": str(p), "numerator": r.numerator, "denominator": r.denominator}
        for p, r in dist.items()
    ]
    return Table("dist", rows, {"d": dist.d, "n": dist.n, "group_order": dist.group_order})


def _encode_fpp(report: FppReport) -> Table:
    row: dict[str, Cell] = {
        "d": report.d,
        "n": report.n,
        "fpp_num": report.value.numerator,
        "fpp_den": report.value.denominator,
    }
    meta: dict[str, Cell] = {"method": report.method}
    if report.epsilon is not None:
        meta["epsilon"] = report.epsilon
    if report.n0 is not None:
        meta["n0"] = report.n0
    return Table("fpp", [row], meta)


def _encode_sample(report: SampleReport) -> Table:
    rows: list[dict[str, Cell]] = [
        {"pattern": str(p), "count": c} for p, c in sorted(report.tallies.items())
    ]
    meta: dict[str, Cell] = {
        "d": report.d,
        "n": report.n,
        "samples": report.samples,
        "seed": report.seed,
    }
    return Table("sample", rows, meta)


def _encode_h(report: HReport) -> Table:
    rows: list[dict[str, Cell]] = [
        {"condition": i, "verdict": v.verdict.value, "witness": v.witness or ""}
        for i, v in sorted(report.conditions.items())
    ]
    meta: dict[str, Cell] = {
        "field": report.f.spec.name,
        "poly": format_poly(report.f),
        "N": report.N,
        "overall": report.overall,
    }
    return Table("h", rows, meta)


def _encode_disc(report: DiscParam) -> Table:
    rows: list[dict[str, Cell]] = [{"kind": "delta", "poly": format_poly(report.delta), "exponent": 1}]
    rows += [{"kind": "factor", "poly": format_poly(g), "exponent": e} for g, e in report.critical_product]
    return Table("disc", rows, {"field": report.delta.spec.name})


def _encode_disc_iterate(report: IterateDiscriminant) -> Table:
    rows: list[dict[str, Cell]] = [
        {"kind": "radical", "poly": format_poly(report.radical)},
        {"kind": "critical_orbit", "poly": format_poly(report.critical_orbit)},
    ]
    meta: dict[str, Cell] = {
        "field": report.radical.spec.name,
        "matches": report.matches_critical_orbit,
    }
    return Table("disc-iterate", rows, meta)


def _encode_scan(report: ScanReport) -> Table:
    rows: list[dict[str, Cell]] = [
        {
            "q": report.q,
            "b": report.b,
            "d": report.d,
            "n": report.n,
            "pattern": str(row.pattern),
            "count": row.count,
            "rho_num": row.rho.numerator,
            "rho_den": row.rho.denominator,
            "deviation": row.deviation,
        }
        for row in report.comparison
    ]
    meta: dict[str, Cell] = {
        "non_squarefree": report.non_squarefree,
        "h_members": report.h_members,
        "seed": report.seed,
        "bound": report.bound,
        "max_deviation": report.max_deviation,
    }
    return Table("scan", rows, meta)


def _encode_frob(report: FrobReport) -> Table:
    rows: list[dict[str, Cell]] = [
        {"alpha_count": report.alpha_count, "pattern": str(p), "count": c, "skipped": report.skipped}
        for p, c in report.tallies.items()
    ]
    if not rows:
        rows = [{"alpha_count": report.alpha_count, "pattern": "", "count": 0, "skipped": report.skipped}]
    meta: dict[str, Cell] = {
        "field": report.f.spec.name,
        "poly": format_poly(report.f),
        "n": report.n,
        "exhaustive": report.exhaustive,
        "seed": report.seed,
    }
    return Table("frob", rows, meta)


def _encode_orbit(report: OrbitDensityReport) -> Table:
    density = report.density
    row: dict[str, Cell] = {
        "X": report.X,
        "good_primes": report.good_primes,
        "dividing": report.dividing,
        "density_num": density.numerator,
        "density_den": density.denominator,
        "bad_primes": " ".join(str(p) for p in report.bad_primes),
    }
    meta: dict[str, Cell] = {
        "poly": format_poly(report.f),
        "a0": str(report.a0),
        "fpp_ladder": " ".join(str(v) for v in report.fpp_ladder),
    }
    if report.epsilon is not None:
        meta["epsilon"] = report.epsilon
    if report.n0 is not None:
        meta["n0"] = report.n0
    return Table("orbit", [row], meta)


def _encode_char2(report: Char2FppReport) -> Table:
    rows: list[dict[str, Cell]] = [
        {"n": n, "fpp_num": v.numerator, "fpp_den": v.denominator}
        for n, v in sorted(report.values.items())
    ]
    return Table("char2", rows, {"method": report.method})


def _encode_char2_quad(report: Char2QuadReport) -> Table:
    rows: list[dict[str, Cell]] = [{"profile": str(p), "count": c} for p, c in report.profiles.items()]
    meta: dict[str, Cell] = {
        "k": report.k,
        "n": report.n,
        "non_squarefree": report.non_squarefree,
        "violations": ";".join(report.violations),
    }
    return Table("char2-quad", rows, meta)


ENCODERS: dict[type, Callable[[Any], Table]] = {
    PatternDistribution: _encode_dist,
    FppReport: _encode_fpp,
    SampleReport: _encode_sample,
    HReport: _encode_h,
    DiscParam: _encode_disc,
    IterateDiscriminant: _encode_disc_iterate,
    ScanReport: _encode_scan,
    FrobReport: _encode_frob,
    OrbitDensityReport: _encode_orbit,
    Char2FppReport: _encode_char2,
    Char2QuadReport: _encode_char2_quad,
}


# ----------------------------------------------------------------------------------------
# decoders
# ----------------------------------------------------------------------------------------


def _decode_dist(table: Table) -> PatternDistribution:
    entries = {
        CyclePattern.parse(str(r["pattern"])): Fraction(int(r["numerator"]), int(r["denominator"]))
        for r in table.rows
    }
    m = table.meta
    return PatternDistribution(int(m["d"]), int(m["n"]), entries, int(m["group_order"]))


def _decode_fpp(table: Table) -> FppReport:
    (row,) = table.rows
    m = table.meta
    return FppReport(
        int(row["d"]),
        int(row["n"]),
        str(m["method"]),
        Fraction(int(row["fpp_num"]), int(row["fpp_den"])),
        _optional(m, "epsilon", float),
        _optional(m, "n0", int),
    )


def _decode_sample(table: Table) -> SampleReport:
    m = table.meta
    tallies = {CyclePattern.parse(str(r["pattern"])): int(r["count"]) for r in table.rows}
    return SampleReport(int(m["d"]), int(m["n"]), int(m["samples"]), int(m["seed"]), tallies)


def _decode_h(table: Table) -> HReport:
    m = table.meta
    conditions = {
        int(r["condition"]): ConditionVerdict(Verdict(r["verdict"]), str(r["witness"]) or None)
        for r in table.rows
    }
    return HReport(parse_poly(str(m["poly"]), str(m["field"])), int(m["N"]), conditions)


def _decode_disc(table: Table) -> DiscParam:
    spec = str(table.meta["field"])
    delta: Optional[Poly] = None
    factors = []
    for r in table.rows:
        f = parse_poly(str(r["poly"]), spec)
        if r["kind"] == "delta":
            delta = f
        else:
            factors.append((f, int(r["exponent"])))
    if delta is None:
        raise ValueError("disc table without a delta row.")
    return DiscParam(delta, tuple(factors))


def _decode_disc_iterate(table: Table) -> IterateDiscriminant:
    spec = str(table.meta["field"])
    polys = {str(r["kind"]): parse_poly(str(r["poly"]), spec) for r in table.rows}
    return IterateDiscriminant(polys["radical"], polys["critical_orbit"])


def _decode_scan(table: Table) -> ScanReport:
    first = table.rows[0]
    m = table.meta
    tallies = {
        CyclePattern.parse(str(r["pattern"])): int(r["count"])
        for r in table.rows
        if int(r["count"]) > 0
    }
    return ScanReport(
        int(first["q"]),
        int(first["b"]),
        int(first["d"]),
        int(first["n"]),
        dict(sorted(tallies.items())),
        int(m["non_squarefree"]),
        int(m["h_members"]),
        int(m["seed"]),
        float(m["bound"]),
    )


def _decode_frob(table: Table) -> FrobReport:
    first = table.rows[0]
    m = table.meta
    tallies = {
        CyclePattern.parse(str(r["pattern"])): int(r["count"]) for r in table.rows if r["pattern"]
    }
    return FrobReport(
        parse_poly(str(m["poly"]), str(m["field"])),
        int(m["n"]),
        _flag(m["exhaustive"]),
        int(first["alpha_count"]),
        tallies,
        int(first["skipped"]),
        int(m["seed"]),
    )


def _decode_orbit(table: Table) -> OrbitDensityReport:
    (row,) = table.rows
    m = table.meta
    return OrbitDensityReport(
        parse_poly(str(m["poly"]), "Q"),
        Fraction(str(m["a0"])),
        int(row["X"]),
        int(row["good_primes"]),
        int(row["dividing"]),
        tuple(int(p) for p in str(row["bad_primes"]).split()),
        _fractions(m.get("fpp_ladder", "")),
        _optional(m, "epsilon", float),
        _optional(m, "n0", int),
    )


def _decode_char2(table: Table) -> Char2FppReport:
    values = {int(r["n"]): Fraction(int(r["fpp_num"]), int(r["fpp_den"])) for r in table.rows}
    return Char2FppReport(str(table.meta["method"]), values)


def _decode_char2_quad(table: Table) -> Char2QuadReport:
    m = table.meta
    profiles = {CyclePattern.parse(str(r["profile"])): int(r["count"]) for r in table.rows}
    violations = tuple(v for v in str(m.get("violations", "")).split(";") if v)
    return Char2QuadReport(int(m["k"]), int(m["n"]), profiles, int(m["non_squarefree"]), violations)


DECODERS: dict[str, Callable[[Table], Any]] = {
    "dist": _decode_dist,
    "fpp": _decode_fpp,
    "sample": _decode_sample,
    "h": _decode_h,
    "disc": _decode_disc,
    "disc-iterate": _decode_disc_iterate,
    "scan": _decode_scan,
    "frob": _decode_frob,
    "orbit": _decode_orbit,
    "char2": _decode_char2,
    "char2-quad": _decode_char2_quad,
}


def to_table(report: Any) -> Table:
    """Flattens a report into a :class:`Table`."""
    encoder = ENCODERS.get(type(report))
    if encoder is None:
        raise TypeError(f"No encoding for {type(report).__name__}.")
    return encoder(report)


def from_table(table: Table) -> Any:
    """Rebuilds the report a :class:`Table` was made from."""
    if table.kind not in DECODERS:
        raise ValueError(f"Unknown report kind {table.kind!r}.")
    return DECODERS[table.kind](table)


def _write_csv(table: Table) -> str:
    buffer = io.StringIO()
    buffer.write(f"# kind={table.kind}\n")
    for key, value in table.meta.items():
        buffer.write(f"# {key}={value}\n")
    writer = csv.DictWriter(buffer, fieldnames=table.columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(table.rows)
    return buffer.getvalue()


def _read_csv(text: str) -> Table:
    lines = text.splitlines()
    meta: dict[str, Cell] = {}
    start = 0
    while start < len(lines) and lines[start].startswith("#"):
        key, _, value = lines[start][1:].strip().partition("=")
        meta[key] = value
        start += 1
    kind = str(meta.pop("kind", ""))
    if kind not in SCHEMAS:
        raise ValueError(f"Unknown report kind {kind!r}.")
    rows: list[dict[str, Cell]] = [dict(r) for r in csv.DictReader(lines[start:])]
    return Table(kind, rows, meta)


def _write_json(table: Table) -> str:
    document: dict[str, Any] = {"kind": table.kind, **table.meta, "rows": table.rows}
    return json.dumps(document, indent=2) + "\n"


def _read_json(text: str) -> Table:
    document = json.loads(text)
    kind = document.pop("kind", "")
    if kind not in SCHEMAS:
        raise ValueError(f"Unknown report kind {kind!r}.")
    rows = document.pop("rows", [])
    return Table(kind, rows, document)


def dumps(report: Any, output: OutputLike = "csv") -> str:
    """Serializes a report.

    Exact rationals are written as separate numerator and denominator fields.
    CSV output starts with ``# key=value`` lines carrying the report kind and
    the non-tabular fields.

    Parameters
    ----------
    report : Any
        Any report produced by the library.
    output : OutputLike, optional
        ``"csv"`` or ``"json"``. Defaults to ``"csv"``.

    Returns
    -------
    str
        Serialized report.
    """
    table = to_table(report)
    if output == "csv":
        return _write_csv(table)
    if output == "json":
        return _write_json(table)
    raise ValueError(f"Unknown output format {output}.")


def loads(text: str, output: OutputLike = "csv") -> Any:
    """Parses a serialized report back into its report type."""
    if output == "csv":
        return from_table(_read_csv(text))
    if output == "json":
        return from_table(_read_json(text))
    raise ValueError(f"Unknown output format {output}.")


def save_report(report: Any, filepath: str, output: OutputLike = "csv") -> None:
    """Writes a serialized report to a file."""
    pathlib.Path(filepath).write_text(dumps(report, output), encoding="utf-8")

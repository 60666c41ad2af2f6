"""Command-line interface.

Usage:
    yuga table --format csv                  # 124-fortnight calendar
    yuga moon-position --fortnight 1         # 14 73/124
    yuga sun-position --fortnight 1
    yuga date --from Dhanistha:0 --to Uttarasadha:1/4 --epoch 530CE
    yuga sensitivity --error-deg 3
    yuga compare-models --max 248 --format csv
    yuga decompose 73/124
    yuga tax 12
    yuga intercalary --policy end-of-yuga-only

JSON and CSV output is byte-stable. Exit status: 0 success, 1 domain error,
2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Iterable, Sequence

import click

from . import calendar as cal
from . import precession as prec
from . import tally
from .rational import Rational, parse_rational, to_decimal_string

__all__ = ["main", "Settings", "load_settings"]

FORMATS = ("table", "json", "csv")

# Dhaniṣṭhā, first entry of the default name table, starts 22 segments after Aśvinī.
DEFAULT_NAMES_ORIGIN_DEG = Rational(880, 3)


@dataclass(frozen=True)
class Settings:
    format: str = "table"
    names: str | None = None
    rate: Rational = Rational(72)
    error_deg: Rational = Rational(2)
    origin_deg: Rational = DEFAULT_NAMES_ORIGIN_DEG
    places: int = 5


def load_settings(path: str | None) -> Settings:
    """Read the optional JSON config file. Unknown keys are rejected."""
    s = Settings()
    if path is None:
        return s
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise click.UsageError("config file must hold a JSON object")
    known = {"format", "names", "rate", "error_deg", "origin_deg", "places"}
    unknown = set(raw) - known
    if unknown:
        raise click.UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    updates: dict[str, Any] = {}
    try:
        if "format" in raw:
            if raw["format"] not in FORMATS:
                raise ValueError(f"format must be one of {FORMATS}")
            updates["format"] = raw["format"]
        if "names" in raw:
            updates["names"] = str(Path(path).parent / raw["names"])
        for key in ("rate", "error_deg", "origin_deg"):
            if key in raw:
                updates[key] = parse_rational(str(raw[key]))
        if "places" in raw:
            updates["places"] = int(raw["places"])
    except ValueError as exc:
        raise click.UsageError(f"bad config value: {exc}") from None
    return replace(s, **updates)


def _settings(ctx: click.Context, fmt: str | None, names: str | None, config: str | None) -> Settings:
    root = ctx.find_root().params
    s = load_settings(config or root.get("config"))
    fmt = fmt or root.get("fmt")
    names = names or root.get("names")
    if fmt:
        s = replace(s, format=fmt)
    if names:
        s = replace(s, names=names)
    return s


def _name_table(s: Settings, p: cal.YugaParameters) -> cal.NaksatraNameTable:
    try:
        if s.names is None:
            table = cal.default_name_table()
        else:
            table = cal.NaksatraNameTable.from_file(s.names, expected=None)
        return table.validate_for(p)
    except OSError as exc:
        raise click.ClickException(f"cannot read names file: {exc}") from None
    except cal.NameTableError as exc:
        raise click.ClickException(f"invalid names file: {exc}") from None


def common_options(f):
    f = click.option("--config", "config", type=click.Path(dir_okay=False), default=None,
                     help="JSON config file.")(f)
    f = click.option("--names", "names", type=click.Path(dir_okay=False), default=None,
                     help="Nakshatra name table, one name per line.")(f)
    f = click.option("--format", "fmt", type=click.Choice(FORMATS), default=None,
                     help="Output format.")(f)
    return f


def emit(rows: Sequence[dict[str, Any]], columns: Sequence[str], fmt: str, single: bool = False) -> None:
    out = click.get_text_stream("stdout")
    if fmt == "json":
        payload: Any = rows[0] if single else list(rows)
        out.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        out.write(render_table(rows, columns))


def render_table(rows: Iterable[dict[str, Any]], columns: Sequence[str]) -> str:
    cells = [list(columns)] + [[str(r[c]) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None, help="Default output format.")
@click.option("--config", type=click.Path(dir_okay=False), default=None, help="JSON config file.")
@click.option("--names", type=click.Path(dir_okay=False), default=None, help="Nakshatra name table.")
def main(fmt: str | None, config: str | None, names: str | None) -> None:
    """Five-year yuga calendar, precession dating and tally arithmetic."""


def _params(
    years: int | None,
    synodic: int | None,
    sidereal: int | None,
    count: int | None,
    solar: int | None,
    fortnights: int | None,
    traversals: int | None,
) -> cal.YugaParameters:
    d = cal.default_parameters()
    try:
        p = cal.YugaParameters.build(
            years=d.years if years is None else years,
            synodic_months=d.synodic_months if synodic is None else synodic,
            sidereal_months=d.sidereal_months if sidereal is None else sidereal,
            naksatra_count=d.naksatra_count if count is None else count,
        )
        overrides = {k: v for k, v in (("solar_months", solar), ("fortnights", fortnights),
                                       ("moon_traversals", traversals)) if v is not None}
        return replace(p, **overrides) if overrides else p
    except ValueError as exc:
        raise click.UsageError(f"invalid yuga parameters: {exc}") from None


def param_options(f):
    for flag, dest, helptext in reversed((
        ("--years", "years", "Years per yuga."),
        ("--solar-months", "solar", "Solar months (must be 12 x years)."),
        ("--synodic-months", "synodic", "Synodic months per yuga."),
        ("--sidereal-months", "sidereal", "Sidereal months per yuga."),
        ("--naksatras", "count", "Nakshatra segments on the circle."),
        ("--fortnights", "fortnights", "Fortnights (must be 2 x synodic months)."),
        ("--traversals", "traversals", "Moon traversals (sidereal months x nakshatras)."),
    )):
        f = click.option(flag, dest, type=int, default=None, help=helptext)(f)
    return f


@main.command("table")
@param_options
@common_options
@click.pass_context
def cmd_table(ctx, years, solar, synodic, sidereal, count, fortnights, traversals, fmt, names, config):
    """Moon and sun nakshatra for every fortnight of the yuga."""
    s = _settings(ctx, fmt, names, config)
    p = _params(years, synodic, sidereal, count, solar, fortnights, traversals)
    table = _name_table(s, p)
    rows = [r.as_row() for r in cal.yuga_table(p, table)]
    emit(rows, cal.TABLE_COLUMNS, s.format)


def _position_command(body: str):
    def command(ctx, fortnight, fmt, names, config):
        s = _settings(ctx, fmt, names, config)
        p = cal.default_parameters()
        table = _name_table(s, p)
        pos = cal.moon_position(p, fortnight) if body == "moon" else cal.sun_position(p, fortnight)
        rate = cal.moon_rate(p) if body == "moon" else cal.sun_rate(p)
        row = {
            "body": body,
            "fortnight": fortnight,
            "segment": pos.segment,
            "progress": str(pos.progress),
            "mixed": pos.mixed,
            "decimal": to_decimal_string(pos.total, s.places),
            "name": cal.naksatra_name(pos, table),
            "rate": str(rate),
        }
        emit([row], list(row), s.format, single=True)

    return command


for _body in ("moon", "sun"):
    _cmd = _position_command(_body)
    _cmd.__doc__ = f"Position of the {_body} after N fortnights."
    _cmd = click.pass_context(_cmd)
    _cmd = common_options(_cmd)
    _cmd = click.option("--fortnight", "-n", type=click.IntRange(min=0), required=True,
                        help="Fortnights elapsed since the yuga began.")(_cmd)
    main.command(f"{_body}-position")(_cmd)


def _parse_point(text: str, table: cal.NaksatraNameTable) -> tuple[int, Rational]:
    where, sep, frac = text.rpartition(":")
    if not sep or not where:
        raise click.BadParameter(f"expected <segment>:<progress>, got {text!r}")
    try:
        progress = parse_rational(frac)
    except ValueError:
        raise click.BadParameter(f"malformed progress fraction in {text!r}") from None
    if not (0 <= progress < 1):
        raise click.BadParameter(f"progress must lie in [0, 1) in {text!r}")
    if where.lstrip("-").isdigit():
        segment = int(where)
        if not 0 <= segment < len(table):
            raise click.BadParameter(f"segment out of range in {text!r}")
    else:
        try:
            segment = table.index_of(where)
        except KeyError:
            raise click.BadParameter(f"unknown nakshatra {where!r}") from None
    return segment, progress


def _rational_option(value: str | None, name: str) -> Rational | None:
    if value is None:
        return None
    try:
        return parse_rational(value)
    except ValueError:
        raise click.BadParameter(f"not a fraction: {value!r}", param_hint=name) from None


@main.command("date")
@click.option("--from", "point_a", required=True, help="Earlier solstice point, <name|segment>:<progress>.")
@click.option("--to", "point_b", required=True, help="Later solstice point, <name|segment>:<progress>.")
@click.option("--epoch", required=True, help="Known year of the later point, e.g. 530CE.")
@click.option("--rate", default=None, help="Years per degree of precession (default 72).")
@click.option("--error-deg", default=None, help="Observation error for the sensitivity band.")
@common_options
@click.pass_context
def cmd_date(ctx, point_a, point_b, epoch, rate, error_deg, fmt, names, config):
    """Date a solstice conjunction by precession from a known epoch.

    Segments are counted from the first entry of the name table, whose
    longitude is set by the ``origin_deg`` config key.
    """
    s = _settings(ctx, fmt, names, config)
    table = _name_table(s, cal.default_parameters())
    a = _parse_point(point_a, table)
    b = _parse_point(point_b, table)
    try:
        known = prec.parse_epoch(epoch)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--epoch") from None
    r = _rational_option(rate, "--rate")
    r = s.rate if r is None else r
    err = _rational_option(error_deg, "--error-deg")
    err = s.error_deg if err is None else err
    try:
        report = prec.date_from_naksatra_points(
            a, b, known, prec.PrecessionRate(r),
            prec.OriginConvention(s.origin_deg, "names-table"), err,
        )
    except ValueError as exc:
        raise click.ClickException(str(exc)) from None
    d = report.to_dict(s.places)
    if s.format == "table":
        flat = {
            "from": format(report.longitude_a),
            "to": format(report.longitude_b),
            "separation": d["separation"]["dms"],
            "elapsed_years": d["elapsed_years_exact"],
            "date": report.date.label,
            "band": " .. ".join(d["sensitivity"]["band"]),
        }
        emit([flat], list(flat), "table")
    elif s.format == "csv":
        flat = {
            "longitude_a": d["longitude_a"]["exact"],
            "longitude_b": d["longitude_b"]["exact"],
            "separation": d["separation"]["exact"],
            "elapsed_years_exact": d["elapsed_years_exact"],
            "elapsed_years_rounded": d["elapsed_years_rounded"],
            "date_astronomical": report.date.astronomical_year,
            "date_label": report.date.label,
            "error_deg": d["sensitivity"]["error_deg"],
            "band_early": report.band[0].label,
            "band_late": report.band[1].label,
        }
        emit([flat], list(flat), "csv")
    else:
        emit([d], [], "json", single=True)


@main.command("sensitivity")
@click.option("--error-deg", required=True, help="Observation error in degrees.")
@click.option("--rate", default=None, help="Years per degree of precession (default 72).")
@common_options
@click.pass_context
def cmd_sensitivity(ctx, error_deg, rate, fmt, names, config):
    """Years of dating error caused by an observation error."""
    s = _settings(ctx, fmt, names, config)
    err = _rational_option(error_deg, "--error-deg")
    r = _rational_option(rate, "--rate")
    r = s.rate if r is None else r
    try:
        years = prec.sensitivity(err, prec.PrecessionRate(r))
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--error-deg") from None
    row = {
        "error_deg": str(err),
        "rate_years_per_degree": str(r),
        "years": str(years),
        "years_decimal": to_decimal_string(years, s.places),
    }
    emit([row], list(row), s.format, single=True)


@main.command("compare-models")
@click.option("--max", "max_fortnight", type=click.IntRange(min=0), default=124, show_default=True,
              help="Last fortnight to compare.")
@param_options
@common_options
@click.pass_context
def cmd_compare(ctx, max_fortnight, years, solar, synodic, sidereal, count, fortnights, traversals,
                fmt, names, config):
    """Compare tally and rational moon positions, fortnight by fortnight."""
    s = _settings(ctx, fmt, names, config)
    p = _params(years, synodic, sidereal, count, solar, fortnights, traversals)
    results = [tally.models_agree(p, n) for n in range(max_fortnight + 1)]
    emit([r.as_row() for r in results], tally.COMPARISON_COLUMNS, s.format)
    bad = [r.fortnight for r in results if not r.agree]
    if bad:
        click.echo(f"models disagree at fortnights {bad}", err=True)
        ctx.exit(1)


@main.command("decompose")
@click.argument("fraction")
@common_options
@click.pass_context
def cmd_decompose(ctx, fraction, fmt, names, config):
    """Greedy unit-fraction decomposition of a proper fraction."""
    s = _settings(ctx, fmt, names, config)
    r = _rational_option(fraction, "FRACTION")
    try:
        dec = tally.greedy_unit_fractions(r)
    except tally.UnitFractionError as exc:
        raise click.BadParameter(str(exc), param_hint="FRACTION") from None
    row = {
        "fraction": str(r),
        "denominators": " ".join(map(str, dec.denominators)),
        "sum": str(dec),
    }
    if s.format == "json":
        emit([{**row, "denominators": list(dec.denominators)}], [], "json", single=True)
    else:
        emit([row], list(row), s.format)


@main.command("tax")
@click.argument("quantity", type=click.IntRange(min=0))
@common_options
@click.pass_context
def cmd_tax(ctx, quantity, fmt, names, config):
    """Separate every sixth measure of QUANTITY as tax."""
    s = _settings(ctx, fmt, names, config)
    tax, remainder = tally.sixth_share(quantity)
    row = {"quantity": quantity, "tax": tax, "producer_share": 5 * tax, "remainder": remainder}
    emit([row], list(row), s.format, single=True)


@main.command("intercalary")
@click.option("--policy", type=click.Choice([p.value for p in cal.IntercalaryPolicy] + ["explicit"]),
              default=cal.IntercalaryPolicy.END_OF_HALF_YUGA.value, show_default=True)
@click.option("--months", default=None, help="Comma-separated ordinals for --policy explicit.")
@param_options
@common_options
@click.pass_context
def cmd_intercalary(ctx, policy, months, years, solar, synodic, sidereal, count, fortnights, traversals,
                    fmt, names, config):
    """Synodic months that receive an intercalary month."""
    s = _settings(ctx, fmt, names, config)
    p = _params(years, synodic, sidereal, count, solar, fortnights, traversals)
    if policy == "explicit":
        if months is None:
            raise click.UsageError("--policy explicit requires --months")
        try:
            chosen: Any = [int(x) for x in months.split(",") if x.strip()]
        except ValueError:
            raise click.BadParameter("months must be integers", param_hint="--months") from None
    else:
        chosen = cal.IntercalaryPolicy(policy)
    try:
        ordinals = cal.intercalary_schedule(p, chosen)
    except cal.IntercalaryError as exc:
        raise click.BadParameter(str(exc), param_hint="--months") from None
    row = {"policy": policy, "count": len(ordinals), "months": " ".join(map(str, ordinals))}
    if s.format == "json":
        emit([{**row, "months": ordinals}], [], "json", single=True)
    else:
        emit([row], list(row), s.format)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

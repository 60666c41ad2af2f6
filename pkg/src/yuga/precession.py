"""Dating by precession of the solstice.

The method: place two solstice positions on the ecliptic, take the arc
between them, multiply by the precession rate (years per degree) and count
back from a known year. Every intermediate value stays an exact rational;
only the final year count is rounded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .rational import Rational, mod_circle, to_decimal_string

__all__ = [
    "DEGREES_PER_NAKSATRA",
    "EclipticLongitude",
    "Epoch",
    "PrecessionRate",
    "OriginConvention",
    "ASVINI_ORIGIN",
    "DEFAULT_RATE",
    "DatingReport",
    "naksatra_longitude",
    "separation",
    "elapsed_years",
    "round_half_away",
    "conjunction_date",
    "sensitivity",
    "date_from_naksatra_points",
    "format_dms",
    "parse_epoch",
]

DEGREES_PER_NAKSATRA = Rational(40, 3)  # 360/27 = 13 deg 20 min


@dataclass(frozen=True)
class EclipticLongitude:
    degrees: Rational

    def __post_init__(self) -> None:
        if not (0 <= self.degrees < 360):
            raise ValueError(f"longitude must lie in [0, 360), got {self.degrees}")

    @classmethod
    def wrap(cls, degrees: Rational | int) -> EclipticLongitude:
        return cls(mod_circle(Rational.coerce(degrees), 360))

    def __str__(self) -> str:
        return format_dms(self.degrees)


@dataclass(frozen=True, order=True)
class Epoch:
    """A year in astronomical numbering: 0 is 1 BCE, -1 is 2 BCE."""

    astronomical_year: int

    @property
    def label(self) -> str:
        y = self.astronomical_year
        return f"{1 - y} BCE" if y <= 0 else f"{y} CE"

    def __str__(self) -> str:
        return self.label

    @classmethod
    def ce(cls, year: int) -> Epoch:
        if year < 1:
            raise ValueError("CE years start at 1")
        return cls(year)

    @classmethod
    def bce(cls, year: int) -> Epoch:
        if year < 1:
            raise ValueError("BCE years start at 1")
        return cls(1 - year)


_EPOCH_RE = re.compile(r"^\s*(\d+)\s*(CE|BCE|AD|BC)\s*$", re.IGNORECASE)


def parse_epoch(text: str) -> Epoch:
    """Accept ``"530CE"``, ``"1151 BCE"`` or a bare astronomical year ``"-1150"``."""
    m = _EPOCH_RE.match(text)
    if m:
        year, era = int(m.group(1)), m.group(2).upper()
        return Epoch.bce(year) if era in ("BCE", "BC") else Epoch.ce(year)
    try:
        return Epoch(int(text.strip()))
    except ValueError:
        raise ValueError(f"cannot parse epoch {text!r}") from None


@dataclass(frozen=True)
class PrecessionRate:
    years_per_degree: Rational = field(default_factory=lambda: Rational(72))

    def __post_init__(self) -> None:
        if not isinstance(self.years_per_degree, Rational):
            object.__setattr__(self, "years_per_degree", Rational.coerce(self.years_per_degree))
        if self.years_per_degree <= 0:
            raise ValueError("precession rate must be positive")


DEFAULT_RATE = PrecessionRate()


@dataclass(frozen=True)
class OriginConvention:
    """Ecliptic longitude at which segment 0 of a naming scheme begins."""

    origin_degrees: Rational = field(default_factory=lambda: Rational(0))
    name: str = "asvini-0"


# Aśvinī starts at 0 deg; Uttarāṣādhā is then segment 20 and Dhaniṣṭhā 22.
ASVINI_ORIGIN = OriginConvention()


def naksatra_longitude(
    segment: int, progress: Rational, origin: OriginConvention = ASVINI_ORIGIN
) -> EclipticLongitude:
    if not (0 <= progress < 1):
        raise ValueError(f"progress must lie in [0, 1), got {progress}")
    if not 0 <= segment < 27:
        raise ValueError(f"segment must lie in [0, 27), got {segment}")
    return EclipticLongitude.wrap(origin.origin_degrees + (progress + segment) * DEGREES_PER_NAKSATRA)


def separation(a: EclipticLongitude, b: EclipticLongitude) -> Rational:
    """Shorter arc between two longitudes, in [0, 180]."""
    d = mod_circle(a.degrees - b.degrees, 360)
    return min(d, 360 - d)


def elapsed_years(a: EclipticLongitude, b: EclipticLongitude, rate: PrecessionRate = DEFAULT_RATE) -> Rational:
    return separation(a, b) * rate.years_per_degree


def round_half_away(r: Rational) -> int:
    q, rem = divmod(abs(r.numerator), r.denominator)
    if 2 * rem >= r.denominator:
        q += 1
    return -q if r.numerator < 0 else q


def conjunction_date(known: Epoch, elapsed: Rational) -> Epoch:
    if elapsed < 0:
        raise ValueError("elapsed years must be nonnegative")
    return Epoch(known.astronomical_year - round_half_away(elapsed))


def sensitivity(error_degrees: Rational, rate: PrecessionRate = DEFAULT_RATE) -> Rational:
    """Years of dating uncertainty produced by an observation error in degrees."""
    if error_degrees < 0:
        raise ValueError("observation error must be nonnegative")
    return error_degrees * rate.years_per_degree


def format_dms(degrees: Rational) -> str:
    """``880/3`` -> ``"293°20′"``; seconds appear only when minutes are fractional."""
    sign = "-" if degrees < 0 else ""
    degrees = abs(degrees)
    whole = degrees.floor()
    minutes = (degrees - whole) * 60
    m = minutes.floor()
    seconds = (minutes - m) * 60
    if not seconds:
        return f"{sign}{whole}°{m}′"
    s = str(seconds.numerator) if seconds.is_integer() else str(seconds)
    return f"{sign}{whole}°{m}′{s}″"


@dataclass(frozen=True)
class DatingReport:
    longitude_a: EclipticLongitude
    longitude_b: EclipticLongitude
    separation: Rational
    rate: PrecessionRate
    elapsed_exact: Rational
    elapsed_rounded: int
    known: Epoch
    date: Epoch
    error_degrees: Rational
    error_years: Rational
    band: tuple[Epoch, Epoch]

    def to_dict(self, places: int = 5) -> dict:
        def angle(x: Rational) -> dict:
            return {"exact": f"{x} deg", "dms": format_dms(x), "decimal": to_decimal_string(x, places)}

        return {
            "longitude_a": angle(self.longitude_a.degrees),
            "longitude_b": angle(self.longitude_b.degrees),
            "separation": angle(self.separation),
            "rate_years_per_degree": str(self.rate.years_per_degree),
            "elapsed_years_exact": str(self.elapsed_exact),
            "elapsed_years_rounded": self.elapsed_rounded,
            "known": {"astronomical": self.known.astronomical_year, "label": self.known.label},
            "date": {"astronomical": self.date.astronomical_year, "label": self.date.label},
            "sensitivity": {
                "error_deg": str(self.error_degrees),
                "years": str(self.error_years),
                "band": [self.band[0].label, self.band[1].label],
            },
        }


def date_from_naksatra_points(
    point_a: tuple[int, Rational],
    point_b: tuple[int, Rational],
    known: Epoch,
    rate: PrecessionRate = DEFAULT_RATE,
    origin: OriginConvention = ASVINI_ORIGIN,
    error_degrees: Rational | int = 2,
) -> DatingReport:
    """Full dating pipeline from two nakṣatra points.

    The band is ``known - round(elapsed ± error_years)``, earliest year first.
    It is not clipped at ``known``, so for small separations the late edge can
    fall after the known year.
    """
    lon_a = naksatra_longitude(*point_a, origin=origin)
    lon_b = naksatra_longitude(*point_b, origin=origin)
    sep = separation(lon_a, lon_b)
    elapsed = sep * rate.years_per_degree
    date = conjunction_date(known, elapsed)
    err = Rational.coerce(error_degrees)
    err_years = sensitivity(err, rate)
    early = Epoch(known.astronomical_year - round_half_away(elapsed + err_years))
    late = Epoch(known.astronomical_year - round_half_away(elapsed - err_years))
    return DatingReport(
        longitude_a=lon_a,
        longitude_b=lon_b,
        separation=sep,
        rate=rate,
        elapsed_exact=elapsed,
        elapsed_rounded=round_half_away(elapsed),
        known=known,
        date=date,
        error_degrees=err,
        error_years=err_years,
        band=(early, late),
    )

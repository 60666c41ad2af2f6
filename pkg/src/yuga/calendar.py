"""The five-year yuga: cycle constants, fortnightly moon and sun positions.

Positions are measured in nakṣatra segments from the yuga origin (the first
point of Dhaniṣṭhā in the default name table). Fortnight 0 is the opening
conjunction; fortnight ``n`` is the position after ``n`` fortnights of motion.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .rational import Rational, mod_circle, to_mixed

__all__ = [
    "YugaParameters",
    "NaksatraPosition",
    "NaksatraNameTable",
    "NameTableError",
    "IntercalaryError",
    "IntercalaryPolicy",
    "FortnightRecord",
    "default_parameters",
    "moon_rate",
    "sun_rate",
    "moon_position",
    "sun_position",
    "position_from_total",
    "accumulate_moon_position",
    "naksatra_name",
    "default_name_table",
    "yuga_table",
    "intercalary_schedule",
    "fold_diacritics",
]


@dataclass(frozen=True)
class YugaParameters:
    """Counts that define one yuga. Validated on construction."""

    years: int = 5
    solar_months: int = 60
    synodic_months: int = 62
    sidereal_months: int = 67
    naksatra_count: int = 27
    fortnights: int = 124
    moon_traversals: int = 1809

    def __post_init__(self) -> None:
        for name in (
            "years",
            "solar_months",
            "synodic_months",
            "sidereal_months",
            "naksatra_count",
            "fortnights",
            "moon_traversals",
        ):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if self.fortnights != 2 * self.synodic_months:
            raise ValueError(
                f"fortnights ({self.fortnights}) must equal 2 x synodic months ({self.synodic_months})"
            )
        if self.moon_traversals != self.sidereal_months * self.naksatra_count:
            raise ValueError(
                f"moon traversals ({self.moon_traversals}) must equal sidereal months x "
                f"nakshatra count ({self.sidereal_months} x {self.naksatra_count})"
            )
        if self.solar_months != 12 * self.years:
            raise ValueError(f"solar months ({self.solar_months}) must equal 12 x years ({self.years})")
        if self.synodic_months < self.solar_months:
            raise ValueError("synodic months cannot be fewer than solar months")

    @classmethod
    def build(
        cls,
        years: int = 5,
        synodic_months: int = 62,
        sidereal_months: int = 67,
        naksatra_count: int = 27,
    ) -> YugaParameters:
        """Construct from the independent counts, deriving the dependent ones."""
        return cls(
            years=years,
            solar_months=12 * years,
            synodic_months=synodic_months,
            sidereal_months=sidereal_months,
            naksatra_count=naksatra_count,
            fortnights=2 * synodic_months,
            moon_traversals=sidereal_months * naksatra_count,
        )

    @property
    def intercalary_count(self) -> int:
        return self.synodic_months - self.solar_months

    @property
    def sun_traversals(self) -> int:
        # one full circle of nakshatras per year
        return self.naksatra_count * self.years


def default_parameters() -> YugaParameters:
    return YugaParameters()


@dataclass(frozen=True)
class NaksatraPosition:
    segment: int
    progress: Rational

    def __post_init__(self) -> None:
        if not isinstance(self.progress, Rational):
            raise TypeError("progress must be a Rational")
        if not (0 <= self.progress < 1):
            raise ValueError(f"progress must lie in [0, 1), got {self.progress}")
        if self.segment < 0:
            raise ValueError(f"segment must be nonnegative, got {self.segment}")

    @property
    def total(self) -> Rational:
        return self.progress + self.segment

    @property
    def mixed(self) -> str:
        return str(to_mixed(self.total))


def position_from_total(total: Rational, naksatra_count: int) -> NaksatraPosition:
    wrapped = mod_circle(total, naksatra_count)
    segment = wrapped.floor()
    return NaksatraPosition(segment, wrapped - segment)


def moon_rate(p: YugaParameters) -> Rational:
    """Nakṣatras the moon crosses per fortnight (1809/124 for the default yuga)."""
    return Rational(p.moon_traversals, p.fortnights)


def sun_rate(p: YugaParameters) -> Rational:
    """Nakṣatras the sun crosses per fortnight.

    Not a datum of the source material: taken as one circle of nakṣatras per
    year, i.e. 135/124 for the default yuga. Pass ``rate=`` to
    :func:`sun_position` to use another value.
    """
    return Rational(p.sun_traversals, p.fortnights)


def _check_fortnight(fortnight: int) -> None:
    if isinstance(fortnight, bool) or not isinstance(fortnight, int) or fortnight < 0:
        raise ValueError(f"fortnight must be a nonnegative integer, got {fortnight!r}")


def moon_position(p: YugaParameters, fortnight: int) -> NaksatraPosition:
    _check_fortnight(fortnight)
    return position_from_total(moon_rate(p) * fortnight, p.naksatra_count)


def sun_position(p: YugaParameters, fortnight: int, rate: Rational | None = None) -> NaksatraPosition:
    _check_fortnight(fortnight)
    step = sun_rate(p) if rate is None else rate
    return position_from_total(step * fortnight, p.naksatra_count)


def accumulate_moon_position(p: YugaParameters, fortnight: int) -> NaksatraPosition:
    """Moon position by adding the fortnightly rate ``fortnight`` times.

    Wraps onto the circle after every step, as a hand computation would.
    """
    _check_fortnight(fortnight)
    rate = moon_rate(p)
    pos = Rational(0)
    for _ in range(fortnight):
        pos = mod_circle(pos + rate, p.naksatra_count)
    return position_from_total(pos, p.naksatra_count)


def fold_diacritics(text: str) -> str:
    """Lowercase ASCII-ish key: ``"Dhaniṣṭhā"`` -> ``"dhanistha"``."""
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(c for c in decomposed if not unicodedata.combining(c)).casefold().strip()


class NameTableError(ValueError):
    """A nakṣatra name table has the wrong length or repeated names."""


@dataclass(frozen=True)
class NaksatraNameTable:
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise NameTableError("nakshatra names must be unique")
        folded = [fold_diacritics(n) for n in self.names]
        if len(set(folded)) != len(folded):
            raise NameTableError("nakshatra names must be unique ignoring diacritics")
        if any(not n.strip() for n in self.names):
            raise NameTableError("empty nakshatra name")

    @property
    def origin_name(self) -> str:
        return self.names[0]

    def __len__(self) -> int:
        return len(self.names)

    def validate_for(self, p: YugaParameters) -> NaksatraNameTable:
        if len(self.names) != p.naksatra_count:
            raise NameTableError(
                f"name table has {len(self.names)} entries, expected {p.naksatra_count}"
            )
        return self

    def index_of(self, name: str) -> int:
        """Segment index of ``name``; diacritics and case are ignored."""
        key = fold_diacritics(name)
        for i, n in enumerate(self.names):
            if fold_diacritics(n) == key:
                return i
        raise KeyError(f"unknown nakshatra name: {name!r}")

    @classmethod
    def from_lines(cls, lines: Iterable[str], expected: int | None = 27) -> NaksatraNameTable:
        names = tuple(line.strip() for line in lines if line.strip())
        table = cls(names)
        if expected is not None and len(names) != expected:
            raise NameTableError(f"name table has {len(names)} entries, expected {expected}")
        return table

    @classmethod
    def from_file(cls, path: str | Path, expected: int | None = 27) -> NaksatraNameTable:
        with open(path, encoding="utf-8") as fh:
            return cls.from_lines(fh, expected)


def default_name_table() -> NaksatraNameTable:
    text = resources.files("yuga").joinpath("data/naksatras.txt").read_text(encoding="utf-8")
    return NaksatraNameTable.from_lines(text.splitlines())


def naksatra_name(pos: NaksatraPosition, table: NaksatraNameTable) -> str:
    return table.names[pos.segment]


@dataclass(frozen=True)
class FortnightRecord:
    fortnight: int
    moon: NaksatraPosition
    moon_name: str
    sun: NaksatraPosition
    sun_name: str

    def as_row(self) -> dict[str, object]:
        return {
            "fortnight": self.fortnight,
            "moon_segment": self.moon.segment,
            "moon_progress": str(self.moon.progress),
            "moon_mixed": self.moon.mixed,
            "moon_name": self.moon_name,
            "sun_segment": self.sun.segment,
            "sun_progress": str(self.sun.progress),
            "sun_mixed": self.sun.mixed,
            "sun_name": self.sun_name,
        }


TABLE_COLUMNS = (
    "fortnight",
    "moon_segment",
    "moon_progress",
    "moon_mixed",
    "moon_name",
    "sun_segment",
    "sun_progress",
    "sun_mixed",
    "sun_name",
)


def yuga_table(
    p: YugaParameters,
    table: NaksatraNameTable,
    sun_step: Rational | None = None,
) -> list[FortnightRecord]:
    """One record per fortnight of the yuga, numbered from 1."""
    table.validate_for(p)
    records = []
    for n in range(1, p.fortnights + 1):
        moon = moon_position(p, n)
        sun = sun_position(p, n, sun_step)
        records.append(
            FortnightRecord(n, moon, naksatra_name(moon, table), sun, naksatra_name(sun, table))
        )
    return records


class IntercalaryPolicy(enum.Enum):
    END_OF_HALF_YUGA = "end-of-half-yuga"
    END_OF_YUGA_ONLY = "end-of-yuga-only"


class IntercalaryError(ValueError):
    pass


def intercalary_schedule(
    p: YugaParameters,
    policy: IntercalaryPolicy | Sequence[int] = IntercalaryPolicy.END_OF_HALF_YUGA,
) -> list[int]:
    """Synodic-month ordinals (1-based) that are intercalary.

    ``END_OF_HALF_YUGA`` closes each of ``k`` equal divisions of the yuga with
    one extra month (``[31, 62]`` by default); ``END_OF_YUGA_ONLY`` puts all
    of them last. Any other sequence is taken as an explicit placement and
    validated.
    """
    k = p.intercalary_count
    m = p.synodic_months
    if policy is IntercalaryPolicy.END_OF_HALF_YUGA:
        return [-(-i * m // k) for i in range(1, k + 1)]
    if policy is IntercalaryPolicy.END_OF_YUGA_ONLY:
        return list(range(m - k + 1, m + 1))
    if isinstance(policy, (str, bytes)) or not isinstance(policy, Sequence):
        raise TypeError(f"unsupported intercalary policy {policy!r}")
    months = list(policy)
    if len(months) != k:
        raise IntercalaryError(f"expected {k} intercalary months, got {len(months)}")
    if any(not isinstance(x, int) or not 1 <= x <= m for x in months):
        raise IntercalaryError(f"intercalary months must lie in [1, {m}]")
    if any(a >= b for a, b in zip(months, months[1:])):
        raise IntercalaryError("intercalary months must be strictly increasing")
    return months

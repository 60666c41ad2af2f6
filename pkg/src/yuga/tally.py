"""Whole-number ("tally") arithmetic and its bridge to the rational model.

The tally model only counts, adds and separates counts into groups. Lunar
motion is tracked in units of 1/fortnights of a nakṣatra, so one fortnight
adds ``moon_traversals`` units and the circle holds
``naksatra_count * fortnights`` units (1809 and 3348 for the default yuga).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .calendar import YugaParameters, moon_position
from .rational import Rational

__all__ = [
    "TallyQuantity",
    "UnitFractionError",
    "UnitFractionDecomposition",
    "GreedyStep",
    "ModelComparison",
    "tally_circle",
    "scaled_moon_position",
    "sixth_share",
    "greedy_steps",
    "greedy_unit_fractions",
    "models_agree",
]


@dataclass(frozen=True)
class TallyQuantity:
    count: int
    unit_label: str = "measure"

    def __post_init__(self) -> None:
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 0:
            raise ValueError(f"tally count must be a nonnegative integer, got {self.count!r}")

    def __add__(self, other: TallyQuantity) -> TallyQuantity:
        if not isinstance(other, TallyQuantity):
            return NotImplemented
        if other.unit_label != self.unit_label:
            raise ValueError(f"cannot add {other.unit_label!r} to {self.unit_label!r}")
        return TallyQuantity(self.count + other.count, self.unit_label)

    def separate(self, group_size: int) -> tuple[int, TallyQuantity]:
        """Split into complete groups of ``group_size``; returns (groups, leftover)."""
        if group_size < 1:
            raise ValueError("group size must be positive")
        groups, left = divmod(self.count, group_size)
        return groups, TallyQuantity(left, self.unit_label)


def tally_circle(p: YugaParameters) -> int:
    return p.naksatra_count * p.fortnights


def scaled_moon_position(p: YugaParameters, fortnight: int) -> TallyQuantity:
    """Moon position as a count of 1/fortnights-nakṣatra units.

    Built by repeated addition, removing a whole circle whenever the count
    passes it. The fortnight is first folded into one yuga, which the cycle
    closure permits.
    """
    if isinstance(fortnight, bool) or not isinstance(fortnight, int) or fortnight < 0:
        raise ValueError(f"fortnight must be a nonnegative integer, got {fortnight!r}")
    label = f"amsa-1/{p.fortnights}-naksatra"
    circle = TallyQuantity(tally_circle(p), label)
    step = TallyQuantity(p.moon_traversals, label)
    pos = TallyQuantity(0, label)
    for _ in range(fortnight % p.fortnights):
        pos = pos + step
        _, pos = pos.separate(circle.count)
    return pos


def sixth_share(quantity: int) -> tuple[int, int]:
    """Set aside every sixth measure as tax.

    Returns ``(tax, remainder)`` where ``remainder`` is the final incomplete
    group of fewer than six measures; the producer keeps five per group.
    """
    if quantity < 0:
        raise ValueError("quantity must be nonnegative")
    tax, rest = TallyQuantity(quantity).separate(6)
    return tax, rest.count


class UnitFractionError(ValueError):
    pass


@dataclass(frozen=True)
class UnitFractionDecomposition:
    denominators: tuple[int, ...]

    def __post_init__(self) -> None:
        ds = self.denominators
        if any(d < 2 for d in ds) or any(a >= b for a, b in zip(ds, ds[1:])):
            raise UnitFractionError(f"denominators must be >= 2 and strictly increasing: {ds}")

    def total(self) -> Rational:
        s = Rational(0)
        for d in self.denominators:
            s = s + Rational(1, d)
        return s

    def __str__(self) -> str:
        return " + ".join(f"1/{d}" for d in self.denominators)


@dataclass(frozen=True)
class GreedyStep:
    denominator: int
    remainder: Rational


def greedy_steps(r: Rational) -> Iterator[GreedyStep]:
    """Yield each greedy step: the largest unit fraction not exceeding the
    current remainder, and what is left after subtracting it."""
    if not (0 < r < 1):
        raise UnitFractionError(f"expected 0 < r < 1, got {r}")
    rem = r
    while rem:
        n, d = rem.numerator, rem.denominator
        c = -(-d // n)
        nxt = Rational(n * c - d, d * c)
        if nxt.numerator >= n:
            raise AssertionError(f"greedy step did not shrink numerator at {rem}")
        rem = nxt
        yield GreedyStep(c, rem)


def greedy_unit_fractions(r: Rational) -> UnitFractionDecomposition:
    """Fibonacci–Sylvester greedy decomposition into distinct unit fractions.

    >>> greedy_unit_fractions(Rational(73, 124)).denominators
    (2, 12, 186)
    """
    return UnitFractionDecomposition(tuple(s.denominator for s in greedy_steps(r)))


@dataclass(frozen=True)
class ModelComparison:
    fortnight: int
    tally_units: int
    tally_circle: int
    fortnights: int
    rational_position: Rational

    @property
    def agree(self) -> bool:
        return Rational(self.tally_units, self.fortnights) == self.rational_position

    def __bool__(self) -> bool:
        return self.agree

    def as_row(self) -> dict[str, object]:
        return {
            "fortnight": self.fortnight,
            "tally_units": self.tally_units,
            "tally_circle": self.tally_circle,
            "rational_position": str(self.rational_position),
            "agree": "true" if self.agree else "false",
        }


COMPARISON_COLUMNS = ("fortnight", "tally_units", "tally_circle", "rational_position", "agree")


def models_agree(p: YugaParameters, fortnight: int) -> ModelComparison:
    """Compare the tally count (scaled back by ``fortnights``) with the rational
    position. Truthy when they are the same exact number."""
    units = scaled_moon_position(p, fortnight).count
    return ModelComparison(fortnight, units, tally_circle(p), p.fortnights, moon_position(p, fortnight).total)

"""Exact arithmetic for the five-year yuga calendar, precession dating and
whole-number tally models."""

from .calendar import (
    IntercalaryPolicy,
    NaksatraNameTable,
    NaksatraPosition,
    YugaParameters,
    default_name_table,
    default_parameters,
    intercalary_schedule,
    moon_position,
    moon_rate,
    naksatra_name,
    sun_position,
    sun_rate,
    yuga_table,
)
from .precession import (
    EclipticLongitude,
    Epoch,
    OriginConvention,
    PrecessionRate,
    conjunction_date,
    date_from_naksatra_points,
    elapsed_years,
    naksatra_longitude,
    sensitivity,
)
from .rational import (
    MixedNumber,
    Rational,
    from_mixed,
    mod_circle,
    normalize,
    rule_of_three,
    to_decimal_string,
    to_mixed,
)
from .tally import greedy_unit_fractions, models_agree, scaled_moon_position, sixth_share

__version__ = "0.1.0"

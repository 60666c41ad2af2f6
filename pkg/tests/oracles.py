"""Independent reference computations used to check the library.

Nothing here imports from ``yuga``; fractions.Fraction and plain integer
loops stand in as the second route.
"""

from __future__ import annotations

import math
from fractions import Fraction


def trial_division_gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    if a == 0 or b == 0:
        return max(a, b)
    return max(k for k in range(1, min(a, b) + 1) if a % k == 0 and b % k == 0)


def long_division_decimal(num: int, den: int, places: int) -> str:
    """Schoolbook long division, one digit at a time, half away from zero."""
    neg = (num < 0) != (den < 0)
    num, den = abs(num), abs(den)
    whole, rem = divmod(num, den)
    digits = []
    for _ in range(places):
        rem *= 10
        digits.append(rem // den)
        rem %= den
    # round on the exact tail: compare remaining fraction with one half
    if 2 * rem >= den:
        i = len(digits) - 1
        while i >= 0 and digits[i] == 9:
            digits[i] = 0
            i -= 1
        if i >= 0:
            digits[i] += 1
        else:
            whole += 1
    text = str(whole)
    if places:
        text += "." + "".join(map(str, digits))
    if neg and (whole or any(digits)):
        text = "-" + text
    return text


def fraction_round_decimal(x: Fraction, places: int) -> str:
    """Same rounding computed with Fraction and floor, as a cross-check."""
    scaled = abs(x) * 10**places
    q = math.floor(scaled + Fraction(1, 2))
    s = str(q).rjust(places + 1, "0")
    body = f"{s[:-places]}.{s[-places:]}" if places else s
    return ("-" + body) if x < 0 and q else body


def greedy_egyptian(x: Fraction) -> list[int]:
    out = []
    while x:
        c = math.ceil(1 / x)
        out.append(c)
        x -= Fraction(1, c)
    return out

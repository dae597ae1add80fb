"""Exact rational arithmetic and interval semantics on the line and the circle.

Intervals are always open sets of reals described by rational endpoints.
On the 360-degree circle an interval with low > high wraps through zero:
it denotes {a : 0 <= a < high} union {a : low < a < 360}, which on the
circle itself is a single open arc passing through 0.  All comparisons
are exact; no floating point appears anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import codes
from .errors import DomainError, ParseError

LINE = "line"
CIRCLE360 = "circle360"

FULL_TURN = Fraction(360)


def rat_floor(q: Fraction) -> int:
    """Largest integer less than or equal to q."""
    return math.floor(q)


def frac_angle(q: Fraction) -> Fraction:
    """360 * (q - floor(q)), the angle in [0, 360) swept by the fractional part."""
    q = Fraction(q)
    return FULL_TURN * (q - rat_floor(q))


def wrap360(q: Fraction) -> Fraction:
    """Reduce q modulo 360 into [0, 360)."""
    q = Fraction(q)
    return q - FULL_TURN * rat_floor(q / FULL_TURN)


@dataclass(frozen=True)
class RatInterval:
    """An open rational interval on the line or on the 360-degree circle."""

    low: Fraction
    high: Fraction
    space: str = LINE

    def __post_init__(self):
        object.__setattr__(self, "low", Fraction(self.low))
        object.__setattr__(self, "high", Fraction(self.high))
        if self.space == LINE:
            if not self.low < self.high:
                raise DomainError(f"line interval needs low < high, got [{self.low}, {self.high}]")
        elif self.space == CIRCLE360:
            if not (0 <= self.low < 360 and 0 <= self.high < 360):
                raise DomainError("circle interval endpoints must lie in [0, 360)")
            if self.low == self.high:
                raise DomainError("the full circle is not an interval")
        else:
            raise DomainError(f"unknown interval space {self.space!r}")

    @property
    def width(self) -> Fraction:
        if self.space == LINE:
            return self.high - self.low
        return (self.high - self.low) % FULL_TURN

    def arc(self) -> tuple[Fraction, Fraction]:
        """(start, length) of this interval viewed as an open arc on the circle.

        Line intervals wrap; they must be narrower than a full turn.
        """
        if self.space == CIRCLE360:
            return self.low, self.width
        if self.high - self.low >= FULL_TURN:
            raise DomainError("line interval too wide to view as a circle arc")
        return wrap360(self.low), self.high - self.low

    def __str__(self):
        return f"[{format_rational(self.low)},{format_rational(self.high)}]"


def interval_contains(iv: RatInterval, x: Fraction) -> bool:
    """Open membership; wrapped circle intervals include the point 0."""
    x = Fraction(x)
    if iv.space == LINE:
        return iv.low < x < iv.high
    x = wrap360(x)
    if iv.low < iv.high:
        return iv.low < x < iv.high
    return 0 <= x < iv.high or iv.low < x < 360


def interval_subset(a: RatInterval, b: RatInterval) -> bool:
    """Whether every point of a lies in b.

    Mixed spaces compare as arcs on the circle (a line interval is read
    through its wrap image), which is how the angle topologies consume
    line-valued enclosures.
    """
    if a.space == LINE and b.space == LINE:
        return b.low <= a.low and a.high <= b.high
    sa, la = a.arc()
    sb, lb = b.arc()
    delta = (sa - sb) % FULL_TURN
    return delta + la <= lb


def intervals_equal(a: RatInterval, b: RatInterval) -> bool:
    return interval_subset(a, b) and interval_subset(b, a)


@dataclass(frozen=True)
class DecimalGridInterval:
    """The decimal interval (m - c)/10^n .. (m + 1 + c)/10^n.

    n is the number of digits of precision; the accuracy factor c > 0
    widens each cell so neighbouring readings overlap.  n < 1 values are
    wider-than-unit tiers used only as enclosure outputs.
    """

    m: int
    digits: int
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        if self.c <= 0:
            raise DomainError("accuracy factor must be positive")

    @property
    def low(self) -> Fraction:
        scale = Fraction(10) ** self.digits
        return Fraction(self.m, 1) / scale - self.c / scale

    @property
    def high(self) -> Fraction:
        scale = Fraction(10) ** self.digits
        return Fraction(self.m + 1, 1) / scale + self.c / scale

    @property
    def width(self) -> Fraction:
        return (1 + 2 * self.c) / Fraction(10) ** self.digits

    @property
    def midpoint(self) -> Fraction:
        return Fraction(2 * self.m + 1, 2) / Fraction(10) ** self.digits

    def interval(self) -> RatInterval:
        return RatInterval(self.low, self.high, LINE)

    def code(self) -> int:
        return codes.interval_code(self.low, self.high)


def decimal_interval(x: Fraction, n_index: int, c: Fraction) -> DecimalGridInterval:
    """The standard decimal reading of x at oracle index n_index.

    Grid cell m = floor(10^(n_index+1) * x) at n_index + 1 digits of
    precision; the result always contains x.
    """
    if n_index < 0:
        raise DomainError("oracle index must be non-negative")
    x = Fraction(x)
    digits = n_index + 1
    m = rat_floor(x * Fraction(10) ** digits)
    return DecimalGridInterval(m, digits, Fraction(c))


def grid_from_endpoints(low: Fraction, high: Fraction, c: Fraction, *, min_digits: int = 1) -> DecimalGridInterval | None:
    """Recognize (low, high) as a decimal grid cell for accuracy factor c.

    Returns None when the endpoints are not of grid form.  min_digits
    may be lowered to accept the wide enclosure tiers.
    """
    c = Fraction(c)
    width = high - low
    if width <= 0:
        return None
    ratio = (1 + 2 * c) / width  # should be 10**digits
    digits = _exact_log10(ratio)
    if digits is None or digits < min_digits:
        return None
    m = low * Fraction(10) ** digits + c
    if m.denominator != 1:
        return None
    grid = DecimalGridInterval(int(m), digits, c)
    if grid.low != low or grid.high != high:
        return None
    return grid


def _exact_log10(q: Fraction) -> int | None:
    """The integer e with q == 10**e, or None."""
    if q <= 0:
        return None
    if q >= 1:
        num, den = q.numerator, q.denominator
        if den != 1:
            return None
        e = 0
        while num % 10 == 0:
            num //= 10
            e += 1
        return e if num == 1 else None
    inv = _exact_log10(1 / q)
    return None if inv is None else -inv


def grids_enclosing(low: Fraction, high: Fraction, c: Fraction, *, max_digits: int, min_digits: int = 1, strict: bool = False) -> list[DecimalGridInterval]:
    """All grid cells at min_digits..max_digits whose interval contains (low, high).

    With strict=True the containment must hold with strict endpoint
    inequalities (used when the enclosed set may attain its bounds).
    Ordered coarse to fine, then by m.
    """
    c = Fraction(c)
    out: list[DecimalGridInterval] = []
    for digits in range(min_digits, max_digits + 1):
        scale = Fraction(10) ** digits
        # (m - c)/scale <= low  and  high <= (m + 1 + c)/scale
        top = low * scale + c
        bottom = high * scale - 1 - c
        if strict:
            m_hi = _strict_floor(top)
            m_lo = _strict_ceil(bottom)
        else:
            m_hi = rat_floor(top)
            m_lo = -rat_floor(-bottom)
        for m in range(m_lo, m_hi + 1):
            out.append(DecimalGridInterval(m, digits, c))
    return out


def _strict_floor(q: Fraction) -> int:
    """Largest integer strictly less than q."""
    f = rat_floor(q)
    return f - 1 if f == q else f


def _strict_ceil(q: Fraction) -> int:
    """Smallest integer strictly greater than q."""
    f = -rat_floor(-q)
    return f + 1 if f == q else f


def grid_enclose(low: Fraction, high: Fraction, c: Fraction, *, strict: bool = True) -> DecimalGridInterval:
    """The finest single grid cell enclosing [low, high], allowing wide tiers.

    Searches digits downward from the finest level that could possibly
    fit; ties broken by the smallest m.  Always succeeds because tiers
    with non-positive digit counts grow without bound.
    """
    c = Fraction(c)
    width = high - low
    if width <= 0:
        raise DomainError("grid_enclose needs a nondegenerate range")
    digits = 1
    while (1 + 2 * c) / Fraction(10) ** digits <= width:
        digits -= 1
    while (1 + 2 * c) / Fraction(10) ** (digits + 1) > width:
        digits += 1
    while True:
        cells = grids_enclosing(low, high, c, max_digits=digits, min_digits=digits, strict=strict)
        if cells:
            return cells[0]
        digits -= 1


# -- parsing and printing -------------------------------------------------

def parse_rational(text: str) -> Fraction:
    """Parse 'p/q', an integer, or an exact decimal literal ('68.4' -> 342/5)."""
    text = text.strip()
    if not text:
        raise ParseError("empty rational literal")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational literal: {text!r}") from exc


def parse_interval(text: str) -> tuple[Fraction, Fraction]:
    """Parse '[a,b]' with rational or decimal endpoints."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"interval literal must look like [a,b]: {text!r}")
    parts = text[1:-1].split(",")
    if len(parts) != 2:
        raise ParseError(f"interval literal needs exactly two endpoints: {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def format_rational(q: Fraction) -> str:
    """Shortest exact decimal form when one exists, else 'p/q'."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    den = q.denominator
    twos = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    places = max(twos, fives)
    scaled = abs(q.numerator) * 10**places // q.denominator
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if q < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"

"""Effective topologies: coded bases, subset relations, and basic representations.

A topology here is a countable T0 basis together with an integer coding.
Every shipped instance carries an exact subset decider; the recursively
enumerable views (domain enumeration, subset-pair enumeration) are
derived from the deciders.  Searches that are only semi-decidable take
an explicit step budget (Fuel) and fail loudly with OutOfFuel rather
than diverge or silently truncate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator

from . import codes
from .codes import interval_code, rho_inv, tuple_decode, tuple_encode, unpair, zeta_inv
from .errors import DecodeError, DomainError, OutOfFuel
from .exactnum import (
    CIRCLE360,
    LINE,
    DecimalGridInterval,
    RatInterval,
    grid_from_endpoints,
    interval_contains,
    interval_subset,
    rat_floor,
    wrap360,
)


class Fuel:
    """A mutable step budget shared by the searches of one computation."""

    __slots__ = ("remaining", "initial")

    def __init__(self, steps: int):
        if steps <= 0:
            raise DomainError("fuel must be a positive step count")
        self.remaining = steps
        self.initial = steps

    def spend(self, amount: int = 1) -> None:
        if self.remaining < amount:
            self.remaining = 0
            raise OutOfFuel(f"step budget of {self.initial} exhausted")
        self.remaining -= amount

    def __repr__(self):
        return f"Fuel({self.remaining}/{self.initial})"


def _spend(fuel: Fuel | None, amount: int = 1) -> None:
    if fuel is not None:
        fuel.spend(amount)


class Verdict(Enum):
    """Outcome of a bounded semi-decidable query."""

    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"

    def __bool__(self):  # pragma: no cover - guard against accidental truthiness
        raise TypeError("Verdict is three-valued; compare explicitly")


@dataclass
class EffectiveTopology:
    """A coded basis: decode map, domain decider, and exact subset decider.

    supersets_fn, when present, lists the finitely many domain codes
    whose basis elements contain a given element; grid-style bases have
    one, the dense rational bases do not.
    """

    name: str
    decode_fn: Callable[[int], object]
    contains_fn: Callable[[int], bool]
    subset_fn: Callable[[object, object], bool]
    domain_fn: Callable[[Fuel | None], Iterator[int]]
    supersets_fn: Callable[[object], list[int]] | None = None
    factors: tuple["EffectiveTopology", ...] | None = None
    _cache: dict[int, object] = field(default_factory=dict, repr=False)

    def contains_code(self, code: int) -> bool:
        if code in self._cache:
            return True
        return self.contains_fn(code)

    def element(self, code: int):
        """Decode a domain code to its basis element (an interval or tuple)."""
        hit = self._cache.get(code)
        if hit is not None:
            return hit
        if not self.contains_fn(code):
            raise DecodeError(f"code {code} is not in the domain of {self.name}")
        elem = self.decode_fn(code)
        self._cache[code] = elem
        return elem

    def subset(self, b1: int, b2: int) -> bool:
        """Exact decision of element(b1) being a subset of element(b2)."""
        return self.subset_fn(self.element(b1), self.element(b2))

    def domain_codes(self, fuel: Fuel | None = None) -> Iterator[int]:
        """Fair deterministic enumeration of the coded domain."""
        return self.domain_fn(fuel)

    @property
    def has_finite_supersets(self) -> bool:
        return self.supersets_fn is not None

    def supersets_of(self, code: int, fuel: Fuel | None = None) -> Iterator[int]:
        """All domain codes whose elements contain element(code).

        Finite and arithmetic for grid bases; a filtered domain scan
        (infinite, fuel-metered) otherwise.
        """
        elem = self.element(code)
        return self.supersets_of_element(elem, fuel)

    def supersets_of_element(self, elem, fuel: Fuel | None = None) -> Iterator[int]:
        if self.supersets_fn is not None:
            return iter(self.supersets_fn(elem))

        def scan():
            for b in self.domain_codes(fuel):
                _spend(fuel)
                if self.subset_fn(elem, self.element(b)):
                    yield b

        return scan()

    def subset_pairs(self, fuel: Fuel | None = None) -> Iterator[tuple[int, int]]:
        """Fair enumeration of the subset relation, derived from the decider."""

        def gen():
            prefix: list[int] = []
            for b in self.domain_codes(fuel):
                prefix.append(b)
                last = len(prefix) - 1
                for i in range(last + 1):
                    _spend(fuel)
                    if self.subset(prefix[i], prefix[last]):
                        yield prefix[i], prefix[last]
                    if i != last and self.subset(prefix[last], prefix[i]):
                        yield prefix[last], prefix[i]

        return gen()

    def element_contains_point(self, code: int, point) -> bool:
        """Testing aid: open membership of a point in a decoded element."""
        return _element_contains(self.element(code), point)


def _element_contains(elem, point) -> bool:
    if isinstance(elem, RatInterval):
        return interval_contains(elem, point)
    if isinstance(elem, tuple):
        if not isinstance(point, tuple) or len(point) != len(elem):
            raise DomainError("point arity does not match product element")
        return all(_element_contains(e, p) for e, p in zip(elem, point))
    raise DomainError(f"cannot test membership in {elem!r}")


def _element_subset(a, b) -> bool:
    if isinstance(a, RatInterval) and isinstance(b, RatInterval):
        return interval_subset(a, b)
    if isinstance(a, tuple) and isinstance(b, tuple) and len(a) == len(b):
        return all(_element_subset(x, y) for x, y in zip(a, b))
    return False


# -- concrete bases --------------------------------------------------------

def topology_rational_intervals() -> EffectiveTopology:
    """All open intervals with rational endpoints, q < r, on the line."""

    def decode(code):
        q, r = codes.interval_decode(code)
        return RatInterval(q, r, LINE)

    def contains(code):
        q, r = codes.interval_decode(code)
        return q < r

    def domain(fuel):
        for z in itertools.count():
            _spend(fuel)
            if contains(z):
                yield z

    return EffectiveTopology(
        name="rational-intervals",
        decode_fn=decode,
        contains_fn=contains,
        subset_fn=interval_subset,
        domain_fn=domain,
    )


def topology_decimal_intervals(c: Fraction, *, min_digits: int = 1) -> EffectiveTopology:
    """Decimal intervals with accuracy factor c at min_digits or more digits.

    min_digits below 1 yields the extended tier family used for wide
    enclosure outputs; the standard basis keeps min_digits = 1.
    """
    c = Fraction(c)
    if c <= 0:
        raise DomainError("accuracy factor must be positive")
    extended = min_digits < 1

    def decode(code):
        q, r = codes.interval_decode(code)
        grid = grid_from_endpoints(q, r, c, min_digits=min_digits)
        if grid is None:
            raise DecodeError(f"code {code} is not a decimal grid interval for c={c}")
        return grid.interval()

    def contains(code):
        q, r = codes.interval_decode(code)
        return grid_from_endpoints(q, r, c, min_digits=min_digits) is not None

    def domain(fuel):
        # Parameter-ordered: pairs (digit tier, folded m) by ascending pair code.
        for t in itertools.count():
            _spend(fuel)
            tier, zm = unpair(t)
            digits = zeta_inv(tier) if extended else tier + 1
            m = zeta_inv(zm)
            yield DecimalGridInterval(m, digits, c).code()

    def supersets(elem):
        if not isinstance(elem, RatInterval) or elem.space != LINE:
            raise DomainError("decimal grid supersets need a line interval")
        max_digits = _max_grid_digits(elem.high - elem.low, c)
        out = []
        for digits in range(min_digits, max_digits + 1):
            scale = Fraction(10) ** digits
            m_hi = rat_floor(elem.low * scale + c)
            m_lo = -rat_floor(-(elem.high * scale - 1 - c))
            for m in range(m_lo, m_hi + 1):
                out.append(DecimalGridInterval(m, digits, c).code())
        return out

    name = f"decimal-intervals(c={c})" if not extended else f"decimal-tiers(c={c})"
    return EffectiveTopology(
        name=name,
        decode_fn=decode,
        contains_fn=contains,
        subset_fn=interval_subset,
        domain_fn=domain,
        supersets_fn=None if extended else supersets,
    )


def _max_grid_digits(width: Fraction, c: Fraction) -> int:
    """Finest digit count whose cells are still at least `width` wide."""
    digits = 0
    while (1 + 2 * c) / Fraction(10) ** (digits + 1) >= width:
        digits += 1
    return digits


def topology_circle360(variant: str = "all_rational", c: Fraction = Fraction(1, 10), scale: Fraction = Fraction(360)) -> EffectiveTopology:
    """The circle of circumference 360.

    variant "all_rational": every open arc with rational endpoints in
    [0, 360).  variant "decimal_grid": the arcs that are wrap images of
    decimal grid intervals times `scale` (the possible readings of an
    angle instrument driven by a decimal one).
    """
    if variant == "all_rational":
        return _circle_all_rational()
    if variant == "decimal_grid":
        return _circle_decimal_image(Fraction(c), Fraction(scale))
    raise DomainError(f"unknown circle basis variant {variant!r}")


def _circle_all_rational() -> EffectiveTopology:
    def decode(code):
        q, r = codes.interval_decode(code)
        return RatInterval(q, r, CIRCLE360)

    def contains(code):
        q, r = codes.interval_decode(code)
        return 0 <= q < 360 and 0 <= r < 360 and q != r

    def domain(fuel):
        for z in itertools.count():
            _spend(fuel)
            if contains(z):
                yield z

    return EffectiveTopology(
        name="circle360-rational",
        decode_fn=decode,
        contains_fn=contains,
        subset_fn=interval_subset,
        domain_fn=domain,
    )


def _circle_decimal_image(c: Fraction, scale: Fraction) -> EffectiveTopology:
    if c <= 0:
        raise DomainError("accuracy factor must be positive")
    turn = Fraction(360)

    def arc_endpoints(m: int, digits: int) -> tuple[Fraction, Fraction]:
        lo = scale * (Fraction(m) - c) / Fraction(10) ** digits
        hi = scale * (Fraction(m) + 1 + c) / Fraction(10) ** digits
        return wrap360(lo), wrap360(hi)

    def cell_width(digits: int) -> Fraction:
        return scale * (1 + 2 * c) / Fraction(10) ** digits

    min_digits = 1
    while cell_width(min_digits) >= turn:
        min_digits += 1

    def period(digits: int) -> int:
        # m and m + period give the same arc.
        p = turn * Fraction(10) ** digits / scale
        return int(p) if p.denominator == 1 else 0

    def params_of(code) -> tuple[int, int] | None:
        u, v = codes.interval_decode(code)
        if not (0 <= u < 360 and 0 <= v < 360 and u != v):
            return None
        width = (v - u) % turn
        for digits in itertools.count(min_digits):
            w = cell_width(digits)
            if w < width:
                return None
            if w == width:
                m = u * Fraction(10) ** digits / scale + c
                if m.denominator != 1:
                    return None
                per = period(digits)
                m_int = int(m) % per if per else int(m)
                if arc_endpoints(m_int, digits) == (u, v):
                    return m_int, digits
                return None

    def decode(code):
        params = params_of(code)
        if params is None:
            raise DecodeError(f"code {code} is not a scaled decimal arc")
        u, v = codes.interval_decode(code)
        return RatInterval(u, v, CIRCLE360)

    def contains(code):
        return params_of(code) is not None

    def domain(fuel):
        for t in itertools.count():
            _spend(fuel)
            tier, m = unpair(t)
            digits = tier + min_digits
            per = period(digits)
            if per and m >= per:
                continue
            u, v = arc_endpoints(m, digits)
            yield interval_code(u, v)

    def supersets(elem):
        if not isinstance(elem, RatInterval):
            raise DomainError("need an interval element")
        start, length = elem.arc()
        out = []
        for digits in itertools.count(min_digits):
            w = cell_width(digits)
            if w < length:
                break
            # arcs at this tier whose start lies within w - length behind ours
            lo_m = -rat_floor(-((start + length - w) * Fraction(10) ** digits / scale + c)) - 1
            hi_m = rat_floor(start * Fraction(10) ** digits / scale + c) + 1
            per = period(digits)
            for m in range(lo_m, hi_m + 1):
                u, v = arc_endpoints(m % per if per else m, digits)
                cand = RatInterval(u, v, CIRCLE360)
                if interval_subset(elem, cand):
                    code = interval_code(u, v)
                    if code not in out:
                        out.append(code)
        return out

    return EffectiveTopology(
        name=f"circle360-decimal(c={c},scale={scale})",
        decode_fn=decode,
        contains_fn=contains,
        subset_fn=interval_subset,
        domain_fn=domain,
        supersets_fn=supersets,
    )


def effective_product(ts) -> EffectiveTopology:
    """Componentwise product: codes are tuple codes, subset and domain hold componentwise."""
    ts = tuple(ts)
    if not ts:
        raise DomainError("effective_product needs at least one factor")
    n = len(ts)

    def decode(code):
        parts = tuple_decode(code, n)
        return tuple(t.element(p) for t, p in zip(ts, parts))

    def contains(code):
        parts = tuple_decode(code, n)
        return all(t.contains_fn(p) for t, p in zip(ts, parts))

    def subset(a, b):
        return _element_subset(a, b)

    def domain(fuel):
        prefixes: list[list[int]] = [[] for _ in ts]
        iters = [t.domain_codes(fuel) for t in ts]
        for level in itertools.count():
            grew = False
            for pref, it in zip(prefixes, iters):
                nxt = next(it, None)
                if nxt is not None:
                    pref.append(nxt)
                    grew = True
            if not grew and level >= max(len(p) for p in prefixes):
                return
            # all index tuples whose maximum is exactly `level`
            for combo in itertools.product(range(level + 1), repeat=n):
                if max(combo) != level:
                    continue
                if any(i >= len(pref) for pref, i in zip(prefixes, combo)):
                    continue
                _spend(fuel)
                yield tuple_encode([pref[i] for pref, i in zip(prefixes, combo)])

    supersets = None
    if all(t.has_finite_supersets for t in ts):

        def supersets(elem):
            per_factor = [t.supersets_fn(e) for t, e in zip(ts, elem)]
            return [tuple_encode(combo) for combo in itertools.product(*per_factor)]

    return EffectiveTopology(
        name="product(" + ", ".join(t.name for t in ts) + ")",
        decode_fn=decode,
        contains_fn=contains,
        subset_fn=subset,
        domain_fn=domain,
        supersets_fn=supersets,
        factors=ts,
    )


# -- basic representations -------------------------------------------------

@dataclass
class BasicRep:
    """An enumerable set of basis codes representing a point set.

    A point belongs to the represented set exactly when one of its local
    bases lies inside the decoded code set.  `member`, when present, is
    an exact decider for the code set itself.
    """

    topology: EffectiveTopology
    codes_fn: Callable[[Fuel | None], Iterator[int]]
    member: Callable[[int], bool] | None = None

    def codes(self, fuel: Fuel | None = None) -> Iterator[int]:
        return self.codes_fn(fuel)

    def prefix(self, count: int, fuel: Fuel | None = None) -> list[int]:
        """First `count` codes; raises OutOfFuel if the budget dies first."""
        out: list[int] = []
        for code in self.codes(fuel):
            out.append(code)
            if len(out) >= count:
                break
        return out

    def prefix_within(self, count: int, fuel: Fuel) -> list[int]:
        """Like prefix, but exhausting fuel yields the partial list instead."""
        out: list[int] = []
        try:
            for code in self.codes(fuel):
                out.append(code)
                if len(out) >= count:
                    break
        except OutOfFuel:
            pass
        return out

    def semi_member(self, code: int, fuel: Fuel) -> Verdict:
        """Three-valued membership: decide when possible, else scan within fuel."""
        if self.member is not None:
            return Verdict.YES if self.member(code) else Verdict.NO
        try:
            for candidate in self.codes(fuel):
                fuel.spend()
                if candidate == code:
                    return Verdict.YES
        except OutOfFuel:
            return Verdict.INCONCLUSIVE
        return Verdict.NO


def basic_rep_open(t: EffectiveTopology, contained_in_a: Callable[[int], bool]) -> BasicRep:
    """Basic representation of an open set from a decider of element-inside-A."""

    def gen(fuel):
        for r in t.domain_codes(fuel):
            _spend(fuel)
            if contained_in_a(r):
                yield r

    return BasicRep(
        topology=t,
        codes_fn=gen,
        member=lambda r: t.contains_fn(r) and contained_in_a(r),
    )


def basic_rep_closed(t: EffectiveTopology, meets_a: Callable[[int], bool]) -> BasicRep:
    """Basic representation of a closed set from a decider of element-meets-A."""

    def gen(fuel):
        for r in t.domain_codes(fuel):
            _spend(fuel)
            if meets_a(r):
                yield r

    return BasicRep(
        topology=t,
        codes_fn=gen,
        member=lambda r: t.contains_fn(r) and meets_a(r),
    )


def predicted_states(rep: BasicRep, oracles, fuel: Fuel | None = None) -> BasicRep:
    """Restrict a basic representation to codes whose data components appear
    in the ranges of the given complete oracles.

    Dovetails the representation's enumeration against the oracle index
    searches: candidates stay pending until every constrained component
    has been seen in the matching oracle's range.
    """
    oracles = list(oracles)
    factors = rep.topology.factors
    n = len(factors) if factors else 1
    k = len(oracles)
    if k > n:
        raise DomainError("more oracles than product components")

    bound_fuel = fuel

    def gen(fuel):
        fuel = fuel if fuel is not None else bound_fuel
        src = rep.codes(fuel)
        ranges: list[set[int]] = [set() for _ in range(k)]
        lengths = [0] * k
        pending: list[tuple[int, tuple[int, ...]]] = []
        seen: set[int] = set()
        exhausted = False
        while True:
            if not exhausted:
                try:
                    r = next(src)
                except StopIteration:
                    exhausted = True
                else:
                    if r not in seen:
                        seen.add(r)
                        pending.append((r, tuple_decode(r, n)))
            if exhausted and not pending:
                return
            for i, orc in enumerate(oracles):
                _spend(fuel)
                ranges[i].add(orc.at(lengths[i]))
                lengths[i] += 1
            still: list[tuple[int, tuple[int, ...]]] = []
            for r, comps in pending:
                _spend(fuel)
                if all(comps[i] in ranges[i] for i in range(k)):
                    yield r
                else:
                    still.append((r, comps))
            pending = still

    return BasicRep(topology=rep.topology, codes_fn=gen, member=None)

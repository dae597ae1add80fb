"""Oracles for points and the three constructive oracle transformers.

An oracle is a total map from indices to basis codes whose decoded range
is a local basis for a single point; it is this package's working
representation of a real (or product) value.  Transformer outputs
memoize their prefixes so repeated evaluation is deterministic, and all
witness searches are metered by an explicit Fuel.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterator

from .errors import DomainError, OutOfFuel
from .exactnum import DecimalGridInterval, decimal_interval, rat_floor
from .topology import EffectiveTopology, Fuel, topology_decimal_intervals

NESTED = "nested"
COMPLETE = "complete"


class Oracle:
    """A lazily evaluated, memoizing index -> code map over one topology."""

    def __init__(
        self,
        topology: EffectiveTopology,
        *,
        fn: Callable[[int], int] | None = None,
        stream: Iterator[int] | None = None,
        flags: frozenset[str] = frozenset(),
        name: str = "oracle",
    ):
        if (fn is None) == (stream is None):
            raise DomainError("an oracle needs exactly one of fn or stream")
        self.topology = topology
        self.flags = frozenset(flags)
        self.name = name
        self._fn = fn
        self._stream = stream
        self._cache: list[int] = []

    def at(self, n: int) -> int:
        """The n-th basis code; always the same value for the same n."""
        if n < 0:
            raise DomainError("oracle index must be non-negative")
        while len(self._cache) <= n:
            if self._fn is not None:
                self._cache.append(self._fn(len(self._cache)))
            else:
                try:
                    self._cache.append(next(self._stream))
                except StopIteration:
                    raise OutOfFuel(f"{self.name} produced only {len(self._cache)} codes") from None
        return self._cache[n]

    def element_at(self, n: int):
        return self.topology.element(self.at(n))

    def prefix(self, count: int) -> list[int]:
        return [self.at(i) for i in range(count)]

    @property
    def is_nested(self) -> bool:
        return NESTED in self.flags

    @property
    def is_complete(self) -> bool:
        return COMPLETE in self.flags

    def __repr__(self):
        return f"Oracle({self.name}, flags={sorted(self.flags)})"


def check_nested_prefix(oracle: Oracle, upto: int) -> bool:
    """Whether element(at(n+1)) is a subset of element(at(n)) for n < upto."""
    topo = oracle.topology
    return all(topo.subset(oracle.at(n + 1), oracle.at(n)) for n in range(upto))


def standard_decimal_oracle(x: Fraction, c: Fraction, topology: EffectiveTopology | None = None, *, checked_prefix: int = 8) -> Oracle:
    """The standard decimal oracle o_x with accuracy factor c.

    at(n) is the decimal reading of x with n+1 digits of precision.  The
    nested flag is recorded from an explicit prefix check rather than
    assumed (it holds for every c > 0, but the property is per-oracle).
    """
    x = Fraction(x)
    c = Fraction(c)
    topo = topology if topology is not None else topology_decimal_intervals(c)

    def fn(n: int) -> int:
        return decimal_interval(x, n, c).code()

    oracle = Oracle(topo, fn=fn, name=f"o_{x}")
    flags = {NESTED} if check_nested_prefix(oracle, checked_prefix) else set()
    oracle.flags = frozenset(flags)
    return oracle


def decimal_oracle_from_digits(int_part: int, digit_at: Callable[[int], int], c: Fraction, topology: EffectiveTopology | None = None) -> Oracle:
    """A decimal oracle for a possibly irrational point given by its digits.

    digit_at(i) is the i-th digit after the decimal point (0-based); the
    point is int_part.d0 d1 d2 ... and must be non-negative.
    """
    if int_part < 0:
        raise DomainError("digit-stream oracles cover non-negative points")
    c = Fraction(c)
    topo = topology if topology is not None else topology_decimal_intervals(c)
    prefix_value: list[int] = [int_part]

    def fn(n: int) -> int:
        while len(prefix_value) <= n + 1:
            d = digit_at(len(prefix_value) - 1)
            if not 0 <= d <= 9:
                raise DomainError(f"digit stream produced {d}")
            prefix_value.append(prefix_value[-1] * 10 + d)
        m = prefix_value[n + 1]  # floor(10**(n+1) * x)
        return DecimalGridInterval(m, n + 1, c).code()

    return Oracle(topo, fn=fn, name="o_digits", flags=frozenset({NESTED}))


def complete_oracle(phi: Oracle, fuel: Fuel) -> Oracle:
    """Every domain code whose element contains phi's point, enumerated.

    A code b belongs exactly when some phi(n) verifies element(phi(n))
    inside element(b); grid bases get the witness-first route (each
    phi(n) has finitely many supersets), dense bases get a fair
    domain-scan dovetail.
    """
    topo = phi.topology

    def witness_first() -> Iterator[int]:
        seen: set[int] = set()
        for n in itertools.count():
            fuel.spend()
            base = phi.at(n)
            for b in topo.supersets_of(base):
                fuel.spend()
                if b not in seen:
                    seen.add(b)
                    yield b

    def domain_scan() -> Iterator[int]:
        unmatched: list[int] = []
        domain = topo.domain_codes(fuel)
        matched: set[int] = set()
        for stage in itertools.count():
            fuel.spend()
            new_code = phi.at(stage)
            # retest old candidates against the newly revealed prefix element
            still: list[int] = []
            for b in unmatched:
                fuel.spend()
                if topo.subset(new_code, b):
                    matched.add(b)
                    yield b
                else:
                    still.append(b)
            unmatched = still
            for _ in range(stage + 1):
                b = next(domain)
                if b in matched:
                    continue
                hit = False
                for n in range(stage + 1):
                    fuel.spend()
                    if topo.subset(phi.at(n), b):
                        hit = True
                        break
                if hit:
                    matched.add(b)
                    yield b
                else:
                    unmatched.append(b)

    stream = witness_first() if topo.has_finite_supersets else domain_scan()
    return Oracle(topo, stream=stream, flags=frozenset({COMPLETE}), name=f"complete({phi.name})")


def nested_oracle(phi: Oracle, fuel: Fuel) -> Oracle:
    """Monotone refinement of phi: each output sits inside the previous one
    and inside the matching phi element, so the result is a nested oracle
    for the same point."""
    topo = phi.topology

    def stream() -> Iterator[int]:
        current = phi.at(0)
        yield current
        for n in itertools.count(1):
            bound = phi.at(n)
            for m in itertools.count():
                fuel.spend()
                candidate = phi.at(m)
                if topo.subset(candidate, current) and topo.subset(candidate, bound):
                    current = candidate
                    break
            yield current

    return Oracle(topo, stream=stream(), flags=frozenset({NESTED}), name=f"nested({phi.name})")


def convert_oracle(phi: Oracle, target: EffectiveTopology, fuel: Fuel) -> Oracle:
    """Re-express phi in another basis for the same topology.

    The n-th output is a target code b sandwiched between some
    element(phi(m)) and element(phi(n)); spaces may differ (line bases
    feeding circle bases compare through their wrap images).
    """
    from .topology import _element_subset as fits_inside

    source = phi.topology

    def find_for(n: int) -> int:
        outer = source.element(phi.at(n))
        direct = phi.at(n)
        if target.contains_fn(direct):
            # the sandwich holds trivially with m = n when the code is shared
            return direct
        if target.has_finite_supersets:
            for m in itertools.count():
                fuel.spend()
                inner = source.element(phi.at(m))
                for b in target.supersets_of_element(inner):
                    fuel.spend()
                    if fits_inside(target.element(b), outer):
                        return b
        else:
            # dovetail: target domain scan against a growing phi prefix
            candidates: list[int] = []
            domain = target.domain_codes(fuel)
            for stage in itertools.count():
                fuel.spend()
                candidates.append(next(domain))
                for b in candidates:
                    belem = target.element(b)
                    if not fits_inside(belem, outer):
                        continue
                    for m in range(stage + 1):
                        fuel.spend()
                        if fits_inside(source.element(phi.at(m)), belem):
                            return b
        raise OutOfFuel("conversion witness search exhausted")

    def stream() -> Iterator[int]:
        for n in itertools.count():
            yield find_for(n)

    return Oracle(target, stream=stream(), flags=frozenset(), name=f"convert({phi.name})")

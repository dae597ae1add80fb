"""Built-in models: orbit family, measurement accuracy, radioactive decay,
and the electron-spin model generated by the quantum membership algorithm.

States and observable values are integer codes throughout; every model
decides membership exactly and ships solvers for the observables that
admit finite exact preimages.  Angle intervals live on the 360-degree
circle and wrap where the construction demands it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from .codes import (
    bits_encode,
    interval_code,
    interval_decode,
    pair,
    rho,
    rho_inv,
    tuple_decode,
    tuple_encode,
    unpair,
    zeta,
    zeta_inv,
)
from .errors import Inconclusive, MalformedState, NonterminatingSum
from .exactnum import _exact_log10, frac_angle
from .models import INT_Z, INTERVAL, PLAIN, Model, WeightedModels, statistical_ensemble

F = Fraction

ORBIT_I_MIN, ORBIT_I_MAX = -20000, 20000
CALIBRATED_K_MIN, CALIBRATED_K_MAX = -200000, 200000


# -- shared decimal-orbit arithmetic ----------------------------------------

def _time_endpoints(i: int, scale: int = 100) -> tuple[Fraction, Fraction]:
    """Endpoints i/10 - 1/100 and (i+1)/10 + 1/100 (scale 1000 for the fine grid)."""
    return F(10 * i - 1, scale), F(10 * i + 11, scale)


@lru_cache(maxsize=None)
def _time_code(i: int, scale: int = 100) -> int:
    r, s = _time_endpoints(i, scale)
    return interval_code(r, s)


@lru_cache(maxsize=None)
def _angle_code(n: int, scale: int = 100) -> int:
    """Code of the wrapped angle interval swept by the n-th time cell."""
    r, s = _time_endpoints(n, scale)
    return interval_code(frac_angle(r), frac_angle(s))


def _angle_residue_table(scale: int = 100, period: int = 10) -> dict[int, int]:
    return {_angle_code(n, scale): n for n in range(period)}


def _decode_time_index(code: int, scale: int = 100) -> int | None:
    """Recover i from a claimed code of [i/10 - 1/100, (i+1)/10 + 1/100]."""
    r, s = interval_decode(code)
    i = (r * scale + 1) / 10
    if i.denominator != 1:
        return None
    i = int(i)
    if (r, s) != _time_endpoints(i, scale):
        return None
    return i


# -- Model 2: discrete planetary motion --------------------------------------

def _discrete_orbit_state(i: int) -> int:
    return pair(_time_code(i), _angle_code(i % 10))


@lru_cache(maxsize=1)
def model_discrete_orbit() -> Model:
    """Pairs of overlapping time and wrapped angle intervals, one per tenth
    of a year between -2000 and 2000."""

    def mem(s: int) -> bool:
        tc, ac = unpair(s)
        i = _decode_time_index(tc)
        if i is None or not ORBIT_I_MIN <= i <= ORBIT_I_MAX:
            return False
        return ac == _angle_code(i % 10)

    def enum() -> Iterator[int]:
        for i in range(ORBIT_I_MIN, ORBIT_I_MAX + 1):
            yield _discrete_orbit_state(i)

    def solve_tau(v: int) -> list[int]:
        i = _decode_time_index(v)
        if i is None or not ORBIT_I_MIN <= i <= ORBIT_I_MAX:
            return []
        return [_discrete_orbit_state(i)]

    def solve_alpha(v: int) -> list[int]:
        residue = _angle_residue_table().get(v)
        if residue is None:
            return []
        return [
            _discrete_orbit_state(i)
            for i in range(ORBIT_I_MIN, ORBIT_I_MAX + 1)
            if i % 10 == residue
        ]

    return Model(
        name="discrete-orbit",
        member=mem,
        observables={"alpha": lambda s: unpair(s)[1], "tau": lambda s: unpair(s)[0]},
        enumerate_states=enum,
        solvers={"tau": solve_tau, "alpha": solve_alpha},
        value_codecs={"alpha": INTERVAL, "tau": INTERVAL},
    )


# -- Model 3: non-discrete continuous motion ---------------------------------

def _fine_time_endpoints(i: int, digits: int) -> tuple[Fraction, Fraction]:
    scale = F(10) ** (digits + 1)
    return F(10 * i - 1, 1) / scale, F(10 * i + 11, 1) / scale


def _continuous_state(i: int, digits: int) -> int:
    r, s = _fine_time_endpoints(i, digits)
    return pair(interval_code(r, s), interval_code(frac_angle(r), frac_angle(s)))


def _decode_fine_time(code: int) -> tuple[int, int] | None:
    """Recover (i, digits) from a code of [i/10^n - 1/10^(n+1), ...]."""
    r, s = interval_decode(code)
    width = s - r
    if width <= 0:
        return None
    e = _exact_log10(F(12) / width)
    if e is None or e < 2:
        return None
    digits = e - 1
    i = (r * F(10) ** e + 1) / 10
    if i.denominator != 1:
        return None
    i = int(i)
    if (r, s) != _fine_time_endpoints(i, digits):
        return None
    return i, digits


@lru_cache(maxsize=1)
def model_continuous_orbit() -> Model:
    """Arbitrary-precision decimal time cells and their wrapped angle images."""

    def mem(s: int) -> bool:
        tc, ac = unpair(s)
        decoded = _decode_fine_time(tc)
        if decoded is None:
            return False
        i, digits = decoded
        return s == _continuous_state(i, digits)

    def enum() -> Iterator[int]:
        for t in itertools.count():
            tier, zi = unpair(t)
            yield _continuous_state(zeta_inv(zi), tier + 1)

    def solve_tau(v: int) -> list[int]:
        decoded = _decode_fine_time(v)
        if decoded is None:
            return []
        return [_continuous_state(*decoded)]

    return Model(
        name="continuous-orbit",
        member=mem,
        observables={"alpha": lambda s: unpair(s)[1], "tau": lambda s: unpair(s)[0]},
        enumerate_states=enum,
        solvers={"tau": solve_tau},
        value_codecs={"alpha": INTERVAL, "tau": INTERVAL},
    )


# -- Model 4: two precision levels -------------------------------------------

def _two_precision_state(i: int, j: int) -> int:
    r1, s1 = _time_endpoints(i, 100)
    r2, s2 = _time_endpoints(j, 1000)
    return tuple_encode(
        [
            interval_code(r1, s1),
            interval_code(r2, s2),
            interval_code(frac_angle(r1), frac_angle(s1)),
            interval_code(frac_angle(r2), frac_angle(s2)),
        ]
    )


@lru_cache(maxsize=1)
def model_two_precision_orbit() -> Model:
    """Coupled coarse and fine readings: ten fine cells per coarse cell."""

    def mem(s: int) -> bool:
        t1, t2, _, _ = tuple_decode(s, 4)
        i = _decode_time_index(t1, 100)
        j = _decode_time_index(t2, 1000)
        if i is None or j is None or not 10 * i <= j <= 10 * i + 9:
            return False
        return s == _two_precision_state(i, j)

    def enum() -> Iterator[int]:
        for zi in itertools.count():
            i = zeta_inv(zi)
            for j in range(10 * i, 10 * i + 10):
                yield _two_precision_state(i, j)

    def solve_tau1(v: int) -> list[int]:
        i = _decode_time_index(v, 100)
        if i is None:
            return []
        return [_two_precision_state(i, j) for j in range(10 * i, 10 * i + 10)]

    def solve_tau2(v: int) -> list[int]:
        j = _decode_time_index(v, 1000)
        if j is None:
            return []
        return [_two_precision_state(j // 10, j)]

    return Model(
        name="two-precision-orbit",
        member=mem,
        observables={
            "alpha1": lambda s: tuple_decode(s, 4)[2],
            "alpha2": lambda s: tuple_decode(s, 4)[3],
            "tau1": lambda s: tuple_decode(s, 4)[0],
            "tau2": lambda s: tuple_decode(s, 4)[1],
        },
        enumerate_states=enum,
        solvers={"tau1": solve_tau1, "tau2": solve_tau2},
        value_codecs={name: INTERVAL for name in ("alpha1", "alpha2", "tau1", "tau2")},
    )


# -- Model 5: slow orbit ------------------------------------------------------

def _slow_orbit_state(i: int) -> int:
    return pair(_time_code(i), _angle_code((i // 4) % 10))


@lru_cache(maxsize=1)
def model_slow_orbit() -> Model:
    """The discrete orbit of a planet with a four-year period."""

    def mem(s: int) -> bool:
        tc, ac = unpair(s)
        i = _decode_time_index(tc)
        if i is None or not ORBIT_I_MIN <= i <= ORBIT_I_MAX:
            return False
        return ac == _angle_code((i // 4) % 10)

    def enum() -> Iterator[int]:
        for i in range(ORBIT_I_MIN, ORBIT_I_MAX + 1):
            yield _slow_orbit_state(i)

    def solve_tau(v: int) -> list[int]:
        i = _decode_time_index(v)
        if i is None or not ORBIT_I_MIN <= i <= ORBIT_I_MAX:
            return []
        return [_slow_orbit_state(i)]

    def solve_alpha(v: int) -> list[int]:
        residue = _angle_residue_table().get(v)
        if residue is None:
            return []
        return [
            _slow_orbit_state(i)
            for i in range(ORBIT_I_MIN, ORBIT_I_MAX + 1)
            if (i // 4) % 10 == residue
        ]

    return Model(
        name="slow-orbit",
        member=mem,
        observables={"alpha": lambda s: unpair(s)[1], "tau": lambda s: unpair(s)[0]},
        enumerate_states=enum,
        solvers={"tau": solve_tau, "alpha": solve_alpha},
        value_codecs={"alpha": INTERVAL, "tau": INTERVAL},
    )


# -- Model 6: the ensemble ----------------------------------------------------

@lru_cache(maxsize=1)
def model_orbit_ensemble() -> Model:
    """Twice the discrete orbit, once the slow orbit, with hidden copy index."""
    return statistical_ensemble(
        WeightedModels(((model_discrete_orbit(), F(2)), (model_slow_orbit(), F(1)))),
        name="orbit-ensemble",
    )


# -- Models 7 and 8: meterstick accuracy --------------------------------------

def _meters_state(d: int, i: int) -> int:
    return tuple_encode([zeta((d + i) // 10), zeta(d), zeta(i)])


def _meters2_state(c: int, i: int, j: int) -> int:
    return tuple_encode([zeta((c + 10 * i) // 100), zeta((c + j) // 10), zeta(c), zeta(i), zeta(j)])


def model_meters(decimeter_only: bool = True) -> Model:
    """Distance in meters calibrated against decimeters.

    decimeter_only models a single misalignment of the meter reading by
    one decimeter; otherwise decimeter readings are themselves
    misaligned by a hidden centimeter index.
    """
    return _model_meters_one() if decimeter_only else _model_meters_two()


@lru_cache(maxsize=1)
def _model_meters_one() -> Model:
    def mem(s: int) -> bool:
        zm, zd, zi = tuple_decode(s, 3)
        m, d, i = zeta_inv(zm), zeta_inv(zd), zeta_inv(zi)
        return i in (-1, 1) and m == (d + i) // 10

    def enum() -> Iterator[int]:
        for zd in itertools.count():
            d = zeta_inv(zd)
            for i in (-1, 1):
                yield _meters_state(d, i)

    def solve_delta(v: int) -> list[int]:
        d = zeta_inv(v)
        return sorted(_meters_state(d, i) for i in (-1, 1))

    def solve_mu(v: int) -> list[int]:
        m = zeta_inv(v)
        out = []
        for i in (-1, 1):
            for offset in range(10):
                out.append(_meters_state(10 * m + offset - i, i))
        return sorted(out)

    return Model(
        name="meters",
        member=mem,
        observables={
            "mu": lambda s: tuple_decode(s, 3)[0],
            "delta": lambda s: tuple_decode(s, 3)[1],
        },
        enumerate_states=enum,
        solvers={"mu": solve_mu, "delta": solve_delta},
        value_codecs={"mu": INT_Z, "delta": INT_Z},
    )


@lru_cache(maxsize=1)
def _model_meters_two() -> Model:
    def mem(s: int) -> bool:
        zm, zd, zc, zi, zj = tuple_decode(s, 5)
        m, d, c, i, j = (zeta_inv(z) for z in (zm, zd, zc, zi, zj))
        return i in (-1, 1) and j in (-1, 1) and m == (c + 10 * i) // 100 and d == (c + j) // 10

    def enum() -> Iterator[int]:
        for zc in itertools.count():
            c = zeta_inv(zc)
            for i in (-1, 1):
                for j in (-1, 1):
                    yield _meters2_state(c, i, j)

    def solve_delta(v: int) -> list[int]:
        d = zeta_inv(v)
        out = []
        for j in (-1, 1):
            for c in range(10 * d - j, 10 * d + 10 - j):
                for i in (-1, 1):
                    out.append(_meters2_state(c, i, j))
        return sorted(set(out))

    def solve_mu(v: int) -> list[int]:
        m = zeta_inv(v)
        out = []
        for i in (-1, 1):
            for c in range(100 * m - 10 * i, 100 * m + 100 - 10 * i):
                for j in (-1, 1):
                    out.append(_meters2_state(c, i, j))
        return sorted(set(out))

    return Model(
        name="meters-2level",
        member=mem,
        observables={
            "mu": lambda s: tuple_decode(s, 5)[0],
            "delta": lambda s: tuple_decode(s, 5)[1],
        },
        enumerate_states=enum,
        solvers={"mu": solve_mu, "delta": solve_delta},
        value_codecs={"mu": INT_Z, "delta": INT_Z},
    )


# -- Model 9: calibrated orbit -------------------------------------------------

def _calibrated_state(k: int, i: int, j: int) -> int:
    m = (k + i) // 10
    n = (k + j) // 10
    return tuple_encode([_time_code(m), _angle_code(n % 10), zeta(i), zeta(j), zeta(k)])


@lru_cache(maxsize=1)
def model_calibrated_orbit() -> Model:
    """The discrete orbit with calibration errors on both instruments and a
    hidden hundredth-of-a-year index."""

    def mem(s: int) -> bool:
        tc, ac, zi, zj, zk = tuple_decode(s, 5)
        i, j, k = zeta_inv(zi), zeta_inv(zj), zeta_inv(zk)
        if i not in (-1, 1) or j not in (-1, 1):
            return False
        if not CALIBRATED_K_MIN <= k <= CALIBRATED_K_MAX:
            return False
        return tc == _time_code((k + i) // 10) and ac == _angle_code(((k + j) // 10) % 10)

    def enum() -> Iterator[int]:
        for k in range(CALIBRATED_K_MIN, CALIBRATED_K_MAX + 1):
            for i in (-1, 1):
                for j in (-1, 1):
                    yield _calibrated_state(k, i, j)

    def solve_tau(v: int) -> list[int]:
        m = _decode_time_index(v)
        if m is None:
            return []
        out = []
        for i in (-1, 1):
            for k in range(10 * m - i, 10 * m + 10 - i):
                if CALIBRATED_K_MIN <= k <= CALIBRATED_K_MAX:
                    for j in (-1, 1):
                        out.append(_calibrated_state(k, i, j))
        return sorted(set(out))

    return Model(
        name="calibrated-orbit",
        member=mem,
        observables={
            "alpha": lambda s: tuple_decode(s, 5)[1],
            "tau": lambda s: tuple_decode(s, 5)[0],
        },
        enumerate_states=enum,
        solvers={"tau": solve_tau},
        value_codecs={"alpha": INTERVAL, "tau": INTERVAL},
    )


def calibrated_orbit_hidden_index(s: int) -> int:
    """Diagnostic accessor for the unobservable time index k of a state."""
    if not model_calibrated_orbit().member(s):
        raise MalformedState(f"{s} is not a calibrated-orbit state")
    return zeta_inv(tuple_decode(s, 5)[4])


def calibrated_orbit_states_at(k: int) -> list[int]:
    """The four states sharing the hidden index k."""
    return sorted(_calibrated_state(k, i, j) for i in (-1, 1) for j in (-1, 1))


# -- radioactive decay ----------------------------------------------------------

def _radioactive_history(n: int, t: int) -> int:
    return bits_encode([0] * (t - n) + [1] * n)


def _radioactive_state(t: int, n: int, j: int) -> int:
    return tuple_encode([t, _radioactive_history(n, t), j])


def _radioactive_j_count(n: int) -> int:
    return (2**n - 1) // 2 + 1


_RADIOACTIVE_SOLVE_LIMIT = 20


@lru_cache(maxsize=1)
def model_radioactive() -> Model:
    """Many-worlds detector histories: monotone bit strings with copy counts
    doubling per undecayed branch; survival through time t has weight 1 in 2^t."""

    def decode(s: int) -> tuple[int, tuple[int, ...], int] | None:
        th, j = unpair(s)
        t, h = unpair(th)
        if t == 0:
            return None
        bits = tuple_decode(h, t)
        if any(b not in (0, 1) for b in bits):
            return None
        n = sum(bits)
        if bits != (0,) * (t - n) + (1,) * n:
            return None
        if 2 * j > 2**n - 1:
            return None
        return t, bits, j

    def mem(s: int) -> bool:
        return decode(s) is not None

    def enum() -> Iterator[int]:
        for t in itertools.count(1):
            for n in range(t + 1):
                for j in range(_radioactive_j_count(n)):
                    yield _radioactive_state(t, n, j)

    def solve_tau(t: int) -> list[int]:
        if t == 0:
            return []
        if t > _RADIOACTIVE_SOLVE_LIMIT:
            raise Inconclusive(f"2**{t} states is past the solver limit of 2**{_RADIOACTIVE_SOLVE_LIMIT}")
        return sorted(
            _radioactive_state(t, n, j)
            for n in range(t + 1)
            for j in range(_radioactive_j_count(n))
        )

    def derived(name: str, value: int) -> Callable[[int], bool] | None:
        # status@T: the detector status at time T, i.e. the T-th history bit.
        if not name.startswith("status@"):
            return None
        time = int(name.split("@", 1)[1])
        if time < 1 or value not in (0, 1):
            return None

        def pred(s: int) -> bool:
            decoded = decode(s)
            if decoded is None:
                return False
            t, bits, _ = decoded
            return time <= t and bits[time - 1] == value

        return pred

    return Model(
        name="radioactive",
        member=mem,
        observables={
            "eta": lambda s: unpair(unpair(s)[0])[1],
            "tau": lambda s: unpair(unpair(s)[0])[0],
        },
        enumerate_states=enum,
        solvers={"tau": solve_tau},
        value_codecs={"eta": PLAIN, "tau": PLAIN},
        derived_query=derived,
    )


# -- quantum criteria and the spin model -----------------------------------------

@dataclass(frozen=True)
class QuantumSpec:
    """A measurement-probability map satisfying the quantum model criteria.

    prob(i, n, t, h) is the rational probability that measurement i has
    value n at time step t given the history code h; for each (i, t, h)
    the nonzero values over n must sum to exactly 1 within value_bound
    candidates.
    """

    prob: Callable[[int, int, int, int], Fraction]
    value_bound: int = 64


def quantum_member(spec: QuantumSpec, s: int) -> bool:
    """Decide membership of <t, <<i1,n1>,...,<it,nt>>, j> in the generated model.

    Rejects t = 0; rejects any step with zero probability; otherwise
    finds each step's nonzero values exhaustively (their probabilities
    must sum to 1), takes a_k over the least common denominator d_k, and
    accepts exactly when j < a_1 a_2 ... a_t.
    """
    if s < 0:
        raise MalformedState("state codes are non-negative")
    th, j = unpair(s)
    t, h = unpair(th)
    if t == 0:
        return False
    records = [unpair(r) for r in tuple_decode(h, t)]
    product = 1
    for k in range(1, t + 1):
        h_k = 0 if k == 1 else tuple_encode([pair(i, n) for i, n in records[: k - 1]])
        i_k, n_k = records[k - 1]
        p_k = spec.prob(i_k, n_k, k, h_k)
        if p_k == 0:
            return False
        total = Fraction(0)
        probs: list[Fraction] = []
        for n in range(spec.value_bound + 1):
            p = spec.prob(i_k, n, k, h_k)
            if p > 0:
                probs.append(p)
                total += p
            if total == 1:
                break
        else:
            raise NonterminatingSum(
                f"step {k}: probabilities reach {total}, not 1, within {spec.value_bound} values"
            )
        d_k = math.lcm(*(p.denominator for p in probs))
        product *= int(p_k * d_k)
    return j < product


AXIS_Z = 0
AXIS_60 = 60
_VAL_CODES = {rho(F(1)): 1, rho(F(-1)): -1}
_AXIS_CODES = {rho(F(AXIS_Z)): AXIS_Z, rho(F(AXIS_60)): AXIS_60}

# Transition probabilities between spin eigenstates, from the squared
# amplitudes: measuring the other axis flips with probability 1/4 from
# aligned states, repeats are deterministic.
_SPIN_STEP: dict[tuple[int, int], dict[int, dict[int, Fraction]]] = {
    (AXIS_Z, 1): {AXIS_Z: {1: F(1)}, AXIS_60: {1: F(3, 4), -1: F(1, 4)}},
    (AXIS_Z, -1): {AXIS_Z: {-1: F(1)}, AXIS_60: {1: F(1, 4), -1: F(3, 4)}},
    (AXIS_60, 1): {AXIS_60: {1: F(1)}, AXIS_Z: {1: F(3, 4), -1: F(1, 4)}},
    (AXIS_60, -1): {AXIS_60: {-1: F(1)}, AXIS_Z: {1: F(1, 4), -1: F(3, 4)}},
}
_SPIN_START = (AXIS_Z, 1)  # the electron is prepared spin-up along z


def spin_record(axis: int, value: int) -> int:
    """A measurement record <rho(axis), rho(value)>."""
    return pair(rho(F(axis)), rho(F(value)))


def _spin_prob(i: int, n: int, t: int, h: int) -> Fraction:
    axis = _AXIS_CODES.get(i)
    value = _VAL_CODES.get(n)
    if axis is None or value is None:
        return F(0)
    if t < 1:
        return F(0)
    state = _SPIN_START
    if t > 1:
        last = unpair(tuple_decode(h, t - 1)[-1])
        prev_axis = _AXIS_CODES.get(last[0])
        prev_value = _VAL_CODES.get(last[1])
        if prev_axis is None or prev_value is None:
            return F(0)
        state = (prev_axis, prev_value)
    return _SPIN_STEP[state].get(axis, {}).get(value, F(0))


SPIN_SPEC = QuantumSpec(prob=_spin_prob, value_bound=8)

_SPIN_SOLVE_LIMIT = 10


def _spin_histories(t: int) -> Iterator[tuple[tuple[tuple[int, int], ...], int]]:
    """All nonzero-probability histories of length t with their state counts."""

    def walk(state, prefix, count):
        if len(prefix) == t:
            yield tuple(prefix), count
            return
        for axis in (AXIS_Z, AXIS_60):
            outcomes = _SPIN_STEP[state][axis]
            denom = math.lcm(*(p.denominator for p in outcomes.values()))
            for value, p in outcomes.items():
                if p > 0:
                    yield from walk((axis, value), prefix + [(axis, value)], count * int(p * denom))

    yield from walk(_SPIN_START, [], 1)


def spin_state(history, j: int) -> int:
    """State code for a history of (axis, value) records and copy index j."""
    history = list(history)
    h = tuple_encode([spin_record(a, v) for a, v in history])
    return tuple_encode([len(history), h, j])


@lru_cache(maxsize=1)
def model_spin() -> Model:
    """The electron-spin measurement model generated by the general
    membership algorithm from the exact amplitude table."""

    def mem(s: int) -> bool:
        try:
            return quantum_member(SPIN_SPEC, s)
        except MalformedState:
            return False

    def enum() -> Iterator[int]:
        for t in itertools.count(1):
            yield from solve_tau(t)

    def solve_tau(t: int) -> list[int]:
        if t == 0:
            return []
        if t > _SPIN_SOLVE_LIMIT:
            raise Inconclusive(f"history enumeration past t={_SPIN_SOLVE_LIMIT} is not supported")
        out = []
        for history, count in _spin_histories(t):
            for j in range(count):
                out.append(spin_state(history, j))
        return sorted(out)

    def derived(name: str, value: int) -> Callable[[int], bool] | None:
        # axis@K / value@K: the K-th record's measured axis or value.
        if "@" not in name:
            return None
        kind, _, suffix = name.partition("@")
        if kind not in ("axis", "value") or not suffix.isdigit():
            return None
        step = int(suffix)
        if step < 1:
            return None
        if kind == "axis":
            target = rho(F(value))
        else:
            target = rho(F(zeta_inv(value)))

        def pred(s: int) -> bool:
            th, _ = unpair(s)
            t, h = unpair(th)
            if t < step:
                return False
            record = unpair(tuple_decode(h, t)[step - 1])
            return record[0] == target if kind == "axis" else record[1] == target

        return pred

    return Model(
        name="spin",
        member=mem,
        observables={
            "eta": lambda s: unpair(unpair(s)[0])[1],
            "tau": lambda s: unpair(unpair(s)[0])[0],
        },
        enumerate_states=enum,
        solvers={"tau": solve_tau},
        value_codecs={"eta": PLAIN, "tau": PLAIN},
        derived_query=derived,
    )


# -- registry ---------------------------------------------------------------

_CATALOG: dict[str, Callable[[], Model]] = {
    "discrete-orbit": model_discrete_orbit,
    "continuous-orbit": model_continuous_orbit,
    "two-precision-orbit": model_two_precision_orbit,
    "slow-orbit": model_slow_orbit,
    "orbit-ensemble": model_orbit_ensemble,
    "meters": lambda: model_meters(True),
    "meters-2level": lambda: model_meters(False),
    "calibrated-orbit": model_calibrated_orbit,
    "radioactive": model_radioactive,
    "spin": model_spin,
}


def catalog_names() -> list[str]:
    return list(_CATALOG)


def get_model(name: str) -> Model:
    try:
        factory = _CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown model {name!r}; known: {', '.join(_CATALOG)}") from None
    return factory()

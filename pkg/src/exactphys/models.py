"""Physical models over integer state codes and the finite-model algebra.

A model is a decidable set of state codes with named total observable
maps.  Queries (state search, exact conditional probability) work on any
model; the structural algebra (reduction, isomorphism, epimorphism,
observational equivalence, normal form) works on explicitly tabulated
finite models.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

from .codes import pair, tuple_decode, tuple_encode, unpair
from .errors import (
    EmptyCondition,
    Inconclusive,
    MismatchedObservables,
    NotAState,
    ParseError,
    SizeLimit,
    UnknownObservable,
    ValidationError,
)

# CLI hints: how observable values read and print. "plain" is the raw
# code, "int" a zeta-folded integer, "rational" a rho code, "interval"
# a pair of rho codes, "bits" an iterated-pairing bit sequence.
PLAIN = "plain"
INT_Z = "int"
RATIONAL = "rational"
INTERVAL = "interval"
BITS = "bits"


@dataclass(frozen=True)
class Model:
    """A state-membership decider plus named total observable maps.

    enumerate_states, when present, produces exactly the member-accepted
    codes, each once.  solvers map an observable name to an exact
    finite-preimage procedure for a given value code.  derived_query
    resolves non-observable constraint names (such as per-time detector
    status) to predicates over states.
    """

    name: str
    member: Callable[[int], bool]
    observables: Mapping[str, Callable[[int], int]]
    enumerate_states: Callable[[], Iterator[int]] | None = None
    solvers: Mapping[str, Callable[[int], Sequence[int]]] = field(default_factory=dict)
    value_codecs: Mapping[str, str] = field(default_factory=dict)
    derived_query: Callable[[str, int], Callable[[int], bool] | None] | None = None

    def observable_names(self) -> tuple[str, ...]:
        return tuple(self.observables.keys())


def member(m: Model, s: int) -> bool:
    return s >= 0 and m.member(s)


def observe(m: Model, name: str, s: int) -> int:
    if name not in m.observables:
        raise UnknownObservable(f"{m.name} has no observable {name!r}")
    if not member(m, s):
        raise NotAState(f"{s} is not a state of {m.name}")
    return m.observables[name](s)


def _constraint_predicates(m: Model, constraints: Mapping[str, int]) -> list[Callable[[int], bool]]:
    preds: list[Callable[[int], bool]] = []
    for name, value in constraints.items():
        if name in m.observables:
            fn = m.observables[name]
            preds.append(lambda s, fn=fn, value=value: fn(s) == value)
        else:
            derived = m.derived_query(name, value) if m.derived_query else None
            if derived is None:
                raise UnknownObservable(f"{m.name} has no observable or query {name!r}")
            preds.append(derived)
    return preds


def states_where(m: Model, constraints: Mapping[str, int], cap: int = 10**5) -> list[int]:
    """All states satisfying every constraint, sorted ascending by code.

    Uses an exact solver when one constraint has one; otherwise scans
    the state enumeration and reports Inconclusive if `cap` states pass
    without exhausting it.
    """
    preds = _constraint_predicates(m, constraints)
    for name, value in constraints.items():
        solver = m.solvers.get(name)
        if solver is None:
            continue
        candidates = solver(value)
        return sorted(s for s in candidates if all(p(s) for p in preds))
    if m.enumerate_states is None:
        raise Inconclusive(f"{m.name} has no solver for {sorted(constraints)} and no enumeration")
    out = []
    source = m.enumerate_states()
    for s in itertools.islice(source, cap):
        if all(p(s) for p in preds):
            out.append(s)
    if next(source, None) is not None:
        raise Inconclusive(f"state scan of {m.name} passed {cap} states without finishing")
    return sorted(out)


def probability(m: Model, event: Mapping[str, int], given: Mapping[str, int], cap: int = 10**5) -> Fraction:
    """Exact conditional probability under the equally-likely-states reading.

    |states satisfying event and given| / |states satisfying given|.
    """
    base = states_where(m, given, cap)
    if not base:
        raise EmptyCondition(f"no states of {m.name} satisfy the condition {dict(given)}")
    preds = _constraint_predicates(m, event)
    hits = sum(1 for s in base if all(p(s) for p in preds))
    return Fraction(hits, len(base))


def coarse_grain(m: Model, keep: Sequence[str]) -> Model:
    """Forget all observables outside `keep`; the state set is unchanged."""
    keep = list(keep)
    for name in keep:
        if name not in m.observables:
            raise UnknownObservable(f"{m.name} has no observable {name!r}")
    return Model(
        name=f"{m.name}/coarse",
        member=m.member,
        observables={name: m.observables[name] for name in keep},
        enumerate_states=m.enumerate_states,
        solvers={name: fn for name, fn in m.solvers.items() if name in keep},
        value_codecs={name: c for name, c in m.value_codecs.items() if name in keep},
        derived_query=m.derived_query,
    )


@dataclass(frozen=True)
class WeightedModels:
    """Components of a statistical ensemble with positive rational weights.

    Weights are relative likelihoods; they are scaled internally to the
    smallest integers with gcd 1.
    """

    entries: tuple[tuple[Model, Fraction], ...]

    def normalized_weights(self) -> list[int]:
        weights = [Fraction(w) for _, w in self.entries]
        if any(w <= 0 for w in weights):
            raise ValueError("ensemble weights must be positive")
        scale = math.lcm(*(w.denominator for w in weights))
        ints = [int(w * scale) for w in weights]
        g = math.gcd(*ints)
        return [w // g for w in ints]


def statistical_ensemble(w: WeightedModels, name: str = "ensemble") -> Model:
    """Weighted disjoint union with an unobservable copy index.

    A component with integer weight k contributes k copy indices; the
    ensemble state pairs a component state with its copy index, and a
    weight-k component is k times as likely as a weight-1 one under the
    equally-likely-states reading.
    """
    comps = [m for m, _ in w.entries]
    weights = w.normalized_weights()
    names = comps[0].observable_names()
    for m in comps[1:]:
        if m.observable_names() != names:
            raise MismatchedObservables(
                f"ensemble components disagree on observables: {names} vs {m.observable_names()}"
            )
    offsets = [0]
    for k in weights:
        offsets.append(offsets[-1] + k)
    total = offsets[-1]

    def component_of(j: int) -> int:
        for idx in range(len(comps)):
            if offsets[idx] <= j < offsets[idx + 1]:
                return idx
        raise ValueError

    def mem(s: int) -> bool:
        inner, j = unpair(s)
        if j >= total:
            return False
        return comps[component_of(j)].member(inner)

    def make_obs(obs_name: str):
        def fn(s: int) -> int:
            inner, j = unpair(s)
            return comps[component_of(j)].observables[obs_name](inner)

        return fn

    enum = None
    if all(m.enumerate_states is not None for m in comps):

        def enum() -> Iterator[int]:
            streams = [m.enumerate_states() for m in comps]
            live = [True] * len(comps)
            while any(live):
                for idx, stream in enumerate(streams):
                    if not live[idx]:
                        continue
                    inner = next(stream, None)
                    if inner is None:
                        live[idx] = False
                        continue
                    for j in range(offsets[idx], offsets[idx + 1]):
                        yield pair(inner, j)

    solvers = {}
    for obs_name in names:
        if all(obs_name in m.solvers for m in comps):

            def solve(value: int, obs_name=obs_name) -> list[int]:
                out = []
                for idx, m in enumerate(comps):
                    for inner in m.solvers[obs_name](value):
                        for j in range(offsets[idx], offsets[idx + 1]):
                            out.append(pair(inner, j))
                return sorted(out)

            solvers[obs_name] = solve

    return Model(
        name=name,
        member=mem,
        observables={obs_name: make_obs(obs_name) for obs_name in names},
        enumerate_states=enum,
        solvers=solvers,
        value_codecs=dict(comps[0].value_codecs),
    )


# -- finite models ----------------------------------------------------------

@dataclass(frozen=True)
class FiniteModel:
    """An explicitly tabulated model: sorted states and full value tables."""

    states: tuple[int, ...]
    observables: dict[str, dict[int, int]]

    def __post_init__(self):
        if list(self.states) != sorted(set(self.states)):
            raise ValidationError("states must be strictly increasing")
        if any(s < 0 for s in self.states):
            raise ValidationError("states must be non-negative")
        state_set = set(self.states)
        for name, table in self.observables.items():
            missing = state_set - set(table)
            if missing:
                raise ValidationError(f"observable {name!r} lacks a value for state {min(missing)}")
            extra = set(table) - state_set
            if extra:
                raise ValidationError(f"observable {name!r} has a value for non-state {min(extra)}")

    def signature(self, s: int) -> tuple[int, ...]:
        """Observable values of s in declaration order."""
        return tuple(table[s] for table in self.observables.values())

    def as_model(self, name: str = "finite") -> Model:
        state_set = set(self.states)

        def make_obs(table: dict[int, int]):
            return lambda s: table[s]

        return Model(
            name=name,
            member=lambda s: s in state_set,
            observables={n: make_obs(t) for n, t in self.observables.items()},
            enumerate_states=lambda: iter(self.states),
        )

    @staticmethod
    def from_model(m: Model, states: Sequence[int]) -> "FiniteModel":
        states = tuple(sorted(set(states)))
        for s in states:
            if not m.member(s):
                raise NotAState(f"{s} is not a state of {m.name}")
        tables = {
            name: {s: fn(s) for s in states} for name, fn in m.observables.items()
        }
        return FiniteModel(states=states, observables=tables)

    def keep_observables(self, keep: Sequence[str]) -> "FiniteModel":
        for name in keep:
            if name not in self.observables:
                raise UnknownObservable(f"no observable {name!r}")
        return FiniteModel(
            states=self.states,
            observables={name: dict(self.observables[name]) for name in keep},
        )


_MAX_STATES = 12
_MAX_OBSERVABLES = 6


def _check_search_size(*fms: FiniteModel) -> None:
    for fm in fms:
        if len(fm.states) > _MAX_STATES:
            raise SizeLimit(f"{len(fm.states)} states exceeds the search bound of {_MAX_STATES}")
        if len(fm.observables) > _MAX_OBSERVABLES:
            raise SizeLimit(
                f"{len(fm.observables)} observables exceeds the search bound of {_MAX_OBSERVABLES}"
            )


def is_reduced(fm: FiniteModel) -> bool:
    """Whether every pair of distinct states is separated by some observable."""
    seen: set[tuple[int, ...]] = set()
    for s in fm.states:
        sig = fm.signature(s)
        if sig in seen:
            return False
        seen.add(sig)
    return True


def reduce(fm: FiniteModel) -> tuple[FiniteModel, dict[int, int]]:
    """Quotient by observational indistinguishability.

    Returns the reduced model (class representatives are the least state
    code of each class) and the epimorphism's state component.
    """
    classes: dict[tuple[int, ...], int] = {}
    mapping: dict[int, int] = {}
    for s in fm.states:
        sig = fm.signature(s)
        rep = classes.setdefault(sig, s)
        mapping[s] = rep
    reps = tuple(sorted(classes.values()))
    tables = {
        name: {rep: table[rep] for rep in reps} for name, table in fm.observables.items()
    }
    return FiniteModel(states=reps, observables=tables), mapping


@dataclass(frozen=True)
class Morphism:
    """Witness of an isomorphism or epimorphism between finite models."""

    state_map: dict[int, int]
    observable_map: dict[str, str]

    def inverse(self) -> "Morphism":
        return Morphism(
            state_map={v: k for k, v in self.state_map.items()},
            observable_map={v: k for k, v in self.observable_map.items()},
        )

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other."""
        return Morphism(
            state_map={s: self.state_map[t] for s, t in other.state_map.items()},
            observable_map={a: self.observable_map[b] for a, b in other.observable_map.items()},
        )


def _signature_groups(fm: FiniteModel, order: Sequence[str]) -> dict[tuple[int, ...], list[int]]:
    groups: dict[tuple[int, ...], list[int]] = {}
    for s in fm.states:
        sig = tuple(fm.observables[name][s] for name in order)
        groups.setdefault(sig, []).append(s)
    return groups


def is_isomorphic(a: FiniteModel, b: FiniteModel) -> Morphism | None:
    """Search for bijections (states, observables) with commuting values.

    States are interchangeable within equal-signature classes, so the
    search runs over observable bijections only and pairs classes off;
    the returned witness satisfies
    a.obs[o](s) == b.obs[psi(o)](phi(s)) for all s and o.
    """
    _check_search_size(a, b)
    if len(a.states) != len(b.states) or len(a.observables) != len(b.observables):
        return None
    a_names = list(a.observables)
    a_groups = _signature_groups(a, a_names)
    for perm in itertools.permutations(b.observables):
        b_groups = _signature_groups(b, perm)
        if set(a_groups) != set(b_groups):
            continue
        if any(len(a_groups[sig]) != len(b_groups[sig]) for sig in a_groups):
            continue
        state_map: dict[int, int] = {}
        for sig, a_states in a_groups.items():
            for s, t in zip(a_states, b_groups[sig]):
                state_map[s] = t
        return Morphism(state_map=state_map, observable_map=dict(zip(a_names, perm)))
    return None


def is_epimorphic(a: FiniteModel, b: FiniteModel) -> Morphism | None:
    """Search for a surjective state map and observable bijection commuting."""
    _check_search_size(a, b)
    if len(a.observables) != len(b.observables) or len(a.states) < len(b.states):
        return None
    a_names = list(a.observables)
    a_groups = _signature_groups(a, a_names)
    for perm in itertools.permutations(b.observables):
        b_groups = _signature_groups(b, perm)
        if set(a_groups) != set(b_groups):
            continue
        if any(len(a_groups[sig]) < len(b_groups[sig]) for sig in a_groups):
            continue
        state_map: dict[int, int] = {}
        for sig, a_states in a_groups.items():
            targets = b_groups[sig]
            for i, s in enumerate(a_states):
                state_map[s] = targets[min(i, len(targets) - 1)]
        return Morphism(state_map=state_map, observable_map=dict(zip(a_names, perm)))
    return None


def observationally_equivalent(a: FiniteModel, b: FiniteModel) -> bool:
    """Whether both models admit epimorphisms onto a common reduced model.

    Decided by comparing canonical quotients: on finite models every
    reduced epimorphic image is isomorphic to the quotient by
    observational indistinguishability, since a reduced target's states
    biject with the source's signature classes.
    """
    _check_search_size(a, b)
    qa, _ = reduce(a)
    qb, _ = reduce(b)
    return is_isomorphic(qa, qb) is not None


def normal_form(fm: FiniteModel) -> FiniteModel:
    """Repack states as value tuples <v1,...,vn,s> observed by projections.

    The trailing original state keeps the repacking injective, so the
    result is isomorphic to the input; observables become the first n
    projections of the tuple code.
    """
    names = list(fm.observables)
    n = len(names)
    new_states = []
    tables: dict[str, dict[int, int]] = {f"pi{i+1}": {} for i in range(n)}
    for s in fm.states:
        values = [fm.observables[name][s] for name in names]
        t = tuple_encode(values + [s])
        new_states.append(t)
        for i in range(n):
            tables[f"pi{i+1}"][t] = values[i]
    return FiniteModel(states=tuple(sorted(new_states)), observables=tables)


def renumber(fm: FiniteModel) -> FiniteModel:
    """Relabel states as 0..n-1 preserving order."""
    index = {s: i for i, s in enumerate(fm.states)}
    tables = {
        name: {index[s]: v for s, v in table.items()} for name, table in fm.observables.items()
    }
    return FiniteModel(states=tuple(range(len(fm.states))), observables=tables)


def determined_by(phi: Callable[[int], int | None], arity: int, probe_limit: int = 10**4) -> FiniteModel:
    """The model determined by a partial map defined on a prefix of N.

    States are the maximal consecutive run 0..n-1 on which phi is
    defined; observables are the arity projections of phi's values.
    Raises Inconclusive when the run does not end within probe_limit.
    """
    if arity < 1:
        raise ValueError("arity must be positive")
    values: list[int] = []
    for i in range(probe_limit):
        v = phi(i)
        if v is None:
            break
        values.append(v)
    else:
        raise Inconclusive(f"phi still defined at {probe_limit}; cannot bound the state set")
    tables: dict[str, dict[int, int]] = {f"pi{j+1}": {} for j in range(arity)}
    for i, v in enumerate(values):
        parts = tuple_decode(v, arity)
        for j in range(arity):
            tables[f"pi{j+1}"][i] = parts[j]
    return FiniteModel(states=tuple(range(len(values))), observables=tables)


def determining_map(fm: FiniteModel) -> Callable[[int], int | None]:
    """A partial map that determines fm: i-th state's observable tuple, else None."""
    names = list(fm.observables)

    def phi(i: int) -> int | None:
        if not 0 <= i < len(fm.states):
            return None
        s = fm.states[i]
        return tuple_encode([fm.observables[name][s] for name in names])

    return phi


# -- finite-model file format ----------------------------------------------

def parse_finite_model(text: str) -> FiniteModel:
    """Parse the JSON model format: {"states": [...], "observables": {...}}.

    Observable tables map decimal state strings to values; every state
    must be covered by every table, and unknown keys are rejected.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(data, dict):
        raise ValidationError("model file must contain a JSON object")
    unknown = set(data) - {"states", "observables"}
    if unknown:
        raise ValidationError(f"unknown key {min(unknown)!r} in model file")
    if "states" not in data or "observables" not in data:
        raise ValidationError("model file needs 'states' and 'observables'")
    states = data["states"]
    if not isinstance(states, list) or not all(isinstance(s, int) and s >= 0 for s in states):
        raise ValidationError("'states' must be a list of non-negative integers")
    obs = data["observables"]
    if not isinstance(obs, dict):
        raise ValidationError("'observables' must be an object")
    tables: dict[str, dict[int, int]] = {}
    for name, table in obs.items():
        if not isinstance(table, dict):
            raise ValidationError(f"observable {name!r} must map states to values")
        parsed: dict[int, int] = {}
        for key, value in table.items():
            if not key.isdigit():
                raise ValidationError(f"observable {name!r} has a non-state key {key!r}")
            if not isinstance(value, int) or value < 0:
                raise ValidationError(f"observable {name!r} value for {key} must be a non-negative integer")
            parsed[int(key)] = value
        tables[name] = parsed
    return FiniteModel(states=tuple(states), observables=tables)


def load_finite_model(path) -> FiniteModel:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_finite_model(handle.read())

"""Plausibility measures over finite state spaces.

Four frameworks share one interface: single probabilities, credal sets
(finite generator lists, with the full simplex as a symbolic special
case), belief functions, and possibility distributions. Each measure
maps events to a pair of exact bounds in [0, 1]; restriction pushes a
measure onto a partition's blocks, conditioning focuses it on an event
with states relabeled 0..k-1 in increasing original order.

Total ignorance is the measure valuing every non-trivial event at the
unit interval. Both restriction and conditioning keep ignorant measures
ignorant, which is what makes folding through a partition meaningful.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from .acts import Act, Event, Partition, StateSpace, enumerate_events, event_key
from .errors import (
    CapExceeded,
    EmptyEvent,
    FrameworkMismatch,
    NoVacuousRepresentation,
    SpaceMismatch,
    ValidationError,
    ZeroPlausibilityEvent,
)
from .rationals import ONE, ZERO, ensure_unit

IS_VACUOUS_CAP = 12


@dataclass(frozen=True)
class ZPair:
    """A pair of bounds 0 <= lower <= upper <= 1."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self) -> None:
        lower = ensure_unit(Fraction(self.lower), "lower bound")
        upper = ensure_unit(Fraction(self.upper), "upper bound")
        if lower > upper:
            raise ValidationError(f"bounds out of order: {lower} > {upper}")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower


Z_BOTTOM = ZPair(ZERO, ZERO)
Z_TOP = ZPair(ONE, ONE)
Z_VACUOUS = ZPair(ZERO, ONE)


class Framework(enum.Enum):
    PROBABILITY = "probability"
    CREDAL_SET = "credal-set"
    BELIEF_FUNCTION = "belief-function"
    POSSIBILITY = "possibility"


def _validate_weights(weights: tuple[Fraction, ...], label: str) -> tuple[Fraction, ...]:
    values = tuple(Fraction(w) for w in weights)
    if not values:
        raise ValidationError(f"{label} must cover at least one state")
    for w in values:
        if w < 0:
            raise ValidationError(f"{label} has a negative entry: {w}")
    if sum(values) != 1:
        raise ValidationError(f"{label} must sum to 1, got {sum(values)}")
    return values


@dataclass(frozen=True)
class ProbabilityMeasure:
    """A single probability vector; evaluates events to point pairs."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", _validate_weights(self.weights, "probability"))

    @property
    def space(self) -> StateSpace:
        return StateSpace(len(self.weights))


@dataclass(frozen=True)
class CredalSetMeasure:
    """The convex hull of finitely many probability vectors.

    generators=None marks the full simplex symbolically, so ignorance
    stays exact at any size instead of materializing all vertices.
    """

    space: StateSpace
    generators: Optional[tuple[tuple[Fraction, ...], ...]] = None

    def __post_init__(self) -> None:
        if self.generators is None:
            return
        if not self.generators:
            raise ValidationError("a credal set needs at least one generator")
        checked = []
        for gen in self.generators:
            values = _validate_weights(tuple(gen), "credal generator")
            if len(values) != self.space.n:
                raise SpaceMismatch(
                    f"generator of length {len(values)} on a space of size {self.space.n}")
            checked.append(values)
        object.__setattr__(self, "generators", tuple(checked))

    @property
    def is_full_simplex(self) -> bool:
        return self.generators is None

    @classmethod
    def full_simplex(cls, space: StateSpace) -> "CredalSetMeasure":
        return cls(space, None)


@dataclass(frozen=True)
class BeliefFunctionMeasure:
    """A mass assignment on non-empty events.

    Masses are stored zero-free and sorted by event, so equal mass
    assignments compare and hash equal regardless of input order.
    """

    space: StateSpace
    masses: tuple[tuple[Event, Fraction], ...]

    def __post_init__(self) -> None:
        raw = self.masses.items() if isinstance(self.masses, Mapping) else self.masses
        combined: dict[Event, Fraction] = {}
        for event, mass in raw:
            event = frozenset(event)
            mass = Fraction(mass)
            if not event:
                raise EmptyEvent("belief functions put no mass on the empty event")
            if not self.space.contains_event(event):
                raise SpaceMismatch(f"focal element {sorted(event)} leaves the space")
            if mass < 0:
                raise ValidationError(f"negative mass {mass}")
            combined[event] = combined.get(event, ZERO) + mass
        total = sum(combined.values(), ZERO)
        if total != 1:
            raise ValidationError(f"masses must sum to 1, got {total}")
        cleaned = tuple(sorted(
            ((e, m) for e, m in combined.items() if m > 0),
            key=lambda pair: event_key(pair[0])))
        object.__setattr__(self, "masses", cleaned)

    def mass_of(self, event: Event) -> Fraction:
        for focal, mass in self.masses:
            if focal == event:
                return mass
        return ZERO


@dataclass(frozen=True)
class PossibilityMeasure:
    """A possibility distribution: per-state grades with max 1."""

    grades: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(ensure_unit(Fraction(g), "grade") for g in self.grades)
        if not values:
            raise ValidationError("a possibility distribution needs at least one state")
        if max(values) != 1:
            raise ValidationError("some state must be fully possible (grade 1)")
        object.__setattr__(self, "grades", values)

    @property
    def space(self) -> StateSpace:
        return StateSpace(len(self.grades))


PlausibilityMeasure = Union[
    ProbabilityMeasure, CredalSetMeasure, BeliefFunctionMeasure, PossibilityMeasure]


def framework_of(measure: PlausibilityMeasure) -> Framework:
    if isinstance(measure, ProbabilityMeasure):
        return Framework.PROBABILITY
    if isinstance(measure, CredalSetMeasure):
        return Framework.CREDAL_SET
    if isinstance(measure, BeliefFunctionMeasure):
        return Framework.BELIEF_FUNCTION
    if isinstance(measure, PossibilityMeasure):
        return Framework.POSSIBILITY
    raise FrameworkMismatch(f"not a plausibility measure: {measure!r}")


def _check_event(measure: PlausibilityMeasure, event: Event) -> Event:
    event = frozenset(event)
    if not measure.space.contains_event(event):
        raise SpaceMismatch(f"event {sorted(event)} leaves the measure's space")
    return event


def evaluate(measure: PlausibilityMeasure, event: Event) -> ZPair:
    """Lower and upper value of an event under the measure."""
    event = _check_event(measure, event)
    n = measure.space.n
    if isinstance(measure, ProbabilityMeasure):
        p = sum((measure.weights[s] for s in event), ZERO)
        return ZPair(p, p)
    if isinstance(measure, CredalSetMeasure):
        if measure.is_full_simplex:
            if not event:
                return Z_BOTTOM
            if len(event) == n:
                return Z_TOP
            return Z_VACUOUS
        sums = [sum((gen[s] for s in event), ZERO) for gen in measure.generators]
        return ZPair(min(sums), max(sums))
    if isinstance(measure, BeliefFunctionMeasure):
        belief = sum((m for focal, m in measure.masses if focal <= event), ZERO)
        plaus = sum((m for focal, m in measure.masses if focal & event), ZERO)
        return ZPair(belief, plaus)
    if isinstance(measure, PossibilityMeasure):
        possible = max((measure.grades[s] for s in event), default=ZERO)
        complement_possible = max(
            (measure.grades[s] for s in measure.space.states if s not in event),
            default=ZERO)
        return ZPair(ONE - complement_possible, possible)
    raise FrameworkMismatch(f"not a plausibility measure: {measure!r}")


def vacuous(space: StateSpace, framework: Framework) -> PlausibilityMeasure:
    """The canonical fully ignorant measure of a framework.

    A single probability vector pins every event to a point, so the
    probability framework has no such measure at any size.
    """
    if framework is Framework.PROBABILITY:
        raise NoVacuousRepresentation("a single probability cannot express ignorance")
    if framework is Framework.CREDAL_SET:
        return CredalSetMeasure.full_simplex(space)
    if framework is Framework.BELIEF_FUNCTION:
        return BeliefFunctionMeasure(space, ((space.full_event(), ONE),))
    if framework is Framework.POSSIBILITY:
        return PossibilityMeasure((ONE,) * space.n)
    raise FrameworkMismatch(f"unknown framework: {framework!r}")


@dataclass(frozen=True)
class VacuityVerdict:
    vacuous: bool
    witness: Optional[Event] = None

    def __bool__(self) -> bool:
        return self.vacuous


def _vacuous_structurally(measure: PlausibilityMeasure) -> Optional[bool]:
    """Constant-time vacuity verdicts where the shape decides; None otherwise."""
    n = measure.space.n
    if n == 1:
        return True  # no proper non-empty events to fail on
    if isinstance(measure, ProbabilityMeasure):
        return False
    if isinstance(measure, CredalSetMeasure):
        return True if measure.is_full_simplex else None
    if isinstance(measure, BeliefFunctionMeasure):
        return measure.masses == ((measure.space.full_event(), ONE),)
    if isinstance(measure, PossibilityMeasure):
        return all(g == ONE for g in measure.grades)
    raise FrameworkMismatch(f"not a plausibility measure: {measure!r}")


def is_vacuous(measure: PlausibilityMeasure, *, cap: int = IS_VACUOUS_CAP) -> VacuityVerdict:
    """Decide total ignorance; on failure, report the first bad event.

    The witness is the lexicographically least proper non-empty event
    whose value differs from the unit interval.
    """
    if measure.space.n > cap:
        raise CapExceeded(f"vacuity check capped at n <= {cap}, got {measure.space.n}")
    structural = _vacuous_structurally(measure)
    if structural:
        return VacuityVerdict(True)
    for event in enumerate_events(measure.space, include_full=False):
        if evaluate(measure, event) != Z_VACUOUS:
            return VacuityVerdict(False, event)
    return VacuityVerdict(True)


def _check_partition(measure: PlausibilityMeasure, partition: Partition) -> None:
    if partition.space != measure.space:
        raise SpaceMismatch("partition and measure live on different spaces")


def restrict(measure: PlausibilityMeasure, partition: Partition) -> PlausibilityMeasure:
    """Push the measure onto the partition's blocks.

    The result lives on the quotient space whose state i is block i.
    """
    _check_partition(measure, partition)
    blocks = partition.blocks
    if isinstance(measure, ProbabilityMeasure):
        return ProbabilityMeasure(
            tuple(sum((measure.weights[s] for s in block), ZERO) for block in blocks))
    if isinstance(measure, CredalSetMeasure):
        if measure.is_full_simplex:
            return CredalSetMeasure.full_simplex(partition.quotient)
        pushed = tuple(
            tuple(sum((gen[s] for s in block), ZERO) for block in blocks)
            for gen in measure.generators)
        return CredalSetMeasure(partition.quotient, pushed)
    if isinstance(measure, BeliefFunctionMeasure):
        # a focal element coarsens to the set of blocks it meets
        coarsened: dict[Event, Fraction] = {}
        for focal, mass in measure.masses:
            image = frozenset(i for i, block in enumerate(blocks) if block & focal)
            coarsened[image] = coarsened.get(image, ZERO) + mass
        return BeliefFunctionMeasure(partition.quotient, tuple(coarsened.items()))
    if isinstance(measure, PossibilityMeasure):
        return PossibilityMeasure(
            tuple(max(measure.grades[s] for s in block) for block in blocks))
    raise FrameworkMismatch(f"not a plausibility measure: {measure!r}")


def condition(measure: PlausibilityMeasure, event: Event) -> PlausibilityMeasure:
    """Condition on an event; surviving states are relabeled 0..k-1.

    Probabilities and credal generators renormalize by the event's
    weight (generators giving the event no weight drop out), belief
    masses transfer to their trace on the event and renormalize by the
    upper value, possibility grades rescale by the event's maximum.
    """
    event = _check_event(measure, event)
    if not event:
        raise EmptyEvent("cannot condition on the empty event")
    kept = sorted(event)
    if isinstance(measure, ProbabilityMeasure):
        total = sum((measure.weights[s] for s in kept), ZERO)
        if total == 0:
            raise ZeroPlausibilityEvent(f"event {kept} has probability zero")
        return ProbabilityMeasure(tuple(measure.weights[s] / total for s in kept))
    if isinstance(measure, CredalSetMeasure):
        if measure.is_full_simplex:
            return CredalSetMeasure.full_simplex(StateSpace(len(kept)))
        conditioned = []
        for gen in measure.generators:
            total = sum((gen[s] for s in kept), ZERO)
            if total == 0:
                continue
            conditioned.append(tuple(gen[s] / total for s in kept))
        if not conditioned:
            raise ZeroPlausibilityEvent(f"event {kept} has upper probability zero")
        return CredalSetMeasure(StateSpace(len(kept)), tuple(conditioned))
    if isinstance(measure, BeliefFunctionMeasure):
        relabel = {s: i for i, s in enumerate(kept)}
        plaus = evaluate(measure, event).upper
        if plaus == 0:
            raise ZeroPlausibilityEvent(f"event {kept} has plausibility zero")
        transferred: dict[Event, Fraction] = {}
        for focal, mass in measure.masses:
            trace = focal & event
            if not trace:
                continue
            image = frozenset(relabel[s] for s in trace)
            transferred[image] = transferred.get(image, ZERO) + mass / plaus
        return BeliefFunctionMeasure(StateSpace(len(kept)), tuple(transferred.items()))
    if isinstance(measure, PossibilityMeasure):
        peak = max(measure.grades[s] for s in kept)
        if peak == 0:
            raise ZeroPlausibilityEvent(f"event {kept} has possibility zero")
        return PossibilityMeasure(tuple(measure.grades[s] / peak for s in kept))
    raise FrameworkMismatch(f"not a plausibility measure: {measure!r}")


def _consonant_masses(measure: PossibilityMeasure) -> BeliefFunctionMeasure:
    """The belief function whose nested focal elements are the level sets."""
    levels = sorted(set(measure.grades), reverse=True)
    masses = []
    for i, grade in enumerate(levels):
        cut = frozenset(s for s in measure.space.states if measure.grades[s] >= grade)
        below = levels[i + 1] if i + 1 < len(levels) else ZERO
        masses.append((cut, grade - below))
    return BeliefFunctionMeasure(measure.space, tuple(masses))


def expectation_bounds(measure: PlausibilityMeasure, act: Act) -> ZPair:
    """Tight lower and upper expected utility of an act under the measure."""
    if act.space != measure.space:
        raise SpaceMismatch("act and measure live on different spaces")
    if isinstance(measure, ProbabilityMeasure):
        value = sum((w * u for w, u in zip(measure.weights, act.outcomes)), ZERO)
        return ZPair(value, value)
    if isinstance(measure, CredalSetMeasure):
        if measure.is_full_simplex:
            return ZPair(min(act.outcomes), max(act.outcomes))
        values = [
            sum((w * u for w, u in zip(gen, act.outcomes)), ZERO)
            for gen in measure.generators]
        return ZPair(min(values), max(values))
    if isinstance(measure, BeliefFunctionMeasure):
        lower = sum((m * min(act.outcomes[s] for s in focal)
                     for focal, m in measure.masses), ZERO)
        upper = sum((m * max(act.outcomes[s] for s in focal)
                     for focal, m in measure.masses), ZERO)
        return ZPair(lower, upper)
    if isinstance(measure, PossibilityMeasure):
        return expectation_bounds(_consonant_masses(measure), act)
    raise FrameworkMismatch(f"not a plausibility measure: {measure!r}")

"""Certainty-equivalence operators.

A vacuous rule turns an act's outcome set into a single indifferent
utility. Gamma rules see only the pair (min, max) of the set: the
anchored rule clamps its anchor into that interval, the Hurwicz rule
mixes the endpoints, min/max keep one endpoint, and tabulated rules
look the pair up on a finite grid. The median rule is set-level (it
consumes the whole outcome set) and exists as a foil.

The `ce` dispatcher routes (operator, measure, act) to expected utility
for single probabilities, to the vacuous rule when the measure carries
no information, and optionally to the rule applied to the measure's
expectation bounds when the credal extension is enabled.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet, Iterable, Mapping, Union

from .acts import Act, outcome_set
from .errors import (
    EmptyOutcomeSet,
    FrameworkMismatch,
    NotTabulated,
    SpaceMismatch,
    UnsupportedCombination,
    ValidationError,
)
from .plausibility import (
    BeliefFunctionMeasure,
    CredalSetMeasure,
    PlausibilityMeasure,
    PossibilityMeasure,
    ProbabilityMeasure,
    ZPair,
    expectation_bounds,
    is_vacuous,
)
from .rationals import ONE, ZERO, ensure_unit


@dataclass(frozen=True)
class Anchored:
    """Clamp the anchor into [lower, upper]: the interval absorbs it."""

    anchor: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "anchor", ensure_unit(Fraction(self.anchor), "anchor"))


@dataclass(frozen=True)
class Hurwicz:
    """alpha weighs the lower endpoint, 1 - alpha the upper."""

    alpha: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", ensure_unit(Fraction(self.alpha), "alpha"))


@dataclass(frozen=True)
class MinRule:
    """Always the lower endpoint. Kept distinct from Anchored(0) on purpose."""


@dataclass(frozen=True)
class MaxRule:
    """Always the upper endpoint. Kept distinct from Anchored(1) on purpose."""


@dataclass(frozen=True)
class Tabulated:
    """An explicit finite map from pairs to utilities; off-grid is an error."""

    entries: tuple[tuple[ZPair, Fraction], ...]

    def __post_init__(self) -> None:
        raw = self.entries.items() if isinstance(self.entries, Mapping) else self.entries
        index: dict[ZPair, Fraction] = {}
        for z, value in raw:
            if z in index and index[z] != value:
                raise ValidationError(f"conflicting entries for {z}")
            index[z] = ensure_unit(Fraction(value), "table value")
        ordered = tuple(sorted(index.items(), key=lambda e: (e[0].lower, e[0].upper)))
        object.__setattr__(self, "entries", ordered)
        object.__setattr__(self, "_index", index)

    def lookup(self, z: ZPair) -> Fraction:
        try:
            return self._index[z]
        except KeyError:
            raise NotTabulated(f"pair {z} is not tabulated") from None


GammaFunction = Union[Anchored, Hurwicz, MinRule, MaxRule, Tabulated]


@dataclass(frozen=True)
class MedianRule:
    """Lower median of the distinct outcomes; not a pair function."""


VacuousRule = Union[GammaFunction, MedianRule]


class Preference(enum.Enum):
    STRICTLY_PREFERS = "StrictlyPrefers"
    INDIFFERENT = "Indifferent"
    STRICTLY_DISPREFERS = "StrictlyDisprefers"


@dataclass(frozen=True)
class CeOperator:
    """An evaluation model: which routes are enabled, and the vacuous rule."""

    vacuous_rule: VacuousRule
    probabilistic_rule: bool = True
    credal_extension: bool = False

    def __post_init__(self) -> None:
        if self.vacuous_rule is None:
            raise UnsupportedCombination("an operator needs a vacuous rule")


def gamma_apply(rule: GammaFunction, z: ZPair) -> Fraction:
    """Evaluate a pair rule on lower/upper bounds."""
    if isinstance(rule, Anchored):
        if z.upper <= rule.anchor:
            return z.upper
        if z.lower >= rule.anchor:
            return z.lower
        return rule.anchor
    if isinstance(rule, Hurwicz):
        return rule.alpha * z.lower + (ONE - rule.alpha) * z.upper
    if isinstance(rule, MinRule):
        return z.lower
    if isinstance(rule, MaxRule):
        return z.upper
    if isinstance(rule, Tabulated):
        return rule.lookup(z)
    raise UnsupportedCombination(f"not a pair rule: {rule!r}")


def median_ce(outcomes: AbstractSet) -> Fraction:
    """Lower median of the distinct outcomes (ties broken downward)."""
    if not outcomes:
        raise EmptyOutcomeSet("median of an empty outcome set")
    ordered = sorted(outcomes)
    return ordered[(len(ordered) - 1) // 2]


def ce_vacuous(rule: VacuousRule, outcomes: AbstractSet) -> Fraction:
    """Certainty equivalent of an outcome set under total ignorance.

    Pair rules see only (min, max) of the set; the median rule is the
    one implemented rule that uses more of it.
    """
    if not outcomes:
        raise EmptyOutcomeSet("no outcomes to evaluate")
    if isinstance(rule, MedianRule):
        return median_ce(outcomes)
    return gamma_apply(rule, ZPair(min(outcomes), max(outcomes)))


def expected_utility(measure: ProbabilityMeasure, act: Act) -> Fraction:
    if not isinstance(measure, ProbabilityMeasure):
        raise FrameworkMismatch("expected utility needs a single probability")
    if measure.space != act.space:
        raise SpaceMismatch("measure and act live on different spaces")
    return sum((w * u for w, u in zip(measure.weights, act.outcomes)), ZERO)


def ce(op: CeOperator, measure: PlausibilityMeasure, act: Act) -> Fraction:
    """Certainty equivalent of an act under a measure.

    Routes, in order: expected utility for single probabilities (when
    the probabilistic rule is on); the vacuous rule on the outcome set
    when the measure is fully ignorant; the pair rule on the measure's
    expectation bounds when the credal extension is on. Anything else
    has no defined value.
    """
    if measure.space != act.space:
        raise SpaceMismatch("measure and act live on different spaces")
    if isinstance(measure, ProbabilityMeasure) and op.probabilistic_rule:
        return expected_utility(measure, act)
    if is_vacuous(measure):
        return ce_vacuous(op.vacuous_rule, outcome_set(act))
    if (op.credal_extension
            and isinstance(measure, (CredalSetMeasure, BeliefFunctionMeasure,
                                     PossibilityMeasure))
            and not isinstance(op.vacuous_rule, MedianRule)):
        return gamma_apply(op.vacuous_rule, expectation_bounds(measure, act))
    raise UnsupportedCombination(
        "no evaluation route for this measure under this operator")


def np_prefer(rule: VacuousRule, left: AbstractSet, right: AbstractSet) -> Preference:
    """Complete preference between outcome sets via their equivalents."""
    a = ce_vacuous(rule, left)
    b = ce_vacuous(rule, right)
    if a > b:
        return Preference.STRICTLY_PREFERS
    if a < b:
        return Preference.STRICTLY_DISPREFERS
    return Preference.INDIFFERENT


def lambda_prefer(anchor: Fraction, left: Iterable, right: Iterable) -> bool:
    """Three-clause interval comparison of outcome sets around an anchor."""
    left = frozenset(left)
    right = frozenset(right)
    if not left or not right:
        raise EmptyOutcomeSet("preference over an empty outcome set")
    lo_a, hi_a = min(left), max(left)
    lo_b, hi_b = min(right), max(right)
    if anchor >= hi_a >= hi_b:
        return True
    if lo_a >= lo_b >= anchor:
        return True
    if hi_a >= anchor >= lo_b:
        return True
    return False

"""Cross-framework agreement checks.

Under certainty and under total ignorance, every uncertainty framework
should value an act identically; and as a contaminated probability
loses weight on its center, its certainty equivalent should approach
the ignorant one, within an explicit linear envelope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .acts import Act, StateSpace, outcome_set
from .ce_ops import CeOperator, GammaFunction, ce, ce_vacuous
from .errors import SpaceMismatch, ValidationError
from .plausibility import (
    BeliefFunctionMeasure,
    CredalSetMeasure,
    Framework,
    PossibilityMeasure,
    expectation_bounds,
    vacuous,
)
from .rationals import ONE, ZERO

VACUOUS_FRAMEWORKS = (
    Framework.CREDAL_SET, Framework.BELIEF_FUNCTION, Framework.POSSIBILITY)


@dataclass(frozen=True)
class ConsensusReport:
    """Per-framework certainty equivalents of one act, and their agreement."""

    act: Act
    credal_value: Fraction
    belief_value: Fraction
    possibility_value: Fraction
    agree: bool

    def __post_init__(self) -> None:
        expected = self.credal_value == self.belief_value == self.possibility_value
        if self.agree != expected:
            raise ValidationError("agreement flag contradicts the values")


@dataclass(frozen=True)
class ContaminationFamily:
    """Mixtures (1-eps)*base + eps*q over all probability vectors q.

    Each member is represented by its extreme points: the base shifted
    toward each unit vector. eps=1 is the materialized full simplex;
    smaller eps shrinks the set toward the base point.
    """

    base: tuple[Fraction, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        base = tuple(Fraction(w) for w in self.base)
        if not base or any(w < 0 for w in base) or sum(base) != 1:
            raise ValidationError("base must be a probability vector")
        weights = tuple(Fraction(e) for e in self.weights)
        if not weights:
            raise ValidationError("at least one contamination weight required")
        if any(not ZERO < e <= ONE for e in weights):
            raise ValidationError("contamination weights must lie in (0, 1]")
        if any(a <= b for a, b in zip(weights, weights[1:])):
            raise ValidationError("contamination weights must strictly descend")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "weights", weights)

    @property
    def space(self) -> StateSpace:
        return StateSpace(len(self.base))

    def member(self, epsilon: Fraction) -> CredalSetMeasure:
        generators = tuple(
            tuple((ONE - epsilon) * w + (epsilon if s == t else ZERO)
                  for t, w in enumerate(self.base))
            for s in self.space.states)
        return CredalSetMeasure(self.space, generators)


@dataclass(frozen=True)
class ConvergenceRow:
    epsilon: Fraction
    lower: Fraction
    upper: Fraction
    value: Fraction
    within_bound: bool


@dataclass(frozen=True)
class ConvergenceReport:
    act: Act
    rule: GammaFunction
    rows: tuple[ConvergenceRow, ...]
    limit_value: Fraction
    bound_satisfied: bool

    def __post_init__(self) -> None:
        if self.bound_satisfied != all(row.within_bound for row in self.rows):
            raise ValidationError("bound flag contradicts the rows")


def consensus_check(rule: GammaFunction, act: Act) -> ConsensusReport:
    """Value the act under each framework's ignorant measure."""
    if act.space.n < 2:
        raise ValidationError("consensus needs at least two states")
    op = CeOperator(rule)
    values = [ce(op, vacuous(act.space, fw), act) for fw in VACUOUS_FRAMEWORKS]
    credal, belief, possibility = values
    return ConsensusReport(act, credal, belief, possibility,
                           credal == belief == possibility)


def certainty_check(rule: GammaFunction, act: Act, state: int) -> ConsensusReport:
    """Value the act under each framework's point mass on one state."""
    space = act.space
    if not 0 <= state < space.n:
        raise SpaceMismatch(f"state {state} not in a space of size {space.n}")
    point = tuple(ONE if s == state else ZERO for s in space.states)
    measures = (
        CredalSetMeasure(space, (point,)),
        BeliefFunctionMeasure(space, ((frozenset((state,)), ONE),)),
        PossibilityMeasure(point),
    )
    op = CeOperator(rule, credal_extension=True)
    credal, belief, possibility = (ce(op, m, act) for m in measures)
    return ConsensusReport(act, credal, belief, possibility,
                           credal == belief == possibility)


def limit_check(rule: GammaFunction, act: Act,
                family: ContaminationFamily) -> ConvergenceReport:
    """Track the ce along a contamination family toward full ignorance.

    Each row compares the member's value against the ignorant one; the
    gap can never exceed the weight remaining on the base point times
    the act's outcome spread.
    """
    if family.space != act.space:
        raise SpaceMismatch("family and act live on different spaces")
    op = CeOperator(rule, credal_extension=True)
    limit_value = ce_vacuous(rule, outcome_set(act))
    spread = max(act.outcomes) - min(act.outcomes)
    rows = []
    for epsilon in family.weights:
        member = family.member(epsilon)
        bounds = expectation_bounds(member, act)
        value = ce(op, member, act)
        within = abs(value - limit_value) <= (ONE - epsilon) * spread
        rows.append(ConvergenceRow(epsilon, bounds.lower, bounds.upper, value, within))
    return ConvergenceReport(act, rule, tuple(rows), limit_value,
                             all(row.within_bound for row in rows))

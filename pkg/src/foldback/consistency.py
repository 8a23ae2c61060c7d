"""Checkers for folding-back consistency and the rule laws.

Everything here is a finite, exact sweep: no tolerances, no sampling.
Reports carry witnesses that are replayable: each witness records the
probe acts whose re-evaluation reproduces its left/right values bit for
bit, and sequential verdicts record the full (act, partition, framework)
cell they came from.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .acts import Act, Partition, StateSpace, condition_act, enumerate_partitions
from .ce_ops import (
    CeOperator,
    GammaFunction,
    Preference,
    Tabulated,
    VacuousRule,
    ce,
    ce_vacuous,
    gamma_apply,
    np_prefer,
)
from .errors import CapExceeded, ValidationError
from .plausibility import (
    Framework,
    PlausibilityMeasure,
    ZPair,
    condition,
    framework_of,
    restrict,
    vacuous,
)
from .rationals import ONE, format_rational, unit_grid

DEFAULT_LIPSCHITZ = ONE


class LawId(enum.Enum):
    UNANIMITY = "Unanimity"
    RANGE = "Range"
    MONOTONICITY = "Monotonicity"
    LIPSCHITZ_CONTINUITY = "LipschitzContinuity"
    GAMMA_IDEMPOTENCE = "GammaIdempotence-(i)"
    GAMMA_MONOTONE = "GammaMonotone-(ii)"
    GAMMA_ITERATION = "GammaIteration-(iii)"
    CONDITION_I = "ConditionI"
    CONDITION_SI = "ConditionSI"
    CONDITION_M = "ConditionM"


@dataclass(frozen=True)
class Probe:
    """A minimal evaluation problem that reproduces one witness value.

    Evaluating the probe act under the probe measure (a vacuous measure
    of the given framework, or the probability vector in `weights`)
    with the report's operator yields the recorded value.
    """

    outcomes: tuple[Fraction, ...]
    framework: Framework = Framework.CREDAL_SET
    weights: Optional[tuple[Fraction, ...]] = None


@dataclass(frozen=True)
class Witness:
    inputs: tuple[str, ...]
    left: Fraction
    right: Fraction
    probe_left: Probe
    probe_right: Probe


@dataclass(frozen=True)
class LawReport:
    law: LawId
    passed: bool
    witnesses: tuple[Witness, ...] = ()

    def __post_init__(self) -> None:
        if self.passed != (len(self.witnesses) == 0):
            raise ValidationError("a law passes exactly when it has no witnesses")


@dataclass(frozen=True)
class ConsistencyVerdict:
    """One folding-back comparison: direct vs through-a-partition value."""

    holds: bool
    direct_value: Fraction
    folded_value: Fraction
    partition: Partition
    act: Act
    framework: Optional[Framework] = None

    def __post_init__(self) -> None:
        if self.holds != (self.direct_value == self.folded_value):
            raise ValidationError("verdict flag contradicts its values")


@dataclass(frozen=True)
class SearchConfig:
    """Extent of the exhaustive sweeps."""

    sizes: tuple[int, ...] = (2, 3, 4)
    denominator: int = 4
    frameworks: tuple[Framework, ...] = (
        Framework.CREDAL_SET, Framework.BELIEF_FUNCTION, Framework.POSSIBILITY)
    partition_cap: int = 8
    stop_at_first: bool = False

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise ValidationError("grid denominator must be >= 1")
        if not self.sizes or any(n < 1 for n in self.sizes):
            raise ValidationError("sizes must be positive")
        if not self.frameworks:
            raise ValidationError("at least one framework required")
        if Framework.PROBABILITY in self.frameworks:
            raise ValidationError("the sweep needs frameworks with a vacuous measure")


def check_sequential(op: CeOperator, measure: PlausibilityMeasure, act: Act,
                     partition: Partition) -> ConsistencyVerdict:
    """Compare direct evaluation with folding back through a partition.

    The folded value coarsens the measure to the partition, replaces
    each block by the certainty equivalent of the act's restriction
    under the conditioned measure, and evaluates the resulting act.
    """
    direct = ce(op, measure, act)
    restricted = restrict(measure, partition)
    block_values = tuple(
        ce(op, condition(measure, block), condition_act(act, block).as_act())
        for block in partition.blocks)
    folded = ce(op, restricted, Act(block_values))
    return ConsistencyVerdict(direct == folded, direct, folded, partition, act,
                              framework_of(measure))


def check_sequential_exhaustive(op: CeOperator, cfg: SearchConfig) -> list[ConsistencyVerdict]:
    """Sweep all grid acts, partitions, and vacuous measures; return failures.

    Order is canonical: sizes as configured, acts lexicographically by
    outcome vector, partitions in enumeration order, frameworks as
    configured, so the first element is the first counterexample.
    """
    if max(cfg.sizes) > cfg.partition_cap:
        raise CapExceeded(
            f"sweep capped at n <= {cfg.partition_cap}, asked for {max(cfg.sizes)}")
    grid = unit_grid(cfg.denominator)
    failures: list[ConsistencyVerdict] = []
    for n in cfg.sizes:
        space = StateSpace(n)
        ignorant = {fw: vacuous(space, fw) for fw in cfg.frameworks}
        prepared = []
        for H in enumerate_partitions(space, cap=cfg.partition_cap):
            per_fw = tuple(
                (fw,
                 restrict(ignorant[fw], H),
                 tuple(condition(ignorant[fw], block) for block in H.blocks))
                for fw in cfg.frameworks)
            prepared.append((H, per_fw))
        for outcomes in itertools.product(grid, repeat=n):
            act = Act(outcomes)
            direct: dict[Framework, Fraction] = {}
            for H, per_fw in prepared:
                pieces = tuple(
                    condition_act(act, block).as_act() for block in H.blocks)
                for fw, restricted, conditioned in per_fw:
                    if fw not in direct:
                        direct[fw] = ce(op, ignorant[fw], act)
                    block_values = tuple(
                        ce(op, cm, piece) for cm, piece in zip(conditioned, pieces))
                    folded = ce(op, restricted, Act(block_values))
                    if direct[fw] != folded:
                        failures.append(ConsistencyVerdict(
                            False, direct[fw], folded, H, act, fw))
                        if cfg.stop_at_first:
                            return failures
    return failures


def _pair_probe(x: Fraction, y: Fraction) -> Probe:
    return Probe((x, y))


def _constant_probe(c: Fraction) -> Probe:
    # a point-mass probability reproduces the constant independently of the rule
    return Probe((c,), Framework.PROBABILITY, (ONE,))


def _fmt(value: Fraction) -> str:
    return format_rational(value)


def _fmt_set(values) -> str:
    return "{" + ", ".join(_fmt(v) for v in sorted(values)) + "}"


def check_gamma_laws(rule: GammaFunction, denominator: int, *,
                     lipschitz: Fraction = DEFAULT_LIPSCHITZ) -> list[LawReport]:
    """Check the pair-rule laws on the grid {k/denominator}.

    (i) diagonal identity, (ii) monotonicity in both arguments,
    (iii) stability under replacing either argument by its own
    equivalent, and the Lipschitz modulus standing in for continuity.
    """
    grid = unit_grid(denominator)
    step = Fraction(1, denominator)
    pairs = [(x, y) for x in grid for y in grid if x <= y]
    value = {pair: gamma_apply(rule, ZPair(*pair)) for pair in pairs}

    def lower_neighbors(x: Fraction, y: Fraction):
        # one-step moves generate the whole argwise order on the grid,
        # so neighbor checks decide monotonicity and the modulus exactly
        if x - step >= 0:
            yield x - step, y
        if y - step >= x:
            yield x, y - step

    idem: list[Witness] = []
    for c in grid:
        got = value[(c, c)]
        if got != c:
            idem.append(Witness((_fmt(c),), got, c, _pair_probe(c, c), _constant_probe(c)))

    mono: list[Witness] = []
    for x, y in pairs:
        for x2, y2 in lower_neighbors(x, y):
            if value[(x, y)] < value[(x2, y2)]:
                mono.append(Witness(
                    (_fmt(x), _fmt(y), _fmt(x2), _fmt(y2)),
                    value[(x, y)], value[(x2, y2)],
                    _pair_probe(x, y), _pair_probe(x2, y2)))

    iteration: list[Witness] = []
    for x, y in pairs:
        g = value[(x, y)]
        gxx, gyy = value[(x, x)], value[(y, y)]
        if gxx <= g:
            via_lower = gamma_apply(rule, ZPair(gxx, g))
            if via_lower != g:
                iteration.append(Witness(
                    (_fmt(x), _fmt(y), "via-lower"),
                    via_lower, g, _pair_probe(gxx, g), _pair_probe(x, y)))
        else:
            # the inner pair is out of order, so the law cannot even be formed
            iteration.append(Witness(
                (_fmt(x), _fmt(y), "via-lower", "inner-pair-out-of-order"),
                gxx, g, _pair_probe(x, x), _pair_probe(x, y)))
        if g <= gyy:
            via_upper = gamma_apply(rule, ZPair(g, gyy))
            if via_upper != g:
                iteration.append(Witness(
                    (_fmt(x), _fmt(y), "via-upper"),
                    via_upper, g, _pair_probe(g, gyy), _pair_probe(x, y)))
        else:
            iteration.append(Witness(
                (_fmt(x), _fmt(y), "via-upper", "inner-pair-out-of-order"),
                g, gyy, _pair_probe(x, y), _pair_probe(y, y)))

    lipped: list[Witness] = []
    for x, y in pairs:
        for x2, y2 in lower_neighbors(x, y):
            gap = abs(value[(x, y)] - value[(x2, y2)])
            if gap > lipschitz * step:
                lipped.append(Witness(
                    (_fmt(x), _fmt(y), _fmt(x2), _fmt(y2)),
                    value[(x, y)], value[(x2, y2)],
                    _pair_probe(x, y), _pair_probe(x2, y2)))

    return [
        LawReport(LawId.GAMMA_IDEMPOTENCE, not idem, tuple(idem)),
        LawReport(LawId.GAMMA_MONOTONE, not mono, tuple(mono)),
        LawReport(LawId.GAMMA_ITERATION, not iteration, tuple(iteration)),
        LawReport(LawId.LIPSCHITZ_CONTINUITY, not lipped, tuple(lipped)),
    ]


def check_ev_properties(op: CeOperator, cfg: SearchConfig, *,
                        lipschitz: Fraction = DEFAULT_LIPSCHITZ) -> list[LawReport]:
    """The evaluation-model properties on outcome sets over the grid.

    Unanimity on constants; Range (only the extremes matter) on sets of
    up to four grid points; Monotonicity and the Lipschitz surrogate on
    dominating pairs.
    """
    rule = op.vacuous_rule
    grid = unit_grid(cfg.denominator)
    pairs = [(x, y) for x in grid for y in grid if x <= y]

    unanimity: list[Witness] = []
    for c in grid:
        got = ce_vacuous(rule, frozenset((c,)))
        if got != c:
            unanimity.append(Witness(
                (_fmt(c),), got, c, Probe((c,)), _constant_probe(c)))

    range_law: list[Witness] = []
    for size in range(1, 5):
        for combo in itertools.combinations(grid, size):
            outcomes = frozenset(combo)
            full = ce_vacuous(rule, outcomes)
            extremes = ce_vacuous(rule, frozenset((min(combo), max(combo))))
            if full != extremes:
                range_law.append(Witness(
                    (_fmt_set(outcomes),), full, extremes,
                    Probe(tuple(sorted(outcomes))),
                    _pair_probe(min(combo), max(combo))))

    mono: list[Witness] = []
    lipped: list[Witness] = []
    values = {pair: ce_vacuous(rule, frozenset(pair)) for pair in pairs}
    for x, y in pairs:
        for x2, y2 in pairs:
            if x >= x2 and y >= y2 and values[(x, y)] < values[(x2, y2)]:
                mono.append(Witness(
                    (_fmt(x), _fmt(y), _fmt(x2), _fmt(y2)),
                    values[(x, y)], values[(x2, y2)],
                    _pair_probe(x, y), _pair_probe(x2, y2)))
            gap = abs(values[(x, y)] - values[(x2, y2)])
            if gap > lipschitz * (abs(x - x2) + abs(y - y2)):
                lipped.append(Witness(
                    (_fmt(x), _fmt(y), _fmt(x2), _fmt(y2)),
                    values[(x, y)], values[(x2, y2)],
                    _pair_probe(x, y), _pair_probe(x2, y2)))

    return [
        LawReport(LawId.UNANIMITY, not unanimity, tuple(unanimity)),
        LawReport(LawId.RANGE, not range_law, tuple(range_law)),
        LawReport(LawId.MONOTONICITY, not mono, tuple(mono)),
        LawReport(LawId.LIPSCHITZ_CONTINUITY, not lipped, tuple(lipped)),
    ]


def check_set_order_conditions(rule: VacuousRule,
                               family: list) -> list[LawReport]:
    """Order conditions on set preferences over a family of outcome sets.

    Adjoined points are drawn from the union of the family. Context
    independence: adjoining a larger point never hurts. Strong
    independence: adjoining the same point preserves weak preference.
    Set monotonicity: a superset is never strictly worse.
    """
    sets = [frozenset(member) for member in family]
    pool = sorted(set().union(*sets)) if sets else []

    def value(outcomes: frozenset) -> Fraction:
        return ce_vacuous(rule, outcomes)

    cond_i: list[Witness] = []
    for base in sets:
        for x in pool:
            for y in pool:
                if x <= y:
                    continue
                if np_prefer(rule, base | {x}, base | {y}) is Preference.STRICTLY_DISPREFERS:
                    cond_i.append(Witness(
                        (_fmt_set(base), _fmt(x), _fmt(y)),
                        value(base | {x}), value(base | {y}),
                        Probe(tuple(sorted(base | {x}))),
                        Probe(tuple(sorted(base | {y})))))

    cond_si: list[Witness] = []
    for left in sets:
        for right in sets:
            if np_prefer(rule, left, right) is Preference.STRICTLY_DISPREFERS:
                continue
            for x in pool:
                if np_prefer(rule, left | {x}, right | {x}) is Preference.STRICTLY_DISPREFERS:
                    cond_si.append(Witness(
                        (_fmt_set(left), _fmt_set(right), _fmt(x)),
                        value(left | {x}), value(right | {x}),
                        Probe(tuple(sorted(left | {x}))),
                        Probe(tuple(sorted(right | {x})))))

    cond_m: list[Witness] = []
    for small in sets:
        for big in sets:
            if not small < big:
                continue
            if np_prefer(rule, big, small) is Preference.STRICTLY_DISPREFERS:
                cond_m.append(Witness(
                    (_fmt_set(small), _fmt_set(big)),
                    value(big), value(small),
                    Probe(tuple(sorted(big))),
                    Probe(tuple(sorted(small)))))

    return [
        LawReport(LawId.CONDITION_I, not cond_i, tuple(cond_i)),
        LawReport(LawId.CONDITION_SI, not cond_si, tuple(cond_si)),
        LawReport(LawId.CONDITION_M, not cond_m, tuple(cond_m)),
    ]


def default_set_family(denominator: int = 8, max_size: int = 3) -> list[frozenset]:
    """All non-empty subsets of the grid up to a size, in canonical order."""
    grid = unit_grid(denominator)
    family = []
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(grid, size):
            family.append(frozenset(combo))
    return family


def tabulate(rule: GammaFunction, denominator: int) -> Tabulated:
    """Freeze a pair rule's values on the grid into an explicit table."""
    grid = unit_grid(denominator)
    entries = tuple(
        (ZPair(x, y), gamma_apply(rule, ZPair(x, y)))
        for x in grid for y in grid if x <= y)
    return Tabulated(entries)


def enumerate_lawful_gamma_tables(denominator: int = 4, *,
                                  lipschitz: Fraction = DEFAULT_LIPSCHITZ) -> list[Tabulated]:
    """All grid tables passing every pair-rule law, in enumeration order.

    Backtracks over off-diagonal cells with the diagonal pinned by the
    identity law; candidate values are boxed by monotonicity and the
    Lipschitz modulus against already-filled neighbors, then each
    complete table is confirmed against the full law checker.
    """
    grid = unit_grid(denominator)
    step = Fraction(1, denominator)
    cells = [(x, y) for x in grid for y in grid if x < y]
    table: dict[ZPair, Fraction] = {ZPair(c, c): c for c in grid}

    def grid_range(lo: Fraction, hi: Fraction):
        k = lo
        while k <= hi:
            yield k
            k += step

    found: list[Tabulated] = []

    def fill(index: int) -> None:
        if index == len(cells):
            candidate = Tabulated(tuple(table.items()))
            if all(report.passed
                   for report in check_gamma_laws(candidate, denominator,
                                                  lipschitz=lipschitz)):
                found.append(candidate)
            return
        x, y = cells[index]
        below = table[ZPair(x, y - step)] if y - step >= x else x
        left = table[ZPair(x - step, y)] if x - step >= 0 else None
        lo = max(x, below, left if left is not None else x)
        hi = min(y, below + lipschitz * step)
        if left is not None:
            hi = min(hi, left + lipschitz * step)
        for candidate_value in grid_range(lo, hi):
            key = ZPair(x, y)
            table[key] = candidate_value
            fill(index + 1)
            del table[key]

    fill(0)
    return found


def sequentially_consistent_on_grid(rule: VacuousRule, cfg: SearchConfig) -> bool:
    """Convenience: does the rule pass both the sweep and the properties?"""
    op = CeOperator(rule)
    if check_sequential_exhaustive(op, cfg):
        return False
    return all(report.passed for report in check_ev_properties(op, cfg))

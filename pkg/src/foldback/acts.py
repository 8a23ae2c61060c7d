"""State spaces, events, partitions, and acts.

States are the integers 0..n-1. An act assigns an exact utility in [0, 1]
to each state. Partitions are kept in canonical order (blocks sorted by
their least element), which is also the order their restricted-growth
encodings produce, so enumeration order and block indexing agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import CapExceeded, DomainMismatch, EmptyEvent, SpaceMismatch, ValidationError
from .rationals import ensure_unit

Utility = Fraction
Event = frozenset  # frozenset[int]

PARTITION_CAP = 8


@dataclass(frozen=True)
class StateSpace:
    """A finite set of states, identified with range(n)."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError(f"state space needs at least one state, got {self.n}")

    @property
    def states(self) -> range:
        return range(self.n)

    def full_event(self) -> Event:
        return frozenset(self.states)

    def contains_event(self, event: Event) -> bool:
        return all(0 <= s < self.n for s in event)


def event_key(event: Event) -> tuple[int, ...]:
    """Sort key giving the lexicographic order on events by member tuple."""
    return tuple(sorted(event))


def enumerate_events(space: StateSpace, *, include_empty: bool = False,
                     include_full: bool = True) -> list[Event]:
    """All events of the space in lexicographic member-tuple order."""
    events = []
    for mask in range(2 ** space.n):
        members = frozenset(s for s in space.states if mask >> s & 1)
        if not members and not include_empty:
            continue
        if len(members) == space.n and not include_full:
            continue
        events.append(members)
    events.sort(key=event_key)
    return events


@dataclass(frozen=True)
class Partition:
    """An ordered partition of a state space into non-empty blocks.

    Blocks are canonicalized to ascending least-element order on
    construction, so two partitions with the same blocks compare equal.
    """

    space: StateSpace
    blocks: tuple[Event, ...]

    def __post_init__(self) -> None:
        blocks = tuple(frozenset(b) for b in self.blocks)
        if any(not b for b in blocks):
            raise ValidationError("partitions may not contain an empty block")
        seen: set[int] = set()
        for block in blocks:
            if not self.space.contains_event(block):
                raise ValidationError(f"block {sorted(block)} leaves the state space")
            if seen & block:
                raise ValidationError("partition blocks overlap")
            seen |= block
        if seen != set(self.space.states):
            raise ValidationError("partition blocks do not cover the state space")
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=min)))

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, state: int) -> int:
        for i, block in enumerate(self.blocks):
            if state in block:
                return i
        raise ValidationError(f"state {state} not in space of size {self.space.n}")

    @property
    def quotient(self) -> StateSpace:
        """The space whose states are this partition's block indices."""
        return StateSpace(len(self.blocks))

    def is_trivial(self) -> bool:
        """True for the one-block partition or the all-singletons one."""
        return len(self.blocks) == 1 or len(self.blocks) == self.space.n


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted-growth strings of length n in lexicographic order.

    a[0] = 0 and a[i] <= 1 + max(a[:i]); each string encodes one partition.
    """
    def extend(prefix: list[int], peak: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for digit in range(peak + 2):
            prefix.append(digit)
            yield from extend(prefix, max(peak, digit))
            prefix.pop()

    yield from extend([0], 0)


def partition_from_rgs(space: StateSpace, rgs: tuple[int, ...]) -> Partition:
    blocks: dict[int, set[int]] = {}
    for state, digit in enumerate(rgs):
        blocks.setdefault(digit, set()).add(state)
    ordered = tuple(frozenset(blocks[d]) for d in sorted(blocks))
    return Partition(space, ordered)


def enumerate_partitions(space: StateSpace, *, cap: int = PARTITION_CAP) -> list[Partition]:
    """All partitions of the space, in restricted-growth string order.

    The count is the Bell number of n, so refuse spaces above the cap.
    """
    if space.n > cap:
        raise CapExceeded(f"partition enumeration capped at n <= {cap}, got {space.n}")
    return [partition_from_rgs(space, rgs) for rgs in restricted_growth_strings(space.n)]


@dataclass(frozen=True)
class Act:
    """A utility-valued act on range(len(outcomes))."""

    outcomes: tuple[Utility, ...]

    def __post_init__(self) -> None:
        if not self.outcomes:
            raise ValidationError("an act needs at least one state")
        object.__setattr__(
            self, "outcomes",
            tuple(ensure_unit(Fraction(u), "outcome") for u in self.outcomes))

    @property
    def space(self) -> StateSpace:
        return StateSpace(len(self.outcomes))

    def at(self, state: int) -> Utility:
        return self.outcomes[state]

    def rules(self) -> tuple[tuple[Event, Utility], ...]:
        """The act as outcome rules: (level set, outcome) per distinct outcome.

        The level sets always partition the state space.
        """
        levels: dict[Utility, set[int]] = {}
        for state, value in enumerate(self.outcomes):
            levels.setdefault(value, set()).add(state)
        pairs = [(frozenset(states), value) for value, states in levels.items()]
        pairs.sort(key=lambda pair: event_key(pair[0]))
        return tuple(pairs)


@dataclass(frozen=True)
class ConditionalAct:
    """An act observed on an event, remembering original state labels.

    Entries are (original state, outcome) pairs sorted by state. The
    re-indexed view `as_act` relabels the surviving states 0..k-1 in
    increasing original order, matching how measures are conditioned.
    """

    entries: tuple[tuple[int, Utility], ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise EmptyEvent("conditional act on the empty event")
        ordered = sorted(self.entries)
        states = [s for s, _ in ordered]
        if len(set(states)) != len(states):
            raise ValidationError("conditional act entries repeat a state")
        object.__setattr__(
            self, "entries",
            tuple((s, ensure_unit(Fraction(u), "outcome")) for s, u in ordered))

    @property
    def domain(self) -> Event:
        return frozenset(s for s, _ in self.entries)

    def as_act(self) -> Act:
        return Act(tuple(u for _, u in self.entries))


def outcome_set(act: Act | ConditionalAct) -> frozenset:
    """The distinct outcomes an act can produce."""
    if isinstance(act, ConditionalAct):
        return frozenset(u for _, u in act.entries)
    return frozenset(act.outcomes)


def condition_act(act: Act, event: Event) -> ConditionalAct:
    """Restrict an act to the states inside event."""
    if not event:
        raise EmptyEvent("cannot condition an act on the empty event")
    if not act.space.contains_event(event):
        raise SpaceMismatch(f"event {sorted(event)} leaves the act's space")
    return ConditionalAct(tuple((s, act.outcomes[s]) for s in sorted(event)))


def compose_partition_act(partition: Partition, pieces: tuple[ConditionalAct, ...]) -> Act:
    """Glue one conditional act per block back into a full act.

    Inverse of conditioning each block: the piece domains must equal the
    partition blocks, in block order.
    """
    if len(pieces) != len(partition.blocks):
        raise DomainMismatch(
            f"{len(partition.blocks)} blocks but {len(pieces)} pieces")
    outcomes: dict[int, Utility] = {}
    for block, piece in zip(partition.blocks, pieces):
        if piece.domain != block:
            raise DomainMismatch(
                f"piece domain {sorted(piece.domain)} != block {sorted(block)}")
        for state, value in piece.entries:
            outcomes[state] = value
    return Act(tuple(outcomes[s] for s in partition.space.states))


def acts_equivalent(left: Act, right: Act) -> bool:
    """Pointwise equality of two acts over the same space."""
    if left.space != right.space:
        raise SpaceMismatch("acts live on different state spaces")
    return left.outcomes == right.outcomes

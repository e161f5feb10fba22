"""Finite posets and labelled posets.

A :class:`Poset` stores its full reflexive-transitive order so that
comparisons are set lookups; the Hasse diagram is derived on demand.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from .errors import CycleError, InputError, InvariantError, UnknownEventError

Pair = tuple[str, str]


class Relation(str, enum.Enum):
    LT = "lt"
    GT = "gt"
    EQ = "eq"
    CONCURRENT = "concurrent"


def transitive_closure(events: Iterable[str], pairs: Iterable[Pair]) -> set[Pair]:
    """Reflexive-transitive closure of ``pairs`` over ``events`` (Warshall)."""
    events = list(events)
    up = {e: {e} for e in events}
    for a, b in pairs:
        up[a].add(b)
    for k in events:
        above_k = up[k]
        for i in events:
            if k in up[i]:
                up[i] |= above_k
    return {(a, b) for a in events for b in up[a]}


def _find_cycle(events, order) -> list[str]:
    for a, b in sorted(order):
        if a != b and (b, a) in order:
            return [a, b, a]
    raise InvariantError("no cycle present")


@dataclass(frozen=True)
class Poset:
    """A finite poset; ``order`` holds every pair ``(a, b)`` with ``a <= b``.

    Build instances with :func:`validate` or :meth:`from_order`; the raw
    constructor trusts its arguments.
    """

    events: tuple[str, ...]
    order: frozenset[Pair]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(sorted(self.events)))

    @classmethod
    def from_order(cls, events: Iterable[str], pairs: Iterable[Pair]) -> "Poset":
        """Close ``pairs`` and check antisymmetry."""
        return validate(events, pairs)

    def __len__(self) -> int:
        return len(self.events)

    def __contains__(self, event) -> bool:
        return event in self.event_set

    @cached_property
    def event_set(self) -> frozenset[str]:
        return frozenset(self.events)

    @cached_property
    def strictly_below(self) -> dict[str, frozenset[str]]:
        down: dict[str, set[str]] = {e: set() for e in self.events}
        for a, b in self.order:
            if a != b:
                down[b].add(a)
        return {e: frozenset(s) for e, s in down.items()}

    @cached_property
    def strictly_above(self) -> dict[str, frozenset[str]]:
        up: dict[str, set[str]] = {e: set() for e in self.events}
        for a, b in self.order:
            if a != b:
                up[a].add(b)
        return {e: frozenset(s) for e, s in up.items()}

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self.order

    def lt(self, a: str, b: str) -> bool:
        return a != b and (a, b) in self.order

    def concurrent(self, a: str, b: str) -> bool:
        return (a, b) not in self.order and (b, a) not in self.order

    def restrict(self, events: Iterable[str]) -> "Poset":
        keep = frozenset(events)
        return Poset(tuple(keep), frozenset((a, b) for a, b in self.order if a in keep and b in keep))

    def hasse(self) -> list[Pair]:
        return hasse(self)

    def is_total(self) -> bool:
        return all(not self.concurrent(a, b) for a in self.events for b in self.events)


@dataclass(frozen=True)
class LPoset:
    """A poset whose events carry (not necessarily distinct) text labels."""

    poset: Poset
    labels: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))
        labelled = [e for e, _ in self.labels]
        if sorted(labelled) != list(self.poset.events):
            missing = sorted(set(self.poset.events) - set(labelled))
            if missing:
                raise InputError(f"event {missing[0]!r} has no label")
            raise InputError("labels must name every event exactly once")

    @classmethod
    def build(cls, poset: Poset, labels: Mapping[str, str]) -> "LPoset":
        for e in labels:
            if e not in poset:
                raise UnknownEventError(e)
        return cls(poset, tuple((e, str(l)) for e, l in labels.items()))

    @cached_property
    def label_of(self) -> dict[str, str]:
        return dict(self.labels)

    @property
    def events(self) -> tuple[str, ...]:
        return self.poset.events

    def events_labelled(self, label: str) -> list[str]:
        return [e for e in self.poset.events if self.label_of[e] == label]


def validate(events: Iterable[str], cover_pairs: Iterable[Pair]) -> Poset:
    """Build the poset generated by ``cover_pairs`` over ``events``.

    Raises :class:`UnknownEventError` for pairs mentioning undeclared events and
    :class:`CycleError` when the closure is not antisymmetric.
    """
    events = list(events)
    if len(set(events)) != len(events):
        dup = sorted(e for e in set(events) if events.count(e) > 1)[0]
        raise InputError(f"duplicate event {dup!r}")
    for e in events:
        if not isinstance(e, str) or not e:
            raise InputError(f"event ids must be nonempty text, got {e!r}")
    declared = set(events)
    pairs = []
    for a, b in cover_pairs:
        for x in (a, b):
            if x not in declared:
                raise UnknownEventError(x)
        pairs.append((a, b))
    order = transitive_closure(events, pairs)
    if any(a != b and (b, a) in order for a, b in order):
        raise CycleError(_find_cycle(events, order))
    return Poset(tuple(events), frozenset(order))


def relation(p: Poset, a: str, b: str) -> Relation:
    for x in (a, b):
        if x not in p:
            raise UnknownEventError(x)
    if a == b:
        return Relation.EQ
    if (a, b) in p.order:
        return Relation.LT
    if (b, a) in p.order:
        return Relation.GT
    return Relation.CONCURRENT


def hasse(p: Poset) -> list[Pair]:
    """Cover pairs of ``p`` (its transitive reduction), sorted."""
    covers = []
    for a, b in p.order:
        if a == b:
            continue
        between = p.strictly_above[a] & p.strictly_below[b]
        if not between:
            covers.append((a, b))
    return sorted(covers)


@dataclass(frozen=True)
class GroupDecomposition:
    """Groups of a poset, listed bottom to top."""

    groups: tuple[frozenset[str], ...]

    def __len__(self) -> int:
        return len(self.groups)

    def __iter__(self):
        return iter(self.groups)

    def __getitem__(self, j: int) -> frozenset[str]:
        return self.groups[j]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.groups)

    def index_of(self, event: str) -> int:
        for j, g in enumerate(self.groups):
            if event in g:
                return j
        raise UnknownEventError(event)

    def as_lists(self) -> list[list[str]]:
        return [sorted(g) for g in self.groups]


def groups(p: Poset) -> GroupDecomposition:
    """Connected components of the concurrency graph, in their induced order."""
    seen: set[str] = set()
    components = []
    for start in p.events:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            for y in p.events:
                if y not in seen and p.concurrent(x, y):
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        components.append(frozenset(comp))
    # every event of a lower group lies below all of a higher group, so the
    # number of strict predecessors sorts them
    components.sort(key=lambda g: min(len(p.strictly_below[e]) for e in g))
    for lower_index, lower in enumerate(components):
        for upper in components[lower_index + 1:]:
            for a in lower:
                for b in upper:
                    if not p.lt(a, b):
                        raise InvariantError(
                            f"groups are not totally ordered: {a!r} is not below {b!r}"
                        )
    return GroupDecomposition(tuple(components))

"""Recovering a partial order from a trace language."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import EmptyLanguageError, InvariantError, NonUniformLanguageError
from .poset import Poset, transitive_closure
from .traces import DEFAULT_MAX_TRACES, Language, _capped, linear_extensions


@dataclass(frozen=True)
class ExtractedOrder:
    events: tuple[str, ...]
    order: frozenset[tuple[str, str]]

    def to_poset(self) -> Poset:
        return Poset(self.events, self.order)


@dataclass(frozen=True)
class PosetLanguageVerdict:
    is_poset: bool
    poset: Poset
    witness: Optional[tuple[str, ...]] = None

    def __bool__(self) -> bool:
        return self.is_poset


def _check_uniform(L: Language) -> tuple[str, ...]:
    if len(L) == 0:
        raise EmptyLanguageError("cannot extract an order from the empty language")
    first = next(iter(L))
    events = frozenset(first)
    if len(events) != len(first):
        raise NonUniformLanguageError(f"trace {first!r} repeats an event")
    for t in L:
        if len(t) != len(first) or frozenset(t) != events:
            raise NonUniformLanguageError(
                f"traces {first!r} and {t!r} are not permutations of one event set"
            )
    return tuple(sorted(events))


def extract_order(L: Language) -> ExtractedOrder:
    """``a <= b`` iff ``a == b`` or ``a`` precedes ``b`` in some trace and never follows it."""
    events = _check_uniform(L)
    seen_before: set[tuple[str, str]] = set()
    for t in L:
        for i, a in enumerate(t):
            for b in t[i + 1:]:
                seen_before.add((a, b))
    strict = {(a, b) for a, b in seen_before if (b, a) not in seen_before}
    order = transitive_closure(events, strict)
    if any(a != b and (b, a) in order for a, b in order):
        raise InvariantError("extracted order is not antisymmetric")
    return ExtractedOrder(events, frozenset(order))


def reconstruct(L: Language) -> Poset:
    return extract_order(L).to_poset()


def is_poset_language(L: Language, limit: int = DEFAULT_MAX_TRACES) -> PosetLanguageVerdict:
    """Decide whether ``L`` is the language of some poset.

    ``L`` is always contained in the language of its reconstruction, so a
    counterexample can only be a reconstruction trace missing from ``L``;
    the lexicographically first such trace is returned as the witness.
    """
    p = reconstruct(L)
    count = 0
    for t in _capped(linear_extensions(p), limit, "number of linear extensions"):
        if t not in L:
            return PosetLanguageVerdict(False, p, t)
        count += 1
    if count != len(L):
        raise InvariantError("language is not contained in its reconstruction")
    return PosetLanguageVerdict(True, p)

"""Covering a non-poset trace language by a finite set of posets.

The cover is sound (the union of member languages is exactly the input) but
not minimal: members are chosen greedily.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeLimitError
from .extraction import extract_order, is_poset_language
from .poset import Poset, hasse, transitive_closure
from .traces import DEFAULT_MAX_TRACES, Language, lang, linear_extensions

DEFAULT_MAX_DECOMPOSE_EVENTS = 7
DEFAULT_MAX_CANDIDATES = 100_000


@dataclass(frozen=True)
class PosetCover:
    posets: tuple[Poset, ...]

    def __len__(self) -> int:
        return len(self.posets)

    def __iter__(self):
        return iter(self.posets)

    def language(self, limit: int = DEFAULT_MAX_TRACES) -> Language:
        out = Language()
        for p in self.posets:
            out = out | lang(p, limit)
        return out


def _language_within(p: Poset, L: Language) -> bool:
    count = 0
    for t in linear_extensions(p):
        if t not in L:
            return False
        count += 1
        if count > len(L):
            return False
    return True


def _hasse_key(p: Poset):
    return tuple(hasse(p))


def maximal_subposets(
    L: Language,
    max_events: int = DEFAULT_MAX_DECOMPOSE_EVENTS,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> list[Poset]:
    """Posets extending the extracted order of ``L`` whose languages are maximal inside ``L``.

    A language shrinks as its order grows, so these are the inclusion-minimal
    orders with language contained in ``L``.  Orders are explored upward from
    the extracted order one added pair at a time; an order whose language
    already fits is recorded and not extended further.
    """
    base = extract_order(L)
    events = base.events
    if len(events) > max_events:
        raise SizeLimitError("number of events to decompose", max_events)
    start = base.order
    seen = {start}
    frontier = [start]
    fitting: list[frozenset] = []
    while frontier:
        nxt = []
        for order in sorted(frontier, key=sorted):
            p = Poset(events, order)
            if _language_within(p, L):
                fitting.append(order)
                continue
            for a in events:
                for b in events:
                    if a == b or (a, b) in order or (b, a) in order:
                        continue
                    grown = frozenset(transitive_closure(events, order | {(a, b)}))
                    if grown in seen:
                        continue
                    if any(f <= grown for f in fitting):
                        continue
                    seen.add(grown)
                    if len(seen) > max_candidates:
                        raise SizeLimitError("number of candidate orders", max_candidates)
                    nxt.append(grown)
        frontier = nxt
    minimal = [o for o in fitting if not any(f < o for f in fitting)]
    return sorted((Poset(events, o) for o in set(minimal)), key=_hasse_key)


def decompose(
    L: Language,
    max_events: int = DEFAULT_MAX_DECOMPOSE_EVENTS,
    limit: int = DEFAULT_MAX_TRACES,
) -> PosetCover:
    verdict = is_poset_language(L, limit)
    if verdict.is_poset:
        return PosetCover((verdict.poset,))
    candidates = [(p, lang(p, limit)) for p in maximal_subposets(L, max_events)]
    candidates.sort(key=lambda pl: (-len(pl[1]), _hasse_key(pl[0])))
    covered: set = set()
    chosen = []
    for p, lp in candidates:
        if lp.words - covered:
            chosen.append(p)
            covered |= lp.words
        if len(covered) == len(L):
            break
    return PosetCover(tuple(chosen))

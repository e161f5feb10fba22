"""Trace languages of posets and lposets."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator

from .errors import SizeLimitError, TraceNotInLanguageError
from .poset import LPoset, Poset

DEFAULT_MAX_TRACES = 100_000

Trace = tuple


class Language:
    """A finite set of words, iterated in lexicographic order."""

    __slots__ = ("_words", "_sorted")

    def __init__(self, words: Iterable[Iterable] = ()):
        self._words = frozenset(tuple(w) for w in words)
        self._sorted = None

    @property
    def words(self) -> frozenset:
        return self._words

    def sorted(self) -> list[tuple]:
        if self._sorted is None:
            self._sorted = sorted(self._words)
        return self._sorted

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self._words)

    def __contains__(self, word) -> bool:
        return tuple(word) in self._words

    def __eq__(self, other) -> bool:
        if isinstance(other, Language):
            return self._words == other._words
        if isinstance(other, (set, frozenset)):
            return self._words == frozenset(tuple(w) for w in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._words)

    def __or__(self, other: "Language") -> "Language":
        return Language(self._words | other._words)

    def __le__(self, other: "Language") -> bool:
        return self._words <= other._words

    def __repr__(self) -> str:
        shown = ", ".join(_show(w) for w in self.sorted()[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"Language({{{shown}{more}}})"


def _show(word) -> str:
    if all(isinstance(s, str) and len(s) == 1 for s in word):
        return "".join(word) or "ε"
    return " ".join(map(str, word)) or "ε"


def linear_extensions(p: Poset) -> Iterator[tuple[str, ...]]:
    """Yield the linear extensions of ``p`` in lexicographic order."""
    remaining_below = {e: len(p.strictly_below[e]) for e in p.events}
    above = p.strictly_above
    n = len(p.events)
    prefix: list[str] = []
    placed: set[str] = set()

    def extend():
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for e in p.events:
            if e in placed or remaining_below[e]:
                continue
            placed.add(e)
            prefix.append(e)
            for u in above[e]:
                remaining_below[u] -= 1
            yield from extend()
            for u in above[e]:
                remaining_below[u] += 1
            prefix.pop()
            placed.discard(e)

    yield from extend()


def _capped(iterable, limit, what):
    for count, item in enumerate(iterable, 1):
        if count > limit:
            raise SizeLimitError(what, limit)
        yield item


def lang(p: Poset, limit: int = DEFAULT_MAX_TRACES) -> Language:
    return Language(_capped(linear_extensions(p), limit, "number of linear extensions"))


def lang_labelled(lp: LPoset, limit: int = DEFAULT_MAX_TRACES) -> Language:
    """Label words of the linear extensions of ``lp``; duplicates collapse."""
    label = lp.label_of
    return Language(
        tuple(label[e] for e in t)
        for t in _capped(linear_extensions(lp.poset), limit, "number of linear extensions")
    )


def is_linear_extension(p: Poset, t: Iterable[str]) -> bool:
    t = tuple(t)
    if len(t) != len(p.events) or set(t) != p.event_set:
        return False
    pos = {e: i for i, e in enumerate(t)}
    return all(pos[a] <= pos[b] for a, b in p.order)


def swap_neighbours(p: Poset, t: Iterable[str]) -> set[tuple[str, ...]]:
    """Traces reachable from ``t`` by swapping one adjacent concurrent pair."""
    t = tuple(t)
    if not is_linear_extension(p, t):
        raise TraceNotInLanguageError(f"{_show(t)} is not a trace of the poset")
    out = set()
    for i in range(len(t) - 1):
        if p.concurrent(t[i], t[i + 1]):
            out.add(t[:i] + (t[i + 1], t[i]) + t[i + 2:])
    return out


def swap_connected(p: Poset, limit: int = DEFAULT_MAX_TRACES) -> bool:
    """True iff every trace of ``p`` is reachable from every other by swaps."""
    language = lang(p, limit)
    start = next(iter(language))
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in swap_neighbours(p, queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(language)

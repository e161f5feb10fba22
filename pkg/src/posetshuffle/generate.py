"""Small-instance generators driving the exhaustive suites."""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence
from itertools import combinations, permutations, product

from .errors import SizeLimitError
from .poset import LPoset, Poset

DEFAULT_MAX_EVENTS = 5


def event_names(k: int, prefix: str = "e") -> list[str]:
    return [f"{prefix}{i}" for i in range(1, k + 1)]


def _posets_as_masks(k: int, natural: bool = False) -> list[list[int]]:
    """Every partial order on ``0..k-1`` as up-set bitmasks (strict).

    Element ``k-1`` is added to each order on ``0..k-2`` with a downset ``D``
    and an upset ``U`` such that everything in ``D`` is below everything in
    ``U``; each order arises exactly once.  With ``natural`` the new element
    is always maximal, which still reaches every isomorphism class.
    """
    if k == 0:
        return [[]]
    out = []
    for up in _posets_as_masks(k - 1, natural):
        n = k - 1
        down = [0] * n
        for a in range(n):
            for b in range(n):
                if up[a] >> b & 1:
                    down[b] |= 1 << a
        ideals = [s for s in range(1 << n)
                  if all(not (s >> b & 1) or (down[b] & ~s) == 0 for b in range(n))]
        filters = [s for s in range(1 << n)
                   if all(not (s >> a & 1) or (up[a] & ~s) == 0 for a in range(n))]
        new = 1 << n
        for d in ideals:
            for u in [0] if natural else filters:
                if d & u:
                    continue
                if any(d >> a & 1 and (up[a] & u) != u for a in range(n)):
                    continue
                ups = [up[a] | (new if d >> a & 1 else 0) for a in range(n)]
                ups.append(u)
                out.append(ups)
    return out


def _masks_to_poset(ups: Sequence[int], names: Sequence[str]) -> Poset:
    order = {(x, x) for x in names}
    for a, mask in enumerate(ups):
        for b in range(len(ups)):
            if mask >> b & 1:
                order.add((names[a], names[b]))
    return Poset(tuple(names), frozenset(order))


def posets_on(k: int, prefix: str = "e", natural: bool = False) -> Iterator[Poset]:
    """Every partial order on the events ``e1..ek``, each exactly once."""
    names = event_names(k, prefix)
    for ups in _posets_as_masks(k, natural):
        yield _masks_to_poset(ups, names)


def generate_posets(max_events: int, cap: int = DEFAULT_MAX_EVENTS) -> Iterator[Poset]:
    """Every poset on ``{e1..ek}`` for ``1 <= k <= max_events``."""
    if max_events > cap:
        raise SizeLimitError("maxEvents", cap)
    for k in range(1, max_events + 1):
        yield from posets_on(k)


def _canonical_key(names, labels, p: Poset):
    """Isomorphism-invariant encoding of an lposet (exact, small sizes only)."""
    below = p.strictly_below
    above = p.strictly_above

    def invariant(e):
        return (
            labels[e],
            len(below[e]),
            len(above[e]),
            tuple(sorted(labels[x] for x in below[e])),
            tuple(sorted(labels[x] for x in above[e])),
        )

    classes: dict = {}
    for e in names:
        classes.setdefault(invariant(e), []).append(e)
    keys = sorted(classes)
    best = None
    for choice in product(*(permutations(classes[k]) for k in keys)):
        seq = [e for part in choice for e in part]
        pos = {e: i for i, e in enumerate(seq)}
        enc = tuple(sorted((pos[a], pos[b]) for a, b in p.order if a != b))
        if best is None or enc < best:
            best = enc
    return (tuple(keys), best)


def posets_up_to_isomorphism(k: int, prefix: str = "e") -> list[Poset]:
    names = event_names(k, prefix)
    blank = {e: "" for e in names}
    reps: dict = {}
    for p in posets_on(k, prefix, natural=True):
        reps.setdefault(_canonical_key(names, blank, p), p)
    return list(reps.values())


def lposets_up_to_isomorphism(label_counts: Sequence[int], prefix: str = "t") -> Iterator[LPoset]:
    """One representative of every lposet with ``label_counts[i]`` events labelled ``i+1``."""
    k = sum(label_counts)
    names = event_names(k, prefix)
    base_labels = [str(i + 1) for i, c in enumerate(label_counts) for _ in range(c)]
    seen = set()
    for p in posets_up_to_isomorphism(k, prefix):
        for arrangement in sorted(set(permutations(base_labels))):
            labels = dict(zip(names, arrangement))
            key = _canonical_key(names, labels, p)
            if key in seen:
                continue
            seen.add(key)
            yield LPoset.build(p, labels)


def random_poset(rng: random.Random, events: Sequence[str], density: float = 0.4) -> Poset:
    from .poset import validate

    order = list(events)
    rng.shuffle(order)
    pairs = [(a, b) for a, b in combinations(order, 2) if rng.random() < density]
    return validate(events, pairs)


def random_lposet(rng: random.Random, label_counts: Sequence[int], prefix: str = "t",
                  density: float = 0.4) -> LPoset:
    names = event_names(sum(label_counts), prefix)
    labels = [str(i + 1) for i, c in enumerate(label_counts) for _ in range(c)]
    rng.shuffle(labels)
    return LPoset.build(random_poset(rng, names, density), dict(zip(names, labels)))


def shuffle_grid(max_operand_events: int = 3):
    """Two-operand instances: every operand up to isomorphism with at most
    ``max_operand_events`` events (at least one nonempty) and every fitting
    trajectory lposet up to isomorphism."""
    from .characterize import ShuffleInstance

    firsts = {k: posets_up_to_isomorphism(k, "a") for k in range(max_operand_events + 1)}
    seconds = {k: posets_up_to_isomorphism(k, "b") for k in range(max_operand_events + 1)}
    for n1 in range(max_operand_events + 1):
        for n2 in range(max_operand_events + 1):
            if n1 + n2 == 0:
                continue
            for traj in lposets_up_to_isomorphism((n1, n2)):
                for p1 in firsts[n1]:
                    for p2 in seconds[n2]:
                        yield ShuffleInstance(traj, (p1, p2))


def random_instance(rng: random.Random, max_operands: int = 3, max_events: int = 8):
    """A random fitting instance with 1..``max_operands`` operands."""
    from .characterize import ShuffleInstance

    n = rng.randint(1, max_operands)
    while True:
        sizes = [rng.randint(1, 4 if n < 3 else 3) for _ in range(n)]
        if sum(sizes) <= max_events:
            break
    operands = tuple(
        random_poset(rng, event_names(s, chr(ord("a") + i)), rng.choice([0.2, 0.4, 0.7]))
        for i, s in enumerate(sizes)
    )
    traj = random_lposet(rng, sizes, density=rng.choice([0.1, 0.3, 0.5, 0.8]))
    return ShuffleInstance(traj, operands)

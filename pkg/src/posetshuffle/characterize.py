"""Deciding when a shuffle of posets on a trajectory lposet is a single poset.

Two independent procedures are provided.  :func:`shuffle_semantic` computes the
shuffled trace language and asks whether it is a poset language.
:func:`shuffle_structural` never builds that language: it inspects the
trajectory lposet against the groups of the operands and assembles the result
poset group by group.

The structural side works on *occurrence slots* rather than on raw trajectory
events.  Slot ``(i, k)`` is "the k-th i-labelled symbol of a trajectory word";
in every shuffle it is filled by the k-th event of operand ``i``'s trace, and
because the groups of a poset appear contiguously in each of its traces, slot
``(i, k)`` always carries an event of a fixed group of operand ``i``.  The
trajectory determines which slots precede which in all of its words (the
*occurrence order*).  The shuffle is a single poset exactly when

* the occurrence order relates the slot blocks of different operands' groups
  uniformly (all before, all after, or all concurrent), and
* the trajectory can be mapped onto the occurrence order label- and
  order-preservingly, so that its words are all the words the occurrence
  order permits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .errors import (
    ArityError,
    CycleError,
    DisjointnessError,
    SizeLimitError,
    UnknownEventError,
)
from .extraction import is_poset_language
from .poset import GroupDecomposition, LPoset, Poset, Relation, groups, relation, validate
from .shuffle import shuffle_languages
from .traces import DEFAULT_MAX_TRACES, Language, lang, lang_labelled

Slot = tuple[int, int]
BlockId = tuple[int, int]

EMPTY_SHUFFLE = "EmptyShuffle"


@dataclass(frozen=True)
class ShuffleInstance:
    """A trajectory lposet labelled ``"1".."n"`` and ``n`` disjoint operand posets."""

    trajectory: LPoset
    operands: tuple[Poset, ...]

    def __post_init__(self):
        object.__setattr__(self, "operands", tuple(self.operands))
        owner: dict[str, int] = {}
        for i, p in enumerate(self.operands, 1):
            for e in p.events:
                if e in owner:
                    raise DisjointnessError(
                        f"event {e!r} occurs in operands {owner[e]} and {i}"
                    )
                owner[e] = i
        object.__setattr__(self, "_owner", owner)
        n = len(self.operands)
        for e, l in self.trajectory.labels:
            if not (l.isdigit() and 1 <= int(l) <= n and str(int(l)) == l):
                raise ArityError(
                    f"trajectory event {e!r} has label {l!r}, expected one of 1..{n}"
                )

    @property
    def arity(self) -> int:
        return len(self.operands)

    def operand_of(self, event: str) -> int:
        try:
            return self._owner[event]
        except KeyError:
            raise UnknownEventError(event) from None

    @property
    def events(self) -> tuple[str, ...]:
        return tuple(sorted(self._owner))

    def label_counts(self) -> list[int]:
        counts = [0] * self.arity
        for _, l in self.trajectory.labels:
            counts[int(l) - 1] += 1
        return counts

    def fits(self) -> bool:
        return self.label_counts() == [len(p) for p in self.operands]

    def trajectory_language(self, limit: int = DEFAULT_MAX_TRACES) -> Language:
        return Language(tuple(int(s) for s in w) for w in lang_labelled(self.trajectory, limit))


class Lemma2Violation(NamedTuple):
    """Events ``a``, ``b`` concurrent in one operand but related differently to ``c``."""

    a: str
    b: str
    c: str
    operand_ab: int
    operand_c: int
    a_to_c: Relation
    b_to_c: Relation


@dataclass(frozen=True)
class ShuffleVerdict:
    single: bool
    method: str
    result: Optional[Poset] = None
    witness: Optional[tuple[str, ...]] = None
    language_size: Optional[int] = None
    diagnostics: tuple[str, ...] = ()
    violations: tuple[Lemma2Violation, ...] = ()


def shuffle_language(inst: ShuffleInstance, limit: int = DEFAULT_MAX_TRACES) -> Language:
    return shuffle_languages(
        inst.trajectory_language(limit), [lang(p, limit) for p in inst.operands], limit
    )


def shuffle_semantic(inst: ShuffleInstance, limit: int = DEFAULT_MAX_TRACES) -> ShuffleVerdict:
    if not inst.fits():
        return ShuffleVerdict(
            False,
            "semantic",
            language_size=0,
            diagnostics=(f"{EMPTY_SHUFFLE}: trajectory label counts "
                         f"{inst.label_counts()} do not match operand sizes "
                         f"{[len(p) for p in inst.operands]}",),
        )
    L = shuffle_language(inst, limit)
    verdict = is_poset_language(L, limit)
    if verdict.is_poset:
        return ShuffleVerdict(True, "semantic", result=verdict.poset, language_size=len(L))
    violations = tuple(check_lemma2(inst, verdict.poset))
    return ShuffleVerdict(
        False,
        "semantic",
        witness=verdict.witness,
        language_size=len(L),
        diagnostics=("the extracted order admits a trace outside the shuffled language",),
        violations=violations,
    )


def check_lemma2(inst: ShuffleInstance, p: Poset) -> list[Lemma2Violation]:
    """Triples violating the uniform-relation property that every single-poset shuffle has."""
    for e in inst.events:
        if e not in p:
            raise UnknownEventError(e)
    found = []
    for i, op in enumerate(inst.operands, 1):
        evs = op.events
        for x, a in enumerate(evs):
            for b in evs[x + 1:]:
                if not op.concurrent(a, b):
                    continue
                for j, other in enumerate(inst.operands, 1):
                    if j == i:
                        continue
                    for c in other.events:
                        ra, rb = relation(p, a, c), relation(p, b, c)
                        if ra != rb:
                            found.append(Lemma2Violation(a, b, c, i, j, ra, rb))
    return found


# ---------------------------------------------------------------------------
# structural side


def downsets(p: Poset, limit: int = DEFAULT_MAX_TRACES) -> list[frozenset[str]]:
    """All order ideals of ``p``."""
    start = frozenset()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for d in frontier:
            for e in p.events:
                if e not in d and p.strictly_below[e] <= d:
                    bigger = d | {e}
                    if bigger not in seen:
                        seen.add(bigger)
                        nxt.append(bigger)
                        if len(seen) > limit:
                            raise SizeLimitError("number of trajectory downsets", limit)
        frontier = nxt
    return sorted(seen, key=lambda d: (len(d), sorted(d)))


@dataclass(frozen=True)
class OccurrenceOrder:
    """Which occurrence slots precede which in every word of a trajectory.

    ``before`` holds ``((i, k), (j, m))`` when the k-th ``i`` precedes the m-th
    ``j`` in every word; it is a strict partial order on ``slots``.
    """

    slots: tuple[Slot, ...]
    before: frozenset[tuple[Slot, Slot]]

    def precedes(self, s: Slot, t: Slot) -> bool:
        return (s, t) in self.before

    def relation(self, s: Slot, t: Slot) -> Relation:
        if s == t:
            return Relation.EQ
        if (s, t) in self.before:
            return Relation.LT
        if (t, s) in self.before:
            return Relation.GT
        return Relation.CONCURRENT


def occurrence_order(trajectory: LPoset, arity: int, limit: int = DEFAULT_MAX_TRACES) -> OccurrenceOrder:
    # The m-th j can come before the k-th i in some word iff some downset holds
    # at least m j-events and fewer than k i-events.
    label = {e: int(l) for e, l in trajectory.labels}
    counts = [0] * (arity + 1)
    for l in label.values():
        counts[l] += 1
    slots = tuple((i, k) for i in range(1, arity + 1) for k in range(1, counts[i] + 1))
    vectors = set()
    for d in downsets(trajectory.poset, limit):
        c = [0] * (arity + 1)
        for e in d:
            c[label[e]] += 1
        vectors.add(tuple(c))
    # fewest i-events in a downset that holds at least m j-events
    fewest: dict[tuple[int, int, int], int] = {}
    for c in vectors:
        for j in range(1, arity + 1):
            for m in range(1, c[j] + 1):
                for i in range(1, arity + 1):
                    key = (j, m, i)
                    if c[i] < fewest.get(key, counts[i] + 1):
                        fewest[key] = c[i]
    before = set()
    for i, k in slots:
        for j, m in slots:
            if i == j:
                if k < m:
                    before.add(((i, k), (j, m)))
            elif fewest[(j, m, i)] >= k:
                before.add(((i, k), (j, m)))
    return OccurrenceOrder(slots, frozenset(before))


@dataclass(frozen=True)
class Block:
    """The slots (and matched trajectory events) carrying one operand group."""

    operand: int
    group: int
    slots: tuple[Slot, ...]
    events: frozenset[str]

    @property
    def id(self) -> BlockId:
        return (self.operand, self.group)


@dataclass(frozen=True)
class BlockStructure:
    blocks: tuple[tuple[Block, ...], ...]
    block_order: frozenset[tuple[BlockId, BlockId]]
    assignment: tuple[tuple[str, Slot], ...]
    occurrences: OccurrenceOrder = field(repr=False)

    def __bool__(self) -> bool:
        return True

    def block(self, operand: int, group: int) -> Block:
        return self.blocks[operand - 1][group - 1]

    def cross_order(self) -> list[tuple[BlockId, BlockId]]:
        return sorted((x, y) for x, y in self.block_order if x[0] != y[0])


@dataclass(frozen=True)
class NotGroupStructured:
    reason: str

    def __bool__(self) -> bool:
        return False


def _embed(trajectory: LPoset, occ: OccurrenceOrder) -> Optional[dict[str, Slot]]:
    """Label- and order-preserving bijection from trajectory events onto slots."""
    p = trajectory.poset
    label = {e: int(l) for e, l in trajectory.labels}
    # predecessors first, ties by name
    order: list[str] = []
    placed: set[str] = set()
    while len(order) < len(p.events):
        e = next(x for x in p.events if x not in placed and p.strictly_below[x] <= placed)
        order.append(e)
        placed.add(e)
    count = {i: sum(1 for l in label.values() if l == i) for i in set(label.values())}
    low = {e: 1 + sum(1 for y in p.strictly_below[e] if label[y] == label[e]) for e in order}
    high = {e: count[label[e]] - sum(1 for y in p.strictly_above[e] if label[y] == label[e])
            for e in order}
    phi: dict[str, Slot] = {}
    used: set[Slot] = set()

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        e = order[idx]
        i = label[e]
        for k in range(low[e], high[e] + 1):
            s = (i, k)
            if s in used:
                continue
            if all(occ.precedes(phi[y], s) for y in p.strictly_below[e]):
                phi[e] = s
                used.add(s)
                if place(idx + 1):
                    return True
                used.discard(s)
                del phi[e]
        return False

    return dict(phi) if place(0) else None


def block_structure(
    inst: ShuffleInstance, limit: int = DEFAULT_MAX_TRACES
) -> Union[BlockStructure, NotGroupStructured]:
    """Match the trajectory against the operands' groups.

    Returns the first matching structure in a deterministic search order, or a
    :class:`NotGroupStructured` naming the first violated constraint.
    """
    if not inst.fits():
        return NotGroupStructured(
            f"{EMPTY_SHUFFLE}: trajectory label counts {inst.label_counts()} "
            f"do not match operand sizes {[len(p) for p in inst.operands]}"
        )
    occ = occurrence_order(inst.trajectory, inst.arity, limit)
    decompositions = [groups(p) for p in inst.operands]
    slot_blocks: list[list[tuple[Slot, ...]]] = []
    for i, dec in enumerate(decompositions, 1):
        start = 1
        per_operand = []
        for size in dec.sizes:
            per_operand.append(tuple((i, k) for k in range(start, start + size)))
            start += size
        slot_blocks.append(per_operand)

    block_order: set[tuple[BlockId, BlockId]] = set()
    flat = [((i, j), slots) for i, per in enumerate(slot_blocks, 1)
            for j, slots in enumerate(per, 1)]
    for x, (bid, slots) in enumerate(flat):
        for cid, other in flat[x + 1:]:
            if bid[0] == cid[0]:
                block_order.add((bid, cid))
                continue
            kinds = {occ.relation(s, t) for s in slots for t in other}
            if len(kinds) > 1:
                return NotGroupStructured(
                    f"block {bid} and block {cid} are related non-uniformly "
                    f"({', '.join(sorted(k.value for k in kinds))})"
                )
            (kind,) = kinds
            if kind is Relation.LT:
                block_order.add((bid, cid))
            elif kind is Relation.GT:
                block_order.add((cid, bid))

    phi = _embed(inst.trajectory, occ)
    if phi is None:
        return NotGroupStructured(
            "the trajectory does not admit every word its occurrence order allows"
        )
    slot_owner = {s: e for e, s in phi.items()}
    blocks = tuple(
        tuple(
            Block(i, j, slots, frozenset(slot_owner[s] for s in slots))
            for j, slots in enumerate(per, 1)
        )
        for i, per in enumerate(slot_blocks, 1)
    )
    return BlockStructure(blocks, frozenset(block_order), tuple(sorted(phi.items())), occ)


def shuffle_structural(inst: ShuffleInstance, limit: int = DEFAULT_MAX_TRACES) -> ShuffleVerdict:
    structure = block_structure(inst, limit)
    if not structure:
        return ShuffleVerdict(False, "structural", diagnostics=(structure.reason,))
    decompositions: list[GroupDecomposition] = [groups(p) for p in inst.operands]
    pairs = [pair for p in inst.operands for pair in p.order]
    for (i, j), (i2, j2) in structure.cross_order():
        for a in decompositions[i - 1][j - 1]:
            for b in decompositions[i2 - 1][j2 - 1]:
                pairs.append((a, b))
    try:
        result = validate(inst.events, pairs)
    except CycleError as exc:
        return ShuffleVerdict(False, "structural", diagnostics=(f"CycleError: {exc}",))
    return ShuffleVerdict(True, "structural", result=result)


def shuffle_poset(
    inst: ShuffleInstance, method: str = "semantic", limit: int = DEFAULT_MAX_TRACES
) -> ShuffleVerdict:
    if method == "semantic":
        return shuffle_semantic(inst, limit)
    if method == "structural":
        return shuffle_structural(inst, limit)
    raise ValueError(f"unknown method {method!r}")


def verdicts_agree(a: ShuffleVerdict, b: ShuffleVerdict) -> bool:
    if a.single != b.single:
        return False
    return not a.single or a.result == b.result


"""Shuffle on trajectories for words and finite languages.

Trajectory symbols are the integers ``1..n``; the arity ``n`` is always the
number of operands supplied.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Sequence
from itertools import product

from .errors import ArityError, DoesNotFitError, SizeLimitError
from .traces import DEFAULT_MAX_TRACES, Language


def _check_symbols(t: Sequence[int], n: int) -> None:
    for s in t:
        if not isinstance(s, int) or isinstance(s, bool) or not 1 <= s <= n:
            raise ArityError(f"trajectory symbol {s!r} is not in 1..{n}")


def fits(t: Sequence[int], lengths: Sequence[int]) -> bool:
    n = len(lengths)
    _check_symbols(t, n)
    counts = Counter(t)
    return all(counts[i + 1] == lengths[i] for i in range(n))


def shuffle_words(t: Sequence[int], words: Sequence[Sequence]) -> tuple:
    """Interleave ``words`` as dictated by ``t``.

    >>> "".join(shuffle_words((1, 2, 1, 3, 3, 2), ["ab", "cd", "ef"]))
    'acbefd'
    """
    n = len(words)
    _check_symbols(t, n)
    counts = Counter(t)
    for i, w in enumerate(words, 1):
        if counts[i] != len(w):
            raise DoesNotFitError(i, counts[i], len(w))
    cursors = [0] * n
    out = []
    for s in t:
        out.append(words[s - 1][cursors[s - 1]])
        cursors[s - 1] += 1
    return tuple(out)


def shuffle_languages(
    trajectories: Language,
    languages: Sequence[Language],
    limit: int = DEFAULT_MAX_TRACES,
) -> Language:
    """All shuffles ``t(w_1, ..., w_n)`` with ``t`` fitting every ``w_i``.

    Non-fitting combinations are skipped.
    """
    n = len(languages)
    by_length = []
    for lang_i in languages:
        buckets = defaultdict(list)
        for w in lang_i:
            buckets[len(w)].append(w)
        by_length.append(buckets)
    result: set[tuple] = set()
    for t in trajectories:
        _check_symbols(t, n)
        counts = Counter(t)
        pools = [by_length[i].get(counts[i + 1], ()) for i in range(n)]
        if not all(pools):
            continue
        for combo in product(*pools):
            cursors = [0] * n
            out = []
            for s in t:
                out.append(combo[s - 1][cursors[s - 1]])
                cursors[s - 1] += 1
            result.add(tuple(out))
            if len(result) > limit:
                raise SizeLimitError("shuffled language size", limit)
    return Language(result)

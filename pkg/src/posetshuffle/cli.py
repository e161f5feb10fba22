"""Command-line interface.

Exit codes: 0 success/true, 1 false (with a witness when one exists),
2 input error, 3 size cap exceeded, 4 structural/semantic disagreement.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .characterize import (
    ShuffleInstance,
    ShuffleVerdict,
    check_lemma2,
    shuffle_semantic,
    shuffle_structural,
    verdicts_agree,
)
from .decompose import DEFAULT_MAX_DECOMPOSE_EVENTS, decompose
from .errors import InputError, SizeLimitError
from .extraction import extract_order, is_poset_language
from .io import is_poset_document, language_from_document, load_document, poset_from_document
from .poset import LPoset, Poset, groups, hasse
from .shuffle import shuffle_languages, shuffle_words
from .traces import DEFAULT_MAX_TRACES, Language, lang, lang_labelled

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_DISAGREEMENT = 4


def render(word) -> str:
    if all(len(str(s)) == 1 for s in word):
        return "".join(str(s) for s in word)
    return " ".join(str(s) for s in word)


def _print_order(p: Poset, indent: str = "") -> None:
    for a, b in hasse(p):
        print(f"{indent}{a} < {b}")


def _load_poset(path: str):
    doc = load_document(path)
    if not is_poset_document(doc):
        raise InputError(f"{path}: expected a poset document")
    return poset_from_document(doc)


def _load_plain_poset(path: str) -> Poset:
    value = _load_poset(path)
    if isinstance(value, LPoset):
        raise InputError(f"{path}: operands must be posets, not lposets")
    return value


def _load_trajectory(path: str) -> LPoset:
    value = _load_poset(path)
    if not isinstance(value, LPoset):
        raise InputError(f"{path}: the trajectory must be an lposet (with labels)")
    return value


def _load_language_doc(path: str) -> Language:
    doc = load_document(path)
    if is_poset_document(doc):
        raise InputError(f"{path}: expected a language document")
    return language_from_document(doc)


def _language_of_file(path: str, limit: int) -> Language:
    doc = load_document(path)
    if not is_poset_document(doc):
        return language_from_document(doc)
    value = poset_from_document(doc)
    if isinstance(value, LPoset):
        return lang_labelled(value, limit)
    return lang(value, limit)


def _as_trajectory_words(L: Language) -> Language:
    words = []
    for w in L:
        try:
            words.append(tuple(int(s) for s in w))
        except ValueError:
            raise InputError(f"trajectory word {render(w)!r} has a non-numeric symbol") from None
    return Language(words)


def _instance(args) -> ShuffleInstance:
    return ShuffleInstance(
        _load_trajectory(args.trajectory),
        tuple(_load_plain_poset(p) for p in args.operands),
    )


def cmd_validate(args) -> int:
    value = _load_poset(args.file)
    poset = value.poset if isinstance(value, LPoset) else value
    kind = "lposet" if isinstance(value, LPoset) else "poset"
    print(f"valid {kind}: {len(poset)} events")
    _print_order(poset)
    if isinstance(value, LPoset):
        for e, l in value.labels:
            print(f"{e} : {l}")
    return EXIT_OK


def cmd_lang(args) -> int:
    value = _load_poset(args.file)
    if isinstance(value, LPoset):
        L = lang_labelled(value, args.max_traces)
    else:
        L = lang(value, args.max_traces)
    if args.count_only:
        print(len(L))
    else:
        for w in L:
            print(render(w))
    return EXIT_OK


def cmd_shuffle_word(args) -> int:
    words = []
    for item in args.words:
        if Path(item).is_file():
            L = _load_language_doc(item)
            if len(L) != 1:
                raise InputError(f"{item}: expected exactly one trace")
            words.append(next(iter(L)))
        else:
            words.append(tuple(item))
    if not args.trajectory.isdigit() and args.trajectory:
        raise InputError(f"trajectory {args.trajectory!r} must consist of digits")
    t = tuple(int(c) for c in args.trajectory)
    print(render(shuffle_words(t, words)))
    return EXIT_OK


def cmd_shuffle_lang(args) -> int:
    T = _as_trajectory_words(_language_of_file(args.trajectory, args.max_traces))
    Ls = [_language_of_file(p, args.max_traces) for p in args.operands]
    for w in shuffle_languages(T, Ls, args.max_traces):
        print(render(w))
    return EXIT_OK


def _report(v: ShuffleVerdict) -> None:
    print(f"method: {v.method}")
    print(f"single: {'true' if v.single else 'false'}")
    if v.language_size is not None:
        print(f"language-size: {v.language_size}")
    if v.witness is not None:
        print(f"witness: {render(v.witness)}")
    for d in v.diagnostics:
        print(f"diagnostic: {d}")
    for x in v.violations:
        print(f"lemma2-violation: {x.a} {x.b} {x.c} "
              f"(operands {x.operand_ab}, {x.operand_c}: {x.a_to_c.value} vs {x.b_to_c.value})")
    if v.result is not None:
        print("order:")
        _print_order(v.result, "  ")


def cmd_shuffle_poset(args) -> int:
    inst = _instance(args)
    if args.method == "semantic":
        v = shuffle_semantic(inst, args.max_traces)
        _report(v)
        return EXIT_OK if v.single else EXIT_FALSE
    if args.method == "structural":
        v = shuffle_structural(inst, args.max_traces)
        _report(v)
        return EXIT_OK if v.single else EXIT_FALSE
    sem = shuffle_semantic(inst, args.max_traces)
    struct = shuffle_structural(inst, args.max_traces)
    _report(sem)
    print()
    _report(struct)
    if not verdicts_agree(sem, struct):
        print()
        print("DISAGREEMENT: structural and semantic verdicts differ")
        return EXIT_DISAGREEMENT
    return EXIT_OK if sem.single else EXIT_FALSE


def cmd_extract_order(args) -> int:
    order = extract_order(_load_language_doc(args.file))
    _print_order(order.to_poset())
    return EXIT_OK


def cmd_is_poset_language(args) -> int:
    v = is_poset_language(_load_language_doc(args.file), args.max_traces)
    if v.is_poset:
        print("true")
        return EXIT_OK
    print("false")
    print(f"witness: {render(v.witness)}")
    return EXIT_FALSE


def cmd_groups(args) -> int:
    p = _load_plain_poset(args.file)
    for j, g in enumerate(groups(p), 1):
        print(f"group {j}: {' '.join(sorted(g))}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    cover = decompose(_load_language_doc(args.file), args.max_events, args.max_traces)
    for k, p in enumerate(cover, 1):
        if k > 1:
            print()
        print(f"poset {k}:")
        _print_order(p, "  ")
    return EXIT_OK


def cmd_check_lemma2(args) -> int:
    inst = _instance(args)
    violations = check_lemma2(inst, _load_plain_poset(args.result))
    for x in violations:
        print(f"{x.a} {x.b} {x.c} operands {x.operand_ab} {x.operand_c} "
              f"{x.a_to_c.value} {x.b_to_c.value}")
    if not violations:
        print("no violations")
        return EXIT_OK
    return EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-traces", type=int, default=DEFAULT_MAX_TRACES,
                        help="cap on enumerated traces (default %(default)s)")
    parser = argparse.ArgumentParser(prog="posetshuffle",
                                     description="Shuffle on trajectories for words, languages and posets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a poset or lposet document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("lang", parents=[common], help="list the traces of a poset or lposet")
    p.add_argument("file")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_lang)

    p = sub.add_parser("shuffle-word", parents=[common], help="shuffle words on a trajectory word")
    p.add_argument("-t", "--trajectory", required=True)
    p.add_argument("words", nargs="+", metavar="FILE-OR-WORD")
    p.set_defaults(func=cmd_shuffle_word)

    p = sub.add_parser("shuffle-lang", parents=[common], help="shuffle languages on a set of trajectories")
    p.add_argument("-t", "--trajectory", required=True, metavar="TRAJ_FILE")
    p.add_argument("operands", nargs="+", metavar="POSET_FILE")
    p.set_defaults(func=cmd_shuffle_lang)

    p = sub.add_parser("shuffle-poset", parents=[common], help="decide whether a shuffle of posets is one poset")
    p.add_argument("-t", "--trajectory", required=True, metavar="TRAJ_FILE")
    p.add_argument("operands", nargs="+", metavar="POSET_FILE")
    p.add_argument("--method", choices=["semantic", "structural", "both"], default="semantic")
    p.set_defaults(func=cmd_shuffle_poset)

    p = sub.add_parser("extract-order", parents=[common], help="extract the order of a trace language")
    p.add_argument("file", metavar="LANG_FILE")
    p.set_defaults(func=cmd_extract_order)

    p = sub.add_parser("is-poset-language", parents=[common], help="decide whether a language is a poset language")
    p.add_argument("file", metavar="LANG_FILE")
    p.set_defaults(func=cmd_is_poset_language)

    p = sub.add_parser("groups", parents=[common], help="list the groups of a poset")
    p.add_argument("file", metavar="POSET_FILE")
    p.set_defaults(func=cmd_groups)

    p = sub.add_parser("decompose", parents=[common], help="cover a language by posets")
    p.add_argument("file", metavar="LANG_FILE")
    p.add_argument("--max-events", type=int, default=DEFAULT_MAX_DECOMPOSE_EVENTS)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check-lemma2", parents=[common],
                       help="list triples whose relation to another operand's event is not uniform")
    p.add_argument("-t", "--trajectory", required=True, metavar="TRAJ_FILE")
    p.add_argument("operands", nargs="+", metavar="POSET_FILE")
    p.add_argument("--result", required=True, metavar="POSET_FILE")
    p.set_defaults(func=cmd_check_lemma2)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

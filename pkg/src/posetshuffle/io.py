"""JSON documents for posets, lposets and languages.

Poset document::

    {"name": "P_ex", "events": ["a", "b", "c", "d"],
     "cover": [["a", "c"], ["a", "d"], ["b", "d"]],
     "labels": {"a": "1", ...}}          # optional; makes it an lposet

Language document::

    {"alphabet": ["a", "b"], "traces": [["a", "b"], ["b", "a"]]}

A trace may also be written as a string, one symbol per character.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, Optional, Union

from .errors import ParseError, SchemaError
from .poset import LPoset, Poset, hasse, validate
from .traces import Language

PathLike = Union[str, Path]


def fixture_path(name: str) -> Path:
    """Path of a bundled fixture, e.g. ``fixture_path("p_ex")``."""
    if not name.endswith(".json"):
        name += ".json"
    return Path(str(resources.files("posetshuffle") / "fixtures" / name))


def fixture_names() -> list[str]:
    folder = resources.files("posetshuffle") / "fixtures"
    return sorted(p.name[:-5] for p in folder.iterdir() if p.name.endswith(".json"))


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def load_document(path: PathLike) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    doc = parse_json(text)
    if not isinstance(doc, dict):
        raise SchemaError("<document>", "expected a JSON object")
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _text_list(doc: dict, field: str) -> list[str]:
    value = doc.get(field)
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise SchemaError(field, "expected a list of strings")
    return value


def is_poset_document(doc: dict) -> bool:
    return "events" in doc


def poset_from_document(doc: dict) -> Union[Poset, LPoset]:
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise SchemaError("name", "expected text")
    events = _text_list(doc, "events")
    cover = doc.get("cover", [])
    if not isinstance(cover, list):
        raise SchemaError("cover", "expected a list of [from, to] pairs")
    pairs = []
    for k, pair in enumerate(cover):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, str) for x in pair)):
            raise SchemaError(f"cover[{k}]", "expected a [from, to] pair of event ids")
        pairs.append((pair[0], pair[1]))
    poset = validate(events, pairs)
    labels = doc.get("labels")
    if labels is None:
        return poset
    if not isinstance(labels, dict) or not all(isinstance(v, str) for v in labels.values()):
        raise SchemaError("labels", "expected a map from event id to label text")
    for e in labels:
        if e not in poset:
            raise SchemaError("labels", f"unknown event {e!r}")
    for e in poset.events:
        if e not in labels:
            raise SchemaError("labels", f"event {e!r} has no label")
    return LPoset.build(poset, labels)


def poset_to_document(value: Union[Poset, LPoset], name: Optional[str] = None) -> dict:
    poset = value.poset if isinstance(value, LPoset) else value
    doc: dict = {}
    if name is not None:
        doc["name"] = name
    doc["events"] = list(poset.events)
    doc["cover"] = [list(pair) for pair in hasse(poset)]
    if isinstance(value, LPoset):
        doc["labels"] = dict(value.labels)
    return doc


def language_from_document(doc: dict) -> Language:
    alphabet = doc.get("alphabet")
    if alphabet is not None:
        alphabet = set(_text_list(doc, "alphabet"))
    traces = doc.get("traces")
    if not isinstance(traces, list) or not traces:
        raise SchemaError("traces", "expected a nonempty list of traces")
    words = []
    for k, t in enumerate(traces):
        if isinstance(t, str):
            word = tuple(t)
        elif isinstance(t, list) and all(isinstance(s, str) for s in t):
            word = tuple(t)
        else:
            raise SchemaError(f"traces[{k}]", "expected a string or a list of symbols")
        if alphabet is not None:
            for s in word:
                if s not in alphabet:
                    raise SchemaError(f"traces[{k}]", f"symbol {s!r} is not in the alphabet")
        words.append(word)
    if len(set(words)) != len(words):
        dup = next(w for w in words if words.count(w) > 1)
        raise SchemaError("traces", f"duplicate trace {''.join(dup)!r}")
    return Language(words)


def language_to_document(L: Language, alphabet: Optional[list[str]] = None) -> dict:
    doc: dict = {}
    if alphabet is not None:
        doc["alphabet"] = sorted(alphabet)
    doc["traces"] = [[str(s) for s in w] for w in L]
    return doc


def load_poset(path: PathLike) -> Union[Poset, LPoset]:
    return poset_from_document(load_document(path))


def load_language(path: PathLike) -> Language:
    return language_from_document(load_document(path))


def save_poset(value: Union[Poset, LPoset], path: PathLike, name: Optional[str] = None) -> None:
    Path(path).write_text(dumps(poset_to_document(value, name)), encoding="utf-8")


def save_language(L: Language, path: PathLike, alphabet: Optional[list[str]] = None) -> None:
    Path(path).write_text(dumps(language_to_document(L, alphabet)), encoding="utf-8")


def load_fixture(name: str):
    doc = load_document(fixture_path(name))
    if is_poset_document(doc):
        return poset_from_document(doc)
    return language_from_document(doc)

"""JSON encodings for paths, rank words, triples and polynomials."""

from __future__ import annotations

import json

from .lattice import CoprimePair, DyckPath
from .polynomial import BqtPolynomial
from .rankword import RankWord, format_word, parse_word
from .three_n import DyckTriple


def to_obj(x):
    if isinstance(x, DyckPath):
        return {"type": "path", "m": x.pair.m, "n": x.pair.n, "shape": list(x.shape)}
    if isinstance(x, RankWord):
        return {"type": "word", "m": x.pair.m, "n": x.pair.n, "word": format_word(x)}
    if isinstance(x, DyckTriple):
        return {"type": "triple", "a": x.a, "d": x.d, "s": x.s}
    if isinstance(x, BqtPolynomial):
        return {"type": "polynomial", "terms": x.to_json_obj()}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def from_obj(obj):
    kind = obj.get("type")
    if kind == "path":
        return DyckPath(CoprimePair(obj["m"], obj["n"]), tuple(obj["shape"]))
    if kind == "word":
        return parse_word(CoprimePair(obj["m"], obj["n"]), obj["word"])
    if kind == "triple":
        return DyckTriple(obj["a"], obj["d"], obj["s"])
    if kind == "polynomial":
        return BqtPolynomial.from_json_obj(obj["terms"])
    raise ValueError(f"unknown object type {kind!r}")


def dumps(x) -> str:
    return json.dumps(to_obj(x), sort_keys=True)


def loads(text: str):
    return from_obj(json.loads(text))

"""Readers and writers for the ``hamming-code/1`` and ``hamming-group/1`` formats.

Both are JSON documents. Codewords are written in canonical (lexicographic)
order. Generators store ``entry_maps`` as m arrays of images of ``0..q-1``
and ``coord_perm`` as the 0-indexed images of the entries.
"""

from __future__ import annotations

import json
from pathlib import Path

from ntcodes.errors import DomainError, FormatError
from ntcodes.hamming import Code, Vertex
from ntcodes.perm import CONVENTION, GroupGens, HammingAutomorphism

CODE_FORMAT = "hamming-code/1"
GROUP_FORMAT = "hamming-group/1"


def code_to_dict(code: Code) -> dict:
    return {
        "format": CODE_FORMAT,
        "m": code.m,
        "q": code.q,
        "codewords": [list(w.symbols) for w in code],
    }


def _require(doc: dict, fmt: str, keys: tuple[str, ...]) -> None:
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object")
    if doc.get("format") != fmt:
        raise FormatError(f"expected format {fmt!r}, got {doc.get('format')!r}")
    for k in keys:
        if k not in doc:
            raise FormatError(f"missing field {k!r}")


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{what} must be an integer, got {x!r}")
    return x


def code_from_dict(doc: dict) -> Code:
    _require(doc, CODE_FORMAT, ("m", "q", "codewords"))
    m, q = _int(doc["m"], "m"), _int(doc["q"], "q")
    if m < 1 or q < 2:
        raise FormatError(f"invalid parameters m={m}, q={q}")
    words = []
    for raw in doc["codewords"]:
        if not isinstance(raw, list) or len(raw) != m:
            raise FormatError(f"codeword {raw!r} does not have length {m}")
        syms = tuple(_int(a, "symbol") for a in raw)
        if any(not 0 <= a < q for a in syms):
            raise FormatError(f"codeword {raw!r} has a symbol outside 0..{q - 1}")
        words.append(Vertex(syms, q))
    if len(set(words)) != len(words):
        raise FormatError("duplicate codewords")
    return Code(words, m, q)


def group_to_dict(gens: GroupGens, order: int | None = None) -> dict:
    doc = {
        "format": GROUP_FORMAT,
        "convention": CONVENTION,
        "m": gens.m,
        "q": gens.q,
        "generators": [{"entry_maps": [list(g) for g in x.entry_maps], "coord_perm": list(x.coord_perm)} for x in gens],
    }
    if order is not None:
        doc["order"] = order
    return doc


def group_from_dict(doc: dict) -> GroupGens:
    _require(doc, GROUP_FORMAT, ("m", "q", "generators"))
    if doc.get("convention", CONVENTION) != CONVENTION:
        raise FormatError(f"unsupported convention {doc['convention']!r}")
    m, q = _int(doc["m"], "m"), _int(doc["q"], "q")
    gens = []
    for raw in doc["generators"]:
        try:
            x = HammingAutomorphism(tuple(map(tuple, raw["entry_maps"])), tuple(raw["coord_perm"]))
        except (KeyError, TypeError, DomainError) as exc:
            raise FormatError(f"bad generator {raw!r}: {exc}") from exc
        if (x.m, x.q) != (m, q):
            raise FormatError(f"generator acts on H({x.m},{x.q}), header says H({m},{q})")
        gens.append(x)
    return GroupGens(m, q, tuple(gens))


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def write_code(code: Code, path) -> None:
    Path(path).write_text(dumps(code_to_dict(code)), encoding="utf-8")


def read_code(path) -> Code:
    return code_from_dict(_load(path))


def write_group(gens: GroupGens, path, order: int | None = None) -> None:
    Path(path).write_text(dumps(group_to_dict(gens, order)), encoding="utf-8")


def read_group(path) -> GroupGens:
    return group_from_dict(_load(path))


def _load(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc

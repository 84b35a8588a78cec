"""Versioned JSON certificates and their replay verifier.

Every certificate is a self-contained transcript: the verifier re-checks
it from the serialized inputs alone, using only the decision-module
primitives (triviality, the moved-vertex action, decomposition), so a
certificate file can be audited independently of the run that produced it.

Serialization is deterministic: sorted keys, fixed separators, no
floats, so identical inputs yield byte-identical files.
"""

from __future__ import annotations

import json
from typing import Any

from . import __version__, config
from .branch import (
    TWord,
    emb_pair,
    flatten,
    format_tword,
    membership_in_K,
    parse_tword,
)
from .decide import is_trivial
from .engel import (
    BoundedLeftRefutation,
    EngelSink,
    NoSinkUpTo,
    RightRefutation,
    iterated_commutator,
)
from .tree import act, decompose
from .words import (
    conjugate,
    format_word,
    invert,
    multiply,
    parse_word,
    power,
    reduce_word,
)

Certificate = EngelSink | NoSinkUpTo | BoundedLeftRefutation | RightRefutation


def _header(kind: str) -> dict[str, Any]:
    return {"schema": config.SCHEMA_VERSION, "engine": __version__, "kind": kind}


def to_dict(cert: Certificate) -> dict[str, Any]:
    """Serializable dict form of any certificate."""
    if isinstance(cert, EngelSink):
        return _header("engel_sink") | {
            "g": format_word(cert.g),
            "x": format_word(cert.x),
            "n": cert.n,
            "transcript": list(cert.transcript),
        }
    if isinstance(cert, NoSinkUpTo):
        return _header("non_engel_witness") | {
            "g": format_word(cert.g),
            "x": format_word(cert.x),
            "bound": cert.bound,
            "transcript": list(cert.transcript),
            "witness": cert.witness,
        }
    if isinstance(cert, BoundedLeftRefutation):
        return _header("bounded_left_refutation") | {
            "x": format_word(cert.x),
            "chain": [[bit, format_word(sec)] for bit, sec in cert.chain],
            "x_active": format_word(cert.x_active),
            "k": format_tword(cert.k),
            "bound": cert.bound,
            "y": format_word(cert.y),
            "witness": cert.witness,
        }
    if isinstance(cert, RightRefutation):
        return _header("right_refutation") | {
            "x": format_word(cert.x),
            "chain": [[bit, format_word(sec)] for bit, sec in cert.chain],
            "x_active": format_word(cert.x_active),
            "h": format_tword(cert.h),
            "y1": format_tword(cert.y1),
            "y2": format_tword(cert.y2),
            "y": format_word(cert.y),
            "bound": cert.bound,
            "witnesses": list(cert.witnesses),
        }
    raise TypeError(f"not a certificate: {cert!r}")


def membership_certificate(word: str) -> dict[str, Any]:
    """Certificate form of a K-membership verdict."""
    result = membership_in_K(word)
    data = _header("k_membership") | {
        "word": format_word(reduce_word(word)),
        "verdict": result.verdict,
    }
    if result.level is not None:
        data["level"] = result.level
    return data


def dumps(data: dict[str, Any]) -> str:
    """Deterministic JSON text (byte-identical for identical inputs)."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def serialize(cert: Certificate) -> str:
    return dumps(to_dict(cert))


def _check_chain(x: str, chain: list[list[Any]], x_active: str) -> str | None:
    """Replay the section descent; None when consistent."""
    cur = x
    for bit, section_word in chain:
        d = decompose(cur)
        if d.active:
            return "chain descends through a word outside St(1)"
        expected = d.left if bit == 0 else d.right
        if not is_trivial(multiply(expected, invert(section_word))):
            return f"chain section at bit {bit} does not match"
        cur = section_word
    if not is_trivial(multiply(cur, invert(x_active))):
        return "chain does not end at x_active"
    if not cur.count("a") & 1:
        return "x_active is not active at the root"
    return None


def _moved(word: str, vertex: str) -> bool:
    return act(word, vertex) != vertex


def verify(data: dict[str, Any]) -> tuple[bool, str]:
    """Re-check a certificate dict; returns (ok, detail)."""
    if data.get("schema") != config.SCHEMA_VERSION:
        return False, f"unsupported schema {data.get('schema')!r}"
    kind = data.get("kind")
    try:
        if kind == "engel_sink":
            return _verify_sink(data)
        if kind == "non_engel_witness":
            return _verify_no_sink(data)
        if kind == "bounded_left_refutation":
            return _verify_bounded_left(data)
        if kind == "right_refutation":
            return _verify_right(data)
        if kind == "k_membership":
            return _verify_membership(data)
    except (KeyError, ValueError, TypeError) as exc:
        return False, f"malformed certificate: {exc}"
    return False, f"unknown certificate kind {kind!r}"


def _verify_sink(data: dict[str, Any]) -> tuple[bool, str]:
    g = parse_word(data["g"])
    x = parse_word(data["x"])
    n = data["n"]
    if n < 1:
        return False, "sink depth must be >= 1"
    tower = x
    for m in range(1, n + 1):
        tower = reduce_word(tower[::-1] + g[::-1] + tower + g)
        if m < n and is_trivial(tower):
            return False, f"tower already trivial at depth {m}"
    if not is_trivial(tower):
        return False, f"tower not trivial at claimed depth {n}"
    return True, f"sink at depth {n} confirmed"


def _verify_no_sink(data: dict[str, Any]) -> tuple[bool, str]:
    g = parse_word(data["g"])
    x = parse_word(data["x"])
    bound = data["bound"]
    tower = x
    for m in range(1, bound + 1):
        tower = reduce_word(tower[::-1] + g[::-1] + tower + g)
        if is_trivial(tower):
            return False, f"tower trivial at depth {m} <= bound"
    if not _moved(tower, data["witness"]):
        return False, "witness vertex is not moved by the final tower"
    return True, f"no sink through depth {bound} confirmed"


def _verify_bounded_left(data: dict[str, Any]) -> tuple[bool, str]:
    x = parse_word(data["x"])
    x_active = parse_word(data["x_active"])
    k = parse_tword(data["k"])
    y = parse_word(data["y"])
    bound = data["bound"]
    if is_trivial(x):
        return False, "x is trivial"
    if not is_trivial(multiply(x, x)):
        return False, "x is not an involution"
    chain = [[bit, parse_word(w)] for bit, w in data["chain"]]
    problem = _check_chain(x, chain, x_active)
    if problem:
        return False, problem
    flat = flatten(k)
    if is_trivial(power(flat, 1 << (bound - 1))):
        return False, f"k does not have order > 2^{bound - 1}"
    if not is_trivial(multiply(y, invert(emb_pair(k, TWord())))):
        return False, "y does not embed (flatten(k), 1)"
    d = decompose(y)
    if d.active or not is_trivial(multiply(d.left, invert(flat))) or not is_trivial(d.right):
        return False, "decomposition of y is not (flatten(k), 1)"
    tower = iterated_commutator(y, x_active, bound)
    if not _moved(tower, data["witness"]):
        return False, "witness vertex is not moved by the tower"
    return True, f"left-{bound}-Engel refutation confirmed"


def _verify_right(data: dict[str, Any]) -> tuple[bool, str]:
    x = parse_word(data["x"])
    x_active = parse_word(data["x_active"])
    h = parse_tword(data["h"])
    y1 = parse_tword(data["y1"])
    y2 = parse_tword(data["y2"])
    y = parse_word(data["y"])
    bound = data["bound"]
    witnesses = data["witnesses"]
    if is_trivial(x):
        return False, "x is trivial"
    chain = [[bit, parse_word(w)] for bit, w in data["chain"]]
    problem = _check_chain(x, chain, x_active)
    if problem:
        return False, problem
    g1 = decompose(multiply("a", x_active)).left
    expected_y2 = y1.commutator_with(h).conjugated(invert(g1))
    if not is_trivial(multiply(flatten(y2), invert(flatten(expected_y2)))):
        return False, "y2 is not [y1, h]^(g1^-1)"
    if not is_trivial(multiply(y, invert(emb_pair(y1, y2)))):
        return False, "y does not embed (y1, y2)"
    if len(witnesses) != bound:
        return False, "one witness vertex per tower depth is required"
    fh = flatten(h)
    fy1 = flatten(y1)
    for m in range(1, bound + 1):
        tower = iterated_commutator(x_active, y, m + 1)
        if not _moved(tower, witnesses[m - 1]):
            return False, f"witness at m={m} is not moved by the tower"
        d = decompose(tower)
        expected_first = conjugate(iterated_commutator(fh, fy1, m + 1), fy1)
        if d.active or not is_trivial(multiply(d.left, invert(expected_first))):
            return False, f"tower identity cross-check failed at m={m}"
    return True, f"right-Engel refutation through sink bound {bound + 1} confirmed"


def _verify_membership(data: dict[str, Any]) -> tuple[bool, str]:
    result = membership_in_K(parse_word(data["word"]))
    if result.verdict != data["verdict"]:
        return False, f"recomputed verdict {result.verdict} != {data['verdict']}"
    if result.level is not None and data.get("level") != result.level:
        return False, f"recomputed level {result.level} != {data.get('level')}"
    return True, f"membership verdict {result.verdict} confirmed"

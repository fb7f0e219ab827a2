"""Plain-text digraph files and JSON rendering of result records.

The file format is one header line ``n <count>`` followed by one arc per
line as ``u v`` with 0-based vertex numbers.  ``#`` starts a comment that
runs to the end of the line, blank lines are ignored, and the encoding is
7-bit text, so files diff cleanly and round-trip bit-exactly: emitting a
parsed digraph sorts the arcs lexicographically and is idempotent.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Iterator

from .digraph import Digraph, Graph
from .errors import ParseError
from .solver import Dicolouring


def _tokens(line: str) -> Iterator[tuple[str, int]]:
    """Whitespace-split tokens with their 1-based starting columns."""
    at = 0
    for token in line.split():
        at = line.index(token, at)
        yield token, at + 1
        at += len(token)


def _integer(token: str, lineno: int, column: int) -> int:
    if not (token.isdigit() or (token[:1] == "-" and token[1:].isdigit())):
        raise ParseError(f"expected an integer, got {token!r}", lineno, column)
    return int(token)


def parse_dgf(text: str) -> Digraph:
    """Read a digraph, reporting the first offence with line and column."""
    n = None
    arcs: list[tuple[int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        for column, ch in enumerate(raw, start=1):
            if ord(ch) > 127:
                raise ParseError("non-ASCII byte", lineno, column)
        cut = raw.find("#")
        line = raw if cut < 0 else raw[:cut]
        parts = list(_tokens(line))
        if not parts:
            continue
        if n is None:
            if parts[0][0] != "n":
                raise ParseError(
                    "expected header 'n <count>'", lineno, parts[0][1]
                )
            if len(parts) != 2:
                where = parts[2][1] if len(parts) > 2 else parts[0][1]
                raise ParseError("header takes exactly one count", lineno, where)
            n = _integer(parts[1][0], lineno, parts[1][1])
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno, parts[1][1])
            continue
        if len(parts) != 2:
            where = parts[2][1] if len(parts) > 2 else parts[0][1]
            raise ParseError("expected an arc 'u v'", lineno, where)
        ends = []
        for token, column in parts:
            v = _integer(token, lineno, column)
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range", lineno, column)
            ends.append((v, column))
        if ends[0][0] == ends[1][0]:
            raise ParseError("self-loop", lineno, ends[1][1])
        arcs.append((ends[0][0], ends[1][0]))
    if n is None:
        raise ParseError("missing header 'n <count>'", lineno + 1, 1)
    return Digraph(n, arcs)


def emit_dgf(d: Digraph) -> str:
    """Canonical text form: header, then arcs sorted lexicographically."""
    lines = [f"n {d.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(d.arcs))
    return "\n".join(lines) + "\n"


def _plain(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str, float)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Digraph):
        return {"n": obj.n, "arcs": [list(a) for a in sorted(obj.arcs)]}
    if isinstance(obj, Graph):
        return {
            "n": obj.n,
            "edges": sorted(sorted(e) for e in obj.edges),
        }
    if isinstance(obj, Dicolouring):
        return {
            "k": obj.k,
            "assignment": {str(v): c for v, c in sorted(obj.assignment.items())},
        }
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {
            f.name: _plain(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
        }
        for extra in ("holds", "violated"):
            if hasattr(obj, extra) and extra not in out:
                out[extra] = _plain(getattr(obj, extra))
        return out
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (frozenset, set)):
        items = [_plain(x) for x in obj]
        try:
            return sorted(items)
        except TypeError:
            return sorted(items, key=repr)
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    return repr(obj)


def emit_json(record) -> str:
    """Deterministic JSON for any result record in this package."""
    return json.dumps(_plain(record), indent=2, sort_keys=True) + "\n"

"""Graph serialization: header-less graph6 and a JSON adjacency document.

Both writers are byte-deterministic; edges in the JSON form are sorted
lexicographically with u < v.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidParamsError, TooLargeError
from .graphs import Graph

_G6_MAX = 2**36 - 1


def _encode_size(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    if n <= _G6_MAX:
        return [126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)]
    raise TooLargeError(f"graph6 cannot encode n={n}")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, offset of first bit byte)."""
    if not data:
        raise InvalidParamsError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise InvalidParamsError("truncated graph6 size field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        return n, 4
    if len(data) < 8:
        raise InvalidParamsError("truncated graph6 size field")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def to_graph6(g: Graph) -> str:
    """Encode in the standard header-less graph6 format."""
    out = _encode_size(g.n)
    bits: list[int] = []
    for v in range(1, g.n):
        row = set(g.neighbors(v))
        for u in range(v):
            bits.append(1 if u in row else 0)
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def from_graph6(text: str) -> Graph:
    data = text.strip().encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise InvalidParamsError("graph6 bytes out of range")
    n, off = _decode_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[off:]
    if len(body) != need:
        raise InvalidParamsError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits: list[int] = []
    for b in body:
        val = b - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def to_json(g: Graph) -> str:
    doc = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def from_json(text: str) -> Graph:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise InvalidParamsError('expected {"n": int, "edges": [[u,v],...]}')
    return Graph(int(doc["n"]), [(int(u), int(v)) for u, v in doc["edges"]])


def save_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or ("json" if path.suffix == ".json" else "graph6")
    if fmt == "json":
        path.write_text(to_json(g))
    elif fmt == "graph6":
        path.write_text(to_graph6(g) + "\n")
    else:
        raise InvalidParamsError(f"unknown graph format {fmt!r}")


def load_graph(path: str | Path, fmt: str | None = None) -> Graph:
    path = Path(path)
    text = path.read_text()
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "graph6"
    if fmt == "json":
        return from_json(text)
    if fmt == "graph6":
        return from_graph6(text)
    raise InvalidParamsError(f"unknown graph format {fmt!r}")

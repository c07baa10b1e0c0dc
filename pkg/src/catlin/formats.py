"""Byte-exact graph codecs: graph6, DIMACS coloring files, JSON edge lists.

Decoders are strict about structure and lenient about surrounding
whitespace.  Structural problems raise :class:`FormatError` (with a line
number where one makes sense); recoverable oddities, like a DIMACS edge
count that disagrees with the edges actually listed, emit a
:class:`FormatWarning` instead.
"""

from __future__ import annotations

import json
import warnings

from .errors import CapacityError, FormatError, FormatWarning
from .graph import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"

# graph6 encodes n <= 62 in one byte; the 4-byte form covers up to 258047.
_SHORT_N_MAX = 62
_LONG_N_MAX = 258047


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 string (optionally with the standard header)."""
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise FormatError("empty graph6 string")
    try:
        raw = data.encode("ascii")
    except UnicodeEncodeError as exc:
        raise FormatError("graph6 must be printable ASCII") from exc
    for i, b in enumerate(raw):
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b} at position {i} outside graph6 range 63..126")
    n, body = _read_graph6_order(raw)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise FormatError(
            f"graph on {n} vertices needs {need} data bytes, found {len(body)}"
        )
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    # Bits run x(0,1), x(0,2), x(1,2), x(0,3), ... with zero padding last.
    total = len(body) * 6
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (bits >> (total - 1 - k)) & 1:
                edges.append((u, v))
            k += 1
    return build_graph(n, edges)


def _read_graph6_order(raw: bytes) -> tuple[int, bytes]:
    if raw[0] != 126:
        return raw[0] - 63, raw[1:]
    if len(raw) >= 2 and raw[1] == 126:
        if len(raw) < 8:
            raise FormatError("truncated 8-byte vertex count")
        n = 0
        for b in raw[2:8]:
            n = (n << 6) | (b - 63)
        return n, raw[8:]
    if len(raw) < 4:
        raise FormatError("truncated 4-byte vertex count")
    n = 0
    for b in raw[1:4]:
        n = (n << 6) | (b - 63)
    return n, raw[4:]


def encode_graph6(g: Graph) -> str:
    """Emit the canonical graph6 string (short form for n <= 62, else 4-byte)."""
    n = g.n
    if n <= _SHORT_N_MAX:
        head = bytes([63 + n])
    elif n <= _LONG_N_MAX:
        head = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise CapacityError(f"graph6 encoding limited to n <= {_LONG_N_MAX}")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for i in range(0, len(bits), 6):
        value = 0
        for bit in bits[i : i + 6]:
            value = (value << 1) | bit
        body.append(63 + value)
    return (head + bytes(body)).decode("ascii")


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS coloring file: one p-line, e-lines, c-comments.

    Vertices are 1-indexed in the file and come out 0-indexed.  A wrong
    declared edge count only warns; everything else structural raises
    with the offending line number.
    """
    n: int | None = None
    declared = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise FormatError("second problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise FormatError('problem line must read "p edge <n> <m>"', lineno)
            n, declared = _int_field(fields[2], lineno), _int_field(fields[3], lineno)
            if n < 0 or declared < 0:
                raise FormatError("negative count on problem line", lineno)
        elif fields[0] == "e":
            if n is None:
                raise FormatError("edge before problem line", lineno)
            if len(fields) != 3:
                raise FormatError('edge line must read "e <u> <v>"', lineno)
            u, v = _int_field(fields[1], lineno), _int_field(fields[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"edge endpoint outside 1..{n}", lineno)
            if u == v:
                raise FormatError("loop rejected", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"unrecognized record {fields[0]!r}", lineno)
    if n is None:
        raise FormatError("missing problem line")
    g = build_graph(n, edges)
    if g.edge_count != declared:
        warnings.warn(
            f"problem line declares {declared} edges, file lists {g.edge_count}",
            FormatWarning,
            stacklevel=2,
        )
    return g


def _int_field(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise FormatError(f"expected an integer, found {token!r}", lineno) from exc


def write_dimacs(g: Graph) -> str:
    """Emit a DIMACS coloring file with edges in ascending order."""
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def decode_json_graph(text: str) -> Graph:
    """Parse the package's JSON form: {"n": int, "edges": [[u, v], ...]}."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "n" not in payload:
        raise FormatError('JSON graph needs an object with "n"')
    n = payload["n"]
    edges = payload.get("edges", [])
    if not isinstance(n, int) or not isinstance(edges, list):
        raise FormatError('"n" must be an integer and "edges" a list')
    pairs = []
    for item in edges:
        if not (isinstance(item, list) and len(item) == 2):
            raise FormatError(f"edge entries must be pairs, found {item!r}")
        pairs.append((item[0], item[1]))
    return build_graph(n, pairs)


def encode_json_graph(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges()]})

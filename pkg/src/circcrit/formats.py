"""graph6, sparse6 and plain edge-list text formats.

graph6/sparse6 follow the encodings documented with nauty (McKay). The
edge-list format is a ``n m`` header line followed by ``m`` lines ``u v``.
"""
from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError

G6_HEADER = ">>graph6<<"
S6_HEADER = ">>sparse6<<"


class GraphFormatError(GraphError):
    def __init__(self, message: str, offset: int, line: int | None = None, source: str | None = None):
        self.offset = offset
        self.line = line
        self.source = source
        where = f"byte {offset}"
        if line is not None:
            where = f"line {line}, {where}"
        if source:
            where = f"{source}: {where}"
        super().__init__(f"{where}: {message}")


def _encode_size(n: int) -> str:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def _decode_size(data: bytes, pos: int) -> tuple[int, int]:
    def sextet(i: int) -> int:
        if i >= len(data):
            raise GraphFormatError("truncated vertex count", i)
        c = data[i]
        if not 63 <= c <= 126:
            raise GraphFormatError(f"invalid character {chr(c)!r}", i)
        return c - 63

    first = sextet(pos)
    if first < 63:
        return first, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        width, start = 6, pos + 2
    else:
        width, start = 3, pos + 1
    n = 0
    for i in range(start, start + width):
        n = n << 6 | sextet(i)
    return n, start + width


def _pack_bits(bits: list[int]) -> str:
    bits = bits + [0] * (-len(bits) % 6)
    out = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = v << 1 | b
        out.append(chr(63 + v))
    return "".join(out)


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    return (G6_HEADER if header else "") + _encode_size(g.n) + _pack_bits(bits)


def from_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    pos = len(G6_HEADER) if data.startswith(G6_HEADER.encode()) else 0
    n, pos = _decode_size(data, pos)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise GraphFormatError(f"truncated: expected {need} data bytes, found {len(body)}", len(data))
    if len(body) > need:
        raise GraphFormatError("trailing data after adjacency bits", pos + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = body[k // 6]
            if not 63 <= c <= 126:
                raise GraphFormatError(f"invalid character {chr(c)!r}", pos + k // 6)
            if (c - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def _sparse6_width(n: int) -> int:
    k = 1
    while 1 << k < n:
        k += 1
    return k


def to_sparse6(g: Graph, header: bool = False) -> str:
    n = g.n
    k = _sparse6_width(n)

    def enc(x: int) -> list[int]:
        return [x >> (k - 1 - i) & 1 for i in range(k)]

    bits: list[int] = []
    cur = 0
    for v, u in sorted((max(a, b), min(a, b)) for a, b in g.edges()):
        if v == cur:
            bits += [0] + enc(u)
        elif v == cur + 1:
            cur = v
            bits += [1] + enc(u)
        else:
            cur = v
            bits += [1] + enc(v) + [0] + enc(u)
    if k < 6 and n == 1 << k and -len(bits) % 6 >= k and cur < n - 1:
        # padding of ones would otherwise read as an edge into vertex n-1
        bits.append(0)
    bits += [1] * (-len(bits) % 6)
    out = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = v << 1 | b
        out.append(chr(63 + v))
    return (S6_HEADER if header else "") + ":" + _encode_size(n) + "".join(out)


def from_sparse6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    pos = len(S6_HEADER) if data.startswith(S6_HEADER.encode()) else 0
    if pos >= len(data) or data[pos] != ord(":"):
        raise GraphFormatError("sparse6 data must start with ':'", pos)
    n, pos = _decode_size(data, pos + 1)
    k = _sparse6_width(n)
    bits = []
    for i in range(pos, len(data)):
        c = data[i]
        if not 63 <= c <= 126:
            raise GraphFormatError(f"invalid character {chr(c)!r}", i)
        bits.extend((c - 63) >> s & 1 for s in range(5, -1, -1))
    edges = set()
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for bit in bits[i + 1 : i + 1 + k]:
            x = x << 1 | bit
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise GraphFormatError(f"self-loop at vertex {v}", pos + (i - 1) // 6)
            edges.add((x, v))
    return Graph.from_edges(n, sorted(edges))


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = text.splitlines(keepends=True)
    offset = 0
    records = []
    for lineno, raw in enumerate(lines, 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            records.append((lineno, offset, body))
        offset += len(raw.encode())
    if not records:
        raise GraphFormatError("empty edge list", 0)

    def ints(rec: tuple[int, int, str]) -> tuple[int, int]:
        lineno, off, body = rec
        parts = body.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {body!r}", off, lineno)
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {body!r}", off, lineno) from None

    n, m = ints(records[0])
    if len(records) - 1 != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(records) - 1}", offset, records[-1][0])
    edges = []
    for rec in records[1:]:
        u, v = ints(rec)
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"invalid edge {u} {v}", rec[1], rec[0])
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def detect_format(text: str) -> str:
    s = text.lstrip()
    if s.startswith(S6_HEADER) or s.startswith(":"):
        return "sparse6"
    if s.startswith(G6_HEADER):
        return "graph6"
    first = s.split("\n", 1)[0].strip()
    if len(first.split()) == 2:
        return "edges"
    return "graph6"


def parse_graph(text: str) -> Graph:
    """Parse a single graph, auto-detecting the format."""
    fmt = detect_format(text)
    if fmt == "edges":
        return from_edge_list(text)
    if fmt == "sparse6":
        return from_sparse6(text)
    return from_graph6(text)


def parse_graphs(text: str, source: str | None = None) -> list[Graph]:
    """All graphs in a text blob: one per line for graph6/sparse6, one per blob for edge lists."""
    if detect_format(text) == "edges":
        try:
            return [from_edge_list(text)]
        except GraphFormatError as err:
            raise GraphFormatError(str(err).split(": ", 1)[-1], err.offset, err.line, source) from None
    out = []
    offset = 0
    for lineno, raw in enumerate(text.splitlines(keepends=True), 1):
        line = raw.strip()
        if line:
            try:
                out.append(from_sparse6(line) if detect_format(line) == "sparse6" else from_graph6(line))
            except GraphFormatError as err:
                lead = len(raw) - len(raw.lstrip())
                raise GraphFormatError(
                    str(err).split(": ", 1)[-1], offset + lead + err.offset, lineno, source
                ) from None
        offset += len(raw.encode())
    return out


def parse_graph_file(source: str | Path) -> Graph:
    """One graph from a file path, or from literal text when no such file exists."""
    if isinstance(source, Path) or ("\n" not in source and Path(source).is_file()):
        graphs = read_graph_file(source)
        name = str(source)
    else:
        graphs = parse_graphs(source)
        name = None
    if len(graphs) != 1:
        raise GraphFormatError(f"expected exactly one graph, found {len(graphs)}", 0, source=name)
    return graphs[0]


def read_graph_file(path: str | Path) -> list[Graph]:
    path = Path(path)
    return parse_graphs(path.read_text(), source=str(path))


def write_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "sparse6":
        return to_sparse6(g)
    if fmt == "edges":
        return to_edge_list(g)
    raise ValueError(f"unknown format {fmt!r}")

"""graph6 format (McKay) and plain edge-list parsing.

graph6 layout: optional ">>graph6<<" header, N(n) size bytes, then the
upper triangle of the adjacency matrix in column-major order packed six
bits per byte, each byte offset by 63.
"""

from __future__ import annotations

from .graph import Graph, GraphError

HEADER = ">>graph6<<"
MAX_GRAPH6_ORDER = 68719476735  # 2^36 - 1


class FormatError(GraphError):
    """Malformed serialized graph; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    """Decode a one-line graph6 string (optional header allowed)."""
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise FormatError("empty graph6 string", base)
    data = s.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b!r} out of graph6 range 63..126", base + i)

    n, pos = _decode_order(data, base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise FormatError(
            f"truncated payload: need {nbytes} bytes for n={n}, got {len(data) - pos}",
            base + len(data),
        )
    if len(data) - pos > nbytes:
        raise FormatError("trailing garbage after payload", base + pos + nbytes)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def _decode_order(data: bytes, base: int) -> tuple[int, int]:
    b0 = data[0]
    if b0 < 126:
        return b0 - 63, 1
    if len(data) >= 2 and data[1] < 126:
        if len(data) < 4:
            raise FormatError("malformed length prefix: need 3 bytes after '~'", base)
        n = 0
        for i in range(1, 4):
            n = (n << 6) | (data[i] - 63)
        return n, 4
    if len(data) < 8:
        raise FormatError("malformed length prefix: need 6 bytes after '~~'", base)
    n = 0
    for i in range(2, 8):
        n = (n << 6) | (data[i] - 63)
    return n, 8


def write_graph6(g: Graph) -> str:
    """Canonical graph6 string for the graph's own labeling (no header)."""
    n = g.vertex_count
    if n > MAX_GRAPH6_ORDER:
        raise FormatError(f"graph too large for graph6: n={n}")
    out = bytearray(_encode_order(n))
    bits = 0
    nbits = 0
    for j in range(1, n):
        nbj = g.neighbor_sets[j]
        for i in range(j):
            bits = (bits << 1) | (1 if i in nbj else 0)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = 0
                nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    return out.decode("ascii")


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    return bytes([126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)])


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v"; duplicates and loops rejected."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"first line must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"non-integer header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise FormatError(f"negative counts in header {lines[0]!r}")
    if len(lines) - 1 != m:
        raise FormatError(f"edge count mismatch: header says {m}, found {len(lines) - 1}")
    seen = set()
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer edge line {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range in edge {u} {v}")
        if u == v:
            raise FormatError(f"loop edge {u} {v}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{e.u} {e.v}" for e in g.edges())
    return "\n".join(lines) + "\n"

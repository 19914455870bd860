"""graph6 encoding and decoding.

Format: a size header N(n) followed by the upper triangle of the adjacency
matrix read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
six bits per byte, each byte offset by 63.  The final byte is zero padded.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"


def _size_header(n: int) -> bytes:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("n too large for graph6")


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode(G: Graph, header: bool = False) -> str:
    out = bytearray(_size_header(G.n))
    acc = nbits = 0
    for i, j in _pairs(G.n):
        acc = (acc << 1) | (G.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(acc + 63)
            acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    text = out.decode("ascii")
    return HEADER + text if header else text


def decode(text: str | bytes) -> Graph:
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError:
            bad = next(i for i, ch in enumerate(text) if ord(ch) > 127)
            raise Graph6Error("non-ASCII character", bad) from None
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(HEADER.encode()):
        pos = len(HEADER)
    for i in range(pos, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"byte {data[i]!r} outside the graph6 alphabet 63..126", i)
    if pos >= len(data):
        raise Graph6Error("missing size header", pos)

    def take(count):
        nonlocal pos
        if pos + count > len(data):
            raise Graph6Error("truncated size header", len(data))
        chunk = data[pos:pos + count]
        pos += count
        value = 0
        for b in chunk:
            value = (value << 6) | (b - 63)
        return value

    if data[pos] != 126:
        n = take(1)
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        pos += 2
        n = take(6)
    else:
        pos += 1
        n = take(3)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", pos + min(len(body), need))
    edges = []
    pairs = _pairs(n)
    for k, b in enumerate(body):
        v = b - 63
        for s in range(5, -1, -1):
            bit = v >> s & 1
            idx = 6 * k + (5 - s)
            if idx >= nbits:
                if bit:
                    raise Graph6Error("non-zero padding bit", pos + k)
                continue
            i, j = next(pairs)
            if bit:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield decode(line)

"""graph6 (short form) and edge-list text formats."""

from __future__ import annotations

from typing import Iterable

from .graph import Graph


class FormatError(ValueError):
    pass


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise ValueError("graph6 long form (n > 62) is not supported")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    text = text.rstrip("\n")
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise FormatError("empty graph6 string")
    if not text.isascii():
        raise FormatError("graph6 must be ASCII")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"byte {ord(ch)} outside graph6 range 63..126")
    n = ord(text[0]) - 63
    if n == 63:
        raise FormatError("graph6 long form (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    body = text[1:]
    if len(body) != expect:
        raise FormatError(f"expected {expect} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("nonzero padding bits")
    return Graph(n, rows, _trusted=True)


def write_graph6(graphs: Iterable[Graph]) -> str:
    return "".join(to_graph6(g) + "\n" for g in graphs)


def read_graph6(text: str) -> list[Graph]:
    return [from_graph6(line) for line in text.splitlines() if line.strip()]


def to_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{i} {j}" for i, j in edges]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge list")
    try:
        header = [int(x) for x in lines[0]]
        if len(header) != 2:
            raise FormatError("edge-list header must be 'n m'")
        n, m = header
        pairs = [tuple(int(x) for x in ln) for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"non-integer token in edge list: {exc}") from None
    if len(pairs) != m:
        raise FormatError(f"header declares {m} edges, found {len(pairs)}")
    for p in pairs:
        if len(p) != 2:
            raise FormatError(f"edge line must hold two vertices: {p}")
    try:
        return Graph.from_edges(n, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_graphs(text: str, fmt: str) -> list[Graph]:
    if fmt == "graph6":
        return read_graph6(text)
    if fmt == "edgelist":
        return [from_edgelist(text)]
    raise ValueError(f"unknown format {fmt!r}")


def render(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    raise ValueError(f"unknown format {fmt!r}")

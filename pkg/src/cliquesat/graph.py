"""Simple undirected graphs on vertices 0..n-1 stored as integer bit rows.

A vertex set is a plain ``int`` used as a bitmask; bit ``i`` set means vertex
``i`` is a member.  Graph values are immutable and hashable.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

# Two 64-bit words per row; Python ints impose no limit of their own.
MAX_ORDER = 128


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Immutable simple graph with adjacency rows as bitmasks."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int] | None = None, *, _trusted: bool = False):
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"order {n} outside supported range 0..{MAX_ORDER}")
        if rows is None:
            rows = (0,) * n
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        if not _trusted:
            limit = full_mask(n)
            for i, r in enumerate(rows):
                if r & ~limit:
                    raise ValueError(f"row {i} references a vertex >= {n}")
                if r >> i & 1:
                    raise ValueError(f"loop at vertex {i}")
                for j in bits(r):
                    if not rows[j] >> i & 1:
                        raise ValueError(f"asymmetric adjacency between {i} and {j}")
        self.n = n
        self.rows = rows
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for i, j in edges:
            _check_pair(n, i, j)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, rows, _trusted=True)

    # -- queries ---------------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> int:
        return self.rows[i]

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        out = []
        for i, r in enumerate(self.rows):
            for j in bits(r >> (i + 1)):
                out.append((i, i + 1 + j))
        return out

    def edges_within(self, mask: int) -> list[tuple[int, int]]:
        out = []
        for i in bits(mask):
            for j in bits((self.rows[i] & mask) >> (i + 1)):
                out.append((i, i + 1 + j))
        return out

    def count_edges_within(self, mask: int) -> int:
        return sum((self.rows[i] & mask).bit_count() for i in bits(mask)) // 2

    def non_edges(self) -> list[tuple[int, int]]:
        """Pairs ``i < j`` that are not edges, in lexicographic order."""
        full = full_mask(self.n)
        out = []
        for i, r in enumerate(self.rows):
            missing = (full & ~r) >> (i + 1)
            for j in bits(missing):
                out.append((i, i + 1 + j))
        return out

    def is_clique(self, mask: int) -> bool:
        return all((self.rows[v] | (1 << v)) & mask == mask for v in bits(mask))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_of(0, self.vertex_mask()) == self.vertex_mask()

    def component_of(self, v: int, within: int) -> int:
        """Vertex set of the component containing ``v`` in ``G[within]``."""
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.rows[u]
            nxt &= within & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components(self, within: int | None = None) -> list[int]:
        remaining = self.vertex_mask() if within is None else within
        out = []
        while remaining:
            v = (remaining & -remaining).bit_length() - 1
            comp = self.component_of(v, remaining)
            out.append(comp)
            remaining &= ~comp
        return out

    # -- derived graphs --------------------------------------------------

    def add_edge(self, i: int, j: int) -> Graph:
        _check_pair(self.n, i, j)
        if self.has_edge(i, j):
            return self
        rows = list(self.rows)
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        return Graph(self.n, rows, _trusted=True)

    def remove_edge(self, i: int, j: int) -> Graph:
        _check_pair(self.n, i, j)
        if not self.has_edge(i, j):
            return self
        rows = list(self.rows)
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)
        return Graph(self.n, rows, _trusted=True)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.rows)
        for i, j in edges:
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)
        return Graph(self.n, rows, _trusted=True)

    def induced(self, mask: int) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``mask`` plus the map from new to old indices."""
        if mask & ~self.vertex_mask():
            raise ValueError("vertex set exceeds graph order")
        index = list(bits(mask))
        pos = {v: k for k, v in enumerate(index)}
        rows = []
        for v in index:
            r = 0
            for u in bits(self.rows[v] & mask):
                r |= 1 << pos[u]
            rows.append(r)
        return Graph(len(index), rows, _trusted=True), index

    def permute(self, perm: Sequence[int]) -> Graph:
        """Relabel so that old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex range")
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            nr = 0
            for u in bits(r):
                nr |= 1 << perm[u]
            rows[perm[v]] = nr
        return Graph(self.n, rows, _trusted=True)

    def pad(self, n: int) -> Graph:
        """Append isolated vertices up to order ``n``."""
        if n < self.n:
            raise ValueError(f"cannot pad order {self.n} down to {n}")
        return Graph(n, self.rows + (0,) * (n - self.n), _trusted=True)

    def support(self) -> Graph:
        """Drop isolated vertices, keeping relative order of the rest."""
        keep = mask_of(v for v, r in enumerate(self.rows) if r)
        return self.induced(keep)[0]

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph, (self.n, self.rows), None)


def _check_pair(n: int, i: int, j: int) -> None:
    if i == j:
        raise ValueError(f"loop edge at vertex {i}")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"edge ({i}, {j}) out of range for order {n}")


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("graph order must be at least 1")
    return Graph(n)


def independent(n: int) -> Graph:
    return empty(n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("graph order must be at least 1")
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds {MAX_ORDER}")
    full = full_mask(n)
    return Graph(n, [full & ~(1 << i) for i in range(n)], _trusted=True)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on vertices 0..g.n-1, then ``h`` shifted by ``g.n``; no cross edges."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise ValueError(f"union order {n} exceeds {MAX_ORDER}")
    return Graph(n, g.rows + tuple(r << g.n for r in h.rows), _trusted=True)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    u = disjoint_union(g, h)
    low = full_mask(g.n)
    high = full_mask(h.n) << g.n
    rows = [r | high if v < g.n else r | low for v, r in enumerate(u.rows)]
    return Graph(u.n, rows, _trusted=True)

"""Forbidden patterns K_p + (t-1)K_q and disjoint clique packing."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Graph, bits


@dataclass(frozen=True)
class CliquePattern:
    p: int
    q: int
    t: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"p must be at least 2, got {self.p}")
        if self.q < self.p:
            raise ValueError(f"q must be at least p, got p={self.p} q={self.q}")
        if self.t < 1:
            raise ValueError(f"t must be at least 1, got {self.t}")

    def sizes(self) -> tuple[int, ...]:
        """Clique sizes, the p-clique first."""
        return (self.p,) + (self.q,) * (self.t - 1)

    def order(self) -> int:
        return self.p + (self.t - 1) * self.q

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.t})"


@dataclass(frozen=True)
class Embedding:
    """Pairwise disjoint vertex sets, one per clique of the searched sizes."""

    parts: tuple[int, ...]

    def vertices(self) -> int:
        m = 0
        for part in self.parts:
            m |= part
        return m

    def as_lists(self) -> list[list[int]]:
        return [list(bits(part)) for part in self.parts]

    def edges(self, g: Graph) -> list[tuple[int, int]]:
        out = []
        for part in self.parts:
            out.extend(g.edges_within(part))
        return out

    def is_valid(self, g: Graph, sizes: Sequence[int]) -> bool:
        if sorted(p.bit_count() for p in self.parts) != sorted(sizes):
            return False
        seen = 0
        for part in self.parts:
            if part & seen or not g.is_clique(part):
                return False
            seen |= part
        return True

    def key(self) -> frozenset[int]:
        return frozenset(self.parts)


def _cliques(g: Graph, k: int, allowed: int) -> Iterator[int]:
    """Every k-clique inside ``allowed`` once, least-vertex-first order."""
    rows = g.rows
    if k <= 0:
        yield 0
        return
    if k == 1:
        for v in bits(allowed):
            yield 1 << v
        return
    # vertices without k-1 neighbours in allowed cannot lie in a k-clique
    pool = 0
    for v in bits(allowed):
        if (rows[v] & allowed).bit_count() >= k - 1:
            pool |= 1 << v

    def grow(clique: int, cand: int, need: int) -> Iterator[int]:
        if need == 0:
            yield clique
            return
        while cand and cand.bit_count() >= need:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            yield from grow(clique | low, cand & rows[v], need - 1)

    yield from grow(0, pool, k)


def find_clique(g: Graph, k: int, allowed: int | None = None) -> int | None:
    """Lexicographically least k-clique inside ``allowed``, or None."""
    if k < 1:
        raise ValueError("clique size must be at least 1")
    if allowed is None:
        allowed = g.vertex_mask()
    return next(_cliques(g, k, allowed), None)


def _packings(g: Graph, sizes: Sequence[int], allowed: int) -> Iterator[tuple[int, ...]]:
    """Ordered packings (largest size first) with equal-size parts ordered by least vertex."""
    order = sorted(sizes, reverse=True)
    demand = [sum(order[i:]) for i in range(len(order) + 1)]

    def place(level: int, allowed: int, floor: int) -> Iterator[tuple[int, ...]]:
        if level == len(order):
            yield ()
            return
        if allowed.bit_count() < demand[level]:
            return
        k = order[level]
        last_of_run = level + 1 == len(order) or order[level + 1] != k
        for c in _cliques(g, k, allowed & ~((1 << floor) - 1)):
            low = (c & -c).bit_length() - 1
            nxt_floor = 0 if last_of_run else low + 1
            for rest in place(level + 1, allowed & ~c, nxt_floor):
                yield (c,) + rest

    return place(0, allowed, 0)


def find_disjoint_cliques(g: Graph, sizes: Sequence[int], allowed: int | None = None) -> Embedding | None:
    if not sizes:
        raise ValueError("sizes must be nonempty")
    if allowed is None:
        allowed = g.vertex_mask()
    for parts in _packings(g, sizes, allowed):
        return Embedding(parts)
    return None


def enumerate_packings(g: Graph, sizes: Sequence[int], allowed: int | None = None,
                       limit: int = 10_000) -> list[Embedding]:
    """Up to ``limit`` distinct packings; distinct as families of vertex sets."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    if allowed is None:
        allowed = g.vertex_mask()
    out = []
    for parts in _packings(g, sizes, allowed):
        out.append(Embedding(parts))
        if len(out) >= limit:
            break
    return out


def contains_pattern(g: Graph, pat: CliquePattern) -> Embedding | None:
    """An embedding of the pattern, listed with the p-clique first, or None."""
    emb = find_disjoint_cliques(g, pat.sizes())
    if emb is None:
        return None
    return _pattern_order(emb, pat)


def _pattern_order(emb: Embedding, pat: CliquePattern) -> Embedding:
    parts = list(emb.parts)
    for i, part in enumerate(parts):
        if part.bit_count() == pat.p:
            parts.insert(0, parts.pop(i))
            break
    return Embedding(tuple(parts))


def contains_pattern_through(g: Graph, pat: CliquePattern, u: int, v: int) -> Embedding | None:
    """Pattern in ``g`` using the edge uv inside one of its cliques.

    Only meaningful when ``g`` itself has uv; used to certify ``G + uv`` when
    ``G`` is already known to be pattern-free.
    """
    rows = g.rows
    if not rows[u] >> v & 1:
        raise ValueError(f"({u}, {v}) is not an edge")
    base = (1 << u) | (1 << v)
    common = rows[u] & rows[v]
    full = g.vertex_mask()
    for size in sorted(set(pat.sizes()), reverse=True):
        rest_sizes = list(pat.sizes())
        rest_sizes.remove(size)
        for extra in _cliques(g, size - 2, common):
            part = base | extra
            if not rest_sizes:
                return _pattern_order(Embedding((part,)), pat)
            for others in _packings(g, rest_sizes, full & ~part):
                return _pattern_order(Embedding((part,) + others), pat)
    return None

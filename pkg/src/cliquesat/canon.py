"""Canonical labeling by partition refinement and individualization.

The search tree is the usual one: refine a vertex colouring until it is
stable, individualize each vertex of the first non-singleton colour class,
and recurse.  Every leaf is a discrete partition and hence a labeling; the
canonical labeling is the leaf whose relabeled adjacency rows are
lexicographically smallest.  Leaves producing identical graphs reveal
automorphisms, which prune sibling branches lying in the same orbit of the
pointwise stabilizer of the current prefix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits


@dataclass(frozen=True)
class Labeling:
    """Result of canonical labeling.

    ``order[k]`` is the original vertex placed at canonical position ``k``;
    ``generators`` are automorphisms discovered during the search, each a
    tuple mapping vertex ``v`` to ``gen[v]``.
    """

    order: tuple[int, ...]
    rows: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    def form(self) -> bytes:
        n = len(self.rows)
        width = max(1, (n + 7) // 8)
        return n.to_bytes(2, "big") + b"".join(r.to_bytes(width, "big") for r in self.rows)


def _rank(keys: list) -> list[int]:
    order = sorted(set(keys))
    index = {k: i for i, k in enumerate(order)}
    return [index[k] for k in keys]


def _refine(nbrs: list[list[int]], colour: list[int]) -> list[int]:
    """Iterate colour refinement to a stable colouring.

    New colours are ranks of (old colour, sorted neighbour colours), so the
    order of colour classes only depends on the isomorphism type.
    """
    count = len(set(colour))
    n = len(colour)
    while count < n:
        keys = [(colour[v], tuple(sorted(colour[u] for u in nbrs[v]))) for v in range(n)]
        new = _rank(keys)
        new_count = max(new) + 1
        colour = new
        if new_count == count:
            break
        count = new_count
    return colour


def _relabel(nbrs: list[list[int]], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for k, v in enumerate(order):
        pos[v] = 1 << k
    return tuple(sum(pos[u] for u in nbrs[v]) for v in order)


def _orbit_roots(n: int, gens: list[tuple[int, ...]], fixed: list[int]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[f] != f for f in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(g: Graph) -> Labeling:
    n = g.n
    if n == 0:
        return Labeling((), (), ())
    nbrs = [list(bits(r)) for r in g.rows]

    best_rows: tuple[int, ...] | None = None
    best_order: list[int] = []
    gens: list[tuple[int, ...]] = []

    def visit(colour: list[int], prefix: list[int]) -> None:
        nonlocal best_rows, best_order
        colour = _refine(nbrs, colour)
        sizes = [0] * n
        for c in colour:
            sizes[c] += 1
        target = next((c for c in range(n) if sizes[c] > 1), None)
        if target is None:
            order = [0] * n
            for v, c in enumerate(colour):
                order[c] = v
            cand = _relabel(nbrs, order)
            if best_rows is None or cand < best_rows:
                best_rows, best_order = cand, order
            elif cand == best_rows:
                auto = [0] * n
                for a, b in zip(order, best_order):
                    auto[a] = b
                gens.append(tuple(auto))
            return
        cell = [v for v in range(n) if colour[v] == target]
        tried: list[int] = []
        roots: list[int] | None = None
        seen_gens = 0
        for v in cell:
            if tried and gens:
                if roots is None or seen_gens != len(gens):
                    roots = _orbit_roots(n, gens, prefix)
                    seen_gens = len(gens)
                if any(roots[v] == roots[w] for w in tried):
                    continue
            keys = [(c, 0 if u == v else 1) for u, c in enumerate(colour)]
            visit(_rank(keys), prefix + [v])
            tried.append(v)

    visit(_rank(g.degrees()), [])
    return Labeling(tuple(best_order), best_rows, tuple(gens))


def canonical_form(g: Graph) -> bytes:
    """Bytes equal for two graphs exactly when they are isomorphic."""
    return canonical_labeling(g).form()


def canonical_graph(g: Graph) -> Graph:
    lab = canonical_labeling(g)
    return Graph(g.n, lab.rows, _trusted=True)


def from_form(form: bytes, *, validate: bool = True) -> Graph:
    n = int.from_bytes(form[:2], "big")
    width = max(1, (n + 7) // 8)
    rows = [int.from_bytes(form[2 + k * width:2 + (k + 1) * width], "big") for k in range(n)]
    return Graph(n, rows, _trusted=not validate)

"""Saturation certificates, the extremal construction and its edge count."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from .graph import Graph, complete, disjoint_union, independent, join
from .patterns import CliquePattern, Embedding, contains_pattern, contains_pattern_through


@dataclass
class SaturationVerdict:
    free: bool
    saturated: bool
    embedding: Embedding | None = None
    non_edge: tuple[int, int] | None = None
    failing_non_edges: list[tuple[int, int]] | None = None
    checked: int = 0
    below_bound: bool = False

    @property
    def failing_witness(self):
        return self.embedding if self.embedding is not None else self.non_edge


def sat_formula(n: int, pat: CliquePattern) -> int:
    """Edge count of the extremal construction, valid as sat(n) above the bound."""
    if n < pat.order():
        raise ValueError(f"n={n} is below the pattern order {pat.order()}")
    p, q, t = pat.p, pat.q, pat.t
    return (p - 2) * (n - p + 2) + (t - 1) * comb(q + 1, 2) + comb(p - 2, 2)


def theorem_n_bound(pat: CliquePattern) -> int:
    """Uniqueness of the construction is asserted for n strictly above this."""
    return pat.q * (pat.q + 1) * (pat.t - 1) + 3 * (pat.p - 2)


def min_construction_order(pat: CliquePattern) -> int:
    return pat.p + (pat.t - 1) * pat.q + pat.t - 3


def build_extremal(n: int, pat: CliquePattern) -> Graph:
    """K_{p-2} joined with (t-1) disjoint K_{q+1} plus isolated vertices.

    Layout: vertices 0..p-3 form the dominating clique, then t-1 blocks of
    q+1 consecutive vertices, then the independent remainder.
    """
    if n < max(1, min_construction_order(pat)):
        raise ValueError(f"n={n} too small for construction {pat}; "
                         f"need n >= {min_construction_order(pat)}")
    p, q, t = pat.p, pat.q, pat.t
    rest = n - (p - 2) - (t - 1) * (q + 1)
    body = None
    for _ in range(t - 1):
        block = complete(q + 1)
        body = block if body is None else disjoint_union(body, block)
    if rest:
        body = independent(rest) if body is None else disjoint_union(body, independent(rest))
    if p == 2:
        return body
    apex = complete(p - 2)
    return apex if body is None else join(apex, body)


def is_pattern_free(g: Graph, pat: CliquePattern) -> bool:
    return contains_pattern(g, pat) is None


def _failing(g: Graph, pat: CliquePattern, pairs: list[tuple[int, int]], first_only: bool):
    out = []
    for u, v in pairs:
        if contains_pattern_through(g.add_edge(u, v), pat, u, v) is None:
            out.append((u, v))
            if first_only:
                break
    return out


def _chunks(items: list, k: int) -> list[list]:
    size = max(1, -(-len(items) // k))
    return [items[i:i + size] for i in range(0, len(items), size)]


def certify_saturated(g: Graph, pat: CliquePattern, *, collect_all: bool = False,
                      workers: int = 1) -> SaturationVerdict:
    """Check pattern-freeness, then that every non-edge completes a pattern.

    Non-edges are examined in lexicographic order; the reported witness is
    the least failing one regardless of ``workers``.
    """
    below = g.n <= theorem_n_bound(pat)
    emb = contains_pattern(g, pat)
    if emb is not None:
        return SaturationVerdict(free=False, saturated=False, embedding=emb, below_bound=below)
    pairs = g.non_edges()
    if workers > 1 and len(pairs) > 1:
        chunks = _chunks(pairs, workers)
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_failing, [g] * len(chunks), [pat] * len(chunks),
                                  chunks, [not collect_all] * len(chunks)))
        failing = sorted(f for r in results for f in r)
    else:
        failing = _failing(g, pat, pairs, not collect_all)
    checked = len(pairs)
    if not collect_all:
        failing = failing[:1]
        if failing:
            checked = pairs.index(failing[0]) + 1
    return SaturationVerdict(
        free=True,
        saturated=not failing,
        non_edge=failing[0] if failing else None,
        failing_non_edges=failing if collect_all else None,
        checked=checked,
        below_bound=below,
    )

"""Isomorph-free enumeration by edge count and exhaustive saturation search.

Graphs on ``n`` vertices with ``m`` edges correspond one-to-one with
support graphs (no isolated vertices, at most ``2m`` vertices) padded by
isolated vertices, so the enumeration depends on ``m`` and not on ``n``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator

from .canon import canonical_form, canonical_labeling, from_form
from .formats import to_graph6
from .graph import Graph
from .patterns import CliquePattern
from .saturation import (
    build_extremal,
    certify_saturated,
    min_construction_order,
    sat_formula,
    theorem_n_bound,
)

DEFAULT_MAX_EDGES = 12


def _pair_orbit_reps(n: int, gens, pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    parent = {pr: pr for pr in pairs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, j in pairs:
            a, b = g[i], g[j]
            img = (a, b) if a < b else (b, a)
            ra, rb = find((i, j)), find(img)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [pr for pr in pairs if find(pr) == pr]


def _vertex_orbit_reps(n: int, gens) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [v for v in range(n) if find(v) == v]


def _children(parent: Graph, max_order: int) -> Iterator[Graph]:
    """One-edge extensions of a support graph, up to parent automorphisms."""
    s = parent.n
    gens = canonical_labeling(parent).generators
    for i, j in _pair_orbit_reps(s, gens, parent.non_edges()):
        yield parent.add_edge(i, j)
    if s + 1 <= max_order:
        for i in _vertex_orbit_reps(s, gens):
            yield parent.pad(s + 1).add_edge(i, s)
    if s + 2 <= max_order:
        yield parent.pad(s + 2).add_edge(s, s + 1)


@lru_cache(maxsize=None)
def _level(max_order: int, m: int) -> tuple[bytes, ...]:
    if m == 0:
        return (canonical_form(Graph(0)),)
    seen: set[bytes] = set()
    for form in _level(max_order, m - 1):
        for child in _children(from_form(form, validate=False), max_order):
            seen.add(canonical_form(child))
    return tuple(sorted(seen))


def enumerate_graphs(n_support: int, m: int) -> Iterator[Graph]:
    """One canonical representative per class of m-edge graphs without
    isolated vertices on at most ``n_support`` vertices, in canonical-form order.
    """
    if m < 0 or m > comb(n_support, 2):
        raise ValueError(f"m={m} impossible on {n_support} vertices")
    for form in _level(min(n_support, 2 * m), m):
        yield from_form(form, validate=False)


def count_classes(n_support: int, m: int) -> int:
    return len(_level(min(n_support, 2 * m), m))


@dataclass
class EdgeTally:
    m: int
    examined: int
    saturated: int


@dataclass
class SearchReport:
    n: int
    pattern: CliquePattern
    edge_budget: int
    tallies: list[EdgeTally] = field(default_factory=list)
    sat_value: int | None = None
    extremal_forms: list[bytes] = field(default_factory=list)
    extremal_graphs: list[Graph] = field(default_factory=list)
    uniqueness: bool = False
    formula_value: int | None = None
    construction_form: bytes | None = None
    below_bound: bool = False
    limit_hit: bool = False
    frontier: int = -1
    certify_calls: int = 0
    non_edge_checks: int = 0
    seconds: float = 0.0

    @property
    def matches_formula(self) -> bool:
        return self.sat_value is not None and self.sat_value == self.formula_value

    def to_document(self, timing: bool = False) -> dict:
        doc = {
            "format": 1,
            "kind": "search",
            "n": self.n,
            "pattern": {"p": self.pattern.p, "q": self.pattern.q, "t": self.pattern.t},
            "edge_budget": self.edge_budget,
            "tallies": [{"m": t.m, "examined": t.examined, "saturated": t.saturated}
                        for t in self.tallies],
            "sat_value": self.sat_value,
            "formula_value": self.formula_value,
            "extremal_graph6": [to_graph6(g) for g in self.extremal_graphs],
            "uniqueness": self.uniqueness,
            "below_bound": self.below_bound,
            "limit_hit": self.limit_hit,
            "frontier": self.frontier,
            "certify_calls": self.certify_calls,
            "non_edge_checks": self.non_edge_checks,
        }
        if timing:
            doc["seconds"] = round(self.seconds, 3)
        return doc

    def summary(self, timing: bool = False) -> str:
        lines = [f"{'m':>3} {'classes':>8} {'saturated':>9}"]
        for t in self.tallies:
            lines.append(f"{t.m:>3} {t.examined:>8} {t.saturated:>9}")
        lines.append(f"n: {self.n}")
        lines.append(f"pattern: {self.pattern}")
        lines.append(f"sat: {self.sat_value if self.sat_value is not None else 'not found'}")
        lines.append(f"formula: {self.formula_value}")
        lines.append(f"unique: {str(self.uniqueness).lower()}")
        lines.append(f"below_bound: {str(self.below_bound).lower()}")
        for g in self.extremal_graphs:
            lines.append(f"extremal: {to_graph6(g)}")
        if self.limit_hit:
            lines.append(f"frontier: {self.frontier} (edge limit reached)")
        if timing:
            lines.append(f"seconds: {self.seconds:.3f}")
        return "\n".join(lines) + "\n"


def _certify_batch(forms: list[bytes], n: int, pat: CliquePattern):
    out = []
    for form in forms:
        g = from_form(form, validate=False).pad(n)
        v = certify_saturated(g, pat)
        out.append((v.saturated, v.checked))
    return out


def compute_sat(n: int, pat: CliquePattern, budget: int | None = None, *,
                max_edges: int = DEFAULT_MAX_EDGES, allow_large: bool = False,
                workers: int = 1) -> SearchReport:
    """Smallest m with a saturated n-vertex graph, scanning m = 0, 1, 2, ...

    ``budget`` defaults to the construction's edge count, an upper bound on
    the answer.  Without ``allow_large`` the scan stops at ``max_edges``.
    """
    start = time.perf_counter()
    formula = sat_formula(n, pat) if n >= pat.order() else None
    if budget is None:
        budget = formula if formula is not None else comb(n, 2)
    budget = min(budget, comb(n, 2))
    limit = budget if allow_large else min(budget, max_edges)
    report = SearchReport(n=n, pattern=pat, edge_budget=budget, formula_value=formula,
                          below_bound=n <= theorem_n_bound(pat))
    if n >= max(1, min_construction_order(pat)):
        report.construction_form = canonical_form(build_extremal(n, pat))

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for m in range(limit + 1):
            forms = list(_level(min(n, 2 * m), m))
            if pool is not None:
                size = max(1, -(-len(forms) // (4 * workers)))
                batches = [forms[i:i + size] for i in range(0, len(forms), size)]
                results = [r for batch in pool.map(_certify_batch, batches,
                                                   [n] * len(batches), [pat] * len(batches))
                           for r in batch]
            else:
                results = _certify_batch(forms, n, pat)
            found = [f for f, (ok, _) in zip(forms, results) if ok]
            report.certify_calls += len(forms)
            report.non_edge_checks += sum(c for _, c in results)
            report.tallies.append(EdgeTally(m, len(forms), len(found)))
            report.frontier = m
            if found:
                report.sat_value = m
                report.extremal_forms = [canonical_form(from_form(f, validate=False).pad(n)) for f in found]
                report.extremal_graphs = [from_form(f, validate=False).pad(n) for f in found]
                break
    finally:
        if pool is not None:
            pool.shutdown()

    if report.sat_value is None and limit < budget:
        report.limit_hit = True
    report.uniqueness = (len(report.extremal_forms) == 1
                         and report.extremal_forms[0] == report.construction_form)
    report.seconds = time.perf_counter() - start
    return report


def verify_theorem(n: int, pat: CliquePattern, **kwargs) -> tuple[bool, SearchReport]:
    """Search from scratch and compare with the formula and the construction."""
    bound = theorem_n_bound(pat)
    if n <= bound:
        raise ValueError(f"n={n} must exceed the theorem bound {bound}")
    report = compute_sat(n, pat, **kwargs)
    return report.matches_formula and report.uniqueness, report

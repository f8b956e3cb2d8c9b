"""Residue objects of a saturated graph and literal checks of the structural lemmas.

Given a saturated graph ``G`` the residue fixes a minimum-degree vertex
``v``, its neighbourhood ``S``, a packing ``F`` of ``t-1`` q-cliques avoiding
``S``, the vertices ``R_F`` outside ``V(F) | S`` that see ``F``, the edges
``A_F`` of ``G`` off ``F`` and outside ``S``, and the components of
``G[R_F | V(F)] - E(F)``.  Each check evaluates one statement on those
objects and returns a :class:`Verdict`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .graph import Graph, bits, full_mask
from .patterns import CliquePattern, Embedding, _cliques, enumerate_packings, find_disjoint_cliques
from .saturation import certify_saturated, sat_formula, theorem_n_bound

PASS = "PASS"
FAIL = "FAIL"
NOT_APPLICABLE = "N/A"

DEFAULT_CAP = 10_000


class ResidueError(ValueError):
    pass


@dataclass
class Verdict:
    name: str
    status: str
    counterexample: tuple | None = None
    partial: bool = False
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_document(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.status,
            "counterexample": list(self.counterexample) if self.counterexample is not None else None,
            "partial": self.partial,
            "detail": self.detail,
        }


@dataclass
class Component:
    vertices: int
    edges: list[tuple[int, int]]

    @property
    def order(self) -> int:
        return self.vertices.bit_count()

    def is_tree(self) -> bool:
        return len(self.edges) == self.order - 1


@dataclass
class ResidueReport:
    graph: Graph
    pattern: CliquePattern
    v: int
    S: int
    F: Embedding
    R_F: int
    A_F: list[tuple[int, int]]
    components: list[Component]
    in_sat: bool
    verdicts: dict[str, Verdict] = field(default_factory=dict)

    @property
    def VF(self) -> int:
        return self.F.vertices()

    def to_text(self) -> str:
        fmt = lambda m: "{" + ",".join(str(x) for x in bits(m)) + "}"
        lines = [
            f"n: {self.graph.n}",
            f"edges: {self.graph.num_edges()}",
            f"pattern: {self.pattern}",
            f"in_sat: {str(self.in_sat).lower()}",
            f"v: {self.v}",
            f"S: {fmt(self.S)}",
            "F: " + " ".join(fmt(p) for p in self.F.parts),
            f"R_F: {fmt(self.R_F)}",
            f"A_F: {len(self.A_F)} " + " ".join(f"{a}-{b}" for a, b in self.A_F),
            f"components: {len(self.components)}",
        ]
        for k, c in enumerate(self.components, 1):
            lines.append(f"C{k}: vertices={fmt(c.vertices)} edges={len(c.edges)} "
                         f"in_F={(c.vertices & self.VF).bit_count()}")
        for name, ver in self.verdicts.items():
            extra = f" counterexample={ver.counterexample}" if ver.counterexample is not None else ""
            if ver.partial:
                extra += " partial"
            lines.append(f"check.{name}: {ver.status}{extra}")
        return "\n".join(lines) + "\n"

    def to_document(self) -> dict:
        return {
            "format": 1,
            "kind": "residue",
            "n": self.graph.n,
            "pattern": {"p": self.pattern.p, "q": self.pattern.q, "t": self.pattern.t},
            "in_sat": self.in_sat,
            "v": self.v,
            "S": list(bits(self.S)),
            "F": self.F.as_lists(),
            "R_F": list(bits(self.R_F)),
            "A_F": [list(e) for e in self.A_F],
            "components": [{"vertices": list(bits(c.vertices)), "edges": len(c.edges)}
                           for c in self.components],
            "checks": [v.to_document() for v in self.verdicts.values()],
        }


@lru_cache(maxsize=256)
def _is_saturated(g: Graph, pat: CliquePattern) -> bool:
    return certify_saturated(g, pat).saturated


def _min_degree_vertex(g: Graph) -> int:
    degs = g.degrees()
    return degs.index(min(degs))


def _in_sat(g: Graph, pat: CliquePattern, saturated: bool) -> bool:
    return (saturated and g.n > theorem_n_bound(pat) and g.n >= pat.order()
            and g.num_edges() == sat_formula(g.n, pat))


def residue(g: Graph, pat: CliquePattern, F: Embedding | None = None) -> ResidueReport:
    """Compute v, S, F, R_F, A_F and the components for a saturated graph."""
    if not _is_saturated(g, pat):
        raise ResidueError(f"graph is not {pat}-saturated")
    v = _min_degree_vertex(g)
    S = g.neighbors(v)
    outside_S = g.vertex_mask() & ~S
    sizes = [pat.q] * (pat.t - 1)
    if F is None:
        if sizes:
            F = find_disjoint_cliques(g, sizes, outside_S)
            if F is None:
                raise ResidueError(f"no packing of {pat.t - 1} K_{pat.q} avoids S")
        else:
            F = Embedding(())
    elif sizes and not (F.is_valid(g, sizes) and not F.vertices() & S):
        raise ResidueError("supplied F is not a packing of q-cliques outside S")

    VF = F.vertices()
    rest = g.vertex_mask() & ~(VF | S)
    R_F = 0
    for w in bits(rest):
        if g.neighbors(w) & VF:
            R_F |= 1 << w
    f_edges = set(F.edges(g))
    A_F = [e for e in g.edges_within(outside_S) if e not in f_edges]

    within = R_F | VF
    part_of = {x: part for part in F.parts for x in bits(part)}
    rows = [0] * g.n
    for x in bits(within):
        rows[x] = g.neighbors(x) & within & ~part_of.get(x, 0)
    h = Graph(g.n, rows, _trusted=True)
    components = [Component(c, h.edges_within(c)) for c in h.components(within)]

    return ResidueReport(g, pat, v, S, F, R_F, A_F, components, _in_sat(g, pat, True))


# -- checks on a residue report ------------------------------------------------

def check_outside_empty(report: ResidueReport) -> Verdict:
    g = report.graph
    outside = g.vertex_mask() & ~(report.VF | report.S)
    bad = g.edges_within(outside)
    if bad:
        return Verdict("outside_empty", FAIL, bad[0])
    return Verdict("outside_empty", PASS)


def check_af_count(report: ResidueReport, pat: CliquePattern) -> Verdict:
    want = (pat.t - 1) * pat.q
    got = len(report.A_F)
    status = PASS if got == want else FAIL
    return Verdict("af_count", status, None if status == PASS else (got, want),
                   detail=f"|A_F|={got} expected={want}")


def check_eq1(report: ResidueReport) -> Verdict:
    VF = report.VF
    for k, c in enumerate(report.components, 1):
        inside = (c.vertices & VF).bit_count()
        if len(c.edges) != inside:
            return Verdict("eq1", FAIL, (k, len(c.edges), inside))
    return Verdict("eq1", PASS)


def check_lemma5(report: ResidueReport) -> Verdict:
    for k, c in enumerate(report.components, 1):
        if c.is_tree() and not c.vertices & report.R_F:
            return Verdict("lemma5", FAIL, (k, tuple(bits(c.vertices))))
    return Verdict("lemma5", PASS)


def check_claims(report: ResidueReport, pat: CliquePattern) -> dict[str, Verdict]:
    names = ["claim1_i", "claim1_ii", "claim1_iii", "claim2", "claim3", "claim4"]
    if not report.in_sat:
        return {k: Verdict(k, NOT_APPLICABLE, detail="graph not in Sat") for k in names}
    g = report.graph
    parts = report.F.parts
    VF = report.VF
    R = list(bits(report.R_F))
    out: dict[str, Verdict] = {}

    bad = next(((k, (c.vertices & report.R_F).bit_count())
                for k, c in enumerate(report.components, 1)
                if (c.vertices & report.R_F).bit_count() > 1), None)
    out["claim1_i"] = Verdict("claim1_i", FAIL if bad else PASS, bad)

    bad = None
    for r in R:
        nr = g.neighbors(r)
        for i, j in combinations(range(len(parts)), 2):
            for x in bits(nr & parts[i]):
                hit = g.neighbors(x) & nr & parts[j]
                if hit:
                    bad = (x, (hit & -hit).bit_length() - 1, r)
                    break
            if bad:
                break
        if bad:
            break
    out["claim1_ii"] = Verdict("claim1_ii", FAIL if bad else PASS, bad,
                               detail="vacuous" if len(parts) < 2 else "")

    if pat.q < 4:
        out["claim1_iii"] = Verdict("claim1_iii", NOT_APPLICABLE, detail="q < 4")
    else:
        bad = None
        for X in _cliques(g, pat.q, VF):
            if sum(1 for part in parts if part & X) > 2:
                bad = tuple(bits(X))
                break
        out["claim1_iii"] = Verdict("claim1_iii", FAIL if bad else PASS, bad)

    bad2 = bad3 = bad4 = None
    for r in R:
        nr = g.neighbors(r)
        for i, part in enumerate(parts):
            seen = (nr & part).bit_count()
            if bad2 is None and seen >= 2 and part & ~nr:
                bad2 = (r, i)
            if bad3 is None and seen == 1:
                bad3 = (r, i)
        if bad4 is None and not any(nr & VF == part for part in parts):
            bad4 = (r, tuple(bits(nr & VF)))
    out["claim2"] = Verdict("claim2", FAIL if bad2 else PASS, bad2)
    out["claim3"] = Verdict("claim3", FAIL if bad3 else PASS, bad3)
    out["claim4"] = Verdict("claim4", FAIL if bad4 else PASS, bad4)
    return out


# -- checks on the graph itself -----------------------------------------------

def check_lemma2(g: Graph, pat: CliquePattern) -> Verdict:
    if not _in_sat(g, pat, _is_saturated(g, pat)):
        return Verdict("lemma2", NOT_APPLICABLE, detail="graph not in Sat above the bound")
    delta = g.min_degree()
    if delta == pat.p - 2:
        return Verdict("lemma2", PASS, detail=f"min degree {delta}")
    return Verdict("lemma2", FAIL, (delta, pat.p - 2))


def _closure_context(g: Graph, pat: CliquePattern) -> tuple[int, int] | None:
    if not _is_saturated(g, pat) or g.min_degree() != pat.p - 2:
        return None
    v = _min_degree_vertex(g)
    return v, g.neighbors(v)


def check_dominating_closure(g: Graph, pat: CliquePattern) -> Verdict:
    ctx = _closure_context(g, pat)
    if ctx is None:
        return Verdict("dominating_closure", NOT_APPLICABLE,
                       detail="needs a saturated graph with min degree p-2")
    v, S = ctx
    if not g.is_clique(S):
        return Verdict("dominating_closure", FAIL, ("S not a clique", tuple(bits(S))))
    for u in bits(g.vertex_mask() & ~(S | 1 << v)):
        if S & ~g.neighbors(u):
            return Verdict("dominating_closure", FAIL, (u, tuple(bits(S & ~g.neighbors(u)))))
    return Verdict("dominating_closure", PASS)


def check_lemma3(g: Graph, pat: CliquePattern, u: int, cap: int = DEFAULT_CAP) -> Verdict:
    """Every packing avoiding S, u and v must cover N(u) minus S."""
    ctx = _closure_context(g, pat)
    if ctx is None:
        return Verdict("lemma3", NOT_APPLICABLE,
                       detail="needs a saturated graph with min degree p-2")
    v, S = ctx
    if u == v or S >> u & 1:
        raise ValueError(f"vertex {u} lies in N[v] for v={v}")
    need = g.neighbors(u) & ~S
    sizes = [pat.q] * (pat.t - 1)
    if not sizes:
        status = PASS if not need else FAIL
        return Verdict("lemma3", status, None if status == PASS else (u, need.bit_length() - 1))
    allowed = g.vertex_mask() & ~(S | 1 << u | 1 << v)
    family = enumerate_packings(g, sizes, allowed, limit=cap + 1)
    partial = len(family) > cap
    family = family[:cap]
    if not family:
        return Verdict("lemma3", FAIL, (u, None), detail="no packing avoids S, u, v")
    for k, F in enumerate(family):
        miss = need & ~F.vertices()
        if miss:
            return Verdict("lemma3", FAIL, (u, (miss & -miss).bit_length() - 1, k), partial)
    return Verdict("lemma3", PASS, partial=partial, detail=f"{len(family)} packings")


def check_lemma3_all(g: Graph, pat: CliquePattern, cap: int = DEFAULT_CAP) -> Verdict:
    ctx = _closure_context(g, pat)
    if ctx is None:
        return Verdict("lemma3", NOT_APPLICABLE,
                       detail="needs a saturated graph with min degree p-2")
    v, S = ctx
    partial = False
    total = 0
    for u in bits(g.vertex_mask() & ~(S | 1 << v)):
        ver = check_lemma3(g, pat, u, cap)
        if ver.status == FAIL:
            return ver
        partial |= ver.partial
        total += 1
    return Verdict("lemma3", PASS, partial=partial, detail=f"{total} vertices u")


def contraction_bound_holds(h: Graph, X: int) -> bool:
    """|E(H)| - |E(H[X])| >= |V(H) - X| for connected H and nonempty X."""
    if not h.is_connected():
        raise ValueError("graph must be connected")
    if not X:
        raise ValueError("X must be nonempty")
    if X & ~full_mask(h.n):
        raise ValueError("X exceeds the vertex range")
    return h.num_edges() - h.count_edges_within(X) >= h.n - X.bit_count()


def audit(g: Graph, pat: CliquePattern, F: Embedding | None = None,
          cap: int = DEFAULT_CAP) -> ResidueReport:
    """Residue plus every check, stored in ``report.verdicts``."""
    report = residue(g, pat, F)
    checks = [
        check_outside_empty(report),
        check_af_count(report, pat),
        check_eq1(report),
        check_lemma2(g, pat),
        check_dominating_closure(g, pat),
        check_lemma3_all(g, pat, cap),
        check_lemma5(report),
    ]
    for ver in checks:
        report.verdicts[ver.name] = ver
    report.verdicts.update(check_claims(report, pat))
    return report


def audit_all_packings(g: Graph, pat: CliquePattern, cap: int = DEFAULT_CAP) -> list[ResidueReport]:
    """One audit per packing F avoiding S (up to ``cap`` packings)."""
    first = residue(g, pat)
    sizes = [pat.q] * (pat.t - 1)
    if not sizes:
        return [audit(g, pat, cap=cap)]
    family = enumerate_packings(g, sizes, g.vertex_mask() & ~first.S, limit=cap)
    return [audit(g, pat, F, cap) for F in family]

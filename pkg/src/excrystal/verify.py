"""Checks run against constructed crystals.

Regularity is tested two independent ways: Stembridge's local axioms for
simply-laced crystals, and an explicit isomorphism of every two-color
component with the rank-two highest weight crystal of the same highest
weight.  The module also carries the oriented-matroid circuit computation used
to show that the six chain systems never admit two solutions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .affine import PromotionMap, graph_isomorphism_partial
from .compgraph import VERTEX_ORDER, CompositionGraph
from .genhw import highest_weight_crystal
from .graph import NONE, CrystalGraph
from .rootdata import build_root_data


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str = ""


@dataclass
class VerificationReport:
    title: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: str = "") -> None:
        self.checks.append(CheckResult(name, bool(passed), "" if passed else witness))

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def text(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}" + (f" -- {c.witness}" if c.witness else ""))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok,
                "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness} for c in self.checks]}


# -- Stembridge axioms --------------------------------------------------------

def stembridge_failure(g: CrystalGraph, i: int, j: int, a_ij: int) -> str | None:
    """First violation of the local axioms for the pair (i, j), or None.

    Uses raising operators: Delta_i h(x) = h(e_i x) - h(x) and
    nabla_i h(y) = h(y) - h(f_i y).
    """
    eps_i, eps_j, phi_i, phi_j = g.eps(i), g.eps(j), g.phi(i), g.phi(j)
    ei, ej, fi, fj = g.e_table(i), g.e_table(j), g.f_table(i), g.f_table(j)
    stats = {(i, "eps"): eps_i, (j, "eps"): eps_j, (i, "phi"): phi_i, (j, "phi"): phi_j}
    e = {i: ei, j: ej}
    f = {i: fi, j: fj}

    def D(a, b, kind, x):  # Delta_a of the b-statistic
        return stats[(b, kind)][e[a][x]] - stats[(b, kind)][x]

    def N(a, b, kind, y):  # nabla_a of the b-statistic
        return stats[(b, kind)][y] - stats[(b, kind)][f[a][y]]

    def walk(x, ops, table):
        for c in ops:
            if x == NONE:
                return NONE
            x = table[c][x]
        return x

    for x in range(len(g)):
        for a in (i, j):
            if stats[(a, "phi")][x] - stats[(a, "eps")][x] != g.weights[x][a]:
                return f"P1 at node {g.label(x)}: string length disagrees with wt_{a}"
        for a, b in ((i, j), (j, i)):
            if e[a][x] != NONE:
                d_eps, d_phi = D(a, b, "eps", x), D(a, b, "phi", x)
                if d_phi - d_eps != a_ij:
                    return f"P2 at node {g.label(x)} for e_{a}"
                if d_eps < 0 or d_phi > 0:
                    return f"P3 at node {g.label(x)} for e_{a}"
            if f[a][x] != NONE:
                n_eps, n_phi = N(a, b, "eps", x), N(a, b, "phi", x)
                if n_phi - n_eps != a_ij:
                    return f"P2' at node {g.label(x)} for f_{a}"
                if n_eps < 0 or n_phi > 0:
                    return f"P3' at node {g.label(x)} for f_{a}"
        # P4 / P5 with raising operators
        if ei[x] != NONE and ej[x] != NONE:
            di, dj = D(i, j, "eps", x), D(j, i, "eps", x)
            if di == 0 or dj == 0:
                y1, y2 = walk(x, (j, i), e), walk(x, (i, j), e)
                if y1 == NONE or y1 != y2:
                    return f"P4 at node {g.label(x)}: e_i e_j != e_j e_i"
                for a, b, d in ((i, j, di), (j, i, dj)):
                    if d == 0 and (f[b][y1] == NONE or N(b, a, "phi", y1) != 0):
                        return f"P4 at node {g.label(x)}: statistics at the top"
            elif di == 1 and dj == 1:
                y1, y2 = walk(x, (i, j, j, i), e), walk(x, (j, i, i, j), e)
                if y1 == NONE or y1 != y2:
                    return f"P5 at node {g.label(x)}: octagon does not close"
                if fi[y1] == NONE or fj[y1] == NONE or N(i, j, "phi", y1) != -1 or N(j, i, "phi", y1) != -1:
                    return f"P5 at node {g.label(x)}: statistics at the top"
        # P6 / P7 with lowering operators
        if fi[x] != NONE and fj[x] != NONE:
            ni, nj = N(i, j, "phi", x), N(j, i, "phi", x)
            if ni == 0 or nj == 0:
                y1, y2 = walk(x, (j, i), f), walk(x, (i, j), f)
                if y1 == NONE or y1 != y2:
                    return f"P6 at node {g.label(x)}: f_i f_j != f_j f_i"
                for a, b, n in ((i, j, ni), (j, i, nj)):
                    if n == 0 and (e[b][y1] == NONE or D(b, a, "eps", y1) != 0):
                        return f"P6 at node {g.label(x)}: statistics at the bottom"
            elif ni == -1 and nj == -1:
                y1, y2 = walk(x, (i, j, j, i), f), walk(x, (j, i, i, j), f)
                if y1 == NONE or y1 != y2:
                    return f"P7 at node {g.label(x)}: octagon does not close"
                if ei[y1] == NONE or ej[y1] == NONE or D(i, j, "eps", y1) != 1 or D(j, i, "eps", y1) != 1:
                    return f"P7 at node {g.label(x)}: statistics at the bottom"
    return None


# -- rank-two component isomorphism ------------------------------------------

@lru_cache(maxsize=None)
def _rank_two_reference(kind: str, a: int, b: int) -> CrystalGraph:
    return highest_weight_crystal(build_root_data(kind), (0, a, b))


def rank_two_failure(g: CrystalGraph, i: int, j: int, a_ij: int) -> str | None:
    if a_ij not in (0, -1):
        return f"Cartan entry {a_ij} is not simply laced"
    kind = "A2" if a_ij == -1 else "A1xA1"
    sub = g.restrict((i, j)).recolor({i: 1, j: 2})
    for comp in g.components((i, j)):
        tops = [x for x in comp if g.e(x, i) == NONE and g.e(x, j) == NONE]
        if len(tops) != 1:
            return f"{len(tops)} highest weight nodes in the {{{i},{j}}}-component of {g.label(comp[0])}"
        top = tops[0]
        wi, wj = g.weights[top][i], g.weights[top][j]
        if wi < 0 or wj < 0:
            return f"highest weight node {g.label(top)} is not dominant for {{{i},{j}}}"
        ref = _rank_two_reference(kind, wi, wj)
        phi = graph_isomorphism_partial(sub, ref, top, ref.hw_nodes()[0], (1, 2))
        if phi is None or len(phi) != len(comp) or len(comp) != len(ref):
            return f"{{{i},{j}}}-component of {g.label(top)} is not B({wi},{wj}) of type {kind}"
    return None


def check_regular(g: CrystalGraph, pairs: Iterable[tuple[int, int]] | None = None,
                  method: str = "both") -> VerificationReport:
    """Regularity on every pair of colors (default: all pairs present in g)."""
    rd = g.rd.affine() if 0 in g.colors else g.rd
    if pairs is None:
        pairs = list(combinations(g.colors, 2))
    rep = VerificationReport(f"regularity of {g!r}")
    for i, j in pairs:
        a = rd.cartan[i][j]
        local = stembridge_failure(g, i, j, a) if method in ("both", "local") else None
        iso = rank_two_failure(g, i, j, a) if method in ("both", "components") else None
        if method == "both" and (local is None) != (iso is None):
            rep.add(f"pair {i},{j}: methods agree", False,
                    f"local axioms: {local or 'pass'}; components: {iso or 'pass'}")
            continue
        rep.add(f"pair {i},{j}", local is None and iso is None, local or iso or "")
    return rep


# -- promotion checks ---------------------------------------------------------

def check_order(p: PromotionMap | Sequence[int], n: int) -> bool:
    mapping = p.mapping if isinstance(p, PromotionMap) else list(p)
    ident = list(range(len(mapping)))
    cur = ident
    for m in range(1, n + 1):
        cur = [mapping[x] for x in cur]
        if cur == ident:
            return m == n
    return False


def check_statistics_distinguish(g: CrystalGraph, K: Iterable[int], stats: Sequence[tuple[str, int]],
                                 nodes: Iterable[int] | None = None) -> VerificationReport:
    """Are the K-highest weight nodes told apart by the chosen statistics?

    ``stats`` entries are ("wt" | "eps" | "phi", color).
    """
    K = tuple(K)
    cand = g.hw_nodes(K) if nodes is None else list(nodes)
    rep = VerificationReport(f"statistics {list(stats)} on {len(cand)} nodes")
    seen: dict[tuple, int] = {}
    for n in cand:
        key = tuple(g.weights[n][c] if s == "wt" else (g.eps(c)[n] if s == "eps" else g.phi(c)[n])
                    for s, c in stats)
        if key in seen:
            rep.add("distinct statistics", False,
                    f"{g.label(seen[key])} and {g.label(n)} share {key}")
            return rep
        seen[key] = n
    rep.add("distinct statistics", True)
    return rep


# -- oriented matroid circuits ------------------------------------------------

STATISTICS_MATRIX = (
    (-1, -1, -1, 0, -1, 0, 0, 0, 0, 0, 1),
    (0, 1, 0, 0, 1, -1, 0, 0, 0, 1, 0),
    (0, 0, 1, -1, 1, 0, 0, 0, 1, 0, 0),
    (1, 0, 1, 0, 0, 2, 0, 1, 0, 0, 0),
    (1, 1, 0, 2, 0, 0, 1, 0, 0, 0, 0),
)

NULLSPACE_ROWS = (
    (1, 0, 0, 0, 0, 0, -1, -1, 0, 0, 1),
    (0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 1),
    (0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 1),
    (0, 0, 0, 1, 0, 0, -2, 0, 1, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 0, -1, -1, 1),
    (0, 0, 0, 0, 0, 1, 0, -2, 0, 1, 0),
)


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by cofactor expansion along the first row."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for c in range(n):
        if m[0][c]:
            minor = [row[:c] + row[c + 1:] for row in m[1:]]
            total += (-1) ** c * m[0][c] * det(minor)
    return total


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def circuit_vectors(A: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """C(i_1..i_{r+1}) for every increasing column tuple, with determinant values kept."""
    rows = len(A)
    cols = len(A[0])
    out = []
    for idx in combinations(range(cols), rows + 1):
        v = [0] * cols
        for pos, m in enumerate(idx):
            rest = [c for c in idx if c != m]
            d = det([[A[r][c] for c in rest] for r in range(rows)])
            v[m] = d * (-1) ** pos  # (-1)^{j(m)+1} with 1-based j(m)
        if any(v):
            out.append(tuple(v))
    return out


@dataclass
class CircuitSet:
    unsigned: list[tuple[int, ...]]   # canonical: first nonzero entry positive
    signed_count: int
    primitive: dict[tuple[int, ...], tuple[int, ...]]  # sign vector -> primitive kernel vector


def matroid_circuits(A: Sequence[Sequence[int]] = STATISTICS_MATRIX) -> CircuitSet:
    rows = len(A)
    if any(len(r) != len(A[0]) for r in A):
        raise ValueError("ragged matrix")
    if rows + 1 > len(A[0]):
        return CircuitSet([], 0, {})
    prim: dict[tuple[int, ...], tuple[int, ...]] = {}
    for v in circuit_vectors(A):
        s = tuple(_sgn(x) for x in v)
        first = next(x for x in s if x)
        g = 0
        for x in v:
            g = gcd(g, x)
        p = tuple(x // g * first for x in v)
        canon = tuple(x * first for x in s)
        prim.setdefault(canon, p)
    unsigned = sorted(prim)
    signed = set(unsigned) | {tuple(-x for x in s) for s in unsigned}
    return CircuitSet(unsigned, len(signed), prim)


def rational_nullspace(A: Sequence[Sequence[int]]) -> list[tuple[Fraction, ...]]:
    rows = [[Fraction(x) for x in r] for r in A]
    n = len(rows[0])
    pivots = []
    r = 0
    for c in range(n):
        p = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                fac = rows[k][c]
                rows[k] = [a - fac * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for row, c in zip(rows, pivots):
            v[c] = -row[free]
        basis.append(tuple(v))
    return basis


def _row_rank(vectors) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    for c in range(len(rows[0])):
        p = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                fac = rows[k][c] / rows[r][c]
                rows[k] = [a - fac * b for a, b in zip(rows[k], rows[r])]
        r += 1
    return r


def nullspace_report(A=STATISTICS_MATRIX, listed=NULLSPACE_ROWS) -> VerificationReport:
    rep = VerificationReport("nullspace")
    basis = rational_nullspace(A)
    rep.add("nullity 6", len(basis) == 6, f"nullity {len(basis)}")
    in_kernel = all(all(sum(a * x for a, x in zip(row, v)) == 0 for row in A) for v in listed)
    rep.add("listed rows lie in the kernel", in_kernel)
    rep.add("listed rows are independent", _row_rank(listed) == len(listed) == len(basis),
            f"rank {_row_rank(listed)}")
    return rep


def chain_violation(vector: Sequence[int], chains: Sequence[set[str]], loopless: Iterable[str],
                    order: Sequence[str] = VERTEX_ORDER) -> bool:
    """True when ``vector`` cannot be a difference of two chain solutions."""
    pos = {order[k] for k, x in enumerate(vector) if x > 0}
    neg = {order[k] for k, x in enumerate(vector) if x < 0}
    if any(abs(vector[order.index(v)]) > 1 for v in loopless):
        return True
    on_chain = lambda s: any(s <= c for c in chains)
    return not (on_chain(pos) and on_chain(neg))


def _chain_data(G: CompositionGraph):
    names = set(G.names.values())
    if names != set(VERTEX_ORDER):
        raise ValueError("composition graph vertices do not match the circuit coordinates")
    chains = [set(c) for c in G.chain_names()]
    loopless = [G.name(v) for v in G.vertices if not G.loops[v]]
    return chains, loopless


def violations(vectors: CircuitSet | Sequence[Sequence[int]], G: CompositionGraph) -> list[bool]:
    chains, loopless = _chain_data(G)
    vecs = list(vectors.primitive.values()) if isinstance(vectors, CircuitSet) else list(vectors)
    return [chain_violation(v, chains, loopless) for v in vecs]


def check_circuits_violate_chains(circuits: CircuitSet | Sequence[Sequence[int]],
                                  G: CompositionGraph) -> VerificationReport:
    vectors = list(circuits.primitive.values()) if isinstance(circuits, CircuitSet) else list(circuits)
    flags = violations(vectors, G)
    rep = VerificationReport(f"{len(vectors)} vectors against {len(G.maximal_chains)} maximal chains")
    fits = [v for v, bad in zip(vectors, flags) if not bad]
    rep.add("every vector violates the chain constraints", not fits,
            f"{len(fits)} vectors fit on chains, e.g. {fits[0] if fits else ''}")
    return rep

"""Composition graphs and the chain solvers built on them.

A composition graph has as vertices certain nodes of a fundamental crystal
B(Lambda) and an edge v -> w whenever v (x) w is pairwise weakly increasing.
Restricted highest weight nodes of B(k Lambda) are weakly increasing chains of
length k in the graph, so they can be written as multiplicity vectors supported
on a maximal chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .genhw import get_alphabet, highest_weight_crystal, pair_members
from .graph import CrystalGraph
from .rootdata import build_root_data
from .tensor import Element, element_label, signature, tensor_weight


class CompositionGraphError(ValueError):
    pass


class InfeasibleError(CompositionGraphError):
    pass


# known vertex names, as "letter|letter" signed labels; used to name vertices and
# to assert that the fixed point produced exactly these vertices
VERTEX_NAMES = {
    ("E6", 1, (1,), False): {"x1": "-0,1", "x2": "-0,-1,3", "x3": "-1,6"},
    ("E6", 1, (6,), False): {"y1": "-0,1", "y2": "-0,-6,2", "y3": "-6,0"},
    ("E6", 2, (6,), False): {
        "u": "2,-1,-0|-0,1", "a": "3,6,-1,-5|-0,1", "b": "3,-1,-6|-0,1",
        "c": "0,6,-2|-0,-5,2,6", "d": "0,6,-2|-0,-6,2", "e": "0,5,-2,-6|-0,-6,2",
    },
    ("E6", 2, (1,), False): {
        "u": "2,-1,-0|-0,1", "a'": "5,-3|-0,1", "b'": "5,-3|-0,-1,3",
        "c'": "0,1,-3|-0,1", "d'": "0,1,-3|-0,-1,3", "e'": "0,-1|-0,-1,3",
    },
    ("E6", 2, (1, 6), True): {
        "a": "0,6,-2|-0,1", "b": "0,6,-2|-0,-1,3", "b'": "0,5,-2,-6|-0,1",
        "c": "0,6,-2|-0,-5,2,6", "c'": "0,5,-2,-6|-0,-1,3", "c''": "0,1,-3|-0,1",
        "d": "0,6,-2|-0,-6,2", "d'": "0,1,-3|-0,-1,3", "e": "0,5,-2,-6|-0,-6,2",
        "e'": "0,-1|-0,-1,3", "f": "0,-1|-0,-6,2",
    },
    ("E7", 1, (7,), False): {
        "u": "-0,-7,1|-0,7", "a": "-6,2|-0,7", "b": "-6,2|-0,-7,6",
        "c": "-6,7,0|-0,7", "d": "-6,7,0|-0,-7,6", "e": "-7,0|-0,-7,6",
    },
}

SUPPORTED = {("E6", 1), ("E6", 6), ("E6", 2), ("E7", 1)}


@dataclass
class ChainSolution:
    multiplicities: dict[str, int]
    chain: tuple[str, ...]
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def length(self) -> int:
        return sum(self.multiplicities.values())

    def support(self) -> tuple[str, ...]:
        return tuple(v for v in self.chain if self.multiplicities.get(v, 0))


@dataclass
class CompositionGraph:
    family: str
    kind: int
    J: tuple[int, ...]
    level0: bool
    crystal: CrystalGraph
    vertices: list[int]
    edges: set[tuple[int, int]]
    loops: dict[int, bool]
    names: dict[int, str] = field(default_factory=dict)
    reduced: set[tuple[int, int]] = field(default_factory=set)
    maximal_chains: list[tuple[int, ...]] = field(default_factory=list)

    def key(self, v: int) -> Element:
        return self.crystal.keys[v]

    def name(self, v: int) -> str:
        return self.names.get(v, self.label(v))

    def label(self, v: int) -> str:
        return element_label(get_alphabet(self.family), self.key(v))

    def vertex(self, name: str) -> int:
        for v, n in self.names.items():
            if n == name:
                return v
        raise CompositionGraphError(f"no vertex named {name!r}")

    def related(self, x: int, y: int) -> bool:
        return (x, y) in self.edges or (x == y and self.loops.get(x, False))

    def chain_names(self) -> list[tuple[str, ...]]:
        return [tuple(self.name(v) for v in c) for c in self.maximal_chains]

    def element(self, sol: ChainSolution) -> Element:
        """The tensor product encoded by a chain solution (vertices in chain order)."""
        out: list[int] = []
        for name in sol.chain:
            m = sol.multiplicities.get(name, 0)
            if m > 1 and not self.loops[self.vertex(name)]:
                raise CompositionGraphError(f"vertex {name} has no loop but multiplicity {m}")
            out.extend(self.key(self.vertex(name)) * m)
        return tuple(out)


def _restricted_hw(g: CrystalGraph, J: Iterable[int]) -> set[int]:
    J = set(J)
    return set(g.hw_nodes([i for i in g.colors if i not in J]))


def build_composition_graph(family: str, kind: int, J: Iterable[int], level0: bool = False,
                            names: bool = True) -> CompositionGraph:
    """Least fixed point of the vertex-adding rule, then the pairwise edges.

    A node b joins G_J once every color i with eps_i(b) > 0 lies in J or is
    supplied by some current vertex b' with b (x) b' weakly increasing and
    phi_i(b') > 0.  For the level-0 graph a member of G_J joins when
    wt_0(b) >= 0 or some current level-0 vertex b' with b (x) b' weakly
    increasing has wt_0(b') > 0; this graph is grown from the empty set.
    """
    if (family, kind) not in SUPPORTED:
        raise CompositionGraphError(f"no composition graph for Lambda_{kind} of {family}")
    J = tuple(sorted(set(J)))
    rd = build_root_data(family)
    w = [0] * rd.size
    w[kind] = 1
    g = highest_weight_crystal(rd, w)
    members = pair_members(family, kind, kind)
    N = len(g)
    keys = g.keys
    pw = [[keys[x] + keys[y] in members for y in range(N)] for x in range(N)]
    eps = {i: g.eps(i) for i in g.colors}
    phi = {i: g.phi(i) for i in g.colors}

    S = _restricted_hw(g, J)
    changed = True
    while changed:
        changed = False
        for b in range(N):
            if b in S:
                continue
            need = [i for i in g.colors if eps[i][b] > 0 and i not in J]
            if all(any(pw[b][c] and phi[i][c] > 0 for c in S) for i in need):
                S.add(b)
                changed = True
    if level0:
        base, S = S, set()
        changed = True
        while changed:
            changed = False
            for b in sorted(base - S):
                if g.weights[b][0] >= 0 or any(pw[b][c] and g.weights[c][0] > 0 for c in S):
                    S.add(b)
                    changed = True

    verts = sorted(S)
    edges = {(x, y) for x in verts for y in verts if x != y and pw[x][y]}
    loops = {v: pw[v][v] for v in verts}
    G = CompositionGraph(family, kind, J, level0, g, verts, edges, loops)
    if names:
        table = VERTEX_NAMES.get((family, kind, J, level0))
        if table is not None:
            A = get_alphabet(family)
            by_key = {tuple(A.letter(x) for x in lab.split("|")): nm for nm, lab in table.items()}
            found = {keys[v]: v for v in verts}
            if set(by_key) != set(found):
                raise CompositionGraphError("vertex set differs from the expected named vertices")
            G.names = {found[k]: nm for k, nm in by_key.items()}
    finish(G)
    return G


def finish(G: CompositionGraph) -> None:
    """Compute reduced edges and maximal chains; requires an acyclic edge relation."""
    succ = {v: {w for (x, w) in G.edges if x == v} for v in G.vertices}
    order = _topological(G.vertices, succ)
    G.reduced = {(x, y) for (x, y) in G.edges
                 if not any(y in succ[z] for z in succ[x] if z != y)}
    rsucc = {v: sorted(w for (x, w) in G.reduced if x == v) for v in G.vertices}
    has_pred = {y for (_, y) in G.reduced}
    chains: list[tuple[int, ...]] = []

    def walk(path):
        nxt = rsucc[path[-1]]
        if not nxt:
            chains.append(tuple(path))
        for w in nxt:
            walk(path + [w])

    for v in order:
        if v not in has_pred:
            walk([v])
    G.maximal_chains = chains


def _topological(verts, succ):
    indeg = {v: 0 for v in verts}
    for v in verts:
        for w in succ[v]:
            indeg[w] += 1
    ready = sorted(v for v in verts if indeg[v] == 0)
    out = []
    while ready:
        v = ready.pop(0)
        out.append(v)
        for w in sorted(succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    if len(out) != len(verts):
        raise CompositionGraphError("the weakly increasing relation has a cycle")
    return out


def is_transitively_closed(G: CompositionGraph) -> bool:
    for (x, y) in G.edges:
        for (y2, z) in G.edges:
            if y2 == y and z != x and (x, z) not in G.edges:
                return False
    return True


def _passes(G: CompositionGraph, b: Element) -> bool:
    A = get_alphabet(G.family)
    if any(signature(A, b, i).plus_count for i in A.rd.index_set if i not in G.J):
        return False
    return not G.level0 or tensor_weight(A, b)[0] >= 0


def enumerate_hw_chains(G: CompositionGraph, k: int, hw_filter: bool = True) -> list[ChainSolution]:
    """Weakly increasing vertex sequences of length k, optionally filtered by the hw test."""
    if k < 0:
        raise CompositionGraphError("k must be nonnegative")
    out = []

    def extend(seq):
        if len(seq) == k:
            yield list(seq)
            return
        cands = G.vertices if not seq else [w for w in G.vertices if G.related(seq[-1], w)]
        for w in cands:
            seq.append(w)
            yield from extend(seq)
            seq.pop()

    for seq in extend([]):
        b = tuple(a for v in seq for a in G.key(v))
        if hw_filter and not _passes(G, b):
            continue
        mult: dict[str, int] = {}
        for v in seq:
            mult[G.name(v)] = mult.get(G.name(v), 0) + 1
        chain = next((c for c in G.maximal_chains if set(seq) <= set(c)), None)
        if chain is None:
            raise CompositionGraphError("a weakly increasing sequence lies on no maximal chain")
        out.append(ChainSolution(mult, tuple(G.name(v) for v in chain)))
    return out


# -- weak compositions --------------------------------------------------------

_G6_UPPER = ("u", "a", "b", "e")
_G6_LOWER = ("u", "a", "c", "d", "e")


def _weak_comp_systems(k, L2, L3, L5):
    """Both chain systems; each entry is (chain, multiplicities) or None if infeasible."""
    upper = {"u": L2, "a": k - (L2 + L3 + L5), "b": 2 * L3 + L5 + L2 - k, "e": k - (L2 + L3)}
    up = (_G6_UPPER, upper) if min(upper.values()) >= 0 else None
    r = k + L5 - L2
    d, e = r % 2, r // 2
    lower = {"u": L2, "a": L3, "c": e - (L5 + L3), "d": d, "e": e}
    low = (_G6_LOWER, lower) if r >= 0 and min(lower.values()) >= 0 else None
    return up, low


def weak_comp_solve(k: int, L2: int, L3: int, L5: int, graph: str = "G6") -> ChainSolution:
    """The restricted hw node of B(k Lambda_2) with {2,3,5}-weight (L2, L3, L5) as a chain.

    ``graph="G6"`` handles (I minus {6})-highest weight nodes; ``"G1"`` is the
    mirror image for (I minus {1}) where the roles of 3 and 5 swap.
    """
    if min(k, L2, L3, L5) < 0:
        raise InfeasibleError("parameters must be nonnegative")
    if L2 + L3 + L5 > k:
        raise InfeasibleError(f"no node with weight ({L2},{L3},{L5}) in component {k}")
    if graph == "G1":
        L3, L5 = L5, L3
    elif graph != "G6":
        raise CompositionGraphError(f"unknown graph {graph!r}")
    up, low = _weak_comp_systems(k, L2, L3, L5)
    b = 2 * L3 + L5 + L2 - k
    chosen = up if b >= 0 else low
    if chosen is None:
        raise InfeasibleError(f"no solution for k={k}, L=({L2},{L3},{L5})")
    if up is not None and low is not None:
        # both systems feasible only at b = 0, where they must describe the same node
        if _normalize(up[1]) != _normalize(low[1]):
            raise CompositionGraphError("the two chain systems disagree")
    chain, mult = chosen
    phi, eps = k - L2 - L3 - L5, k - L2 + L5
    if graph == "G1":
        rename = {"u": "u", "a": "a'", "b": "b'", "c": "c'", "d": "d'", "e": "e'"}
        chain = tuple(rename[v] for v in chain)
        mult = {rename[v]: m for v, m in mult.items()}
        stats = {"phi1": phi, "eps1": eps}
    else:
        stats = {"phi6": phi, "eps6": eps}
    return ChainSolution(dict(mult), chain, stats)


def _normalize(m: dict[str, int]) -> dict[str, int]:
    return {v: x for v, x in m.items() if x}


def weak_compositions(m: int) -> list[tuple[int, int, int]]:
    return [(a, b, m - a - b) for a in range(m + 1) for b in range(m + 1 - a)]


# -- the six cases over G_{6,1;0} --------------------------------------------

VERTEX_ORDER = ("a", "b", "b'", "c", "c'", "c''", "d", "d'", "e", "e'", "f")

CASE_CHAINS = {
    1: ("a", "b", "c", "d", "e", "f"),
    2: ("a", "b", "c'", "e", "f"),
    3: ("a", "b'", "c'", "e", "f"),
    4: ("a", "b'", "c'", "e'", "f"),
    5: ("a", "b", "c'", "e'", "f"),
    6: ("a", "b'", "c''", "d'", "e'", "f"),
}

# each case system: (coefficients, right-hand side name), where the right-hand
# sides are k, phi6 = j - L2 - L3 - L5, L2, L3, L5
CASE_SYSTEMS = {
    1: [({"a": 1, "b": 1, "c": 1, "d": 1, "e": 1, "f": 1}, "k"),
        ({"a": 1, "b": 1, "c": 2, "d": 1}, "phi6"),
        ({"a": -1, "b": -1, "f": 1}, "L2"),
        ({"b": 1}, "L3"),
        ({"c": -1, "e": 1}, "L5")],
    2: [({"a": 1, "b": 1, "c'": 1, "e": 1, "f": 1}, "k"),
        ({"a": 1, "b": 1}, "phi6"),
        ({"a": -1, "b": -1, "c'": -1, "f": 1}, "L2"),
        ({"b": 1, "c'": 1}, "L3"),
        ({"c'": 1, "e": 1}, "L5")],
    3: [({"a": 1, "b'": 1, "c'": 1, "e": 1, "f": 1}, "k"),
        ({"a": 1}, "phi6"),
        ({"a": -1, "b'": -1, "c'": -1, "f": 1}, "L2"),
        ({"c'": 1}, "L3"),
        ({"b'": 1, "c'": 1, "e": 1}, "L5")],
    4: [({"a": 1, "b'": 1, "c'": 1, "e'": 1, "f": 1}, "k"),
        ({"a": 1}, "phi6"),
        ({"a": -1, "b'": -1, "c'": -1, "f": 1}, "L2"),
        ({"c'": 1, "e'": 1}, "L3"),
        ({"b'": 1, "c'": 1}, "L5")],
    5: [({"a": 1, "b": 1, "c'": 1, "e'": 1, "f": 1}, "k"),
        ({"a": 1, "b": 1}, "phi6"),
        ({"a": -1, "b": -1, "c'": -1, "f": 1}, "L2"),
        ({"b": 1, "c'": 1, "e'": 1}, "L3"),
        ({"c'": 1}, "L5")],
    6: [({"a": 1, "b'": 1, "c''": 1, "d'": 1, "e'": 1, "f": 1}, "k"),
        ({"a": 1}, "phi6"),
        ({"a": -1, "b'": -1, "f": 1}, "L2"),
        ({"c''": -1, "e'": 1}, "L3"),
        ({"b'": 1}, "L5")],
}


def _split_parity(total: int, what: str) -> tuple[int, int]:
    """(x, y) with 2x + y = total and y in {0, 1}."""
    if total < 0:
        raise InfeasibleError(f"{what} = {total} is negative")
    return total // 2, total % 2


def case_valid(case: int, L2: int, L3: int, L5: int, j: int, k: int) -> bool:
    phi6, D = j - L2 - L3 - L5, k - j
    return {
        1: D + L3 <= phi6,
        2: D <= phi6 <= D + L3 <= phi6 + L5,
        3: phi6 <= D <= D + L3 <= phi6 + L5,
        4: phi6 <= D <= phi6 + L5 <= D + L3,
        5: 0 <= D <= phi6 <= phi6 + L5 <= D + L3,
        6: phi6 + L5 < D,
    }[case]


def case_solution(case: int, L2: int, L3: int, L5: int, j: int, k: int) -> dict[str, int]:
    """Closed-form solution of one case system (not yet checked)."""
    phi6, D = j - L2 - L3 - L5, k - j
    x = {v: 0 for v in VERTEX_ORDER}
    if case == 1:
        x["f"], x["a"], x["b"] = D + L2 + L3, D, L3
        x["c"], x["d"] = _split_parity(phi6 - D - L3, "2c+d")
        x["e"] = x["c"] + L5
    elif case == 2:
        x["f"], x["a"], x["b"] = D + L2 + L3, D, phi6 - D
        x["c'"], x["e"] = L3 + D - phi6, L5 - L3 + phi6 - D
    elif case == 3:
        x["f"], x["a"], x["b'"] = D + L2 + L3, phi6, D - phi6
        x["c'"], x["e"] = L3, phi6 - D - L3 + L5
    elif case == 4:
        x["f"], x["a"], x["b'"] = j - L3, phi6, D - phi6
        x["e'"], x["c'"] = D - phi6 + L3 - L5, phi6 - D + L5
    elif case == 5:
        x["f"], x["a"], x["b"] = j - L3, D, phi6 - D
        x["e'"], x["c'"] = D - phi6 - L5 + L3, L5
    elif case == 6:
        x["f"], x["a"], x["b'"] = j - L3, phi6, L5
        x["e'"], x["d'"] = _split_parity(D - phi6 + 2 * L3 - L5, "d'+2e'")
        x["c''"] = x["e'"] - L3
    else:
        raise CompositionGraphError(f"no case {case}")
    return x


def check_case_system(case: int, x: dict[str, int], L2, L3, L5, j, k) -> bool:
    rhs = {"k": k, "phi6": j - L2 - L3 - L5, "L2": L2, "L3": L3, "L5": L5}
    if any(v < 0 for v in x.values()):
        return False
    if any(x[v] for v in VERTEX_ORDER if v not in CASE_CHAINS[case]):
        return False
    if x["d"] > 1 or x["d'"] > 1:
        return False
    return all(sum(c * x[v] for v, c in row.items()) == rhs[name]
               for row, name in CASE_SYSTEMS[case])


def appendix_a_solve(L2: int, L3: int, L5: int, j: int, k: int) -> ChainSolution:
    """Chain over the level-0 graph for the (6,1)-restricted node with the given data.

    Every case whose range holds is solved and checked against its linear
    system; all of them must return the same multiplicities.
    """
    if k < j:
        raise CompositionGraphError("k must be at least j")
    if min(L2, L3, L5, j) < 0 or L2 + L3 + L5 > j:
        raise CompositionGraphError("need nonnegative L's with L2 + L3 + L5 <= j")
    valid = [c for c in CASE_CHAINS if case_valid(c, L2, L3, L5, j, k)]
    if not valid:
        raise CompositionGraphError(f"no case covers {(L2, L3, L5, j, k)}")
    sols = {}
    for c in valid:
        x = case_solution(c, L2, L3, L5, j, k)
        if not check_case_system(c, x, L2, L3, L5, j, k):
            raise CompositionGraphError(f"case {c} solution fails its system at {(L2, L3, L5, j, k)}")
        sols[c] = x
    first = sols[valid[0]]
    if any(x != first for x in sols.values()):
        raise CompositionGraphError(f"cases {valid} disagree at {(L2, L3, L5, j, k)}")
    phi6 = j - L2 - L3 - L5
    return ChainSolution(first, CASE_CHAINS[valid[0]],
                         {"phi6": phi6, "phi1": k - j, "cases": len(valid), "case": valid[0]})


def admissible_parameters(kmax: int):
    for k in range(kmax + 1):
        for j in range(k + 1):
            for m in range(j + 1):
                for L2, L3, L5 in weak_compositions(m):
                    yield L2, L3, L5, j, k


def vertex_statistics(G: CompositionGraph, order: Sequence[str] = VERTEX_ORDER) -> list[list[int]]:
    """Rows wt2, wt3, wt5, phi1, phi6 evaluated on single vertices, columns in ``order``."""
    g = G.crystal
    cols = [G.vertex(v) for v in order]
    return [[g.weights[v][2] for v in cols], [g.weights[v][3] for v in cols],
            [g.weights[v][5] for v in cols], [g.phi(1)[v] for v in cols],
            [g.phi(6)[v] for v in cols]]

"""Cartan data for E6, E7 and their untwisted affinizations.

Weights are plain integer tuples indexed by Dynkin label: position ``i`` holds
the coefficient of the fundamental weight Lambda_i.  Position 0 is always
present, and is zero for weights of the classical types.  Node labels follow
Bourbaki; node 2 is the node attached to 0 in E6^(1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import gcd, prod
from typing import Sequence

Weight = tuple[int, ...]

KINDS = ("E6", "E7", "E6affine", "E7affine")

# edges of the affine diagrams; the classical diagram drops node 0
_AFFINE_EDGES = {
    "E6": ((0, 2), (2, 4), (1, 3), (3, 4), (4, 5), (5, 6)),
    "E7": ((0, 1), (1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7)),
}
# rank-two diagrams used as references by the regularity checker
_RANK_TWO_EDGES = {"A2": ((1, 2),), "A1xA1": ()}


class RootDataError(ValueError):
    pass


@dataclass(frozen=True)
class RootData:
    kind: str
    rank: int
    index_set: tuple[int, ...]
    cartan: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...] = ()
    positive_roots: tuple[Weight, ...] = ()
    # positive roots expanded in simple roots, parallel to positive_roots
    root_coordinates: tuple[tuple[int, ...], ...] = field(default=(), repr=False)
    rho: Weight = ()

    @property
    def is_affine(self) -> bool:
        return 0 in self.index_set

    @property
    def classical_index_set(self) -> tuple[int, ...]:
        return tuple(i for i in self.index_set if i != 0)

    @property
    def size(self) -> int:
        """Length of weight tuples (largest label plus one)."""
        return len(self.cartan)

    def classical(self) -> "RootData":
        return build_root_data(self.kind.replace("affine", "")) if self.is_affine else self

    def affine(self) -> "RootData":
        return self if self.is_affine else build_root_data(self.kind + "affine")

    def zero(self) -> Weight:
        return (0,) * self.size

    def fundamental(self, i: int) -> Weight:
        w = [0] * self.size
        w[i] = 1
        return tuple(w)


@dataclass(frozen=True)
class DiagramAut:
    """A permutation of the affine Dynkin labels, stored as ``perm[i]``."""

    perm: tuple[int, ...]
    order: int

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def inverse(self) -> "DiagramAut":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return DiagramAut(tuple(inv), self.order)

    def act(self, w: Weight) -> Weight:
        """Permute weight coordinates: result[perm[i]] = w[i]."""
        out = [0] * len(w)
        for i, c in enumerate(w):
            out[self.perm[i]] = c
        return tuple(out)


def _cartan_from_edges(n: int, labels: Sequence[int], edges) -> tuple[tuple[int, ...], ...]:
    m = [[0] * (n + 1) for _ in range(n + 1)]
    for i in labels:
        m[i][i] = 2
    for i, j in edges:
        if i in labels and j in labels:
            m[i][j] = m[j][i] = -1
    return tuple(tuple(r) for r in m)


def null_vector(cartan: Sequence[Sequence[int]], labels: Sequence[int]) -> tuple[int, ...]:
    """Primitive positive integer null vector of ``cartan`` restricted to ``labels``.

    Exact rational row reduction; raises if the null space is not one dimensional.
    """
    idx = list(labels)
    rows = [[Fraction(cartan[i][j]) for j in idx] for i in idx]
    n = len(idx)
    pivots = []
    r = 0
    for c in range(n):
        p = next((k for k in range(r, n) if rows[k][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for k in range(n):
            if k != r and rows[k][c] != 0:
                fac = rows[k][c]
                rows[k] = [a - fac * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise RootDataError(f"null space has dimension {len(free)}")
    f = free[0]
    vec = [Fraction(0)] * n
    vec[f] = Fraction(1)
    for row, c in zip(rows, pivots):
        vec[c] = -row[f]
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise RootDataError("null vector is not positive")
    out = [0] * len(cartan)
    for i, x in zip(idx, ints):
        out[i] = x
    return tuple(out)


def _positive_roots(cartan, labels):
    """Closure from the simple roots: beta + alpha_j is a root iff <beta, alpha_j^vee> = -1."""
    size = len(cartan)
    simple = {}
    for j in labels:
        c = [0] * size
        c[j] = 1
        simple[j] = tuple(c)

    def to_weight(coords):
        return tuple(sum(cartan[i][j] * coords[j] for j in labels) if i in labels else 0
                     for i in range(size))

    seen = set(simple.values())
    frontier = list(simple.values())
    while frontier:
        nxt = []
        for beta in frontier:
            w = to_weight(beta)
            for j in labels:
                if w[j] == -1:
                    gamma = list(beta)
                    gamma[j] += 1
                    gamma = tuple(gamma)
                    if gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
        frontier = nxt
    coords = sorted(seen, key=lambda c: (sum(c), c))
    return tuple(to_weight(c) for c in coords), tuple(coords)


def _build(kind: str, n: int, labels: tuple[int, ...], edges) -> RootData:
    cartan = _cartan_from_edges(n, labels, edges)
    if 0 in labels:
        return RootData(kind, len(labels) - 1, labels, cartan, marks=null_vector(cartan, labels))
    roots, coords = _positive_roots(cartan, labels)
    total = [sum(r[i] for r in roots) for i in range(n + 1)]
    if any(x % 2 for x in total):
        raise RootDataError("sum of positive roots is not divisible by two")
    rho = tuple(x // 2 for x in total)
    return RootData(kind, len(labels), labels, cartan, positive_roots=roots,
                    root_coordinates=coords, rho=rho)


@lru_cache(maxsize=None)
def build_root_data(kind: str) -> RootData:
    if kind in _RANK_TWO_EDGES:
        return _build(kind, 2, (1, 2), _RANK_TWO_EDGES[kind])
    if kind not in KINDS:
        raise RootDataError(f"unsupported kind {kind!r}")
    base = kind.replace("affine", "")
    n = int(base[1:])
    labels = tuple(range(0 if kind.endswith("affine") else 1, n + 1))
    return _build(kind, n, labels, _AFFINE_EDGES[base])


def simple_root(rd: RootData, i: int) -> Weight:
    """Column ``i`` of the Cartan matrix, i.e. alpha_i in fundamental-weight coordinates."""
    if i not in rd.index_set:
        raise RootDataError(f"unknown index {i} for {rd.kind}")
    return tuple(rd.cartan[j][i] if j in rd.index_set else 0 for j in range(rd.size))


def level(rd: RootData, w: Weight) -> int:
    if not rd.is_affine:
        raise RootDataError("level is defined for affine root data only")
    return sum(rd.marks[i] * w[i] for i in rd.index_set)


def level_zero_completion(rd: RootData, w: Weight) -> Weight:
    """Replace the Lambda_0 coefficient so that the weight has level 0."""
    aff = rd.affine()
    rest = sum(aff.marks[i] * w[i] for i in aff.index_set if i != 0)
    if rest % aff.marks[0]:
        raise RootDataError("weight cannot be completed to level 0")
    return (-rest // aff.marks[0],) + tuple(w[1:])


def weyl_dimension(rd: RootData, w: Weight) -> int:
    if rd.is_affine:
        raise RootDataError("Weyl dimension needs classical root data")
    if any(w[i] < 0 for i in rd.index_set):
        raise RootDataError(f"weight {w} is not dominant")
    labels = rd.index_set
    num = prod(sum(c[j] * (w[j] + 1) for j in labels) for c in rd.root_coordinates)
    den = prod(sum(c[j] for j in labels) for c in rd.root_coordinates)
    q, r = divmod(num, den)
    if r:
        raise RootDataError("Weyl dimension is not an integer")
    return q


def _order(perm: tuple[int, ...]) -> int:
    cur, n = perm, 1
    ident = tuple(range(len(perm)))
    while cur != ident:
        cur = tuple(perm[x] for x in cur)
        n += 1
    return n


def diagram_automorphisms(rd: RootData) -> list[DiagramAut]:
    """All permutations of the labels preserving the Cartan matrix (brute force)."""
    labels = rd.index_set
    out = []
    for img in permutations(labels):
        perm = list(range(rd.size))
        for a, b in zip(labels, img):
            perm[a] = b
        if all(rd.cartan[perm[i]][perm[j]] == rd.cartan[i][j] for i in labels for j in labels):
            out.append(DiagramAut(tuple(perm), _order(tuple(perm))))
    return out


_AUTOMORPHISMS = {
    ("E6affine", "rotation3"): {0: 1, 1: 6, 6: 0, 2: 3, 3: 5, 5: 2, 4: 4},
    ("E7affine", "involution"): {0: 7, 7: 0, 1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4},
}


def automorphism(rd: RootData, name: str) -> DiagramAut:
    if not rd.is_affine:
        raise RootDataError("diagram automorphisms are taken on the affine diagram")
    if name == "identity":
        return DiagramAut(tuple(range(rd.size)), 1)
    table = _AUTOMORPHISMS.get((rd.kind, name))
    if table is None:
        raise RootDataError(f"automorphism {name!r} is not available for {rd.kind}")
    perm = tuple(table[i] for i in range(rd.size))
    if any(rd.cartan[perm[i]][perm[j]] != rd.cartan[i][j] for i in rd.index_set for j in rd.index_set):
        raise RootDataError(f"{name} does not preserve the diagram")
    return DiagramAut(perm, _order(perm))

"""Finite colored directed graphs carrying crystal data.

Nodes are addressed by position (``int``) in the canonical node order; each node
also has a hashable key (a tensor element, or a ``(k, tensor)`` pair for the
tagged summands of a direct sum).  ``-1`` marks an undefined ``f_i``/``e_i``.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .rootdata import RootData, Weight

NONE = -1


class CrystalGraphError(ValueError):
    pass


class CrystalGraph:
    def __init__(
        self,
        rd: RootData,
        keys: Sequence[Hashable],
        weights: Sequence[Weight],
        arrows: Iterable[tuple[int, int, int]],
        colors: Iterable[int],
        *,
        labeler: Callable[[Hashable], str] | None = None,
        meta: dict | None = None,
    ):
        self.rd = rd
        self.keys = list(keys)
        self.weights = [tuple(w) for w in weights]
        if len(self.keys) != len(self.weights):
            raise CrystalGraphError("keys and weights differ in length")
        self.index = {k: n for n, k in enumerate(self.keys)}
        if len(self.index) != len(self.keys):
            raise CrystalGraphError("duplicate node keys")
        self.colors = tuple(sorted(set(colors)))
        self._f = {i: [NONE] * len(self.keys) for i in self.colors}
        self._e = {i: [NONE] * len(self.keys) for i in self.colors}
        for src, dst, i in arrows:
            if i not in self._f:
                raise CrystalGraphError(f"arrow color {i} not among {self.colors}")
            if self._f[i][src] not in (NONE, dst) or self._e[i][dst] not in (NONE, src):
                raise CrystalGraphError(f"two {i}-arrows at one node ({src} -> {dst})")
            self._f[i][src] = dst
            self._e[i][dst] = src
        self.labeler = labeler
        self.meta = dict(meta or {})
        self._eps: dict[int, list[int]] = {}
        self._phi: dict[int, list[int]] = {}

    # -- basic access -------------------------------------------------------
    def __len__(self) -> int:
        return len(self.keys)

    def __repr__(self) -> str:
        return f"<CrystalGraph {self.rd.kind} nodes={len(self)} colors={self.colors}>"

    def index_of(self, key: Hashable) -> int:
        try:
            return self.index[key]
        except KeyError:
            raise CrystalGraphError(f"unknown node {key!r}") from None

    def label(self, n: int) -> str:
        return self.labeler(self.keys[n]) if self.labeler else repr(self.keys[n])

    def f(self, n: int, i: int) -> int:
        return self._f[i][n]

    def e(self, n: int, i: int) -> int:
        return self._e[i][n]

    def f_table(self, i: int) -> list[int]:
        return self._f[i]

    def e_table(self, i: int) -> list[int]:
        return self._e[i]

    def arrows(self, colors: Iterable[int] | None = None) -> Iterator[tuple[int, int, int]]:
        for i in self.colors if colors is None else sorted(colors):
            for src, dst in enumerate(self._f[i]):
                if dst != NONE:
                    yield src, dst, i

    def arrow_set(self, colors: Iterable[int] | None = None) -> set[tuple[Hashable, Hashable, int]]:
        return {(self.keys[s], self.keys[d], i) for s, d, i in self.arrows(colors)}

    def num_arrows(self) -> int:
        return sum(1 for _ in self.arrows())

    # -- string statistics --------------------------------------------------
    def _strings(self, i: int) -> None:
        f, e = self._f[i], self._e[i]
        eps = [0] * len(self)
        phi = [0] * len(self)
        for top in range(len(self)):
            if e[top] != NONE:
                continue
            chain = [top]
            while f[chain[-1]] != NONE:
                chain.append(f[chain[-1]])
                if len(chain) > len(self):
                    raise CrystalGraphError(f"{i}-string through node {top} is not finite")
            last = len(chain) - 1
            for pos, n in enumerate(chain):
                eps[n] = pos
                phi[n] = last - pos
        self._eps[i], self._phi[i] = eps, phi

    def eps(self, i: int) -> list[int]:
        if i not in self._eps:
            self._strings(i)
        return self._eps[i]

    def phi(self, i: int) -> list[int]:
        if i not in self._phi:
            self._strings(i)
        return self._phi[i]

    def epsilon(self, n: int, i: int) -> int:
        return self.eps(i)[n]

    def varphi(self, n: int, i: int) -> int:
        return self.phi(i)[n]

    def stats(self, n: int) -> tuple[Weight, dict[int, int], dict[int, int]]:
        return (self.weights[n], {i: self.eps(i)[n] for i in self.colors},
                {i: self.phi(i)[n] for i in self.colors})

    def hw_nodes(self, colors: Iterable[int] | None = None) -> list[int]:
        """Nodes killed by every ``e_i`` with ``i`` in ``colors`` (default: all)."""
        cs = self.colors if colors is None else tuple(colors)
        tables = [self._e[i] for i in cs]
        return [n for n in range(len(self)) if all(t[n] == NONE for t in tables)]

    # -- derived graphs -----------------------------------------------------
    def restrict(self, colors: Iterable[int]) -> "CrystalGraph":
        cs = tuple(colors)
        return CrystalGraph(self.rd, self.keys, self.weights, self.arrows(cs), cs,
                            labeler=self.labeler, meta=self.meta)

    def recolor(self, mapping: dict[int, int], rd: RootData | None = None) -> "CrystalGraph":
        arrows = [(s, d, mapping[i]) for s, d, i in self.arrows()]
        return CrystalGraph(rd or self.rd, self.keys, self.weights, arrows,
                            [mapping[i] for i in self.colors], labeler=self.labeler, meta=self.meta)

    def with_arrows(self, color: int, pairs: Iterable[tuple[int, int]],
                    rd: RootData | None = None) -> "CrystalGraph":
        arrows = list(self.arrows()) + [(s, d, color) for s, d in pairs]
        return CrystalGraph(rd or self.rd, self.keys, self.weights, arrows,
                            self.colors + (color,), labeler=self.labeler, meta=self.meta)

    def components(self, colors: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components under the given colors, each in increasing node order."""
        cs = self.colors if colors is None else tuple(colors)
        parent = list(range(len(self)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in cs:
            for s, d in enumerate(self._f[i]):
                if d != NONE:
                    a, b = find(s), find(d)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for n in range(len(self)):
            groups.setdefault(find(n), []).append(n)
        return list(groups.values())

    def reachable(self, start: int, colors: Iterable[int] | None = None,
                  directions: str = "fe") -> list[int]:
        cs = self.colors if colors is None else tuple(colors)
        seen = {start}
        order = [start]
        queue = deque([start])
        while queue:
            n = queue.popleft()
            for i in cs:
                for d in directions:
                    m = (self._f if d == "f" else self._e)[i][n]
                    if m != NONE and m not in seen:
                        seen.add(m)
                        order.append(m)
                        queue.append(m)
        return order


def direct_sum(graphs: Sequence[CrystalGraph], tags: Sequence[Hashable]) -> CrystalGraph:
    """Disjoint union; node keys become ``(tag, key)`` and nodes are kept in summand order."""
    if not graphs:
        raise CrystalGraphError("empty direct sum")
    keys, weights, arrows = [], [], []
    colors = set()
    for g, t in zip(graphs, tags):
        off = len(keys)
        keys.extend((t, k) for k in g.keys)
        weights.extend(g.weights)
        arrows.extend((s + off, d + off, i) for s, d, i in g.arrows())
        colors.update(g.colors)
    inner = graphs[0].labeler
    labeler = (lambda key: f"{key[0]}:{inner(key[1])}") if inner else None
    return CrystalGraph(graphs[0].rd, keys, weights, arrows, colors, labeler=labeler)

"""Highest weight crystals inside tensor powers of letters.

Each fundamental weight has a fixed realization: a short tensor of letters that
is classically highest weight with the right weight.  B(lambda) for a dominant
lambda is the component generated by the concatenation of these seeds, one
block per fundamental weight counted with multiplicity, blocks in increasing
label order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import CrystalGraph
from .letters import Alphabet, get_alphabet
from .rootdata import RootData, Weight, build_root_data, level_zero_completion, weyl_dimension
from .tensor import Element, element_label, signature, tensor_e, tensor_f, tensor_weight

DEFAULT_CAP = 10**6


class GenerationError(RuntimeError):
    pass


# seed of B(Lambda_i), as signed label lists of letters, leftmost first
_SEEDS = {
    "E6": {
        1: ("-0,1",),
        2: ("2,-1,-0", "-0,1"),
        3: ("-0,-1,3", "-0,1"),
        4: ("-0,-3,4", "-0,-1,3", "-0,1"),
        5: ("5,-6,-0", "6,-0"),
        6: ("-0,6",),
    },
    "E7": {
        1: ("-0,-7,1", "-0,7"),
        2: ("-1,2", "-0,-7,1", "-0,7"),
        3: ("-0,-2,3", "-1,2", "-0,-7,1", "-0,7"),
        4: ("-0,-5,4", "-0,-6,5", "-0,-7,6", "-0,7"),
        5: ("-0,-6,5", "-0,-7,6", "-0,7"),
        6: ("-0,-7,6", "-0,7"),
        7: ("-0,7",),
    },
    "A2": {1: ("1",), 2: ("2",)},
    "A1xA1": {1: ("1",), 2: ("2",)},
}


def family_of(rd: RootData) -> str:
    return rd.kind.replace("affine", "")


def fundamental_seed(family: str, i: int) -> Element:
    A = get_alphabet(family)
    try:
        labels = _SEEDS[family][i]
    except KeyError:
        raise GenerationError(f"no realization of Lambda_{i} for {family}") from None
    return tuple(A.letter(x) for x in labels)


@dataclass(frozen=True)
class Realization:
    """A dominant weight with the block structure of its seed.

    ``blocks`` lists the fundamental index of each block, leftmost first.
    """

    family: str
    weight: Weight
    blocks: tuple[int, ...]
    generator: Element

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(_SEEDS[self.family][i]) for i in self.blocks)

    def split(self, b: Sequence[int]) -> list[Element]:
        return split_blocks(b, self.block_sizes)


def realization(rd: RootData, weight: Weight | Sequence[int]) -> Realization:
    """Seed for B(weight); ``weight`` lists classical coefficients by label (index 0 ignored)."""
    rd = rd.classical()
    fam = family_of(rd)
    w = tuple(weight)
    if len(w) == rd.size - 1:
        w = (0,) + w
    if len(w) != rd.size:
        raise GenerationError(f"weight {weight} has the wrong length for {rd.kind}")
    if any(w[i] < 0 for i in rd.index_set):
        raise GenerationError(f"weight {weight} is not dominant")
    blocks = tuple(i for i in rd.index_set for _ in range(w[i]))
    gen = tuple(a for i in blocks for a in fundamental_seed(fam, i))
    w = tuple(0 if k == 0 else c for k, c in enumerate(w))
    return Realization(fam, w, blocks, gen)


def split_blocks(b: Sequence[int], sizes: Sequence[int]) -> list[Element]:
    out, pos = [], 0
    for n in sizes:
        out.append(tuple(b[pos:pos + n]))
        pos += n
    if pos != len(b):
        raise GenerationError("block sizes do not match the element length")
    return out


def console_form(A: Alphabet, b: Sequence[int], sizes: Sequence[int]) -> list:
    """Nested signed-list display: one entry per block, a bare letter list for 1-letter blocks."""
    out = []
    for blk in split_blocks(b, sizes):
        if len(blk) == 1:
            out.append(A.console(blk[0]))
        else:
            out.append([A.console(a) for a in blk])
    return out


def generate_component(A: Alphabet, seed: Element, colors: Iterable[int] | None = None,
                       cap: int = DEFAULT_CAP, meta: dict | None = None) -> CrystalGraph:
    """Closure of ``seed`` under f_i and e_i, nodes in breadth-first order."""
    cs = tuple(sorted(A.rd.index_set if colors is None else colors))
    seed = tuple(seed)
    both = any(signature(A, seed, i).plus_count for i in cs)
    index = {seed: 0}
    keys = [seed]
    arrows = []
    queue = deque([seed])
    while queue:
        b = queue.popleft()
        n = index[b]
        for i in cs:
            moves = [(tensor_f(A, b, i), True)]
            if both:
                moves.append((tensor_e(A, b, i), False))
            for c, down in moves:
                if c is None:
                    continue
                m = index.get(c)
                if m is None:
                    if len(keys) >= cap:
                        raise GenerationError(f"component exceeds the node cap {cap}")
                    m = index[c] = len(keys)
                    keys.append(c)
                    queue.append(c)
                arrows.append((n, m, i) if down else (m, n, i))
    weights = [tensor_weight(A, b) for b in keys]
    return CrystalGraph(A.rd, keys, weights, arrows, cs,
                        labeler=lambda b: element_label(A, b), meta=meta)


def highest_weight_crystal(rd: RootData, weight, cap: int = DEFAULT_CAP) -> CrystalGraph:
    real = realization(rd, weight)
    A = get_alphabet(real.family)
    return generate_component(A, real.generator, cap=cap,
                              meta={"realization": real, "block_sizes": real.block_sizes})


def check_dimension(g: CrystalGraph) -> tuple[int, int]:
    """(generated size, Weyl dimension) for a graph built by highest_weight_crystal."""
    real: Realization = g.meta["realization"]
    return len(g), weyl_dimension(build_root_data(real.family), real.weight)


# -- pairwise weakly increasing -------------------------------------------------

@lru_cache(maxsize=None)
def fundamental_members(family: str, i: int) -> frozenset[Element]:
    A = get_alphabet(family)
    return frozenset(generate_component(A, fundamental_seed(family, i)).keys)


@lru_cache(maxsize=None)
def pair_members(family: str, first: int, second: int) -> frozenset[Element]:
    """Elements of B(L_first + L_second) inside B(L_first) (x) B(L_second), flattened."""
    A = get_alphabet(family)
    seed = fundamental_seed(family, first) + fundamental_seed(family, second)
    return frozenset(generate_component(A, seed).keys)


def is_pairwise_weakly_increasing(family: str, parts: Sequence[Element], kinds: Sequence[int]) -> bool:
    """``parts[j]`` is an element of B(Lambda_{kinds[j]}); test adjacent membership."""
    if len(parts) != len(kinds):
        raise GenerationError("one fundamental index per part is required")
    for j in range(len(parts) - 1):
        if tuple(parts[j]) + tuple(parts[j + 1]) not in pair_members(family, kinds[j], kinds[j + 1]):
            return False
    return True


def pwi_pair(family: str, kind: int, x: Element, y: Element) -> bool:
    return tuple(x) + tuple(y) in pair_members(family, kind, kind)


@lru_cache(maxsize=None)
def _descendants(family: str, crystal: int) -> dict[int, frozenset[int]]:
    """Letter ids reachable by f-paths (including the empty path) inside one letter crystal."""
    A = get_alphabet(family)
    ids = [a for a in range(len(A)) if A.crystal_of[a] == crystal]
    out = {}
    for a in ids:
        seen = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for i in A.rd.index_set:
                y = A.f[i][x]
                if y >= 0 and y not in seen:
                    seen.add(y)
                    stack.append(y)
        out[a] = frozenset(seen)
    return out


def wi_fast_L1(b1: int, b2: int) -> bool:
    """b1 (x) b2 in B(2 Lambda_1) iff b2 lies below b1 in B(Lambda_1)."""
    return b2 in _descendants("E6", 1)[b1]


@lru_cache(maxsize=None)
def _adjoint_descendants() -> tuple[dict[Element, int], list[frozenset[int]]]:
    g = highest_weight_crystal(build_root_data("E6"), (0, 1, 0, 0, 0, 0))
    strict = []
    for n in range(len(g)):
        seen: set[int] = set()
        stack = [n]
        while stack:
            x = stack.pop()
            for i in g.colors:
                y = g.f(x, i)
                if y >= 0 and y not in seen:
                    seen.add(y)
                    stack.append(y)
        strict.append(frozenset(seen))
    return g.index, strict


def wi_fast_L2(x1: Element, x2: Element) -> bool:
    """Test x1 (x) x2 in B(2 Lambda_2) for x1, x2 in B(Lambda_2) inside B(Lambda_6) (x) B(Lambda_1)."""
    A = get_alphabet("E6")
    (b1, c1), (b2, c2) = x1, x2
    down6, down1 = _descendants("E6", 6), _descendants("E6", 1)
    if b2 not in down6[b1] or c2 not in down1[c1]:
        return False
    if A.weights[c1] == tuple(-x for x in A.weights[b2]):
        index, strict = _adjoint_descendants()
        return index[tuple(x2)] in strict[index[tuple(x1)]]
    return True


# -- restricted highest weight nodes -----------------------------------------

def hw_nodes(g: CrystalGraph, J: Iterable[int] = (), level0: bool = False) -> list[int]:
    """Nodes killed by e_i for every classical color outside J; optionally wt_0 >= 0."""
    J = set(J)
    colors = [i for i in g.colors if i != 0 and i not in J]
    out = g.hw_nodes(colors)
    if level0:
        out = [n for n in out if g.weights[n][0] >= 0]
    return out


# -- the six-node counterexample --------------------------------------------

# (parts as classical signed labels, fundamental index of each part)
KN_EXAMPLE = (
    ((("3,-1,-6", "1"), ("1",), ("6",)), (2, 1, 6)),
    ((("5,-3", "-1,3"), ("6",), ("1",)), (2, 6, 1)),
    ((("-2,5",), ("6",), ("2,-1", "1")), (1, 6, 2)),
    ((("-6,2",), ("2,-1", "1"), ("6",)), (1, 2, 6)),
    ((("-2,3",), ("1",), ("2,-1", "1")), (6, 1, 2)),
    ((("2,-1",), ("2,-1", "1"), ("1",)), (6, 2, 1)),
)


@dataclass
class KNEntry:
    element: Element
    kinds: tuple[int, ...]
    in_shape: bool
    highest_weight: bool
    pairwise: bool
    weight: Weight
    is_generator: bool

    @property
    def ok(self) -> bool:
        return self.in_shape and self.highest_weight and self.pairwise and not self.is_generator


def verify_kn_counterexample() -> list[KNEntry]:
    A = get_alphabet("E6")
    target = level_zero_completion(A.rd, (0, 1, 1, 0, 0, 0, 1))
    out = []
    for labels, kinds in KN_EXAMPLE:
        parts = [tuple(A.letter(x) for x in part) for part in labels]
        b = tuple(a for p in parts for a in p)
        inside = all(p in fundamental_members("E6", k) for p, k in zip(parts, kinds))
        hw = all(signature(A, b, i).plus_count == 0 for i in A.rd.index_set)
        pw = is_pairwise_weakly_increasing("E6", parts, kinds)
        wt = tensor_weight(A, b)
        out.append(KNEntry(b, kinds, inside, hw, pw, wt, wt == target))
    return out


def kn_generator() -> tuple[list[Element], tuple[int, ...]]:
    real = realization(build_root_data("E6"), (1, 1, 0, 0, 0, 1))
    return real.split(real.generator), real.blocks


def parse_element(A: Alphabet, text: str) -> Element:
    """Parse ``"2,-1,-0 | -0,1"`` (letters separated by ``|``) into an element."""
    return tuple(A.letter(part) for part in text.split("|") if part.strip())


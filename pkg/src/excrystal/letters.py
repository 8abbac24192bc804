"""Minuscule fundamental crystals and the letters they provide.

A letter is a node of B(Lambda_1) or B(Lambda_6) (type E6) or of B(Lambda_7)
(type E7), identified with its level-0 affine weight.  Every i-string in these
crystals has length at most one, so the crystal is the Weyl orbit of the
highest weight with an i-arrow out of every node whose i-th coordinate is 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .graph import NONE, CrystalGraph, CrystalGraphError
from .rootdata import (
    KINDS,
    RootData,
    Weight,
    build_root_data,
    level_zero_completion,
    simple_root,
)

# which fundamental crystals act as letters for each family
LETTER_CRYSTALS = {"E6": (1, 6), "E7": (7,), "A2": (1, 2), "A1xA1": (1, 2)}
_MINUSCULE = {"E6": (1, 6), "E7": (7,), "A2": (1, 2), "A1xA1": (1, 2)}

_OVERLINE = "\u0305"


class LetterError(ValueError):
    pass


def _has_affine(rd: RootData) -> bool:
    return rd.kind.replace("affine", "") + "affine" in KINDS


def minuscule_crystal(rd: RootData, i: int) -> CrystalGraph:
    """B(Lambda_i) for a minuscule node, built as the Weyl orbit of Lambda_i.

    Node keys are the (level-0 completed) weights; nodes are sorted
    lexicographically by weight.
    """
    rd = rd.classical()
    if i not in _MINUSCULE.get(rd.kind, ()):
        raise LetterError(f"node {i} is not minuscule for {rd.kind}")
    alphas = {j: simple_root(rd, j) for j in rd.index_set}
    start = rd.fundamental(i)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mu in frontier:
            for j in rd.index_set:
                if mu[j] != 0:
                    nu = tuple(a - mu[j] * b for a, b in zip(mu, alphas[j]))
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
        frontier = nxt
    complete = _has_affine(rd)
    key_of = {mu: (level_zero_completion(rd, mu) if complete else mu) for mu in seen}
    keys = sorted(key_of.values())
    index = {k: n for n, k in enumerate(keys)}
    arrows = []
    for mu in seen:
        for j in rd.index_set:
            if mu[j] == 1:
                nu = tuple(a - b for a, b in zip(mu, alphas[j]))
                arrows.append((index[key_of[mu]], index[key_of[nu]], j))
    arrows.sort()
    return CrystalGraph(rd, keys, keys, arrows, rd.index_set, labeler=bar_label,
                        meta={"fundamental": i})


def dual(g: CrystalGraph) -> CrystalGraph:
    """Reverse every arrow and negate every weight.

    Weight-keyed graphs (minuscule crystals) get negated keys and are re-sorted.
    """
    neg = [tuple(-x for x in w) for w in g.weights]
    weight_keyed = all(k == w for k, w in zip(g.keys, g.weights))
    keys = neg if weight_keyed else list(g.keys)
    order = sorted(range(len(g)), key=lambda n: keys[n]) if weight_keyed else list(range(len(g)))
    pos = {n: p for p, n in enumerate(order)}
    arrows = sorted((pos[d], pos[s], i) for s, d, i in g.arrows())
    meta = dict(g.meta)
    meta["dual"] = not meta.get("dual", False)
    return CrystalGraph(g.rd, [keys[n] for n in order], [neg[n] for n in order], arrows,
                        g.colors, labeler=g.labeler, meta=meta)


def step(g: CrystalGraph, node: int, color: int, direction: str = "f") -> int | None:
    if not 0 <= node < len(g):
        raise CrystalGraphError(f"unknown node {node}")
    if direction not in ("f", "e"):
        raise ValueError("direction must be 'f' or 'e'")
    m = g.f(node, color) if direction == "f" else g.e(node, color)
    return None if m == NONE else m


def stats(g: CrystalGraph, node: int):
    if not 0 <= node < len(g):
        raise CrystalGraphError(f"unknown node {node}")
    return g.stats(node)


# -- labels -------------------------------------------------------------------

def signed_indices(w: Weight) -> list[int | str]:
    """Signed index list with negatives first; ``"-0"`` stands for a barred 0."""
    neg = [i for i, c in enumerate(w) for _ in range(-c) if c < 0]
    pos = [i for i, c in enumerate(w) for _ in range(c) if c > 0]
    return [("-0" if i == 0 else -i) for i in neg] + pos


def signed_label(w: Weight) -> str:
    return ",".join(str(x) for x in signed_indices(w))


def bar_label(w: Weight) -> str:
    """Barred indices then plain ones, e.g. 0\u03054\u030525."""
    neg = "".join(f"{i}{_OVERLINE}" for i, c in enumerate(w) for _ in range(-c) if c < 0)
    pos = "".join(str(i) for i, c in enumerate(w) for _ in range(c) if c > 0)
    return neg + pos


def classical_list(w: Weight, dual: bool = False) -> list[int]:
    """Classical signed list in console form: [-2, 1] for a B(Lambda_1)-type letter.

    Letters of a dual crystal list their positive entries first ([2, -1]).
    """
    neg = [-i for i, c in enumerate(w) if i and c < 0 for _ in range(-c)]
    pos = [i for i, c in enumerate(w) if i and c > 0 for _ in range(c)]
    return pos + neg if dual else neg + pos


_TOKEN = re.compile(r"\s*(-?)\s*(\d+)\s*")


def parse_weight(rd: RootData, text: str | list) -> Weight:
    """Parse a signed index list ("-0,-4,2,5" or a list) into a level-0 weight.

    A missing 0 entry is restored from the level-0 rule; a present one must agree.
    """
    items = text if isinstance(text, list) else [t for t in text.split(",") if t.strip()]
    w = [0] * rd.size
    saw_zero = False
    for item in items:
        m = _TOKEN.fullmatch(str(item))
        if not m:
            raise LetterError(f"bad index {item!r}")
        i = int(m.group(2))
        if i >= rd.size:
            raise LetterError(f"index {i} out of range for {rd.kind}")
        w[i] += -1 if m.group(1) else 1
        saw_zero |= i == 0
    w = tuple(w)
    if not _has_affine(rd):
        return w
    done = level_zero_completion(rd, w)
    if saw_zero and done != w:
        raise LetterError(f"{text!r} does not have level 0")
    return done


def parse_latex_label(rd: RootData, text: str) -> Weight:
    r"""Parse labels such as ``\bar{0}\bar{4}25`` or ``36\bar{1}\bar{5}``."""
    toks = re.findall(r"\\(?:bar|overline)\{(\d)\}|(\d)", text)
    return parse_weight(rd, [("-" + b) if b else p for b, p in toks])


# -- fixtures -----------------------------------------------------------------

def read_fixture(text: str, rd: RootData) -> tuple[list[Weight], set[tuple[Weight, Weight, int]]]:
    """Parse the ``[nodes]``/``[arrows]`` fixture grammar (see data/README)."""
    nodes: list[Weight] = []
    arrows = set()
    section = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in ("[nodes]", "[arrows]"):
            section = line
            continue
        if section == "[nodes]":
            nodes.append(parse_weight(rd, line))
        elif section == "[arrows]":
            m = re.fullmatch(r"(.+?)\s*->\s*(.+?)\s*:\s*(\d+)", line)
            if not m:
                raise LetterError(f"bad arrow line {raw!r}")
            arrows.add((parse_weight(rd, m.group(1)), parse_weight(rd, m.group(2)), int(m.group(3))))
        else:
            raise LetterError(f"content outside a section: {raw!r}")
    return nodes, arrows


def load_fixture(name: str, rd: RootData):
    text = resources.files("excrystal").joinpath("data", name).read_text(encoding="utf-8")
    return read_fixture(text, rd)


# -- alphabets ----------------------------------------------------------------

@dataclass
class Alphabet:
    """All letters of one family, numbered, with flat lookup tables.

    ``f[i][a]``/``e[i][a]`` give the letter reached from letter ``a`` (or -1);
    ``phi[i][a]``/``eps[i][a]`` are its string statistics.
    """

    family: str
    rd: RootData
    crystals: dict[int, CrystalGraph]
    weights: list[Weight]
    crystal_of: list[int]
    f: dict[int, list[int]]
    e: dict[int, list[int]]
    phi: dict[int, list[int]]
    eps: dict[int, list[int]]
    hw: dict[int, int]

    def __len__(self) -> int:
        return len(self.weights)

    def letter(self, spec: str | Weight | list) -> int:
        """Letter id from a weight or signed label ("-0,1", "\\bar{0}1")."""
        if isinstance(spec, str) and "\\" in spec:
            w = parse_latex_label(self.rd, spec)
        elif isinstance(spec, (str, list)):
            w = parse_weight(self.rd, spec)
        else:
            w = tuple(spec)
        try:
            return self._id[w]
        except KeyError:
            raise LetterError(f"no letter with weight {w} in {self.family}") from None

    def __post_init__(self):
        self._id = {w: a for a, w in enumerate(self.weights)}

    def label(self, a: int) -> str:
        return bar_label(self.weights[a])

    def is_dual(self, a: int) -> bool:
        return self.family == "E6" and self.crystal_of[a] == 6

    def console(self, a: int) -> list[int]:
        return classical_list(self.weights[a], dual=self.is_dual(a))


@lru_cache(maxsize=None)
def get_alphabet(family: str) -> Alphabet:
    if family not in LETTER_CRYSTALS:
        raise LetterError(f"no letters for {family!r}")
    rd = build_root_data(family)
    crystals = {i: minuscule_crystal(rd, i) for i in LETTER_CRYSTALS[family]}
    weights, crystal_of = [], []
    for i, g in crystals.items():
        weights.extend(g.keys)
        crystal_of.extend([i] * len(g))
    if len(set(weights)) != len(weights):
        raise LetterError("letters of different crystals share a weight")
    pos = {(crystal_of[a], weights[a]): a for a in range(len(weights))}
    f = {i: [NONE] * len(weights) for i in rd.index_set}
    e = {i: [NONE] * len(weights) for i in rd.index_set}
    for c, g in crystals.items():
        for s, d, i in g.arrows():
            a, b = pos[(c, g.keys[s])], pos[(c, g.keys[d])]
            f[i][a] = b
            e[i][b] = a
    phi = {i: [int(x != NONE) for x in f[i]] for i in rd.index_set}
    eps = {i: [int(x != NONE) for x in e[i]] for i in rd.index_set}
    hw = {c: pos[(c, g.keys[g.hw_nodes()[0]])] for c, g in crystals.items()}
    return Alphabet(family, rd, crystals, weights, crystal_of, f, e, phi, eps, hw)


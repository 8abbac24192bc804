"""JSON and DOT documents for crystal graphs and composition graphs.

A node carries its letters as nested signed classical-index lists, leftmost
tensor factor first, e.g. ``[[[2, -1], [1]]]``; the 0 coefficient of each
letter is implied by the level-0 rule and the node's full weight vector
(index 0 included) is stored alongside.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Hashable

from .compgraph import CompositionGraph
from .genhw import console_form
from .graph import CrystalGraph
from .letters import get_alphabet
from .rootdata import build_root_data

FORMAT = "excrystal-graph/1"
CONVENTION = (
    "letters are signed classical-index lists (a negative entry -i stands for a barred i); "
    "tensor factors are listed leftmost first; f_i acts at the rightmost unmatched minus "
    "after cancelling adjacent (+,-) pairs, which is the reverse of Kashiwara's ordering"
)


class DocumentError(ValueError):
    pass


@dataclass
class Node:
    id: int
    label: str
    letters: list
    weight: list[int]
    component: Any = None
    attrs: dict = field(default_factory=dict)


@dataclass
class Edge:
    src: int
    dst: int
    color: int | None


@dataclass
class GraphDocument:
    header: dict
    nodes: list[Node]
    edges: list[Edge]
    format: str = FORMAT
    convention: str = CONVENTION

    def to_dict(self) -> dict:
        return {"format": self.format, "convention": self.convention, "header": self.header,
                "nodes": [asdict(n) for n in self.nodes], "edges": [asdict(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "GraphDocument":
        if d.get("format") != FORMAT:
            raise DocumentError(f"unknown document format {d.get('format')!r}")
        nodes = [Node(**n) for n in d["nodes"]]
        if [n.id for n in nodes] != list(range(len(nodes))):
            raise DocumentError("node ids must be 0, 1, 2, ... in order")
        edges = [Edge(**e) for e in d["edges"]]
        for e in edges:
            if not (0 <= e.src < len(nodes) and 0 <= e.dst < len(nodes)):
                raise DocumentError(f"edge {e} refers to a missing node")
        return cls(d["header"], nodes, edges, d["format"], d["convention"])

    @classmethod
    def from_json(cls, text: str) -> "GraphDocument":
        return cls.from_dict(json.loads(text))

    def to_dot(self) -> str:
        name = self.header.get("name", "crystal")
        lines = [f"digraph {_dot_id(name)} {{", "  node [shape=box];"]
        for n in self.nodes:
            lines.append(f"  n{n.id} [label={_dot_string(n.label)}];")
        for e in self.edges:
            attr = f" [label={e.color}]" if e.color is not None else ""
            lines.append(f"  n{e.src} -> n{e.dst}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_string(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot_id(s: str) -> str:
    cleaned = "".join(c if c.isalnum() else "_" for c in s)
    return cleaned if cleaned and not cleaned[0].isdigit() else "g_" + cleaned


def schema() -> dict:
    path = resources.files("excrystal") / "data" / "graph_document.schema.json"
    return json.loads(path.read_text(encoding="utf-8"))


# -- building documents -------------------------------------------------------

def _family(g: CrystalGraph) -> str:
    return g.rd.kind.replace("affine", "")


def _split_key(key: Hashable) -> tuple[Any, tuple[int, ...]]:
    if isinstance(key, tuple) and len(key) == 2 and isinstance(key[1], tuple):
        return key[0], key[1]
    return None, tuple(key)


def default_display(g: CrystalGraph) -> Callable[[int], list]:
    A = get_alphabet(_family(g))
    sizes = g.meta.get("block_sizes")

    def show(n: int) -> list:
        _, elem = _split_key(g.keys[n])
        return console_form(A, elem, sizes if sizes else [1] * len(elem))
    return show


def crystal_document(g: CrystalGraph, name: str = "crystal", display: Callable[[int], list] | None = None,
                     **header: Any) -> GraphDocument:
    show = display or default_display(g)
    head = {"name": name, "kind": g.rd.kind, "rank": g.rd.rank, "index_set": list(g.rd.index_set),
            "colors": list(g.colors), "graph": "crystal", **header}
    nodes = []
    for n in range(len(g)):
        comp, _ = _split_key(g.keys[n])
        nodes.append(Node(n, g.label(n), show(n), list(g.weights[n]), comp))
    edges = [Edge(s, d, i) for s, d, i in sorted(g.arrows(), key=lambda a: (a[2], a[0]))]
    return GraphDocument(head, nodes, edges)


def kr_document(kr) -> GraphDocument:
    return crystal_document(kr.graph, name=f"B{kr.r}_{kr.s}", display=kr.display, r=kr.r, s=kr.s)


def composition_document(G: CompositionGraph) -> GraphDocument:
    """Vertices in topological order; edges are the covering relations."""
    A = get_alphabet(G.family)
    rd = build_root_data(G.family)
    pos = {v: k for k, v in enumerate(G.vertices)}
    head = {"name": f"G_{''.join(map(str, G.J))}" + ("_0" if G.level0 else ""), "kind": rd.kind,
            "rank": rd.rank, "index_set": list(rd.index_set), "graph": "composition",
            "fundamental": G.kind, "J": list(G.J), "level0": G.level0}
    nodes = []
    for v in G.vertices:
        key = G.key(v)
        nodes.append(Node(pos[v], G.name(v), console_form(A, key, [len(key)]),
                          list(G.crystal.weights[v]), None, {"loop": bool(G.loops[v])}))
    edges = [Edge(pos[a], pos[b], None) for a, b in sorted(G.reduced, key=lambda e: (pos[e[0]], pos[e[1]]))]
    return GraphDocument(head, nodes, edges)


# -- reading back -------------------------------------------------------------

def _leaves(x) -> list[list[int]]:
    if isinstance(x, list) and x and all(isinstance(t, int) for t in x):
        return [x]
    if not isinstance(x, list):
        raise DocumentError(f"bad letter entry {x!r}")
    out = []
    for t in x:
        out.extend(_leaves(t))
    return out


def node_element(doc: GraphDocument, node: Node) -> tuple[int, ...]:
    A = get_alphabet(doc.header["kind"].replace("affine", ""))
    return tuple(A.letter(list(leaf)) for leaf in _leaves(node.letters))


def graph_from_document(doc: GraphDocument) -> CrystalGraph:
    """Rebuild a crystal graph; keys are elements, or (component, element) when tagged."""
    if doc.header.get("graph") != "crystal":
        raise DocumentError("only crystal documents can be rebuilt")
    rd = build_root_data(doc.header["kind"])
    fam = doc.header["kind"].replace("affine", "")
    A = get_alphabet(fam)
    keys = []
    for n in doc.nodes:
        elem = node_element(doc, n)
        comp = n.component
        keys.append(elem if comp is None else (comp, elem))
    arrows = [(e.src, e.dst, e.color) for e in doc.edges]
    labels = [n.label for n in doc.nodes]
    index = {k: i for i, k in enumerate(keys)}
    return CrystalGraph(rd, keys, [tuple(n.weight) for n in doc.nodes], arrows, doc.header["colors"],
                        labeler=lambda k: labels[index[k]], meta={"alphabet": A.family})


def same_graph(g: CrystalGraph, h: CrystalGraph) -> bool:
    return (g.keys == h.keys and g.weights == h.weights and g.colors == h.colors
            and sorted(g.arrows()) == sorted(h.arrows()))


def write_document(doc: GraphDocument, path, fmt: str = "json") -> None:
    text = doc.to_json() if fmt == "json" else doc.to_dot()
    Path(path).write_text(text, encoding="utf-8")


def edge_count(dot_text: str) -> int:
    return sum(1 for line in dot_text.splitlines() if "->" in line)


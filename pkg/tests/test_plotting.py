from excrystal.compgraph import build_composition_graph
from excrystal.plotting import layers, mathtext, plot_document
from excrystal.serialize import composition_document, kr_document


def test_mathtext():
    assert mathtext("16") == "16"
    assert mathtext("0̅1") == r"$\bar{0}1$"
    assert mathtext("0̅1 ⊗ 1̅6") == r"$\bar{0}1 \otimes  \bar{1}6$"


def test_layers_follow_classical_arrows(kr):
    doc = kr_document(kr("E6affine", 1, 1))
    depth = layers(doc)
    for e in doc.edges:
        if e.color != 0:
            assert depth[e.dst] > depth[e.src]
    assert max(depth) == 16  # B(Lambda_1) has height 16


def test_plot_png(tmp_path, kr):
    out = plot_document(kr_document(kr("E6affine", 1, 1)), tmp_path / "b11.png")
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    out = plot_document(composition_document(build_composition_graph("E6", 2, (6, 1), True)), tmp_path / "g.png")
    assert out.stat().st_size > 0

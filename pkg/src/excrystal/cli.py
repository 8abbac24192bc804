"""Command line: generate crystals, KR crystals and composition graphs; run checks.

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .affine import PromotionError, kr_crystal, restriction_iso_check
from .compgraph import build_composition_graph
from .genhw import GenerationError, highest_weight_crystal
from .rootdata import build_root_data
from .serialize import GraphDocument, composition_document, crystal_document, kr_document
from .verify import (STATISTICS_MATRIX, VerificationReport, check_circuits_violate_chains, check_order,
                     check_regular, matroid_circuits, nullspace_report, violations)


def _weight(rd, text: str) -> list[int]:
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise click.BadParameter(f"{text!r} is not a comma-separated integer list") from None
    if len(parts) != rd.rank:
        raise click.BadParameter(f"{rd.kind} weights have {rd.rank} coefficients, got {len(parts)}")
    if any(c < 0 for c in parts):
        raise click.BadParameter(f"{text!r} is not dominant")
    return parts


def _emit(doc: GraphDocument, output: str | None, fmt: str, figure: bool) -> None:
    text = doc.to_json() if fmt == "json" else doc.to_dot()
    if output is None:
        if figure:
            raise click.UsageError("--figure needs --output")
        click.echo(text, nl=False)
        return
    path = Path(output)
    path.write_text(text, encoding="utf-8")
    if figure:
        from .plotting import plot_document
        png = plot_document(doc, path.with_suffix(".png"))
        click.echo(f"figure: {png}", err=True)


def _summary(line: str, output: str | None) -> None:
    # keep stdout clean for the document when it goes there
    click.echo(line, err=output is None)


format_option = click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json",
                             show_default=True)
output_option = click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
                             help="Write the document here instead of stdout.")
figure_option = click.option("--figure", is_flag=True, help="Also render a PNG next to --output.")


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Crystals of types E6, E7 and the KR crystals built on them."""


@main.command()
@click.option("--type", "kind", type=click.Choice(["E6", "E7"]), required=True)
@click.option("--weight", required=True, help="Dominant weight as classical coefficients, e.g. 1,0,0,0,0,1.")
@click.option("--plus", multiple=True, help="Further weights added to --weight.")
@format_option
@output_option
@figure_option
def gen(kind, weight, plus, fmt, output, figure):
    """Generate B(weight) inside a tensor power of letters."""
    rd = build_root_data(kind)
    total = _weight(rd, weight)
    for extra in plus:
        total = [a + b for a, b in zip(total, _weight(rd, extra))]
    try:
        g = highest_weight_crystal(rd, total)
    except GenerationError as err:
        raise click.UsageError(str(err)) from None
    doc = crystal_document(g, name=f"B_{'_'.join(map(str, total))}")
    _emit(doc, output, fmt, figure)
    _summary(str(len(g)), output)


@main.command()
@click.option("--type", "kind", type=click.Choice(["E6affine", "E7affine"]), required=True)
@click.option("-r", "r", type=int, required=True)
@click.option("-s", "s", type=int, required=True)
@click.option("--verify", is_flag=True, help="Check regularity, promotion order and restriction.")
@format_option
@output_option
@figure_option
def kr(kind, r, s, verify, fmt, output, figure):
    """Build B^{r,s} with its 0-arrows."""
    try:
        crystal = kr_crystal(kind, r, s)
    except PromotionError as err:
        raise click.UsageError(str(err)) from None
    _emit(kr_document(crystal), output, fmt, figure)
    _summary(f"{len(crystal)} nodes, {len(crystal.zero_arrows)} zero-arrows", output)
    if verify:
        rep = check_regular(crystal.graph)
        rep.add("promotion order", check_order(crystal.promotion, crystal.promotion.twist.order))
        if kind == "E6affine" and r in (1, 6):
            res = restriction_iso_check(crystal)
            rep.add("restriction isomorphism", res.ok, str(res))
        click.echo(rep.text(), err=output is None)
        if not rep.ok:
            sys.exit(1)


@main.command()
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
def circuits(as_json):
    """Circuits of the statistics matrix and the chain-violation check."""
    cs = matroid_circuits(STATISTICS_MATRIX)
    G = build_composition_graph("E6", 2, (6, 1), True)
    viol = check_circuits_violate_chains(cs, G)
    ns = nullspace_report()
    n = len(cs.unsigned)
    hits = sum(violations(cs, G))
    rep = VerificationReport("circuits")
    rep.checks = ns.checks + viol.checks
    if as_json:
        click.echo(json.dumps({"circuits": n, "signed_circuits": cs.signed_count, "violating": hits,
                               "report": rep.to_dict()}, indent=1))
    else:
        click.echo(f"{n} circuits ({cs.signed_count} signed), {hits}/{n} violate chains")
        click.echo(rep.text())
    if not rep.ok:
        sys.exit(1)


@main.command()
@click.option("--type", "family", type=click.Choice(["E6", "E7"]), default="E6", show_default=True)
@click.option("--node", "kind", type=int, required=True, help="Fundamental index of the realization.")
@click.option("-J", "J", required=True, help="Comma-separated colors, e.g. 6 or 6,1.")
@click.option("--level0", is_flag=True)
@format_option
@output_option
@figure_option
def compgraph(family, kind, J, level0, fmt, output, figure):
    """Composition graph G_J or G_{J;0}."""
    try:
        colors = tuple(int(x) for x in J.split(","))
        G = build_composition_graph(family, kind, colors, level0)
    except ValueError as err:
        raise click.UsageError(str(err)) from None
    _emit(composition_document(G), output, fmt, figure)
    _summary(f"{len(G.vertices)} vertices", output)


@main.command()
@click.option("--long", "long_", is_flag=True, help="Include the E7 B(Lambda_4) generation.")
@click.option("--only", type=int, multiple=True, help="Run only these criteria.")
def accept(long_, only):
    """Run the acceptance criteria; exit 1 if any fails."""
    from .acceptance import CRITERIA, run
    bad = [k for k in only if k not in CRITERIA]
    if bad:
        raise click.UsageError(f"no criterion {bad[0]}")
    outcomes = run(list(only) or None, long=long_, echo=click.echo)
    failed = [o.number for o in outcomes if not o.passed]
    click.echo(f"{len(outcomes) - len(failed)}/{len(outcomes)} criteria pass")
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()

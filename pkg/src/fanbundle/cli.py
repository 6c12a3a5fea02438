"""Command-line entry point.

Exit status: 0 accept/valid/success, 1 a legitimate negative answer,
2 usage or I/O error. Results go to stdout as JSON, messages to stderr.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import bounds, generators, k3n, oracles, recognizers, reduction
from .core import GraphError, ParseError, load_graph, save_graph, save_rotation
from .drawing import DrawingError, from_json, to_json, validate as validate_drawing
from .render import LayoutError, render_svg

GRAPH_FORMAT = """\b
Graph file: '#' starts a comment; header 'p <n> <m>';
optional layer lines 'l <v> <0|1>'; edge lines 'e <u> <v>'.
"""
DRAWING_FORMAT = """\b
Drawing file: JSON with keys variant, sides, graph, bundles
[{id, anchor, edges}], attachments {"u-v": {first, second}},
crossings [[b1, b2]], embedding {node: [arc, ...]} and optional
outerFace. Nodes are v:<id>, t:<bundle>, x:<b1>|<b2>; arcs are
trunk:<bundle>:<0|1> and mid:<u>-<v>.
"""
ROTATION_FORMAT = """\b
Rotation file: one line 'r <v> <u-w> ...' per vertex listing its
incident edges in clockwise order.
"""
GEOMETRY_FORMAT = """\b
Geometry file: 'pt <v> <x> <y>' and 'curve <u>-<v> <x1> <y1> ...'
with exact rationals.
"""


class Fail(Exception):
    """Usage or I/O problem that maps to exit status 2."""


def _emit(obj) -> None:
    click.echo(json.dumps(obj, sort_keys=True))


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise Fail(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise Fail(f"cannot write {path}: {exc.strerror or exc}") from None


def _load_graph(path: str):
    try:
        return load_graph(_read(path))
    except (ParseError, GraphError) as exc:
        raise Fail(f"{path}: {exc}") from None


def _load_drawing(path: str):
    try:
        return from_json(_read(path))
    except (ValueError, KeyError, TypeError) as exc:
        raise Fail(f"{path}: {exc}") from None


def _default_layout(variant: str) -> str:
    return {"twolayer": "twolayer", "outer": "circular"}.get(variant, "barycentric")


def _svg(d, layout=None) -> str:
    return render_svg(d, layout or _default_layout(d.variant))


def _guard(fn):
    """Run a subcommand body, mapping its return value and errors to exit codes."""
    def wrapper(*args, **kwargs):
        try:
            code = fn(*args, **kwargs)
        except Fail as exc:
            click.echo(f"error: {exc}", err=True)
            _emit({"error": str(exc)})
            sys.exit(2)
        sys.exit(code or 0)
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Fan-bundle planar drawings: recognize, generate, validate and more."""


_RECOGNIZERS = {
    "outer3": recognizers.recognize_outer_triconnected,
    "twolayer-biconnected": recognizers.recognize_twolayer_biconnected,
    "twolayer-maximal": recognizers.recognize_twolayer_maximal,
}


@main.command(help="Run a recognizer on a graph file.\n\n" + GRAPH_FORMAT + DRAWING_FORMAT)
@click.option("--class", "cls", required=True, type=click.Choice(sorted(_RECOGNIZERS)))
@click.option("--in", "inp", required=True, help="graph file")
@click.option("--witness", default=None, help="write the witness drawing here on acceptance")
@click.option("--svg", default=None, help="write an SVG of the witness here on acceptance")
@_guard
def recognize(cls, inp, witness, svg):
    g = _load_graph(inp)
    res = _RECOGNIZERS[cls](g)
    out = res.summary()
    if res.accepted and (witness or svg):
        d = res.witness
        if witness:
            _write(witness, to_json(d))
        if svg:
            try:
                _write(svg, _svg(d))
            except LayoutError as exc:
                click.echo(f"warning: no SVG: {exc}", err=True)
    _emit(out)
    return 0 if res.accepted else 1


@main.command(help="Build a density-extremal family member or the K3,n construction.\n\n"
              + GRAPH_FORMAT + DRAWING_FORMAT + GEOMETRY_FORMAT)
@click.option("--family", required=True,
              type=click.Choice(list(generators.FAMILIES) + ["k3n"]))
@click.option("--n", "n", type=int, default=None, help="number of vertices")
@click.option("--k", "k", type=int, default=None, help="family parameter k (or q)")
@click.option("--mirror", is_flag=True, help="k3n only: use the two-sided K3,4k+2 drawing")
@click.option("--out", required=True, help="output prefix")
@_guard
def generate(family, n, k, mirror, out):
    if family == "k3n":
        if k is None:
            raise Fail("k3n needs --k")
        try:
            d = k3n.build_k3_4kp2(k) if mirror else k3n.build_k3_2kp1(k)
            cc = k3n.count_crossings(d)
        except (ValueError, k3n.GeometryError) as exc:
            raise Fail(str(exc)) from None
        _write(out + ".geom", k3n.to_text(d))
        _write(out + ".svg", k3n.to_svg(d))
        _emit({"family": "k3n", "k": k, "mirror": mirror, "edges": len(d.curves),
               "maxCrossingsPerEdge": cc.max_per_edge, "crossingPairs": cc.total})
        return 0
    if family == "d12":
        value = None
    elif k is not None:
        value = k
    elif n is not None:
        value = generators.parameter_for_n(family, n)
        if value is None:
            raise Fail(f"family {family} has no member with n = {n}")
    else:
        raise Fail("give --n or --k")
    try:
        inst = generators.generate(family, value)
    except (ValueError, TypeError) as exc:
        raise Fail(str(exc)) from None
    _write(out + ".graph", save_graph(inst.graph))
    if inst.drawing is not None:
        _write(out + ".drawing", to_json(inst.drawing))
        try:
            _write(out + ".svg", _svg(inst.drawing))
        except LayoutError as exc:
            click.echo(f"warning: no SVG: {exc}", err=True)
    _emit({"family": family, "parameters": inst.parameters, "n": inst.graph.n,
           "edges": inst.graph.m, "expectedEdges": inst.expected_edges})
    return 0


@main.command(help="Check a drawing file against the validity rules.\n\n" + DRAWING_FORMAT)
@click.option("--in", "inp", required=True, help="drawing file")
@click.option("--sides", type=click.Choice(["1", "2"]), default=None, help="override the file's model")
@click.option("--variant", type=click.Choice(["general", "outer", "twolayer"]), default=None)
@_guard
def validate(inp, sides, variant):
    d = _load_drawing(inp)
    rep = validate_drawing(d, None if sides is None else int(sides), variant)
    out = {"valid": rep.valid,
           "violations": [{"rule": v.rule, "message": v.message, "objects": list(v.objects)}
                          for v in rep.violations]}
    if rep.valid:
        over = bounds.density_violation(d.replace(sides=int(sides or d.sides),
                                                  variant=variant or d.variant))
        if over:
            out["densityWarning"] = over
    _emit(out)
    return 0 if rep.valid else 1


@main.command(help="Answer a recognition question by brute force (small n).\n\n" + GRAPH_FORMAT)
@click.option("--which", required=True, type=click.Choice(["outer3", "babysnake"]))
@click.option("--in", "inp", required=True, help="graph file")
@_guard
def oracle(which, inp):
    g = _load_graph(inp)
    fn = oracles.outer3_oracle if which == "outer3" else oracles.babysnake_oracle
    try:
        ok = fn(g)
    except oracles.OracleRangeError as exc:
        raise Fail(str(exc)) from None
    _emit({"accepted": ok} if ok else {"accepted": False, "reason": f"{which} oracle found no witness"})
    return 0 if ok else 1


@main.command(help="Turn a 3-Partition instance into a graph with a rotation system.\n\n"
              + GRAPH_FORMAT + ROTATION_FORMAT)
@click.option("--A", "a_list", required=True, help="comma-separated integers")
@click.option("--B", "b", required=True, type=int)
@click.option("--K", "k", type=int, default=None, help="scale parameter (default B^2)")
@click.option("--model", type=click.Choice(["1", "2"]), default="1")
@click.option("--out", required=True, help="output prefix")
@_guard
def reduce3p(a_list, b, k, model, out):
    try:
        A = [int(x) for x in a_list.split(",") if x.strip()]
        inst = reduction.ThreePartitionInstance(A, b)
        r = reduction.reduce(inst, k, int(model))
    except ValueError as exc:
        raise Fail(str(exc)) from None
    for w in r.warnings:
        click.echo(f"warning: {w}", err=True)
    stats = r.stats_json()
    _write(out + ".graph", save_graph(r.graph))
    _write(out + ".rot", save_rotation(r.rotation, r.graph))
    _write(out + ".stats.json", json.dumps(stats, sort_keys=True, indent=1) + "\n")
    _emit(stats)
    return 0


@main.command(help="Draw a drawing file as SVG.\n\n" + DRAWING_FORMAT)
@click.option("--in", "inp", required=True, help="drawing file")
@click.option("--out", required=True, help="SVG path")
@click.option("--layout", type=click.Choice(["twolayer", "circular", "barycentric"]), default=None)
@_guard
def render(inp, out, layout):
    d = _load_drawing(inp)
    try:
        text = _svg(d, layout)
    except (LayoutError, DrawingError) as exc:
        raise Fail(str(exc)) from None
    _write(out, text)
    _emit({"written": out})
    return 0


@main.command("density-report", help="Sweep a family and compare edge counts to its class bound.")
@click.option("--family", required=True, type=click.Choice(list(generators.FAMILIES)))
@click.option("--max-n", "max_n", required=True, type=int)
@_guard
def density_report(family, max_n):
    sides, variant = generators.FAMILY_MODEL.get(family, (2, "general"))
    rows = []
    for n in range(1, max_n + 1):
        value = generators.parameter_for_n(family, n)
        if value is None:
            continue
        inst = generators.generate(family, value)
        bound = bounds.class_bound(sides, variant, inst.graph.n)
        rows.append({"n": inst.graph.n, "edges": inst.graph.m,
                     "bound": None if bound is None else str(bound),
                     "tight": bound is not None and inst.graph.m == bound})
    _emit({"family": family, "sides": sides, "variant": variant,
           "formula": bounds.bound_formula(sides, variant), "rows": rows})
    return 0


if __name__ == "__main__":
    main()

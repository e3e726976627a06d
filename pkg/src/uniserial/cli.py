"""Command-line interface.

Every command prints JSON (DOT for ``ar-quiver --format dot``) on standard
output.  Exit codes: 0 on success, 2 on invalid input, 3 when a check fails.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections import deque

from . import plotting
from .catalog import random_object, tube_objects
from .errors import UniserialError
from .fields import DEFAULT_PRIME, Field
from .oracle import oracle_sweep
from .perpendicular import perp
from .proalgebra import (
    DEFAULT_TRUNC,
    coalgebra_dual_check,
    displayed_pattern,
    inj_matrix_algebra,
    path_coalgebra,
)
from .serialize import (
    ValidationError,
    ar_to_json,
    hom_to_json,
    object_from_json,
    object_to_json,
    site_from_json,
    site_to_json,
    vertex_from_json,
    vertex_to_json,
)
from .site import tube
from .transport import rotation, shift_transport
from .tube import (
    ar_sequence,
    ext_dim,
    hom_dim,
    hom_space,
    irreducibles_in,
    irreducibles_out,
    subobject_chain,
    tau,
)

EXIT_OK, EXIT_INVALID, EXIT_CHECK = 0, 2, 3


class CheckFailed(Exception):
    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


def _emit(payload, out):
    if isinstance(payload, str):
        out.write(payload if payload.endswith("\n") else payload + "\n")
    else:
        out.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")


# commands


def cmd_hom(args):
    site = site_from_json(args.site)
    x, y = object_from_json(site, args.source), object_from_json(site, args.target)
    return hom_to_json(hom_space(x, y))


def cmd_ext(args):
    site = site_from_json(args.site)
    x, y = object_from_json(site, args.source), object_from_json(site, args.target)
    return {"dim": ext_dim(x, y)}


def cmd_ar(args):
    site = site_from_json(args.site)
    return ar_to_json(ar_sequence(object_from_json(site, args.obj)))


def cmd_subobjects(args):
    site = site_from_json(args.site)
    chain = subobject_chain(object_from_json(site, args.obj), args.limit)
    return {"chain": [None if c is None else object_to_json(c) for c in chain.entries],
            "complete": chain.complete}


def cmd_perp(args):
    site = site_from_json(args.site)
    keep = json.loads(args.keep)
    if not isinstance(keep, list):
        raise ValidationError("keep must be a JSON list of vertices")
    pp = perp(site, [vertex_from_json(site, v) for v in keep])
    out = {"keep": [vertex_to_json(v) for v in pp.keep], "inner": site_to_json(pp.inner),
           "rank": pp.rank, "simples": [object_to_json(s) for s in pp.simples()]}
    if args.obj:
        x = object_from_json(site, args.obj)
        r = pp.reflect(x)
        out["contains"] = pp.contains(x)
        out["reflect"] = None if r is None else {"inner": object_to_json(r),
                                                  "ambient": object_to_json(pp.include(r))}
    return out


def ar_graph(center, radius: int) -> dict:
    """Breadth-first neighbourhood of ``center`` in the AR quiver with mesh coordinates."""
    coords = {center: (0, 0)}
    dist = {center: 0}
    queue = deque([center])
    while queue:
        x = queue.popleft()
        if dist[x] == radius:
            continue
        cx, cy = coords[x]
        steps = [(z, cx + 1, cy + (1 if z.a == x.a else -1)) for z in irreducibles_out(x)]
        steps += [(z, cx - 1, cy + (1 if z.b == x.b else -1)) for z in irreducibles_in(x)]
        for z, zx, zy in steps:
            if z not in dist:
                dist[z] = dist[x] + 1
                coords[z] = (zx, zy)
                queue.append(z)
    if center.site.base == "cyclic":
        coords = {z: _tube_coords(z, center) for z in coords}
    nodes = sorted(coords, key=lambda z: (coords[z], repr(z)))
    ids = {z: f"n{i}" for i, z in enumerate(nodes)}
    edges, taus = [], []
    for z in nodes:
        for w in irreducibles_out(z):
            if w in ids:
                edges.append((ids[z], ids[w]))
        if not z.is_projective and tau(z) in ids:
            taus.append((ids[z], ids[tau(z)]))
    return {
        "nodes": [{"id": ids[z], "label": repr(z), "x": coords[z][0], "y": coords[z][1],
                   "center": z == center, "object": object_to_json(z)} for z in nodes],
        "edges": sorted(edges),
        "tau": sorted(taus),
    }


def _tube_coords(z, center) -> tuple[int, int]:
    """Mesh position of the lift of ``z`` nearest to ``center``; simples sit at height 0."""
    site = z.site
    r = site.rank
    za, zb = site.to_z(z.a), site.to_z(z.b)
    c = site.to_z(center.a) + site.to_z(center.b)
    k = round((c - za - zb) / (2 * r))
    return za + zb + 2 * r * k - c, zb - za


def graph_to_dot(graph: dict) -> str:
    lines = ["digraph AR {", "  node [shape=box, fontname=\"Helvetica\"];"]
    for n in graph["nodes"]:
        extra = ", style=filled, fillcolor=\"#f4d35e\"" if n["center"] else ""
        lines.append(f"  {n['id']} [label=\"{n['label']}\", pos=\"{n['x']},{n['y']}!\"{extra}];")
    for u, v in graph["edges"]:
        lines.append(f"  {u} -> {v};")
    for u, v in graph["tau"]:
        lines.append(f"  {u} -> {v} [style=dashed, color=gray, constraint=false, label=\"tau\"];")
    lines.append("}")
    return "\n".join(lines)


def cmd_ar_quiver(args):
    site = site_from_json(args.site)
    center = object_from_json(site, args.center)
    if args.radius < 0:
        raise ValidationError("radius must be non-negative")
    graph = ar_graph(center, args.radius)
    if args.figure:
        plotting.plot_ar_quiver(graph, args.figure, title=f"AR quiver near {center!r}")
    if args.format == "dot":
        return graph_to_dot(graph)
    return {"site": site_to_json(site), **graph}


def cmd_oracle_check(args):
    if args.rank < 1 or args.max_winding < 0:
        raise ValidationError("need rank >= 1 and max-winding >= 0")
    site = tube(args.rank)
    objs = tube_objects(site, (args.max_winding + 1) * args.rank)
    report = oracle_sweep(objs, args.field)
    out = {"rank": args.rank, "max_winding": args.max_winding, "field": args.field.name,
           "objects": len(objs), **report}
    if args.figure:
        dims = [[hom_dim(x, y) for y in objs] for x in objs]
        plotting.plot_hom_matrix([repr(x) for x in objs], dims, args.figure,
                                 title=f"dim Hom in the tube of rank {args.rank}")
    if report["mismatches"]:
        raise CheckFailed(out)
    return out


def cmd_coalgebra_check(args):
    if args.rank < 1 or args.trunc < 0:
        raise ValidationError("need rank >= 1 and trunc >= 0")
    c = path_coalgebra(args.rank, args.trunc)
    counit = c.check_counit()
    coassoc = c.check_coassociativity()
    dual = coalgebra_dual_check(c, inj_matrix_algebra(tube(args.rank), range(args.rank), args.trunc + 1,
                                                      field=args.field))
    out = {"rank": args.rank, "trunc": args.trunc, "paths": len(c.basis),
           "counit": counit is None, "coassociativity": coassoc is None, "duality": dual.ok,
           "counterexample": repr(counit or coassoc or dual.counterexample)
           if (counit or coassoc or not dual.ok) else None}
    if out["counterexample"] is not None:
        raise CheckFailed(out)
    return out


def cmd_inj_matrix(args):
    site = site_from_json(args.site)
    keep = json.loads(args.keep)
    if not isinstance(keep, list) or not keep:
        raise ValidationError("keep must be a non-empty JSON list of vertices")
    keep = [vertex_from_json(site, v) for v in keep]
    anchor = None if args.anchor is None else vertex_from_json(site, json.loads(args.anchor))
    a = inj_matrix_algebra(site, keep, args.trunc, anchor=anchor, field=args.field)
    out = {"keep": [vertex_to_json(v) for v in a.keep], "trunc": a.precision,
           "pattern": [list(r) for r in a.pattern],
           "ring": [["xk[[x]]" if m else "k[[x]]" for m in r] for r in a.pattern],
           "matches_display": a.pattern == displayed_pattern(a.size)}
    if args.products:
        prods = []
        m = a.size
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    u = a.unit(i, j, a.pattern[i][j])
                    v = a.unit(j, k, a.pattern[j][k])
                    w = (u * v)[i, k]
                    prods.append({"left": [i, j, a.pattern[i][j]], "right": [j, k, a.pattern[j][k]],
                                  "slot": [i, k], "valuation": w.valuation})
        out["products"] = prods
    return out


def cmd_transport_check(args):
    site = site_from_json(args.site)
    if site.base == "cyclic":
        t = rotation(site, args.shift)
    elif site.base in ("int", "int_pairs_lex"):
        t = shift_transport(site, args.shift)
    else:
        raise ValidationError(f"no built-in automorphism for {site!r}")
    rng = random.Random(args.seed)
    bad = []
    for _ in range(args.pairs):
        x = random_object(site, rng, args.max_winding)
        y = random_object(site, rng, args.max_winding)
        tx, ty = t.obj(x), t.obj(y)
        checks = {"hom": (hom_dim(x, y), hom_dim(tx, ty)), "ext": (ext_dim(x, y), ext_dim(tx, ty))}
        if not x.is_projective:
            img = t.ar_image(ar_sequence(x))
            direct = ar_sequence(tx)
            checks["ar"] = (img, (direct.start, tuple(sorted(direct.middle, key=lambda z: (z.a, z.b))),
                                  direct.end))
        for key, (u, v) in checks.items():
            if u != v:
                bad.append({"source": repr(x), "target": repr(y), "kind": key})
    out = {"site": site_to_json(site), "shift": args.shift, "pairs": args.pairs, "mismatches": bad}
    if bad:
        raise CheckFailed(out)
    return out


# parser


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=int, default=DEFAULT_TRUNC, help="series precision N (default 8)")
    common.add_argument("--field", type=_field, default=Field(DEFAULT_PRIME),
                        help="prime p or Q (default 1009)")

    p = argparse.ArgumentParser(prog="uniserial", description="Computations in tubes and big tubes.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    for name, fn, help_ in (("hom", cmd_hom, "Hom space between two objects"),
                            ("ext", cmd_ext, "dimension of Ext^1")):
        sp = add(name, fn, help_)
        sp.add_argument("--site", required=True)
        sp.add_argument("--from", dest="source", required=True)
        sp.add_argument("--to", dest="target", required=True)

    sp = add("ar", cmd_ar, "almost split sequence ending in an object")
    sp.add_argument("--site", required=True)
    sp.add_argument("--obj", required=True)

    sp = add("ar-quiver", cmd_ar_quiver, "neighbourhood of an object in the AR quiver")
    sp.add_argument("--site", required=True)
    sp.add_argument("--center", required=True)
    sp.add_argument("--radius", type=int, default=2)
    sp.add_argument("--format", choices=("dot", "json"), default="dot")
    sp.add_argument("--figure", help="also render the neighbourhood to this image file")

    sp = add("subobjects", cmd_subobjects, "chain of subobjects")
    sp.add_argument("--site", required=True)
    sp.add_argument("--obj", required=True)
    sp.add_argument("--limit", type=int)

    sp = add("perp", cmd_perp, "perpendicular category to all simples outside a finite set")
    sp.add_argument("--site", required=True)
    sp.add_argument("--keep", required=True)
    sp.add_argument("--obj", help="optionally reflect this ambient object")

    sp = add("oracle-check", cmd_oracle_check, "compare formulas with the matrix oracle")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--max-winding", type=int, default=1)
    sp.add_argument("--figure", help="render the Hom-dimension matrix to this image file")

    sp = add("coalgebra-check", cmd_coalgebra_check, "path coalgebra axioms and duality")
    sp.add_argument("--rank", type=int, required=True)

    sp = add("inj-matrix", cmd_inj_matrix, "endomorphism algebra of finitely many injectives")
    sp.add_argument("--site", required=True)
    sp.add_argument("--keep", required=True)
    sp.add_argument("--anchor")
    sp.add_argument("--products", action="store_true", help="include products of generators")

    sp = add("transport-check", cmd_transport_check, "invariance under a base automorphism")
    sp.add_argument("--site", required=True)
    sp.add_argument("--shift", type=int, default=1)
    sp.add_argument("--pairs", type=int, default=500)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-winding", type=int, default=3)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    if args.trunc < 1 and args.command not in ("coalgebra-check",):
        print("error: --trunc must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        payload = args.func(args)
    except CheckFailed as exc:
        _emit(exc.payload, out)
        return EXIT_CHECK
    except (UniserialError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(payload, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

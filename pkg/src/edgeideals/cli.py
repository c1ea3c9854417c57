"""Command-line front end: Betti tables, duals, witnesses, and campaigns.

Graph arguments take a file path (text format: vertex count on the first
data line, then one `u v` edge per line, `#` comments; or JSON
{"labels": [...], "edges": [...]}) or a catalog name such as `cycle_4`,
`path_5`, `complete_bipartite_2_3`, `ferrers_3_2_1`.

Ideal files are JSON {"variables": [...], "generators": [[e1,...,eN], ...]}.
Families are JSON {"blocks": [{"left": [...], "right": [...]}, ...],
"representatives": [[u, v], ...]} with vertices given as labels or indices.

The default coefficient field is GF(2); `--field` accepts `gf<p>` for any
prime p or `rat` for the rationals.  Single-graph commands cap inputs at
14 vertices and campaigns at 7 unless `--max-n` raises the cap explicitly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .campaigns import Campaign, run_campaign
from .catalog import named_graph
from .cm_bipartite import (
    cm_labeling,
    cm_pd,
    extract_family,
    free_bases,
    hg_generators,
    maximal_boolean_bases,
    poset_of_graph,
)
from .graphs import SimpleGraph, bit_list, iter_bits
from .hochster import betti_table, graph_betti_table, projective_dimension
from .ideals import MonomialIdeal, cover_ideal, edge_ideal
from .linalg import FieldSpec
from .lyubeznik import admissible_symbols, lyubeznik_betti_table, main_theorem_certificate
from .unmixed import acyclic_reduction, kummini_pd, unmixed_pd_witness
from .witness import DisjointFamily, max_pd_witness, witness_for

SINGLE_GRAPH_CAP = 14
CAMPAIGN_CAP = 7


def _fail(msg: str):
    raise SystemExit(f"edgeideals: error: {msg}")


def _field(args) -> FieldSpec:
    try:
        return FieldSpec.parse(args.field)
    except ValueError as exc:
        _fail(str(exc))


def _enforce_cap(n: int, max_n, default_cap: int, what: str):
    cap = default_cap if max_n is None else int(max_n)
    if n > cap:
        _fail(
            f"{what} has {n} vertices, over the cap of {cap}; "
            f"rerun with --max-n {n} to accept the cost"
        )
    if max_n is not None and n > default_cap:
        # the table walks every vertex subset, so be upfront about the bill
        print(
            f"cost estimate: 2^{n} = {1 << n} subset strands per table",
            file=sys.stderr,
        )


def _load_graph(arg: str, max_n=None) -> SimpleGraph:
    if os.path.exists(arg):
        try:
            g = SimpleGraph.load(arg)
        except (ValueError, KeyError) as exc:
            _fail(f"cannot parse graph file {arg!r}: {exc}")
    else:
        try:
            g = named_graph(arg)
        except ValueError:
            _fail(f"{arg!r} is neither a readable file nor a catalog name")
    _enforce_cap(g.n, max_n, SINGLE_GRAPH_CAP, "graph")
    return g


def _load_ideal_or_graph(arg: str, max_n=None):
    """Returns (ideal, graph-or-None); graphs contribute their edge ideal."""
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            data = json.loads(text)
            if "generators" in data:
                ideal = MonomialIdeal.from_json(data)
                _enforce_cap(ideal.nvars, max_n, SINGLE_GRAPH_CAP, "ideal")
                return ideal, None
            g = SimpleGraph.from_json(data)
        else:
            g = SimpleGraph.from_text(text)
    else:
        try:
            g = named_graph(arg)
        except ValueError:
            _fail(f"{arg!r} is neither a readable file nor a catalog name")
    _enforce_cap(g.n, max_n, SINGLE_GRAPH_CAP, "graph")
    return edge_ideal(g), g


def _write_json(path: str, obj):
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path == "-":
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _sigma_mask(g: SimpleGraph, tokens) -> int:
    mask = 0
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            continue
        if tok.isdigit():
            v = int(tok)
            if v >= g.n:
                _fail(f"vertex index {v} out of range for a {g.n}-vertex graph")
        else:
            try:
                v = g.index_of(tok)
            except (KeyError, ValueError):
                _fail(f"unknown vertex label {tok!r}")
        mask |= 1 << v
    return mask


def _print_table(table, title: str):
    print(title)
    print(table.diagram_text())
    print(f"pd  = {table.pd()}")
    print(f"reg = {table.reg()}")


# -- subcommands -------------------------------------------------------------


def cmd_betti(args) -> int:
    g = _load_graph(args.graph, args.max_n)
    field = _field(args)
    table = graph_betti_table(g, field=field, max_vars=max(16, g.n))
    _print_table(table, f"Betti table of S/I(G) over {field!r}")
    if args.multigraded:
        print("multigraded entries:")
        for row in table.multigraded_rows():
            sig = ",".join(row["sigma"])
            print(f"  beta_{row['i']},{{{sig}}} = {row['value']}")
    if args.json:
        _write_json(args.json, table.to_json())
    return 0


def cmd_pd(args) -> int:
    g = _load_graph(args.graph, args.max_n)
    print(projective_dimension(g, _field(args)))
    return 0


def cmd_reg(args) -> int:
    from .hochster import regularity

    g = _load_graph(args.graph, args.max_n)
    print(regularity(g, _field(args)))
    return 0


def cmd_dual(args) -> int:
    g = _load_graph(args.graph, args.max_n)
    try:
        dual = cover_ideal(g)
    except ValueError as exc:
        _fail(str(exc))
    for gen in dual.generators:
        print(gen.pretty(dual.variables))
    if args.json:
        _write_json(args.json, dual.to_json())
    return 0


def cmd_witness(args) -> int:
    g = _load_graph(args.graph, args.max_n)
    if args.target:
        parts = args.target.split(",")
        try:
            i = int(parts[0])
        except ValueError:
            _fail(f"--target must start with the homological degree, got {parts[0]!r}")
        sigma = _sigma_mask(g, parts[1:])
        fam = witness_for(g, i, sigma)
        if fam is None:
            print(f"no disjoint family witnesses beta_{i} in degree {g.label_set(sigma)}")
            return 1
        payload = {"i": i, "sigma": g.label_set(sigma), "family": fam.to_json(g)}
        print(f"beta_{i},{{{','.join(g.label_set(sigma))}}} >= 1 via:")
    else:
        wit = max_pd_witness(g)
        if wit.family is None:
            print("graph has no edges; no family exists")
            return 1
        payload = {"value": wit.value, "family": wit.family.to_json(g)}
        fam = wit.family
        print(f"max family value (pd lower bound): {wit.value}")
    print(json.dumps(fam.to_json(g), indent=2))
    if args.json:
        _write_json(args.json, payload)
    return 0


def cmd_lyubeznik(args) -> int:
    ideal, g = _load_ideal_or_graph(args.source, args.max_n)
    order = None
    if args.order:
        order = tuple(int(tok) for tok in args.order.split(",") if tok.strip())
        if sorted(order) != list(range(ideal.ngens)):
            _fail(
                f"--order must be a permutation of 0..{ideal.ngens - 1} "
                f"(0-based generator positions), got {list(order)}"
            )
    acted = False
    if args.symbols is not None:
        syms = admissible_symbols(ideal, order, s=args.symbols)
        print(json.dumps([{"indices": list(t)} for t in syms]))
        acted = True
    if args.certify:
        if g is None:
            _fail("--certify needs a graph input (families live on graphs)")
        with open(args.certify, encoding="utf-8") as fh:
            fam = DisjointFamily.from_json(g, json.load(fh))
        try:
            s, sigma = main_theorem_certificate(g, fam)
        except (ValueError, RuntimeError) as exc:
            print(f"certificate FAILED: {exc}")
            return 1
        sig = ",".join(g.label_set(sigma))
        print(f"certified: beta_{s},{{{sig}}}(S/I(G)) >= 1 over every field")
        acted = True
    if not acted:
        table = lyubeznik_betti_table(ideal, order, field=_field(args))
        _print_table(table, f"Betti table from the ordered-subset resolution over {_field(args)!r}")
    return 0


def _print_labeling(g: SimpleGraph, lab):
    print("matched pairs (x_k, y_k):")
    for k in range(lab.n):
        print(f"  k={k + 1}: x={g.labels[lab.xs[k]]}  y={g.labels[lab.ys[k]]}")


def _poset_covers(p):
    for a in range(p.n):
        above = p.up[a] & ~(1 << a)
        for b in iter_bits(above):
            if not any(p.leq(a, c) and p.leq(c, b) for c in iter_bits(above) if c != b):
                yield a, b


def cmd_cm(args) -> int:
    g = _load_graph(args.graph, args.max_n)
    try:
        lab = cm_labeling(g)
    except ValueError as exc:
        print(f"not CM bipartite: {exc}")
        return 1
    if lab is None:
        print("graph admits no order-compatible perfect matching: not CM bipartite")
        return 1
    p = poset_of_graph(g, lab)
    _print_labeling(g, lab)
    covers = list(_poset_covers(p))
    print("poset cover relations:")
    if not covers:
        print("  (antichain)")
    for a, b in covers:
        print(f"  {a + 1} < {b + 1}")
    hg = hg_generators(p)
    print("dual ideal generators (one per poset ideal):")
    for gen in hg.generators:
        print(f"  {gen.pretty(hg.variables)}")
    print("free basis counts by homological degree:")
    for i in range(p.n + 1):
        cnt = len(free_bases(p, i))
        if cnt:
            print(f"  i={i}: {cnt}")
    print("maximal Boolean bases and extracted families:")
    for basis in maximal_boolean_bases(p):
        fam = extract_family(g, lab, basis)
        lo, hi = basis.interval()
        print(
            f"  interval [{bit_list(lo)}, {bit_list(hi)}] i={basis.i}: "
            f"{json.dumps(fam.to_json(g))}"
        )
    formula = cm_pd(g)
    oracle = projective_dimension(g, _field(args))
    verdict = "OK" if formula == oracle else "MISMATCH"
    print(f"pd: formula {formula}, Betti table {oracle}  [{verdict}]")
    return 0 if formula == oracle else 1


def cmd_unmixed(args) -> int:
    g = _load_graph(args.graph, args.max_n)
    try:
        red = acyclic_reduction(g)
    except ValueError as exc:
        print(f"not unmixed bipartite: {exc}")
        return 1
    field = _field(args)
    _print_labeling(g, red.labeling)
    print("directed relation arcs (columns i -> j):")
    for i, mask in enumerate(red.arcs):
        for j in iter_bits(mask):
            if j != i:
                print(f"  {i + 1} -> {j + 1}")
    print("strongly connected classes (zeta = size):")
    for a, cls in enumerate(red.classes):
        members = ", ".join(str(i + 1) for i in iter_bits(cls))
        print(f"  Z_{a + 1} = {{{members}}}  zeta={red.zeta[a]}")
    print(f"acyclic reduction on {red.t} classes, edges:")
    for u, v in red.ghat.edges():
        print(f"  {red.ghat.labels[u]} {red.ghat.labels[v]}")
    dual_table = betti_table(cover_ideal(red.ghat), field, subject="ideal")
    _print_table(dual_table, f"dual Betti table of the reduction over {field!r}")
    wit = unmixed_pd_witness(g, field)
    print("weighted maximizers (r, sigma-hat):")
    for r, s in wit.maximizers:
        print(f"  r={r}  sigma-hat={{{','.join(red.ghat.label_set(s))}}}")
    r, s = wit.entry
    print(f"chosen entry: r={r}, sigma-hat={{{','.join(red.ghat.label_set(s))}}}")
    print(f"lifted family: {json.dumps(wit.family.to_json(g))}")
    formula = kummini_pd(g, field)
    oracle = projective_dimension(g, field)
    verdict = "OK" if formula == oracle == wit.value else "MISMATCH"
    print(f"pd: formula {formula}, witness {wit.value}, Betti table {oracle}  [{verdict}]")
    return 0 if verdict == "OK" else 1


def cmd_verify(args) -> int:
    try:
        campaign = Campaign.load(args.campaign)
    except (OSError, ValueError, KeyError) as exc:
        _fail(f"cannot load campaign {args.campaign!r}: {exc}")
    if args.seed is not None:
        campaign.seed = args.seed
    if args.max_n is not None:
        campaign.caps["max_n"] = args.max_n
        if args.max_n > CAMPAIGN_CAP:
            print(
                f"cost estimate: tables walk 2^{args.max_n} = {1 << args.max_n} "
                "subsets per graph; graph counts grow superexponentially in the cap",
                file=sys.stderr,
            )
    try:
        report = run_campaign(campaign, workers=args.workers, timing=args.timing)
    except ValueError as exc:
        _fail(str(exc))
    print(report.human())
    if args.json:
        _write_json(args.json, report.to_json())
    if args.csv:
        if args.csv == "-":
            print(report.to_csv())
        else:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(report.to_csv())
    return 0 if report.ok else 1


# -- parser wiring ------------------------------------------------------------


def _add_field(p):
    p.add_argument("--field", default="gf2", help="coefficient field: gf<p> or rat (default gf2)")


def _add_max_n(p):
    p.add_argument(
        "--max-n",
        type=int,
        default=None,
        metavar="N",
        help="raise the vertex cap (prints a cost estimate)",
    )


def _add_json_out(p):
    p.add_argument("--json", metavar="OUT", help="also write JSON to OUT ('-' for stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeideals",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="multigraded Betti table of S/I(G)")
    p.add_argument("graph")
    _add_field(p)
    p.add_argument("--multigraded", action="store_true", help="list every beta_{i,sigma}")
    _add_json_out(p)
    _add_max_n(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("pd", help="projective dimension of S/I(G)")
    p.add_argument("graph")
    _add_field(p)
    _add_max_n(p)
    p.set_defaults(func=cmd_pd)

    p = sub.add_parser("reg", help="Castelnuovo-Mumford regularity of S/I(G)")
    p.add_argument("graph")
    _add_field(p)
    _add_max_n(p)
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("dual", help="generators of the cover ideal I(G)*")
    p.add_argument("graph")
    _add_json_out(p)
    _add_max_n(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("witness", help="disjoint complete bipartite families")
    p.add_argument("graph")
    p.add_argument(
        "--target",
        metavar="i,v1,v2,...",
        help="find a family for beta_i in the multidegree spanned by the listed vertices",
    )
    p.add_argument(
        "--max",
        action="store_true",
        help="maximize |sigma| - r over all valid families (the default action)",
    )
    _add_json_out(p)
    _add_max_n(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser(
        "lyubeznik",
        help="ordered-subset resolution: strand table, admissible symbols, certificates",
    )
    p.add_argument("source", help="ideal JSON, graph file, or catalog name")
    p.add_argument("--order", metavar="i1,i2,...", help="generator order, 0-based positions")
    _add_field(p)
    p.add_argument(
        "--symbols",
        type=int,
        metavar="S",
        default=None,
        help="dump admissible symbols with S indices as JSON",
    )
    p.add_argument(
        "--certify",
        metavar="FAMILY.json",
        help="check the non-vanishing certificate for a family file",
    )
    _add_max_n(p)
    p.set_defaults(func=cmd_lyubeznik)

    p = sub.add_parser("cm", help="Cohen-Macaulay bipartite analysis")
    cm_sub = p.add_subparsers(dest="action", required=True)
    q = cm_sub.add_parser("analyze", help="labeling, poset, dual ideal, bases, pd cross-check")
    q.add_argument("graph")
    _add_field(q)
    _add_max_n(q)
    q.set_defaults(func=cmd_cm)

    p = sub.add_parser("unmixed", help="unmixed bipartite analysis")
    um_sub = p.add_subparsers(dest="action", required=True)
    q = um_sub.add_parser(
        "analyze", help="labeling, classes, reduction, weighted formula, lifted witness"
    )
    q.add_argument("graph")
    _add_field(q)
    _add_max_n(q)
    q.set_defaults(func=cmd_unmixed)

    p = sub.add_parser("verify", help="run a theorem-verification campaign")
    p.add_argument("campaign", help="campaign JSON file")
    _add_json_out(p)
    p.add_argument("--csv", metavar="OUT", help="also write CSV to OUT ('-' for stdout)")
    p.add_argument("--workers", type=int, default=None, help="worker processes")
    p.add_argument("--seed", type=int, default=None, help="override the campaign seed")
    _add_max_n(p)
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in reports")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

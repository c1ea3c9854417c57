"""Duplicate-free graph and poset corpora for exhaustive verification.

All generators work by extension plus canonical-form deduplication, so each
isomorphism class appears exactly once and iteration order is deterministic.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .cm_bipartite import Poset, graph_from_poset
from .graphs import (
    SimpleGraph,
    are_isomorphic,
    canonical_form,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    ferrers_graph,
    is_chordal,
    is_cochordal,
    path_graph,
)
from .unmixed import blow_up


class _IsoDedup:
    """Keeps one representative per isomorphism class.

    Cheap-invariant buckets plus pairwise isomorphism tests; unlike canonical
    hashing this stays fast on highly symmetric graphs (complete bipartite
    blow-ups), where minimizing over permutations explodes.
    """

    def __init__(self):
        self.buckets: dict[tuple, list[SimpleGraph]] = {}

    def add(self, g: SimpleGraph) -> bool:
        key = (g.n, g.edge_count(), tuple(sorted(g.degree(v) for v in range(g.n))))
        bucket = self.buckets.setdefault(key, [])
        for kept in bucket:
            if are_isomorphic(g, kept):
                return False
        bucket.append(g)
        return True


@lru_cache(maxsize=None)
def graphs_on(n: int) -> tuple[SimpleGraph, ...]:
    """All simple graphs on exactly n vertices, one per isomorphism class.

    Extend each (n-1)-vertex graph by a new vertex attached to every subset
    of the old ones; dedupe by canonical form.
    """
    if n == 0:
        return (SimpleGraph(0),)
    out = []
    seen = set()
    for base in graphs_on(n - 1):
        for attach in range(1 << (n - 1)):
            g = SimpleGraph(n)
            for u, v in base.edges():
                g.add_edge(u, v)
            for u in range(n - 1):
                if attach >> u & 1:
                    g.add_edge(u, n - 1)
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return tuple(out)


def connected_graphs_on(n: int) -> list[SimpleGraph]:
    return [g for g in graphs_on(n) if len(g.components()) == 1]


@lru_cache(maxsize=None)
def posets_on(k: int) -> tuple[Poset, ...]:
    """All posets on exactly k elements, one per isomorphism class, built by
    repeatedly adjoining a new maximal element above a chosen down-set."""
    if k == 0:
        return (Poset(0, []),)
    out = []
    seen = set()
    for base in posets_on(k - 1):
        for down in base.ideals():
            up = [
                m | ((1 << (k - 1)) if down >> i & 1 else 0)
                for i, m in enumerate(base.up)
            ]
            up.append(1 << (k - 1))
            q = Poset(k, up)
            key = q.canonical_key()
            if key not in seen:
                seen.add(key)
                out.append(q)
    return tuple(out)


def unmixed_blowups(max_elements=3, max_zeta=3, max_vertices=12) -> list[SimpleGraph]:
    """Blow-ups of poset graphs: every unmixed bipartite graph whose reduction
    has at most max_elements classes of size at most max_zeta each."""
    out = []
    seen = _IsoDedup()
    for k in range(1, max_elements + 1):
        for p in posets_on(k):
            for zeta in product(range(1, max_zeta + 1), repeat=k):
                if 2 * sum(zeta) > max_vertices:
                    continue
                g = blow_up(p, zeta)
                if seen.add(g):
                    out.append(g)
    return out


def cm_poset_graphs(max_elements=4) -> list[SimpleGraph]:
    out = []
    seen = _IsoDedup()
    for k in range(1, max_elements + 1):
        for p in posets_on(k):
            g = graph_from_poset(p)
            if seen.add(g):
                out.append(g)
    return out


def partitions_in_box(max_rows: int, max_cols: int):
    """Weakly decreasing positive tuples with at most max_rows parts, each at
    most max_cols."""

    def rec(prev, rows):
        if rows == max_rows:
            return
        for part in range(prev, 0, -1):
            yield (part,)
            for rest in rec(part, rows + 1):
                yield (part,) + rest

    yield from rec(max_cols, 0)


def ferrers_graphs(max_rows=4, max_cols=4) -> list[SimpleGraph]:
    pairs = []
    seen = _IsoDedup()
    for lam in sorted(partitions_in_box(max_rows, max_cols), key=lambda t: (len(t), t)):
        g = ferrers_graph(lam)
        if seen.add(g):
            pairs.append((lam, g))
    return [g for _, g in pairs]


_NAMED = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
}


def named_graph(name: str) -> SimpleGraph:
    """path_N, cycle_N, complete_N, complete_bipartite_M_N, ferrers_a_b_c."""
    parts = name.split("_")
    if parts[0] == "complete" and len(parts) == 4 and parts[1] == "bipartite":
        return complete_bipartite_graph(int(parts[2]), int(parts[3]))
    if parts[0] == "ferrers":
        return ferrers_graph(tuple(int(x) for x in parts[1:]))
    if parts[0] in _NAMED and len(parts) == 2:
        return _NAMED[parts[0]](int(parts[1]))
    raise ValueError(f"unknown named graph: {name!r}")


def generate_catalog(spec: dict) -> list[tuple[str, SimpleGraph]]:
    """Materialize a graph corpus from a JSON-able spec.

    Classes: all, connected, chordal, cochordal, cm_posets, unmixed_blowups,
    ferrers, named, files.  Size selection: "n" (exact) or "max_n" (sweep
    from 1).
    """
    cls = spec.get("class")
    if cls is None:
        raise ValueError("catalog spec needs a 'class' key")

    def sizes():
        if "n" in spec:
            return [int(spec["n"])]
        if "max_n" in spec:
            return list(range(1, int(spec["max_n"]) + 1))
        raise ValueError(f"catalog class {cls!r} needs 'n' or 'max_n'")

    out: list[tuple[str, SimpleGraph]] = []
    if cls in ("all", "connected", "chordal", "cochordal"):
        for n in sizes():
            pool = graphs_on(n) if cls == "all" else connected_graphs_on(n)
            if cls == "chordal":
                pool = [g for g in graphs_on(n) if is_chordal(g)]
            elif cls == "cochordal":
                pool = [g for g in graphs_on(n) if is_cochordal(g)]
            for idx, g in enumerate(pool):
                out.append((f"{cls}/{n}/{idx}", g))
    elif cls == "cm_posets":
        for idx, g in enumerate(cm_poset_graphs(int(spec.get("max_elements", 4)))):
            out.append((f"cm_posets/{idx}", g))
    elif cls == "unmixed_blowups":
        graphs = unmixed_blowups(
            int(spec.get("max_elements", 3)),
            int(spec.get("max_zeta", 3)),
            int(spec.get("max_vertices", 12)),
        )
        for idx, g in enumerate(graphs):
            out.append((f"unmixed_blowups/{idx}", g))
    elif cls == "ferrers":
        graphs = ferrers_graphs(
            int(spec.get("max_rows", 4)), int(spec.get("max_cols", 4))
        )
        for idx, g in enumerate(graphs):
            out.append((f"ferrers/{idx}", g))
    elif cls == "named":
        for name in spec["names"]:
            out.append((f"named/{name}", named_graph(name)))
    elif cls == "files":
        for path in spec["files"]:
            out.append((f"file/{path}", SimpleGraph.load(path)))
    else:
        raise ValueError(f"unknown catalog class: {cls!r}")
    return out

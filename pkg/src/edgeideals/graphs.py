"""Finite simple graphs on at most 64 vertices, with bitset vertex sets.

Vertex sets are plain Python ints used as bitmasks (bit v set iff vertex v
is in the set), so unions/intersections/complements are single int ops and
a set fits in one machine word at the supported scale.
"""

from __future__ import annotations

import json

MAX_VERTICES = 64


def bits_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def iter_subsets(mask: int):
    """All submasks of mask, increasing in the submask order, ending at mask."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


class SimpleGraph:
    """Undirected simple graph; adjacency stored as one bitmask per vertex."""

    __slots__ = ("n", "labels", "adj")

    def __init__(self, n, edges=(), labels=None):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if labels is None:
            labels = [f"x{i + 1}" for i in range(n)]
        labels = list(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError("labels must be distinct and match the vertex count")
        self.n = n
        self.labels = labels
        self.adj = [0] * n
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u, v):
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u},{v}) out of range")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if self.adj[u] >> v & 1:
            raise ValueError(f"duplicate edge ({u},{v})")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    # -- basic accessors ----------------------------------------------------

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u, v) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v) -> int:
        return self.adj[v].bit_count()

    def label_of(self, v) -> str:
        return self.labels[v]

    def index_of(self, label) -> int:
        return self.labels.index(label)

    def label_set(self, mask: int) -> list[str]:
        return [self.labels[v] for v in iter_bits(mask)]

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.labels == other.labels
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, tuple(self.labels), tuple(self.adj)))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"

    # -- derived graphs -----------------------------------------------------

    def induced_subgraph(self, sigma: int) -> "SimpleGraph":
        """Subgraph on the vertices of sigma, reindexed in original order."""
        verts = bit_list(sigma & self.vertex_mask())
        pos = {v: i for i, v in enumerate(verts)}
        g = SimpleGraph(len(verts), labels=[self.labels[v] for v in verts])
        for u in verts:
            for w in iter_bits(self.adj[u] & sigma):
                if w > u:
                    g.add_edge(pos[u], pos[w])
        return g

    def complement(self) -> "SimpleGraph":
        g = SimpleGraph(self.n, labels=list(self.labels))
        full = self.vertex_mask()
        for v in range(self.n):
            g.adj[v] = full & ~self.adj[v] & ~(1 << v)
        return g

    # -- connectivity -------------------------------------------------------

    def component_of(self, v: int, within: int | None = None) -> int:
        """Bitmask of the connected component of v inside `within`."""
        if within is None:
            within = self.vertex_mask()
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= self.adj[u] & within
            frontier = nxt & ~comp
            comp |= frontier
        return comp

    def components(self, within: int | None = None) -> list[int]:
        if within is None:
            within = self.vertex_mask()
        left = within
        out = []
        while left:
            v = (left & -left).bit_length() - 1
            comp = self.component_of(v, within)
            out.append(comp)
            left &= ~comp
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- serialization ------------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "SimpleGraph":
        """Parse the line format: first data line n, then one `u v` per edge.

        Lines starting with `#` (or inline `#` tails) are comments; vertex
        indices are 0-based; duplicate edges and self-loops are rejected.
        """
        rows = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                rows.append(line)
        if not rows:
            raise ValueError("empty graph file")
        try:
            n = int(rows[0])
        except ValueError:
            raise ValueError(f"first line must be the vertex count, got {rows[0]!r}")
        g = cls(n)
        for line in rows[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"bad edge line {line!r}")
            g.add_edge(int(parts[0]), int(parts[1]))
        return g

    @classmethod
    def from_json(cls, obj) -> "SimpleGraph":
        if isinstance(obj, str):
            obj = json.loads(obj)
        labels = obj.get("labels")
        edges = obj.get("edges", [])
        if labels is None:
            n = 1 + max((max(e) for e in edges), default=-1)
            labels = [f"x{i + 1}" for i in range(n)]
        g = cls(len(labels), labels=labels)
        for e in edges:
            u, v = e
            if isinstance(u, str):
                u = g.index_of(u)
            if isinstance(v, str):
                v = g.index_of(v)
            g.add_edge(u, v)
        return g

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "edges": [list(e) for e in self.edges()]}

    @classmethod
    def load(cls, path: str) -> "SimpleGraph":
        with open(path) as fh:
            text = fh.read()
        stripped = text.lstrip()
        if stripped.startswith("{"):
            return cls.from_json(stripped)
        return cls.from_text(text)


# -- constructors ------------------------------------------------------------


def graph_from_edges(n, edges, labels=None) -> SimpleGraph:
    return SimpleGraph(n, edges=edges, labels=labels)


def path_graph(n) -> SimpleGraph:
    return SimpleGraph(n, edges=[(i, i + 1) for i in range(n - 1)])


def cycle_graph(n) -> SimpleGraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return SimpleGraph(n, edges=[(i, (i + 1) % n) for i in range(n)])


def complete_graph(n) -> SimpleGraph:
    return SimpleGraph(n, edges=[(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(m, n, left_labels=None, right_labels=None) -> SimpleGraph:
    if left_labels is None:
        left_labels = [f"u{i + 1}" for i in range(m)]
    if right_labels is None:
        right_labels = [f"v{j + 1}" for j in range(n)]
    g = SimpleGraph(m + n, labels=list(left_labels) + list(right_labels))
    for i in range(m):
        for j in range(n):
            g.add_edge(i, m + j)
    return g


def ferrers_graph(shape) -> SimpleGraph:
    """Bipartite graph of a partition: row i meets columns 1..shape[i]."""
    shape = list(shape)
    if not shape or any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or shape[-1] < 1:
        raise ValueError(f"not a partition: {shape}")
    r, c = len(shape), shape[0]
    labels = [f"u{i + 1}" for i in range(r)] + [f"v{j + 1}" for j in range(c)]
    g = SimpleGraph(r + c, labels=labels)
    for i, row in enumerate(shape):
        for j in range(row):
            g.add_edge(i, r + j)
    return g


def disjoint_union(g1: SimpleGraph, g2: SimpleGraph, relabel=True) -> SimpleGraph:
    if relabel:
        labels = [f"x{i + 1}" for i in range(g1.n + g2.n)]
    else:
        labels = g1.labels + g2.labels
    g = SimpleGraph(g1.n + g2.n, labels=labels)
    for u, v in g1.edges():
        g.add_edge(u, v)
    for u, v in g2.edges():
        g.add_edge(g1.n + u, g1.n + v)
    return g


# -- graph-theoretic quantities ----------------------------------------------


def normalize_edge(g: SimpleGraph, e) -> tuple[int, int]:
    u, v = e
    if isinstance(u, str):
        u = g.index_of(u)
    if isinstance(v, str):
        v = g.index_of(v)
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    return (u, v) if u < v else (v, u)


def is_three_disjoint(g: SimpleGraph, e1, e2) -> bool:
    """Edges are 3-disjoint when disjoint and inducing no third edge between them.

    Equivalently the induced subgraph on their four endpoints is exactly 2K2.
    """
    a, b = normalize_edge(g, e1)
    c, d = normalize_edge(g, e2)
    if (1 << a | 1 << b) & (1 << c | 1 << d):
        return False
    cross = (g.adj[a] | g.adj[b]) & (1 << c | 1 << d)
    return cross == 0


def a_number(g: SimpleGraph) -> int:
    """Maximum size of a set of pairwise 3-disjoint edges."""
    edges = g.edges()
    m = len(edges)
    compat = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if is_three_disjoint(g, edges[i], edges[j]):
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    best = 0

    def grow(cand: int, size: int):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            i = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            grow(cand & compat[i], size + 1)

    grow((1 << m) - 1, 0)
    return best


def c_number(g: SimpleGraph) -> int:
    """Largest c with a spanning complete c-partite subgraph; 1 if none.

    The parts of such a subgraph are unions of connected components of the
    complement, so the maximum equals the complement's component count.
    """
    if g.n == 0:
        raise ValueError("c-number needs at least one vertex")
    return len(g.complement().components())


def bipartition(g: SimpleGraph) -> tuple[int, int] | None:
    """2-coloring as (left_mask, right_mask), or None. Isolated vertices go left."""
    color = [-1] * g.n
    left = right = 0
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for w in iter_bits(g.adj[u]):
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    for v in range(g.n):
        if color[v] == 0:
            left |= 1 << v
        else:
            right |= 1 << v
    return left, right


def is_complete_bipartite(g: SimpleGraph) -> tuple[int, int] | None:
    """The (left, right) partition if G is complete bipartite with both parts nonempty."""
    if g.n < 2:
        return None
    parts = bipartition(g)
    if parts is None:
        return None
    left, right = parts
    if left == 0 or right == 0:
        return None
    lsize, rsize = left.bit_count(), right.bit_count()
    if g.edge_count() != lsize * rsize:
        return None
    for u in iter_bits(left):
        if g.adj[u] != right:
            return None
    return parts


def is_chordal(g: SimpleGraph) -> bool:
    """Maximum cardinality search followed by the perfect-elimination check."""
    n = g.n
    if n <= 2:
        return True
    weight = [0] * n
    order = []
    placed = 0
    for _ in range(n):
        v = max((u for u in range(n) if not placed >> u & 1), key=lambda u: weight[u])
        order.append(v)
        placed |= 1 << v
        for w in iter_bits(g.adj[v] & ~placed):
            weight[w] += 1
    # order[k] was numbered at step k; check reverse order is a PEO:
    # earlier-numbered neighbors of v must form a clique with its latest one.
    num = [0] * n
    for k, v in enumerate(order):
        num[v] = k
    for v in order:
        earlier = [w for w in iter_bits(g.adj[v]) if num[w] < num[v]]
        if not earlier:
            continue
        u = max(earlier, key=lambda w: num[w])
        need = bits_of(earlier) & ~(1 << u)
        if need & ~g.adj[u]:
            return False
    return True


def is_cochordal(g: SimpleGraph) -> bool:
    return is_chordal(g.complement())


# -- isomorphism-canonical forms ----------------------------------------------


def _refine_colors(n, adj, colors):
    """1-WL refinement: split color classes by multiset of neighbor colors."""
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[w] for w in iter_bits(adj[v]))))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[sig[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def canonical_form(g: SimpleGraph) -> tuple:
    """Label-independent canonical key: (n, min edge bitstring over isomorphisms).

    Permutations are restricted to those preserving the 1-WL color classes,
    which is sound since isomorphisms preserve them.
    """
    from itertools import permutations

    n = g.n
    if n == 0:
        return (0, 0)
    colors = _refine_colors(n, g.adj, [g.degree(v) for v in range(n)])
    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    cell_list = [cells[c] for c in sorted(cells)]

    best = None
    edges = g.edges()

    def consider(perm_map):
        nonlocal best
        code = 0
        for u, v in edges:
            a, b = perm_map[u], perm_map[v]
            if a > b:
                a, b = b, a
            code |= 1 << (a * n + b)
        if best is None or code < best:
            best = code

    def assemble(idx, acc):
        if idx == len(cell_list):
            perm_map = [0] * n
            pos = 0
            for cell_perm in acc:
                for v in cell_perm:
                    perm_map[v] = pos
                    pos += 1
            consider(perm_map)
            return
        for p in permutations(cell_list[idx]):
            assemble(idx + 1, acc + [p])

    assemble(0, [])
    return (n, best)


def are_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Backtracking isomorphism test with joint color refinement.

    Colors are refined on the disjoint union so classes align across the two
    graphs; unlike canonical_form this only needs to find one isomorphism,
    which stays fast on highly symmetric graphs.
    """
    n = g.n
    if n != h.n or g.edge_count() != h.edge_count():
        return False
    union_adj = list(g.adj) + [m << n for m in h.adj]
    colors = _refine_colors(2 * n, union_adj, [union_adj[v].bit_count() for v in range(2 * n)])
    gcol, hcol = colors[:n], colors[n:]
    if sorted(gcol) != sorted(hcol):
        return False

    # map g-vertices in order of ascending candidate count
    order = sorted(range(n), key=lambda v: (sum(1 for w in range(n) if hcol[w] == gcol[v]), v))
    mapped_to = [-1] * n
    used = 0

    def place(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used >> w & 1 or hcol[w] != gcol[v]:
                continue
            ok = True
            for j in range(k):
                u = order[j]
                if bool(g.adj[v] >> u & 1) != bool(h.adj[w] >> mapped_to[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapped_to[v] = w
            used |= 1 << w
            if place(k + 1):
                return True
            used &= ~(1 << w)
            mapped_to[v] = -1
        return False

    return place(0)


def is_ferrers(g: SimpleGraph) -> bool:
    """Connected bipartite with one side's neighborhoods forming a chain.

    Sorting the rows by degree then pairing columns by degree realizes any
    such graph as the bipartite graph of a partition shape, and conversely.
    """
    if g.edge_count() == 0 or len(g.components()) != 1:
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    nbrs = sorted((g.adj[v] for v in iter_bits(parts[0])), key=lambda m: -m.bit_count())
    return all(nbrs[k] & ~nbrs[k - 1] == 0 for k in range(1, len(nbrs)))

"""Cohen-Macaulay bipartite graphs, their posets, and extremal free bases.

A bipartite graph on {x_1..x_n} u {y_1..y_n} is CM exactly when it admits a
labeling with x_i y_i edges (a perfect matching), x_i y_j in E implying
i <= j, and transitivity (x_i y_j, x_j y_k in E imply x_i y_k in E).  Such a
labeling is the comparability data of a poset P on n points; the dual of the
edge ideal is generated by one monomial per poset ideal of P, its minimal
free resolution has basis elements indexed by pairs (ideal, complementary
antichain), and the extremal basis elements correspond to maximal Boolean
intervals in the lattice of poset ideals.  Extracting a vertex-disjoint
complete bipartite family from a maximal basis yields the closed-form
projective dimension.
"""

from __future__ import annotations

from itertools import permutations

from .graphs import SimpleGraph, bipartition, bit_list, bits_of, iter_bits
from .ideals import Monomial, MonomialIdeal
from .witness import CompleteBipartiteSub, DisjointFamily, find_representatives, is_valid_family


class Poset:
    """Finite poset on 0..n-1; up[i] is the bitmask of j with p_i <= p_j."""

    __slots__ = ("n", "up")

    def __init__(self, n, up):
        self.n = n
        self.up = list(up)
        for i in range(n):
            if not self.up[i] >> i & 1:
                raise ValueError("order must be reflexive")
            for j in iter_bits(self.up[i]):
                if i != j and self.up[j] >> i & 1:
                    raise ValueError("order must be antisymmetric")
                if self.up[j] & ~self.up[i]:
                    raise ValueError("order must be transitive")

    @classmethod
    def from_relations(cls, n, pairs) -> "Poset":
        """Reflexive-transitive closure of the given i <= j pairs."""
        up = [1 << i for i in range(n)]
        for i, j in pairs:
            up[i] |= 1 << j
        changed = True
        while changed:
            changed = False
            for i in range(n):
                grown = up[i]
                for j in iter_bits(up[i]):
                    grown |= up[j]
                if grown != up[i]:
                    up[i] = grown
                    changed = True
        return cls(n, up)

    def leq(self, i, j) -> bool:
        return bool(self.up[i] >> j & 1)

    def down_mask(self, i) -> int:
        return bits_of(j for j in range(self.n) if self.leq(j, i))

    def is_ideal(self, mask: int) -> bool:
        return all(self.down_mask(i) & ~mask == 0 for i in iter_bits(mask))

    def maximal_of(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            if self.up[i] & mask == 1 << i:
                out |= 1 << i
        return out

    def ideals(self) -> list[int]:
        """All poset ideals (down-sets), by peeling maximal elements."""
        memo: dict[int, list[int]] = {0: [0]}

        def of(mask: int) -> list[int]:
            got = memo.get(mask)
            if got is not None:
                return got
            m = (self.maximal_of(mask)).bit_length() - 1
            rest = of(mask & ~(1 << m))
            need = self.down_mask(m) & ~(1 << m)
            out = sorted(set(rest) | {d | 1 << m for d in rest if need & ~d == 0})
            memo[mask] = out
            return out

        return of((1 << self.n) - 1)

    def canonical_key(self) -> tuple:
        best = None
        for perm in permutations(range(self.n)):
            code = 0
            for i in range(self.n):
                for j in iter_bits(self.up[i]):
                    code |= 1 << (perm[i] * self.n + perm[j])
            if best is None or code < best:
                best = code
        return (self.n, best)

    def __repr__(self):
        rels = [
            (i, j)
            for i in range(self.n)
            for j in iter_bits(self.up[i])
            if i != j
        ]
        return f"Poset(n={self.n}, relations={rels})"


class CMGraphLabeling:
    """Pairing of graph vertices into matched columns (x_i, y_i), i = 0..n-1."""

    __slots__ = ("xs", "ys")

    def __init__(self, xs, ys):
        if len(xs) != len(ys):
            raise ValueError("sides must have equal length")
        self.xs = list(xs)
        self.ys = list(ys)

    @property
    def n(self) -> int:
        return len(self.xs)

    def __repr__(self):
        return f"CMGraphLabeling(xs={self.xs}, ys={self.ys})"


def _component_labelings(g: SimpleGraph, xcand, ycand):
    """Pairings of xcand with ycand along matching edges, one list per matching."""
    if len(xcand) != len(ycand):
        return
    xs = list(xcand)

    def match(pos: int, used: int, acc: list[int]):
        if pos == len(xs):
            yield list(acc)
            return
        x = xs[pos]
        for y in ycand:
            if used >> y & 1 or not g.has_edge(x, y):
                continue
            acc.append(y)
            yield from match(pos + 1, used | 1 << y, acc)
            acc.pop()

    yield from match(0, 0, [])


def _relation_arcs(g: SimpleGraph, xs, ys):
    n = len(xs)
    arcs = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and g.has_edge(xs[i], ys[j]):
                arcs[i] |= 1 << j
    return arcs


def _transitive(arcs) -> bool:
    n = len(arcs)
    for i in range(n):
        reach = 0
        for j in iter_bits(arcs[i]):
            reach |= arcs[j]
        if reach & ~arcs[i] & ~(1 << i):
            return False
    return True


def _antisymmetric(arcs) -> bool:
    return all(
        not (arcs[j] >> i & 1)
        for i in range(len(arcs))
        for j in iter_bits(arcs[i])
        if i != j
    )


def _matching_search(g: SimpleGraph, need_antisymmetric: bool):
    """Per-component matchings whose x->y relation is transitive (and acyclic
    when requested); yields (xs, ys) for the whole graph or None."""
    if bipartition(g) is None:
        raise ValueError("graph is not bipartite")
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise ValueError("isolated vertices are not allowed here")
    all_xs: list[int] = []
    all_ys: list[int] = []
    for comp in g.components():
        sub_parts = bipartition(g.induced_subgraph(comp))
        verts = bit_list(comp)
        found = None
        for flip in (False, True):
            left_mask, right_mask = sub_parts if not flip else sub_parts[::-1]
            xcand = [verts[i] for i in iter_bits(left_mask)]
            ycand = [verts[i] for i in iter_bits(right_mask)]
            if len(xcand) != len(ycand):
                continue
            for ys in _component_labelings(g, xcand, ycand):
                arcs = _relation_arcs(g, xcand, ys)
                if _transitive(arcs) and (not need_antisymmetric or _antisymmetric(arcs)):
                    found = (xcand, ys, arcs)
                    break
            if found:
                break
        if found is None:
            return None
        all_xs.extend(found[0])
        all_ys.extend(found[1])
    return all_xs, all_ys


def cm_labeling(g: SimpleGraph) -> CMGraphLabeling | None:
    """A labeling satisfying the matching, comparability, and transitivity
    conditions, with columns sorted along a linear extension; None if G is
    bipartite without isolated vertices but admits none."""
    got = _matching_search(g, need_antisymmetric=True)
    if got is None:
        return None
    xs, ys = got
    arcs = _relation_arcs(g, xs, ys)
    n = len(xs)
    order = []
    remaining = set(range(n))
    indeg = {i: sum(1 for j in remaining if j != i and arcs[j] >> i & 1) for i in remaining}
    while remaining:
        free = sorted(i for i in remaining if indeg[i] == 0)
        if not free:
            raise RuntimeError("acyclic relation expected")
        i = free[0]
        order.append(i)
        remaining.discard(i)
        for j in remaining:
            if arcs[i] >> j & 1:
                indeg[j] -= 1
    return CMGraphLabeling([xs[i] for i in order], [ys[i] for i in order])


def poset_of_graph(g: SimpleGraph, lab: CMGraphLabeling) -> Poset:
    arcs = _relation_arcs(g, lab.xs, lab.ys)
    return Poset(lab.n, [arcs[i] | 1 << i for i in range(lab.n)])


def graph_from_poset(p: Poset, x_labels=None, y_labels=None) -> SimpleGraph:
    n = p.n
    if x_labels is None:
        x_labels = [f"x{i + 1}" for i in range(n)]
    if y_labels is None:
        y_labels = [f"y{i + 1}" for i in range(n)]
    g = SimpleGraph(2 * n, labels=list(x_labels) + list(y_labels))
    for i in range(n):
        for j in iter_bits(p.up[i]):
            g.add_edge(i, n + j)
    return g


def is_cm_bipartite(g: SimpleGraph) -> bool:
    if bipartition(g) is None or g.n == 0 or any(g.degree(v) == 0 for v in range(g.n)):
        return False
    return cm_labeling(g) is not None


def poset_ideals(p: Poset) -> list[int]:
    return p.ideals()


def hg_generators(p: Poset) -> MonomialIdeal:
    """The dual ideal: one squarefree generator per poset ideal.

    Variables are x_1..x_n, y_1..y_n; the ideal I contributes
    prod_{q in I} x_q * prod_{q not in I} y_q.
    """
    n = p.n
    variables = [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(n)]
    full = (1 << n) - 1
    gens = [
        Monomial.from_support(ideal | (full & ~ideal) << n, 2 * n)
        for ideal in p.ideals()
    ]
    return MonomialIdeal(variables, gens)


class FreeBasis:
    """Resolution basis element e(I, T): T covers the complement of I and meets
    I only in maximal elements; i = #(I n T) is the homological degree."""

    __slots__ = ("n", "ideal", "tset")

    def __init__(self, n, ideal, tset):
        self.n = n
        self.ideal = ideal
        self.tset = tset

    @property
    def i(self) -> int:
        return (self.ideal & self.tset).bit_count()

    @property
    def degree(self) -> int:
        """Multidegree over x_1..x_n,y_1..y_n as a 2n-bit mask."""
        full = (1 << self.n) - 1
        ybits = (full & ~self.ideal) | (self.ideal & self.tset)
        return self.ideal | ybits << self.n

    def interval(self) -> tuple[int, int]:
        return (self.ideal & ~(self.ideal & self.tset), self.ideal)

    def __eq__(self, other):
        return (
            isinstance(other, FreeBasis)
            and (self.n, self.ideal, self.tset) == (other.n, other.ideal, other.tset)
        )

    def __hash__(self):
        return hash((self.n, self.ideal, self.tset))

    def __repr__(self):
        return (
            f"FreeBasis(ideal={bit_list(self.ideal)}, tset={bit_list(self.tset)}, "
            f"i={self.i})"
        )


def free_bases(p: Poset, i: int | None = None) -> list[FreeBasis]:
    full = (1 << p.n) - 1
    out = []
    for ideal in p.ideals():
        m = p.maximal_of(ideal)
        rest = full & ~ideal
        sub = m
        while True:
            if i is None or sub.bit_count() == i:
                out.append(FreeBasis(p.n, ideal, rest | sub))
            if sub == 0:
                break
            sub = (sub - 1) & m
    return sorted(out, key=lambda b: (b.i, b.ideal, b.tset))


def is_maximal_boolean(p: Poset, basis: FreeBasis) -> bool:
    """True when no other basis interval strictly contains this one.

    Basis elements biject with Boolean intervals [I minus (I n T), I] in the
    lattice of poset ideals, so interval containment over all bases is an
    exhaustive maximality search.
    """
    lo, hi = basis.interval()
    for other in free_bases(p):
        lo2, hi2 = other.interval()
        if lo2 & ~lo == 0 and hi & ~hi2 == 0 and (lo2, hi2) != (lo, hi):
            return False
    return True


def maximal_boolean_bases(p: Poset) -> list[FreeBasis]:
    bases = free_bases(p)
    intervals = [b.interval() for b in bases]
    out = []
    for b, (lo, hi) in zip(bases, intervals):
        contained = any(
            lo2 & ~lo == 0 and hi & ~hi2 == 0 and (lo2, hi2) != (lo, hi)
            for lo2, hi2 in intervals
        )
        if not contained:
            out.append(b)
    return out


def extract_family(g: SimpleGraph, lab: CMGraphLabeling, basis: FreeBasis) -> DisjointFamily:
    """Vertex-disjoint complete bipartite subgraphs with pairwise 3-disjoint
    representatives, carved from a maximal-Boolean basis element.

    Each maximal element l of the basis ideal seeds a block: the vertices of
    the basis multidegree adjacent to x_l or y_l and not claimed by an
    earlier seed.  Earlier seeds win ties, so the blocks partition their
    union and the block count equals the homological degree of the basis.
    """
    p = poset_of_graph(g, lab)
    if not is_maximal_boolean(p, basis):
        raise ValueError("basis must be maximal Boolean")
    seeds = bit_list(basis.ideal & basis.tset)
    deg = basis.degree
    support = 0
    for q in iter_bits(deg & (1 << p.n) - 1):
        support |= 1 << lab.xs[q]
    for q in range(p.n):
        if deg >> (p.n + q) & 1:
            support |= 1 << lab.ys[q]
    blocks = []
    reps = []
    claimed = 0
    for l in seeds:
        cx, cy = lab.xs[l], lab.ys[l]
        members = 0
        for v in iter_bits(support & ~claimed):
            if v in (cx, cy) or g.has_edge(v, cx) or g.has_edge(v, cy):
                members |= 1 << v
        claimed |= members
        left = members & bits_of(lab.xs)
        right = members & bits_of(lab.ys)
        blocks.append(CompleteBipartiteSub(left, right))
        reps.append((cx, cy))
    if claimed != support:
        raise RuntimeError("blocks must exhaust the basis multidegree")
    fam = DisjointFamily(blocks, reps)
    if not is_valid_family(g, fam):
        raise RuntimeError("extracted family failed validation")
    return fam


def cm_pd(g: SimpleGraph) -> int:
    """Projective dimension of S/I(G) for a CM bipartite graph, read off the
    maximal-Boolean bases as max(|multidegree| - homological degree)."""
    lab = cm_labeling(g)
    if lab is None:
        raise ValueError("graph admits no CM labeling")
    p = poset_of_graph(g, lab)
    return max(b.degree.bit_count() - b.i for b in maximal_boolean_bases(p))

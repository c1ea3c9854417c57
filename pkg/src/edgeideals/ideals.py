"""Monomials, monomial ideals, and the simplicial complexes attached to them.

Everything this package stores is squarefree (edge ideals and their duals),
but monomials carry full exponent vectors so that Taylor-complex cofactors
and lcm arithmetic work for arbitrary monomial input.
"""

from __future__ import annotations

import json

from .graphs import SimpleGraph, bit_list, bits_of, iter_bits


class Monomial:
    """Monomial as a dense exponent vector over a fixed variable list."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        self.exps = tuple(exps)
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")

    @classmethod
    def one(cls, nvars):
        return cls((0,) * nvars)

    @classmethod
    def from_support(cls, mask: int, nvars: int):
        return cls(tuple(mask >> i & 1 for i in range(nvars)))

    def degree(self) -> int:
        return sum(self.exps)

    def support(self) -> int:
        m = 0
        for i, e in enumerate(self.exps):
            if e:
                m |= 1 << i
        return m

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(map(max, self.exps, other.exps)))

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def quotient(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError("inexact monomial division")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"Monomial({self.exps})"

    def pretty(self, variables) -> str:
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(variables[i])
            elif e > 1:
                parts.append(f"{variables[i]}^{e}")
        return "*".join(parts) if parts else "1"


def lcm_of(monomials, nvars) -> Monomial:
    out = Monomial.one(nvars)
    for m in monomials:
        out = out.lcm(m)
    return out


class MonomialIdeal:
    """Monomial ideal given by a minimal generating set; generator order is significant."""

    __slots__ = ("variables", "generators")

    def __init__(self, variables, generators):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        gens = []
        for g in generators:
            if not isinstance(g, Monomial):
                g = Monomial(g)
            if len(g.exps) != len(self.variables):
                raise ValueError("generator length does not match variable count")
            if g.is_one():
                raise ValueError("unit generator: the ideal is not proper")
            gens.append(g)
        for i, gi in enumerate(gens):
            for j, gj in enumerate(gens):
                if i != j and gi.divides(gj):
                    raise ValueError(
                        f"generators not minimal: #{i} divides #{j}"
                    )
        self.generators = tuple(gens)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def supports(self) -> list[int]:
        return [g.support() for g in self.generators]

    def reordered(self, order) -> "MonomialIdeal":
        order = tuple(order)
        if sorted(order) != list(range(self.ngens)):
            raise ValueError(f"order {order} is not a permutation of 0..{self.ngens - 1}")
        return MonomialIdeal(self.variables, [self.generators[i] for i in order])

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.variables == other.variables
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.variables, self.generators))

    def same_generators(self, other: "MonomialIdeal") -> bool:
        """Equality as ideals (generating sets compared unordered)."""
        return self.variables == other.variables and set(self.generators) == set(
            other.generators
        )

    def __repr__(self):
        gens = ", ".join(g.pretty(self.variables) for g in self.generators)
        return f"MonomialIdeal({gens})"

    @classmethod
    def from_json(cls, obj) -> "MonomialIdeal":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["variables"], [Monomial(e) for e in obj["generators"]])

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "generators": [list(g.exps) for g in self.generators],
        }

    @classmethod
    def load(cls, path: str) -> "MonomialIdeal":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def edge_ideal(g: SimpleGraph) -> MonomialIdeal:
    """I(G), generators ordered lexicographically on sorted endpoint pairs."""
    gens = [
        Monomial.from_support(1 << u | 1 << v, g.n) for u, v in sorted(g.edges())
    ]
    return MonomialIdeal(g.labels, gens)


class SimplicialComplex:
    """Abstract simplicial complex on named vertices, stored by facets.

    facets == () encodes the void complex (no faces at all); facets == (0,)
    encodes the complex whose only face is the empty set.  Vertices in no
    facet are the excluded vertices.
    """

    __slots__ = ("vertices", "facets")

    def __init__(self, vertices, facets):
        self.vertices = tuple(vertices)
        uniq = set(facets)
        maximal = tuple(
            sorted(f for f in uniq if not any(f != h and f & ~h == 0 for h in uniq))
        )
        self.facets = maximal

    @property
    def nverts(self) -> int:
        return len(self.vertices)

    def is_void(self) -> bool:
        return not self.facets

    def excluded_vertices(self) -> int:
        present = 0
        for f in self.facets:
            present |= f
        return ((1 << self.nverts) - 1) & ~present

    def is_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def restriction_facets(self, sigma: int) -> tuple[int, ...]:
        cand = {f & sigma for f in self.facets}
        return tuple(
            sorted(f for f in cand if not any(f != h and f & ~h == 0 for h in cand))
        )

    def faces_by_dim(self, sigma: int | None = None) -> dict[int, list[int]]:
        """Faces of the restriction to sigma, keyed by dimension (incl. -1)."""
        if sigma is None:
            sigma = (1 << self.nverts) - 1
        seen = set()
        for f in self.facets:
            r = f & sigma
            if r in seen:
                continue
            stack = [r]
            while stack:
                cur = stack.pop()
                if cur in seen:
                    continue
                seen.add(cur)
                rem = cur
                while rem:
                    low = rem & -rem
                    rem ^= low
                    sub = cur ^ low
                    if sub not in seen:
                        stack.append(sub)
        out: dict[int, list[int]] = {}
        for f in seen:
            out.setdefault(f.bit_count() - 1, []).append(f)
        for d in out:
            out[d].sort()
        return out

    def __repr__(self):
        shown = [bit_list(f) for f in self.facets]
        return f"SimplicialComplex(vertices={len(self.vertices)}, facets={shown})"


def maximal_independent_sets(g: SimpleGraph) -> list[int]:
    """Bron-Kerbosch with pivoting, run on the graph itself (independent sets)."""
    non_adj = [
        ((1 << g.n) - 1) & ~g.adj[v] & ~(1 << v) for v in range(g.n)
    ]
    out = []

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda u: (non_adj[u] & p).bit_count())
        for v in bit_list(p & ~non_adj[pivot]):
            expand(r | 1 << v, p & non_adj[v], x & non_adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        return [0]
    expand(0, (1 << g.n) - 1, 0)
    return sorted(out)


def independence_complex(g: SimpleGraph) -> SimplicialComplex:
    return SimplicialComplex(g.labels, maximal_independent_sets(g))


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose minimal non-faces are the generator supports."""
    if not ideal.is_squarefree():
        raise ValueError("Stanley-Reisner complex needs a squarefree ideal")
    supports = ideal.supports()
    full = (1 << ideal.nvars) - 1
    found = set()

    def descend(avail: int):
        if avail in found:
            return
        for s in supports:
            if s & ~avail == 0:
                for v in iter_bits(s):
                    descend(avail & ~(1 << v))
                return
        found.add(avail)

    descend(full)
    return SimplicialComplex(ideal.variables, found)


def minimal_vertex_covers(g: SimpleGraph) -> list[int]:
    """Minimal vertex covers as bitmasks, sorted by (size, mask)."""
    full = g.vertex_mask()
    covers = [full & ~s for s in maximal_independent_sets(g)]
    return sorted(covers, key=lambda c: (c.bit_count(), c))


def is_unmixed(g: SimpleGraph) -> bool:
    sizes = {c.bit_count() for c in minimal_vertex_covers(g)}
    return len(sizes) <= 1


def cover_ideal(g: SimpleGraph) -> MonomialIdeal:
    """Alexander dual of I(G): generated by the minimal vertex covers."""
    if g.edge_count() == 0:
        raise ValueError("edgeless graph: the dual of the zero ideal is the unit ideal")
    gens = [Monomial.from_support(c, g.n) for c in minimal_vertex_covers(g)]
    return MonomialIdeal(g.labels, gens)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Squarefree Alexander dual: one generator per minimal prime (transversal)."""
    if not ideal.is_squarefree():
        raise ValueError("Alexander dual needs a squarefree ideal")
    if ideal.ngens == 0:
        raise ValueError("zero ideal: the dual would be the unit ideal")
    delta = stanley_reisner_complex(ideal)
    full = (1 << ideal.nvars) - 1
    transversals = sorted(
        (full & ~f for f in delta.facets), key=lambda c: (c.bit_count(), c)
    )
    return MonomialIdeal(
        ideal.variables, [Monomial.from_support(t, ideal.nvars) for t in transversals]
    )

"""Multigraded Betti numbers of squarefree monomial quotients via Hochster's formula.

beta_{i,sigma}(S/I) equals the dimension of the reduced homology of the
Stanley-Reisner complex of I restricted to sigma, in dimension |sigma|-i-1.
The table engine never builds one chain complex per sigma: restrictions split
as joins over the connected components of the generator-support graph, cones
(free vertices) are discarded outright, and component homology is memoized,
so only genuinely new connected pieces ever reach the linear algebra.

Conventions for the reduced complex: the empty face is a basis element in
dimension -1 (so the complex {<empty>} has one-dimensional homology there and
nothing else), and the void complex has zero homology everywhere.
"""

from __future__ import annotations

from .errors import ResourceLimitError
from .graphs import SimpleGraph, bit_list, iter_bits, iter_subsets
from .ideals import (
    MonomialIdeal,
    SimplicialComplex,
    cover_ideal,
    edge_ideal,
)
from .linalg import GF2, RATIONALS, FieldSpec, rank_over

MAX_TABLE_VARS = 16


class StrandComplex:
    """Reduced chain complex of a simplicial complex restriction.

    faces[d] lists the dimension-d faces (bitmasks), with faces[-1] == [0];
    boundary[d] is an integer matrix, one row per d-face, columns indexed by
    the (d-1)-faces.  d o d = 0 is asserted at construction.
    """

    __slots__ = ("sigma", "faces", "boundary")

    def __init__(self, sigma: int, faces_by_dim: dict[int, list[int]]):
        self.sigma = sigma
        self.faces = {d: list(fs) for d, fs in sorted(faces_by_dim.items())}
        self.boundary: dict[int, list[list[int]]] = {}
        index = {d: {f: i for i, f in enumerate(fs)} for d, fs in self.faces.items()}
        for d, fs in self.faces.items():
            if d - 1 not in self.faces:
                continue
            lower = index[d - 1]
            rows = []
            for f in fs:
                row = [0] * len(self.faces[d - 1])
                for t, v in enumerate(bit_list(f)):
                    row[lower[f ^ (1 << v)]] += -1 if t & 1 else 1
                rows.append(row)
            self.boundary[d] = rows
        self._assert_square_zero()

    def _assert_square_zero(self):
        for d, rows in self.boundary.items():
            below = self.boundary.get(d - 1)
            if not below:
                continue
            for row in rows:
                acc = [0] * len(below[0])
                for j, coef in enumerate(row):
                    if coef:
                        for k, c2 in enumerate(below[j]):
                            acc[k] += coef * c2
                if any(acc):
                    raise RuntimeError("boundary composition is nonzero")

    def is_void(self) -> bool:
        return not self.faces

    def face_count(self, d: int) -> int:
        return len(self.faces.get(d, ()))

    def homology(self, field: FieldSpec) -> dict[int, int]:
        """Reduced homology dimensions over the field, omitting zeros."""
        if self.is_void():
            return {}
        ranks = {d: rank_over(field, rows) for d, rows in self.boundary.items()}
        out = {}
        for d, fs in self.faces.items():
            h = len(fs) - ranks.get(d, 0) - ranks.get(d + 1, 0)
            if h:
                out[d] = h
        return out


def build_strand(delta: SimplicialComplex, sigma: int) -> StrandComplex:
    return StrandComplex(sigma, delta.faces_by_dim(sigma))


def strand_homology(delta: SimplicialComplex, sigma: int, d: int, field: FieldSpec = GF2) -> int:
    """dim of the reduced homology of delta restricted to sigma, in dimension d."""
    return build_strand(delta, sigma).homology(field).get(d, 0)


class _SupportEngine:
    """Homology vectors of ideal-restriction complexes, by join decomposition."""

    def __init__(self, ideal: MonomialIdeal, field: FieldSpec):
        self.field = field
        self.nvars = ideal.nvars
        self.singletons = 0
        self.supports = []
        for s in ideal.supports():
            if s.bit_count() == 1:
                self.singletons |= s
            else:
                self.supports.append(s)
        self._component_vectors: dict[int, dict[int, int]] = {}

    def _component_homology(self, comp: int) -> dict[int, int]:
        cached = self._component_vectors.get(comp)
        if cached is None:
            inside = [s for s in self.supports if s & ~comp == 0]
            faces: dict[int, list[int]] = {}
            for sub in iter_subsets(comp):
                if all(s & ~sub for s in inside):
                    faces.setdefault(sub.bit_count() - 1, []).append(sub)
            cached = StrandComplex(comp, faces).homology(self.field)
            self._component_vectors[comp] = cached
        return cached

    def vector(self, sigma: int) -> dict[int, int]:
        """Reduced homology of the restriction to sigma, as {dimension: rank}."""
        active = sigma & ~self.singletons
        if active == 0:
            return {-1: 1}
        inside = [s for s in self.supports if s & ~sigma == 0]
        covered = 0
        for s in inside:
            covered |= s
        if active & ~covered:
            return {}
        comps = []
        left = active
        while left:
            comp = left & -left
            while True:
                grown = comp
                for s in inside:
                    if s & comp:
                        grown |= s
                if grown == comp:
                    break
                comp = grown
            comps.append(comp)
            left &= ~comp
        out = {-1: 1}
        for comp in comps:
            part = self._component_homology(comp)
            if not part:
                return {}
            nxt: dict[int, int] = {}
            for da, ra in out.items():
                for db, rb in part.items():
                    d = da + db + 1
                    nxt[d] = nxt.get(d, 0) + ra * rb
            out = nxt
        return out


class BettiTable:
    """Multigraded Betti numbers, either of S/I (quotient) or of I itself."""

    __slots__ = ("subject", "field", "variables", "entries")

    def __init__(self, subject, field, variables, entries):
        if subject not in ("quotient", "ideal"):
            raise ValueError(f"unknown subject {subject!r}")
        self.subject = subject
        self.field = field
        self.variables = tuple(variables)
        self.entries = {k: v for k, v in entries.items() if v}

    def entry(self, i: int, sigma: int) -> int:
        return self.entries.get((i, sigma), 0)

    def nonzero(self) -> list[tuple[int, int, int]]:
        return sorted((i, s, v) for (i, s), v in self.entries.items())

    def pd(self) -> int:
        """Largest homological degree with a nonzero entry."""
        return max((i for i, _ in self.entries), default=0)

    def reg(self) -> int:
        """max |sigma| - i over nonzero entries."""
        return max((s.bit_count() - i for i, s in self.entries), default=0)

    def graded(self) -> dict[tuple[int, int], int]:
        """N-graded Betti numbers beta_{i,j} = sum over |sigma| = j."""
        out: dict[tuple[int, int], int] = {}
        for (i, s), v in self.entries.items():
            key = (i, s.bit_count())
            out[key] = out.get(key, 0) + v
        return out

    def linear_strand(self) -> dict[tuple[int, int], int]:
        return {(i, s): v for (i, s), v in self.entries.items() if s.bit_count() == i + 1}

    def extremal(self) -> list[tuple[int, int]]:
        """Entries (i, sigma) with no nonzero entry weakly above-and-beyond them.

        (j, tau) dominates (i, sigma) when j >= i, tau strictly contains sigma,
        and |tau| - |sigma| >= j - i.
        """
        keys = list(self.entries)
        out = []
        for i, s in keys:
            size = s.bit_count()
            dominated = any(
                j >= i and t != s and s & ~t == 0 and t.bit_count() - size >= j - i
                for j, t in keys
            )
            if not dominated:
                out.append((i, s))
        return sorted(out)

    def diagram_text(self) -> str:
        """ASCII Betti diagram: rows j, columns i, entry beta_{i,i+j}; blank = 0."""
        graded = self.graded()
        if not graded:
            return "(empty table)"
        pdeg = max(i for i, _ in graded)
        maxreg = max(j - i for i, j in graded)
        minreg = min(j - i for i, j in graded)
        width = max(len(str(v)) for v in graded.values())
        width = max(width, len(str(pdeg)), 2)
        lines = ["j\\i " + " ".join(f"{i:>{width}}" for i in range(pdeg + 1))]
        for j in range(min(0, minreg), maxreg + 1):
            cells = []
            for i in range(pdeg + 1):
                v = graded.get((i, i + j), 0)
                cells.append(f"{v:>{width}}" if v else " " * width)
            lines.append(f"{j:>3} " + " ".join(cells))
        return "\n".join(lines)

    def multigraded_rows(self) -> list[dict]:
        return [
            {"i": i, "sigma": [self.variables[v] for v in iter_bits(s)], "value": v}
            for i, s, v in self.nonzero()
        ]

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "field": repr(self.field),
            "variables": list(self.variables),
            "entries": [
                {"i": i, "sigma": bit_list(s), "value": v} for i, s, v in self.nonzero()
            ],
            "pd": self.pd(),
            "reg": self.reg(),
        }


def betti_table(
    ideal: MonomialIdeal,
    field: FieldSpec = GF2,
    subject: str = "quotient",
    max_vars: int = MAX_TABLE_VARS,
) -> BettiTable:
    """Full multigraded Betti table of S/I (or of I) by Hochster's formula."""
    if not ideal.is_squarefree():
        raise ValueError("Hochster tables need a squarefree ideal")
    if ideal.nvars > max_vars:
        raise ResourceLimitError(
            f"{ideal.nvars} variables exceeds the table cap of {max_vars}; "
            "raise max_vars explicitly to override"
        )
    engine = _SupportEngine(ideal, field)
    entries: dict[tuple[int, int], int] = {}
    for sigma in range(1 << ideal.nvars):
        vec = engine.vector(sigma)
        if not vec:
            continue
        size = sigma.bit_count()
        for d, rank in vec.items():
            i = size - d - 1
            if 0 <= i:
                entries[(i, sigma)] = rank
    if subject == "ideal":
        shifted = {(i - 1, s): v for (i, s), v in entries.items() if i >= 1}
        return BettiTable("ideal", field, ideal.variables, shifted)
    return BettiTable("quotient", field, ideal.variables, entries)


def graph_betti_table(g: SimpleGraph, field: FieldSpec = GF2, **kw) -> BettiTable:
    return betti_table(edge_ideal(g), field=field, **kw)


class DualityReport:
    """Outcome of a pointwise duality verification."""

    __slots__ = ("ok", "comparisons", "note")

    def __init__(self, ok, comparisons, note=""):
        self.ok = ok
        self.comparisons = comparisons
        self.note = note

    def __repr__(self):
        status = "ok" if self.ok else "FAILED"
        return f"DualityReport({status}, {len(self.comparisons)} comparisons{', ' + self.note if self.note else ''})"


def verify_bcp(g: SimpleGraph, field: FieldSpec = GF2) -> DualityReport:
    """Check the extremal-duality equalities between I(G)* and S/I(G).

    For every extremal entry (r, sigma) of the Betti table of the cover ideal,
    beta_{r,sigma}(I(G)*) must equal beta_{|sigma|-r,sigma}(S/I(G)).
    """
    if g.edge_count() == 0:
        return DualityReport(True, [], note="skipped: no edges")
    dual_table = betti_table(cover_ideal(g), field=field, subject="ideal")
    quot_table = graph_betti_table(g, field=field)
    comparisons = []
    ok = True
    for r, sigma in dual_table.extremal():
        left = dual_table.entry(r, sigma)
        right = quot_table.entry(sigma.bit_count() - r, sigma)
        comparisons.append(
            {"r": r, "sigma": bit_list(sigma), "dual": left, "quotient": right}
        )
        ok = ok and left == right
    return DualityReport(ok, comparisons)


def verify_eagon_reiner(g: SimpleGraph, field: FieldSpec = GF2) -> DualityReport:
    """reg(I(G)*) = pd(S/I(G)) and pd(I(G)*) = reg(S/I(G))."""
    if g.edge_count() == 0:
        return DualityReport(True, [], note="skipped: no edges")
    dual_table = betti_table(cover_ideal(g), field=field, subject="ideal")
    quot_table = graph_betti_table(g, field=field)
    comparisons = [
        {"lhs": "reg(dual)", "left": dual_table.reg(), "rhs": "pd(quotient)", "right": quot_table.pd()},
        {"lhs": "pd(dual)", "left": dual_table.pd(), "rhs": "reg(quotient)", "right": quot_table.reg()},
    ]
    ok = all(c["left"] == c["right"] for c in comparisons)
    return DualityReport(ok, comparisons)


def projective_dimension(g: SimpleGraph, field: FieldSpec = GF2) -> int:
    return graph_betti_table(g, field=field).pd()


def regularity(g: SimpleGraph, field: FieldSpec = GF2) -> int:
    return graph_betti_table(g, field=field).reg()

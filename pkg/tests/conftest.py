"""Shared fixtures and independent reference routes.

The reference homology here is rebuilt from scratch: dense boundary
matrices, Fraction Gaussian elimination over the rationals, plain modular
elimination over GF(p).  It shares no code with the package's bit-packed
GF(2) / Bareiss routes, so table comparisons are genuine cross-checks.
"""

from fractions import Fraction

import pytest

from edgeideals.graphs import SimpleGraph


def brute_independent_sets(g: SimpleGraph) -> list[int]:
    """Every independent vertex subset as a bitmask, the empty set included."""
    out = []
    for mask in range(1 << g.n):
        if all(not (mask >> u & 1 and mask >> v & 1) for u, v in g.edges()):
            out.append(mask)
    return out


def _rank_fractions(rows) -> int:
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        piv = next((k for k in range(rank, len(mat)) if mat[k][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        lead = mat[rank][c]
        for k in range(rank + 1, len(mat)):
            if mat[k][c]:
                f = mat[k][c] / lead
                mat[k] = [a - f * b for a, b in zip(mat[k], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _rank_mod(rows, p: int) -> int:
    mat = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        piv = next((k for k in range(rank, len(mat)) if mat[k][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][c], -1, p)
        for k in range(rank + 1, len(mat)):
            if mat[k][c]:
                f = mat[k][c] * inv % p
                mat[k] = [(a - f * b) % p for a, b in zip(mat[k], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _boundary_matrix(faces_d, faces_dm1):
    """Rows indexed by d-faces, columns by (d-1)-faces, entries the usual signs."""
    col = {f: j for j, f in enumerate(faces_dm1)}
    mat = []
    for f in faces_d:
        row = [0] * len(faces_dm1)
        verts = [v for v in range(f.bit_length()) if f >> v & 1]
        for j, v in enumerate(verts):
            row[col[f ^ (1 << v)]] = (-1) ** j
        mat.append(row)
    return mat


def reference_homology(faces, d: int, char: int = 0) -> int:
    """dim of reduced H_d for the complex listed by its full face set.

    faces must be subset-closed and contain the empty mask unless the
    complex is void; the empty face supplies the augmentation.
    """
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    cur = sorted(by_dim.get(d, []))
    if not cur:
        return 0
    below = sorted(by_dim.get(d - 1, []))
    above = sorted(by_dim.get(d + 1, []))
    rank = _rank_fractions if char == 0 else (lambda m: _rank_mod(m, char))
    rk_down = rank(_boundary_matrix(cur, below)) if below else 0
    rk_up = rank(_boundary_matrix(above, cur)) if above else 0
    return len(cur) - rk_down - rk_up


def reference_betti(g: SimpleGraph, i: int, sigma: int, char: int = 0) -> int:
    """beta_{i,sigma}(S/I(G)) straight from the homology definition."""
    faces = [f for f in brute_independent_sets(g) if f & ~sigma == 0]
    return reference_homology(faces, sigma.bit_count() - i - 1, char)


def reference_entries(g: SimpleGraph, char: int = 0) -> dict[tuple[int, int], int]:
    """All nonzero beta_{i,sigma}(S/I(G)) by brute force."""
    entries = {}
    for sigma in range(1 << g.n):
        for i in range(sigma.bit_count() + 1):
            v = reference_betti(g, i, sigma, char)
            if v:
                entries[(i, sigma)] = v
    return entries


@pytest.fixture
def k33_minus_edge() -> SimpleGraph:
    """K_{3,3} with one edge removed; parts {x1,x4,x5} and {x2,x3,x6}."""
    return SimpleGraph(
        6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    )

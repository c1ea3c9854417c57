"""Hochster-formula tables against an independent dense-matrix homology route."""

import math
import random

import pytest

from edgeideals.catalog import graphs_on
from edgeideals.errors import ResourceLimitError
from edgeideals.graphs import (
    SimpleGraph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
)
from edgeideals.hochster import (
    betti_table,
    graph_betti_table,
    projective_dimension,
    regularity,
    strand_homology,
    verify_bcp,
    verify_eagon_reiner,
)
from edgeideals.ideals import Monomial, MonomialIdeal, SimplicialComplex, edge_ideal
from edgeideals.linalg import GF2, RATIONALS, FieldSpec
from conftest import reference_entries, reference_homology

GF3 = FieldSpec.parse("gf3")


def table_entries(table):
    return {(i, s): v for i, s, v in table.nonzero()}


def test_four_cycle_table_exact():
    for field in (GF2, RATIONALS):
        t = graph_betti_table(cycle_graph(4), field)
        assert table_entries(t) == {
            (0, 0): 1,
            (1, 0b0011): 1,
            (1, 0b0110): 1,
            (1, 0b1001): 1,
            (1, 0b1100): 1,
            (2, 0b0111): 1,
            (2, 0b1011): 1,
            (2, 0b1101): 1,
            (2, 0b1110): 1,
            (3, 0b1111): 1,
        }
        assert t.graded() == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
        assert t.pd() == 3 and t.reg() == 1


def test_complete_graph_linear_resolution():
    n = 4
    t = graph_betti_table(complete_graph(n))
    expect = {(0, 0): 1}
    for i in range(1, n):
        expect[(i, i + 1)] = i * math.comb(n, i + 1)
    assert t.graded() == expect
    assert t.reg() == 1 and t.pd() == n - 1


def test_complete_bipartite_graded_table():
    m, n = 2, 3
    t = graph_betti_table(complete_bipartite_graph(m, n))
    expect = {(0, 0): 1}
    for i in range(1, m + n):
        v = sum(
            math.comb(m, a) * math.comb(n, i + 1 - a) for a in range(1, i + 1)
        )
        if v:
            expect[(i, i + 1)] = v
    assert t.graded() == expect
    assert t.pd() == m + n - 1


def test_tables_match_reference_route_small():
    for n in range(1, 5):
        for g in graphs_on(n):
            for field, char in ((GF2, 2), (RATIONALS, 0), (GF3, 3)):
                assert table_entries(graph_betti_table(g, field)) == reference_entries(
                    g, char
                ), f"n={n} edges={g.edges()} field={field!r}"


def test_tables_match_reference_route_five_vertices():
    for g in graphs_on(5):
        assert table_entries(graph_betti_table(g, GF2)) == reference_entries(g, 2)


def test_tables_match_reference_route_sampled_six():
    rng = random.Random(19)
    pool = list(graphs_on(6))
    for g in rng.sample(pool, 8):
        assert table_entries(graph_betti_table(g, RATIONALS)) == reference_entries(g, 0)


def test_characteristic_independence_at_desk_scale():
    for n in range(1, 6):
        for g in graphs_on(n):
            assert table_entries(graph_betti_table(g, GF2)) == table_entries(
                graph_betti_table(g, RATIONALS)
            )


def test_strand_homology_sees_torsion():
    # minimal 6-vertex projective plane: its middle homology is 2-torsion,
    # so GF(2) and the rationals genuinely disagree
    facets_1idx = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 6), (1, 5, 6),
        (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
    ]
    masks = [sum(1 << (v - 1) for v in f) for f in facets_1idx]
    delta = SimplicialComplex(tuple(f"v{i}" for i in range(1, 7)), masks)
    full = (1 << 6) - 1
    for d, gf2_dim, rat_dim in ((0, 0, 0), (1, 1, 0), (2, 1, 0)):
        assert strand_homology(delta, full, d, GF2) == gf2_dim
        assert strand_homology(delta, full, d, RATIONALS) == rat_dim
    faces = [m for by in delta.faces_by_dim().values() for m in by]
    assert reference_homology(faces, 1, 2) == 1
    assert reference_homology(faces, 1, 0) == 0


def test_ideal_subject_is_shifted_quotient():
    ideal = edge_ideal(cycle_graph(5))
    q = betti_table(ideal, GF2, subject="quotient")
    i_table = betti_table(ideal, GF2, subject="ideal")
    expect = {(i - 1, s): v for (i, s), v in table_entries(q).items() if i >= 1}
    assert table_entries(i_table) == expect
    assert i_table.pd() == q.pd() - 1


def test_grading_consistency():
    for g in graphs_on(5):
        t = graph_betti_table(g, GF2)
        regrouped = {}
        for i, s, v in t.nonzero():
            key = (i, s.bit_count())
            regrouped[key] = regrouped.get(key, 0) + v
        assert regrouped == t.graded()
        assert t.linear_strand() == {
            (i, s): v for (i, s), v in table_entries(t).items() if s.bit_count() == i + 1
        }


def brute_extremal(entries):
    out = []
    for (i, s), _ in entries.items():
        j = s.bit_count()
        dominated = any(
            (ii, ss) != (i, s)
            and ss & s == s
            and ii >= i
            and ss.bit_count() - ii >= j - i
            for (ii, ss) in entries
        )
        if not dominated:
            out.append((i, s))
    return sorted(out)


def test_extremal_matches_dominance_definition():
    for g in graphs_on(5):
        t = graph_betti_table(g, GF2)
        assert t.extremal() == brute_extremal(table_entries(t))


def test_pd_reg_helpers():
    g = cycle_graph(6)
    t = graph_betti_table(g, GF2)
    assert projective_dimension(g, GF2) == t.pd()
    assert regularity(g, GF2) == t.reg()
    assert regularity(cycle_graph(5)) == 2
    assert projective_dimension(path_graph(4)) == 2


def test_duality_reports_hold_small():
    for n in range(2, 6):
        for g in graphs_on(n):
            assert verify_bcp(g, GF2).ok
            assert verify_eagon_reiner(g, GF2).ok


def test_diagram_text_layout():
    text = graph_betti_table(cycle_graph(4), GF2).diagram_text()
    lines = text.splitlines()
    assert lines[0].split() == ["j\\i", "0", "1", "2", "3"]
    assert lines[1].split() == ["0", "1"]
    assert lines[2].split() == ["1", "4", "4", "1"]


def test_table_json_shape():
    t = graph_betti_table(path_graph(3), GF2)
    obj = t.to_json()
    assert obj["subject"] == "quotient" and obj["field"] == "gf2"
    assert obj["pd"] == t.pd() and obj["reg"] == t.reg()
    assert {(e["i"], tuple(e["sigma"])) for e in obj["entries"]} == {
        (i, tuple(v for v in range(6) if s >> v & 1)) for i, s, _ in t.nonzero()
    }


def test_input_validation():
    with pytest.raises(ValueError):
        betti_table(MonomialIdeal(["x"], [Monomial((2,))]), GF2)
    big = path_graph(17)
    with pytest.raises(ResourceLimitError):
        graph_betti_table(big, GF2)
    assert graph_betti_table(big, GF2, max_vars=17).pd() > 0

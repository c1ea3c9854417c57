"""Monomials, squarefree ideals, complexes, covers, and Alexander duality."""

import itertools
import json
import random

import pytest

from edgeideals.graphs import SimpleGraph, complete_graph, cycle_graph, path_graph
from edgeideals.ideals import (
    Monomial,
    MonomialIdeal,
    alexander_dual,
    cover_ideal,
    edge_ideal,
    independence_complex,
    is_unmixed,
    maximal_independent_sets,
    minimal_vertex_covers,
    stanley_reisner_complex,
)
from conftest import brute_independent_sets


def test_monomial_arithmetic():
    x, y = Monomial((1, 0)), Monomial((0, 2))
    assert x.degree() == 1 and y.degree() == 2
    assert x.mul(y).exps == (1, 2)
    assert x.lcm(y).exps == (1, 2)
    assert x.divides(x.mul(y)) and not y.divides(x)
    assert x.mul(y).quotient(y) == x
    assert Monomial.one(2).is_one()
    assert x.is_squarefree() and not y.is_squarefree()
    assert Monomial.from_support(0b101, 3).exps == (1, 0, 1)
    assert Monomial((2, 0, 1)).support() == 0b101
    assert Monomial((1, 2)).pretty(["x", "y"]) == "x*y^2"


def test_ideal_validation_and_reorder():
    with pytest.raises(ValueError):
        MonomialIdeal(["x", "y"], [Monomial((1, 0)), Monomial((1, 1))])
    with pytest.raises(ValueError):
        MonomialIdeal(["x"], [Monomial((1, 0))])
    ideal = edge_ideal(path_graph(3))
    swapped = ideal.reordered((1, 0))
    assert swapped.generators[0] == ideal.generators[1]
    assert ideal.same_generators(swapped)
    assert ideal != swapped


def test_ideal_json_round_trip(tmp_path):
    ideal = edge_ideal(cycle_graph(4))
    again = MonomialIdeal.from_json(json.dumps(ideal.to_json()))
    assert again == ideal
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps(ideal.to_json()))
    assert MonomialIdeal.load(str(path)) == ideal


def test_edge_ideal_generators_are_edges():
    g = cycle_graph(5)
    ideal = edge_ideal(g)
    assert ideal.nvars == 5 and ideal.ngens == 5
    assert ideal.is_squarefree()
    got = {m.support() for m in ideal.generators}
    assert got == {1 << u | 1 << v for u, v in g.edges()}


def brute_maximal_independent(g):
    sets = brute_independent_sets(g)
    pool = set(sets)
    out = []
    for s in sets:
        if not any(t != s and t & s == s for t in pool):
            out.append(s)
    return sorted(out)


def test_maximal_independent_sets_brute_force():
    for n in range(1, 6):
        for edges in itertools.combinations(list(itertools.combinations(range(n), 2)), 2):
            g = SimpleGraph(n, edges)
            assert sorted(maximal_independent_sets(g)) == brute_maximal_independent(g)
    g = cycle_graph(6)
    assert sorted(maximal_independent_sets(g)) == brute_maximal_independent(g)


def test_independence_complex_faces():
    g = cycle_graph(4)
    delta = independence_complex(g)
    faces = [f for by in delta.faces_by_dim().values() for f in by]
    assert sorted(faces) == brute_independent_sets(g)
    assert delta.is_face(0b0101) and not delta.is_face(0b0011)
    assert delta.faces_by_dim()[-1] == [0]


def test_stanley_reisner_round_trip():
    for g in (cycle_graph(5), path_graph(4), complete_graph(4)):
        direct = independence_complex(g)
        via_ideal = stanley_reisner_complex(edge_ideal(g))
        assert sorted(direct.facets) == sorted(via_ideal.facets)


def test_minimal_covers_are_complements_of_maximal_independents():
    for g in (cycle_graph(4), cycle_graph(5), path_graph(5), complete_graph(4)):
        full = (1 << g.n) - 1
        expect = sorted(full & ~s for s in brute_maximal_independent(g))
        assert sorted(minimal_vertex_covers(g)) == expect


def test_is_unmixed():
    assert is_unmixed(cycle_graph(4))
    assert is_unmixed(complete_graph(4))
    assert not is_unmixed(path_graph(3))
    assert is_unmixed(cycle_graph(5))


def test_cover_ideal_and_dual():
    g = cycle_graph(4)
    assert cover_ideal(g) == alexander_dual(edge_ideal(g))
    with pytest.raises(ValueError):
        cover_ideal(SimpleGraph(3))


def random_squarefree_ideal(rng, nvars, ngens):
    """Up to ngens incomparable squarefree monomials; fewer when rejection stalls."""
    seen = set()
    for _ in range(200):
        if len(seen) == ngens:
            break
        mask = rng.randrange(1, 1 << nvars)
        if any(m & mask in (m, mask) for m in seen):
            continue
        seen.add(mask)
    variables = [f"x{i + 1}" for i in range(nvars)]
    return MonomialIdeal(variables, [Monomial.from_support(m, nvars) for m in sorted(seen)])


def test_alexander_dual_is_an_involution():
    rng = random.Random(3)
    for _ in range(40):
        ideal = random_squarefree_ideal(rng, rng.randint(2, 6), rng.randint(1, 5))
        assert alexander_dual(alexander_dual(ideal)).same_generators(ideal)
    for g in (cycle_graph(5), path_graph(4)):
        ideal = edge_ideal(g)
        assert alexander_dual(alexander_dual(ideal)).same_generators(ideal)


def test_alexander_dual_generators_are_minimal_transversals():
    # dual generators = minimal hitting sets of the generator supports
    ideal = edge_ideal(cycle_graph(5))
    dual = alexander_dual(ideal)
    supports = ideal.supports()
    for m in dual.generators:
        s = m.support()
        assert all(s & t for t in supports)
        for v in range(ideal.nvars):
            if s >> v & 1:
                reduced = s & ~(1 << v)
                assert not all(reduced & t for t in supports)

"""Acceptance suite: ten end-to-end checks with exact expected values.

Each check prints exactly one `acceptance NN [PASS|FAIL]` line with capture
suspended, so the verdict is visible in plain pytest output, then asserts.
Wall-clock ceilings are part of the contract where stated.
"""

import itertools
import math
import random
import time
from collections import Counter

import pytest

from edgeideals.campaigns import Campaign, run_campaign
from edgeideals.catalog import posets_on
from edgeideals.cm_bipartite import free_bases, graph_from_poset, hg_generators
from edgeideals.graphs import cycle_graph
from edgeideals.hochster import betti_table, graph_betti_table
from edgeideals.ideals import Monomial, MonomialIdeal, cover_ideal
from edgeideals.linalg import GF2, RATIONALS
from edgeideals.lyubeznik import (
    admissible_symbols,
    bipartite_cycle,
    check_cycle_certificate,
    is_admissible,
    lyubeznik_betti_table,
    taylor_boundary,
)
from edgeideals.witness import max_pd_witness


_CAPTURE = None


@pytest.fixture(autouse=True)
def _verdict_stream(capsys):
    global _CAPTURE
    _CAPTURE = capsys
    yield
    _CAPTURE = None


def report(idx, desc, failures, elapsed, limit=None):
    ok = not failures and (limit is None or elapsed <= limit)
    verdict = "PASS" if ok else "FAIL"
    budget = f", budget {limit:.0f}s" if limit is not None else ""
    line = f"acceptance {idx:02d} [{verdict}] {desc} ({elapsed:.2f}s{budget})"
    with _CAPTURE.disabled():
        print(line, flush=True)
    if limit is not None and elapsed > limit:
        failures = failures + [f"took {elapsed:.2f}s, budget {limit}s"]
    assert ok, f"acceptance {idx:02d}: " + "; ".join(failures)


def campaign(graphs, assertions, fields=("gf2",), caps=None):
    return Campaign.from_json(
        {
            "name": "acceptance",
            "graphs": graphs,
            "fields": list(fields),
            "assertions": list(assertions),
            "caps": caps or {},
        }
    )


def test_acceptance_01_four_cycle_table_exact():
    t0 = time.monotonic()
    failures = []
    want_graded = {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
    for field in (GF2, RATIONALS):
        table = graph_betti_table(cycle_graph(4), field)
        if table.graded() != want_graded:
            failures.append(f"graded table over {field!r}: {table.graded()}")
        if table.pd() != 3 or table.reg() != 1:
            failures.append(f"pd/reg over {field!r}: {table.pd()}/{table.reg()}")
        if table.entry(3, 0b1111) != 1:
            failures.append(f"top entry over {field!r}: {table.entry(3, 0b1111)}")
    report(1, "four-cycle Betti table (1; 4,4,1), pd 3, reg 1, both fields",
           failures, time.monotonic() - t0, limit=1.0)


def test_acceptance_02_near_complete_bipartite_strand_and_witness(k33_minus_edge):
    t0 = time.monotonic()
    failures = []
    g = k33_minus_edge
    for field in (GF2, RATIONALS):
        table = graph_betti_table(g, field)
        strand = Counter()
        for (i, _s), v in table.linear_strand().items():
            strand[i] += v
        if dict(strand) != {1: 8, 2: 14, 3: 9, 4: 2}:
            failures.append(f"linear strand over {field!r}: {dict(strand)}")
        if table.pd() != 4 or table.reg() != 1:
            failures.append(f"pd/reg over {field!r}: {table.pd()}/{table.reg()}")
    wit = max_pd_witness(g)
    if wit.value != 4 or wit.family.r != 1:
        failures.append(f"witness value/r: {wit.value}/{wit.family.r}")
    block = wit.family.blocks[0]
    if sorted((block.left.bit_count(), block.right.bit_count())) != [2, 3]:
        failures.append(f"witness block is not (2,3)-complete-bipartite: {block}")
    if wit.family.sigma not in (0b011111, 0b111110):
        failures.append(f"witness support: {bin(wit.family.sigma)}")
    report(2, "8-edge bipartite example: strand (8,14,9,2), pd 4 via one (2,3)-block",
           failures, time.monotonic() - t0, limit=1.0)


def test_acceptance_03_families_certified_on_connected_graphs():
    t0 = time.monotonic()
    c = campaign({"class": "connected", "max_n": 6}, ["T1.1"],
                 caps={"block_vertices": 5, "family_size": 2})
    rep = run_campaign(c, workers=2)
    failures = []
    if rep.summary() != {"ok": 143, "violation": 0, "skipped": 0}:
        failures.append(f"summary: {rep.summary()}")
    report(3, "every disjoint family on connected graphs (n<=6) is Betti-positive and certified",
           failures, time.monotonic() - t0, limit=600.0)


def test_acceptance_04_regularity_bound_and_grading_accounting():
    t0 = time.monotonic()
    rep = run_campaign(campaign({"class": "all", "max_n": 6}, ["T2.2"]), workers=2)
    failures = []
    if rep.summary() != {"ok": 208, "violation": 0, "skipped": 0}:
        failures.append(f"summary: {rep.summary()}")
    report(4, "reg >= matching bound and graded=multigraded accounting on all graphs n<=6",
           failures, time.monotonic() - t0)


def test_acceptance_05_top_strand_counts_complement_components():
    t0 = time.monotonic()
    rep = run_campaign(
        campaign({"class": "all", "max_n": 6}, ["P5.1"], fields=("gf2", "rat")),
        workers=2,
    )
    failures = []
    if rep.summary() != {"ok": 416, "violation": 0, "skipped": 0}:
        failures.append(f"summary: {rep.summary()}")
    report(5, "top-strand entries equal complement-component counts, n<=6, both fields",
           failures, time.monotonic() - t0)


def test_acceptance_06_cochordal_linearity_and_pd_formula():
    t0 = time.monotonic()
    rep = run_campaign(
        campaign({"class": "cochordal", "max_n": 7}, ["C5.2", "C5.4"],
                 caps={"max_n": 7}),
        workers=2,
    )
    failures = []
    if rep.summary() != {"ok": 1062, "violation": 0, "skipped": 0}:
        failures.append(f"summary: {rep.summary()}")
    report(6, "co-chordal graphs n<=7: linear tables, spanning blocks, pd formula",
           failures, time.monotonic() - t0)


def test_acceptance_07_poset_resolution_matches_dual_tables():
    t0 = time.monotonic()
    failures = []
    for k in range(1, 5):
        for p in posets_on(k):
            g = graph_from_poset(p)
            hg = hg_generators(p)
            if not hg.same_generators(cover_ideal(g)):
                failures.append(f"dual generators differ for poset {p.up}")
            table = betti_table(hg, GF2, subject="ideal")
            by_entry = Counter((b.i, b.degree) for b in free_bases(p))
            if dict(by_entry) != {(i, s): v for i, s, v in table.nonzero()}:
                failures.append(f"free bases mismatch for poset {p.up}")
    rep = run_campaign(
        campaign({"class": "cm_posets", "max_elements": 4}, ["P6.6", "C6.8"],
                 caps={"max_n": 8}),
        workers=2,
    )
    if rep.summary() != {"ok": 38, "violation": 0, "skipped": 0}:
        failures.append(f"campaign summary: {rep.summary()}")
    report(7, "poset resolutions: dual generators, basis-vs-table, extraction, pd formula",
           failures, time.monotonic() - t0)


def test_acceptance_08_weighted_formula_on_blow_ups():
    t0 = time.monotonic()
    rep = run_campaign(
        campaign(
            {"class": "unmixed_blowups", "max_elements": 3, "max_zeta": 3,
             "max_vertices": 12},
            ["P7.2", "T7.1", "T2.3"],
            caps={"max_n": 12},
        ),
        workers=2,
    )
    failures = []
    if rep.summary() != {"ok": 162, "violation": 0, "skipped": 0}:
        failures.append(f"summary: {rep.summary()}")
    report(8, "unmixed blow-ups (<=12 vertices): weighted pd formula, lifted witnesses, reg=a",
           failures, time.monotonic() - t0, limit=900.0)


def test_acceptance_09_resolution_engine_exactness():
    t0 = time.monotonic()
    failures = []
    rng = random.Random(2024)

    def random_squarefree(nvars, ngens):
        gens = []
        for _ in range(200):
            if len(gens) == ngens:
                break
            m = Monomial.from_support(rng.randrange(1, 1 << nvars), nvars)
            if any(a.divides(m) or m.divides(a) for a in gens):
                continue
            gens.append(m)
        return MonomialIdeal([f"x{i + 1}" for i in range(nvars)], gens)

    for trial in range(200):
        ideal = random_squarefree(rng.randint(2, 6), rng.randint(1, 8))
        u = ideal.ngens
        admissible = {
            sym
            for size in range(u + 1)
            for sym in itertools.combinations(range(u), size)
            if is_admissible(ideal, sym)
        }
        if set(admissible_symbols(ideal)) != {s for s in admissible if s}:
            failures.append(f"trial {trial}: enumerator misses symbols")
        for sym in admissible:
            for t in range(len(sym)):
                if sym[:t] + sym[t + 1 :] not in admissible:
                    failures.append(f"trial {trial}: not downward closed at {sym}")
            if len(sym) >= 2:
                acc = Counter()
                for sub, sign, cof in taylor_boundary(ideal, sym):
                    for sub2, sign2, cof2 in taylor_boundary(ideal, sub):
                        acc[(sub2, cof.mul(cof2))] += sign * sign2
                if any(v != 0 for v in acc.values()):
                    failures.append(f"trial {trial}: boundary does not square to zero")
        want = {(i, s): v for i, s, v in betti_table(ideal, GF2).nonzero()}
        got = {(i, s): v for i, s, v in lyubeznik_betti_table(ideal, field=GF2).nonzero()}
        if got != want:
            failures.append(f"trial {trial}: strand table disagrees with subset homology")
        if failures:
            break
    for m in range(1, 5):
        for n in range(1, 5):
            ideal, cycle = bipartite_cycle(m, n)
            if len(cycle.terms) != math.comb(m + n - 2, n - 1):
                failures.append(f"K({m},{n}) cycle has {len(cycle.terms)} terms")
            got = check_cycle_certificate(ideal, cycle)
            if got is None or got[0] != m + n - 1 or got[1].support() != (1 << (m + n)) - 1:
                failures.append(f"K({m},{n}) certificate: {got}")
    report(9, "ordered resolution engine: 200 random ideals exact, closures, cyclic certificates",
           failures, time.monotonic() - t0)


def test_acceptance_10_extremal_duality_and_dual_pd_reg_swap():
    t0 = time.monotonic()
    rep = run_campaign(
        campaign({"class": "all", "max_n": 6}, ["T6.1", "T6.2"], fields=("gf2", "rat")),
        workers=2,
    )
    failures = []
    if rep.summary() != {"ok": 832, "violation": 0, "skipped": 0}:
        failures.append(f"summary: {rep.summary()}")
    report(10, "extremal-entry duality and pd/reg swap under Alexander duality, n<=6",
           failures, time.monotonic() - t0)

"""Cycle vectors, constructive decompositions, checkers, and dim H^1."""

import itertools
import random

import numpy as np
import pytest

from simplex_spectra.cohomology import (CycleCapExceeded, check_conference_hypothesis,
                                        check_four_consecutive, check_meshulam,
                                        check_srg_inequality, cohomology_report,
                                        common_neighborhood_connected, cycle_cut,
                                        cycle_vector, h1_dimension, induced_cycles,
                                        neighborhood_connected, rotation_relation,
                                        support_reduce, wheel4_decompose)
from simplex_spectra.complexes import clique_complex, coboundary
from simplex_spectra.graphs import (Graph, SrgParams, complete_graph, cycle_graph,
                                    hamming_graph, kneser_graph, paley_graph,
                                    srg_parameters, symplectic_graph)
from simplex_spectra.modular import DEFAULT_PRIMES, rank_modp
from conftest import (circuit_rank, random_connected_graph, random_graph,
                      random_interval_graph, random_triangle_free_graph,
                      random_wheel_instances, simple_cycles)

P = DEFAULT_PRIMES[0]


def tc_entries(X, verts):
    return {e: c for e, c in cycle_vector(X, verts).entries.items()}


def test_cycle_vector_reference_values(diamond_graph):
    # vertices are 0-based; 1-based labels 1,2,3,4 elsewhere are 0,1,2,3 here
    X = clique_complex(diamond_graph, 2)
    assert tc_entries(X, (0, 1, 2)) == {(0, 1): 1, (1, 2): 1, (0, 2): -1}
    assert tc_entries(X, (0, 2, 1)) == {(0, 2): 1, (1, 2): -1, (0, 1): -1}
    assert tc_entries(X, (0, 1, 3, 2)) == {(0, 1): 1, (1, 3): 1, (2, 3): -1, (0, 2): -1}


def test_cycle_vector_kernel_membership():
    rng = random.Random(57)
    found = 0
    while found < 100:
        g = random_connected_graph(rng, rng.randint(4, 10), 0.5)
        X = clique_complex(g, 2)
        d0t = coboundary(X, 0).T
        for verts in simple_cycles(g, 7, limit=10):
            t = cycle_vector(X, verts)
            assert all(c == 0 for c in d0t.matvec(t.to_dense_list()))
            assert all(v in (-1, 1) for v in t.entries.values())
            found += 1
            if found == 100:
                break


def test_cycle_vector_validation(diamond_graph):
    X = clique_complex(diamond_graph, 2)
    with pytest.raises(ValueError):
        cycle_vector(X, (0, 1))
    with pytest.raises(ValueError):
        cycle_vector(X, (0, 1, 0))
    with pytest.raises(ValueError):
        cycle_vector(X, (0, 1, 3))  # 3 not adjacent to 0


def test_rotation_relation(diamond_graph):
    X = clique_complex(diamond_graph, 2)
    assert rotation_relation(X, (0, 1, 2), 1) == 1
    rng = random.Random(3)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(4, 9), 0.6)
        Xg = clique_complex(g, 2)
        for verts in simple_cycles(g, 7, limit=4):
            for i in range(1, len(verts) + 1):
                assert rotation_relation(Xg, verts, i) in (-1, 1)


def test_wheel4_reference_case():
    # hub 0 adjacent to the 4-cycle (1,2,4,3); the decomposition has
    # signs (+1, +1, -1, -1)
    g = Graph(5, [(1, 2), (2, 4), (4, 3), (3, 1), (0, 1), (0, 2), (0, 3), (0, 4)])
    X = clique_complex(g, 2)
    signs = wheel4_decompose(X, (1, 2, 4, 3), 0)
    assert signs == (1, 1, -1, -1)
    t = cycle_vector(X, (1, 2, 4, 3))
    assert t.entries == {(1, 2): 1, (2, 4): 1, (3, 4): -1, (1, 3): -1}


def test_wheel4_in_k5():
    X = clique_complex(complete_graph(5), 2)
    signs = wheel4_decompose(X, (0, 1, 2, 3), 4)
    assert all(s in (-1, 1) for s in signs)


def test_wheel4_random_instances_unique_pattern():
    rng = random.Random(99)
    for g, quad, e in random_wheel_instances(rng, 60):
        X = clique_complex(g, 2)
        signs = wheel4_decompose(X, quad, e)
        # uniqueness: scan all 16 patterns independently
        t = cycle_vector(X, quad).entries
        a, b, c, d = quad
        tris = [tuple(sorted(s)) for s in ((a, b, e), (b, c, e), (c, d, e), (a, d, e))]
        matches = 0
        for bits in range(16):
            pattern = [1 if bits & (1 << k) else -1 for k in range(4)]
            combo = {}
            for s, tri in zip(pattern, tris):
                sign = 1
                for j in range(3):
                    edge = tri[:j] + tri[j + 1:]
                    combo[edge] = combo.get(edge, 0) + s * sign
                    sign = -sign
            if {k: v for k, v in combo.items() if v} == t:
                matches += 1
                assert tuple(pattern) == signs
        assert matches == 1


def test_wheel4_requires_common_neighbor():
    g = cycle_graph(5)
    X = clique_complex(g, 2)
    with pytest.raises(ValueError):
        wheel4_decompose(X, (0, 1, 2, 3), 4)


def test_support_reduce_pentagon_with_apex():
    # 5-cycle 0..4 plus an apex 5 over the four consecutive vertices 0,1,2,3
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                  (5, 0), (5, 1), (5, 2), (5, 3)])
    X = clique_complex(g, 2)
    chain, reduced = support_reduce(X, (0, 1, 2, 3, 4), 5)
    assert len(chain.entries) == 3
    assert set(reduced.entries) == {(0, 5), (3, 5), (3, 4), (0, 4)}
    assert all(v in (-1, 1) for v in reduced.entries.values())


def test_support_reduce_length4():
    X = clique_complex(complete_graph(5), 2)
    chain, reduced = support_reduce(X, (0, 1, 2, 3), 4)
    assert set(reduced.entries) == {(0, 4), (3, 4), (0, 3)}


def test_support_reduce_hypothesis_checked():
    g = cycle_graph(6)
    X = clique_complex(g, 2)
    with pytest.raises(ValueError):
        support_reduce(X, (0, 1, 2, 3, 4, 5), 0)


def test_cycle_cut_square_with_diagonal():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    X = clique_complex(g, 2)
    c1, c2, sign = cycle_cut(X, (0, 1, 2, 3), 3)
    assert c1 == (0, 1, 2)
    assert c2 == (2, 3, 0)
    assert sign in (-1, 1)


def test_cycle_cut_random_chorded():
    rng = random.Random(71)
    checked = 0
    while checked < 60:
        g = random_connected_graph(rng, rng.randint(5, 10), 0.6)
        X = clique_complex(g, 2)
        for verts in simple_cycles(g, 8, limit=40):
            l = len(verts)
            for i in range(3, l):
                if g.has_edge(verts[0], verts[i - 1]):
                    c1, c2, sign = cycle_cut(X, verts, i)
                    assert len(c1) + len(c2) == l + 2
                    checked += 1
                    break
            if checked >= 60:
                break
    # no chord -> error
    X = clique_complex(cycle_graph(5), 2)
    with pytest.raises(ValueError):
        cycle_cut(X, (0, 1, 2, 3, 4), 3)


def test_chorded_square_vector_lies_in_triangle_image():
    # a 4-cycle with a diagonal: its cycle vector lies in the column space
    # of the transposed triangle coboundary
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    X = clique_complex(g, 2)
    d1t = coboundary(X, 1).T.to_dense()
    t = np.array(cycle_vector(X, (0, 1, 2, 3)).to_dense_list())
    stacked = np.concatenate([d1t, t[:, None]], axis=1)
    assert rank_modp(stacked, P) == rank_modp(d1t, P)


def test_induced_cycles_basic():
    assert [c.verts for c in induced_cycles(cycle_graph(6))] == [(0, 1, 2, 3, 4, 5)]
    # triangles of K_4: each exactly once
    tris = list(induced_cycles(complete_graph(4)))
    assert sorted(c.verts for c in tris) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_induced_cycles_petersen():
    pet = kneser_graph(5, 2)
    cycles = list(induced_cycles(pet))
    by_len = {}
    for c in cycles:
        by_len.setdefault(len(c), 0)
        by_len[len(c)] += 1
    assert by_len[5] == 12
    assert 3 not in by_len and 4 not in by_len
    # brute-force oracle: 5-subsets inducing a cycle
    count = 0
    for sub in itertools.combinations(range(10), 5):
        degs = [sum(1 for w in sub if pet.has_edge(v, w)) for v in sub]
        edge_count = sum(degs) // 2
        if all(d == 2 for d in degs) and edge_count == 5 and _connected_subset(pet, sub):
            count += 1
    assert count == 12


def _connected_subset(g, sub):
    sub = set(sub)
    start = next(iter(sub))
    seen = {start}
    stack = [start]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w in sub and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == sub


def test_induced_cycles_no_duplicates_random():
    rng = random.Random(13)
    for _ in range(20):
        g = random_graph(rng, rng.randint(4, 9), 0.5)
        seen = set()
        for c in induced_cycles(g):
            canon = frozenset(c.verts)
            assert canon not in seen  # one orientation/rotation each
            seen.add(canon)
            # really induced: exactly l edges among the vertices
            edges = sum(1 for a, b in itertools.combinations(c.verts, 2)
                        if g.has_edge(a, b))
            assert edges == len(c)


def test_induced_cycles_cap():
    with pytest.raises(CycleCapExceeded):
        list(induced_cycles(kneser_graph(8, 2), cap=50))


def test_check_four_consecutive():
    rng = random.Random(20)
    chordal = random_interval_graph(rng, 12)
    assert check_four_consecutive(chordal).status == "holds"
    v = check_four_consecutive(cycle_graph(5))
    assert v.status == "fails"
    assert v.witness.verts == (0, 1, 2, 3, 4)
    assert check_four_consecutive(kneser_graph(8, 2)).status == "holds"
    assert check_four_consecutive(kneser_graph(8, 2), cap=10).status == "unknown"


def test_check_meshulam():
    assert check_meshulam(complete_graph(5))
    assert not check_meshulam(kneser_graph(8, 2))
    assert not check_meshulam(cycle_graph(5))
    assert check_meshulam(Graph(3, [(0, 1)]))  # vacuous below 4 vertices


def test_meshulam_paley97():
    assert check_meshulam(paley_graph(97))
    assert not check_meshulam(paley_graph(73))


def test_check_srg_inequality():
    assert check_srg_inequality(SrgParams(40, 27, 18, 18))
    assert not check_srg_inequality(SrgParams(16, 6, 2, 2))
    assert check_srg_inequality(srg_parameters(symplectic_graph(2, 3)))


def test_neighborhood_connected():
    p17 = paley_graph(17)
    assert all(neighborhood_connected(p17, x) for x in range(17))
    rook = hamming_graph(2, 3)
    assert not any(neighborhood_connected(rook, x) for x in range(9))
    assert neighborhood_connected(complete_graph(5), 0)


def test_conference_checker():
    v17 = check_conference_hypothesis(paley_graph(17))
    assert v17.is_conference and v17.v_gt_9 and v17.condition_a
    assert v17.implies_trivial_h1

    v5 = check_conference_hypothesis(paley_graph(5))
    assert v5.is_conference
    assert not v5.v_gt_9
    assert v5.condition_a  # single-vertex common neighborhoods are connected
    assert not v5.implies_trivial_h1  # the v > 9 precondition fails

    v29 = check_conference_hypothesis(paley_graph(29))
    assert v29.implies_trivial_h1

    not_srg = check_conference_hypothesis(cycle_graph(6))
    assert not not_srg.is_conference and not_srg.condition_a is None


def test_paley13_conference_condition_fails():
    # 13 is absent from the published list of Paley graphs satisfying the
    # connectivity hypothesis, and indeed some common neighborhood is split
    v13 = check_conference_hypothesis(paley_graph(13))
    assert v13.is_conference and v13.v_gt_9
    assert v13.condition_a is False


def test_h1_dimension_basics():
    rng = random.Random(90)
    for _ in range(10):
        chordal = random_interval_graph(rng, rng.randint(4, 12))
        assert h1_dimension(clique_complex(chordal, 2)).dim_h1 == 0
    assert h1_dimension(clique_complex(cycle_graph(5), 2)).dim_h1 == 1
    assert h1_dimension(clique_complex(kneser_graph(8, 2), 2)).dim_h1 == 0
    # disconnected: two 5-cycles
    g = Graph(10, [(i, (i + 1) % 5) for i in range(5)]
              + [(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    assert h1_dimension(clique_complex(g, 2)).dim_h1 == 2
    with pytest.raises(ValueError):
        h1_dimension(clique_complex(cycle_graph(5), 1))


def test_h1_triangle_free_equals_circuit_rank():
    rng = random.Random(8)
    for _ in range(20):
        g = random_triangle_free_graph(rng, rng.randint(4, 12), 0.4)
        report = h1_dimension(clique_complex(g, 2))
        assert report.dim_h1 == circuit_rank(g)


def test_h1_report_fields():
    X = clique_complex(cycle_graph(5), 2)
    r = h1_dimension(X)
    assert r.n_edges == 5 and r.rank_d0 == 4 and r.rank_d1 == 0
    assert r.dim_h1 == r.n_edges - r.rank_d1 - r.rank_d0
    assert len(r.primes_used) >= 2
    assert r.to_json_dict()["dim_h1"] == 1


def test_cohomology_report_verdicts():
    rep = cohomology_report(kneser_graph(8, 2))
    assert rep.dim_h1 == 0
    assert rep.checker_verdicts["four_consecutive"] == "true"
    assert rep.checker_verdicts["meshulam"] == "false"
    assert rep.checker_verdicts["conference_a"] == "not_applicable"
    rep5 = cohomology_report(cycle_graph(5))
    assert rep5.dim_h1 == 1
    assert rep5.checker_verdicts["four_consecutive"] == "false"
    p29 = cohomology_report(paley_graph(29))
    assert p29.dim_h1 == 0
    assert p29.checker_verdicts["conference_a"] == "true"
    assert p29.checker_verdicts["srg_inequality"] == "false"


def test_cohomology_report_tiny_graphs():
    for n in (1, 2, 3):
        rep = cohomology_report(Graph(n, [(i, i + 1) for i in range(n - 1)]))
        assert rep.dim_h1 == 0
        assert rep.checker_verdicts["four_consecutive"] == "true"


def test_common_neighborhood_connected_helper():
    g = hamming_graph(2, 3)
    # nonadjacent vertices in the rook's graph share exactly two neighbors
    pairs = [(x, y) for x in range(9) for y in range(x + 1, 9) if not g.has_edge(x, y)]
    assert all(not common_neighborhood_connected(g, x, y) for x, y in pairs)

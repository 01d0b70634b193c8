import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ebitforge import fixtures
from ebitforge.graphs import ring_graph, standard_generators
from ebitforge.induction import cl_map, enumerate_errors, induce_set
from ebitforge.pauli import multiply
from ebitforge.search import (
    ClassicalCode,
    CompatibilityGraph,
    DiffSet,
    build_compatibility,
    candidate_order,
    correction_diff_set,
    degenerate_filter,
    detection_diff_set,
    detects,
    max_clique,
)


@pytest.fixture(scope="module")
def induced5(s5):
    return induce_set(enumerate_errors(5, 1, 1), s5)


def brute_detects(words, vectors):
    return not any(a ^ b == v for a in words for b in words if a != b for v in vectors)


class TestClassicalCode:
    def test_requires_zero(self):
        with pytest.raises(ValueError):
            ClassicalCode((1, 2), 2, 0)

    def test_distinct(self):
        with pytest.raises(ValueError):
            ClassicalCode((0, 1, 1), 2, 0)

    def test_canonical(self):
        code = ClassicalCode.canonical([5, 6, 7], 3, 0)
        assert code.codewords == (0, 2, 3)

    def test_strings_roundtrip(self):
        code = ClassicalCode.from_strings(fixtures.RING5["codewords"])
        assert code.strings() == fixtures.RING5["codewords"] and code.K == 16


class TestDetects:
    def test_published_code(self, code5, induced5):
        assert detects(code5, induced5) == (True, None)

    def test_codeword_equal_to_error(self, induced5):
        for e in induced5:
            ok, why = detects(ClassicalCode((0, e.bits), 5, 1), induced5)
            assert not ok and why.kind == "collision"
            assert {why.codeword_a, why.codeword_b} == {0, e.bits}

    def test_random_subsets_match_brute_force(self, induced5):
        rng = random.Random(7)
        vectors = [e.bits for e in induced5]
        for _ in range(300):
            words = [0] + rng.sample(range(1, 64), 3)
            ok, _ = detects(ClassicalCode(tuple(words), 5, 1), induced5)
            assert ok == brute_detects(words, vectors)

    def test_monotone(self, code5, induced5):
        rng = random.Random(3)
        for _ in range(50):
            keep = [0] + rng.sample(code5.codewords[1:], rng.randrange(0, 15))
            assert detects(ClassicalCode(tuple(keep), 5, 1), induced5)[0]

    def test_length_mismatch(self, s3, induced5):
        with pytest.raises(ValueError):
            detects(ClassicalCode((0,), 3, 2), induced5)

    def test_degenerate_needs_word_ops(self, s7, code7, ops7):
        # Z_1 Z_3 X_2 ... products vanish; a weight-3 error with zero image exists on the 7-ring
        errs = [e for e in enumerate_errors(7, 3, 4) if cl_map(e, s7).bits == 0]
        assert errs
        induced = induce_set(errs, s7)
        ok, why = detects(code7, induced)
        assert not ok and why.kind == "degenerate-unresolved"
        ok, why = detects(code7, induced, ops7)
        assert not ok and why.kind == "degenerate-anticommutes"


class TestDiffSets:
    def test_detection_single_error(self, s5):
        d = detection_diff_set([fixtures_pauli("XIIII|I")], s5)
        assert d.vectors == {0b010010} and not d.degenerate

    def test_identity_pairs_contribute_nothing(self, s5):
        e = fixtures_pauli("XIIII|I")
        assert correction_diff_set([e, e], s5).vectors == {0b010010}

    def test_correction_matches_products(self, s5):
        errs = list(enumerate_errors(5, 1, 1))
        d = correction_diff_set(errs, s5)
        ops = [None] + errs
        want = set()
        for a, b in combinations(ops, 2):
            p = b if a is None else multiply(a, b)
            v = cl_map(p, s5).bits
            if v:
                want.add(v)
        assert d.vectors == want

    def test_ring7_correction_set_by_brute_force(self, s7):
        errs = list(enumerate_errors(7, 2, 4))
        d = correction_diff_set(errs, s7)
        ops = [None] + errs
        want, zero = set(), 0
        for a, b in combinations(ops, 2):
            v = cl_map(b if a is None else multiply(a, b), s7).bits
            if v:
                want.add(v)
            else:
                zero += 1
        assert d.vectors == want
        assert len(d.vectors) == 1570 and len(d.degenerate) == zero == 36

    def test_degenerate_filter_keeps_published_words(self, s7):
        d = correction_diff_set(enumerate_errors(7, 2, 4), s7)
        masks = degenerate_filter(d)
        assert masks
        for p in d.degenerate_products():
            assert cl_map(p, s7).bits == 0


def fixtures_pauli(text):
    from ebitforge.pauli import parse_pauli
    return parse_pauli(text)


class TestCompatibility:
    def test_empty_diff_set_is_complete(self):
        g = build_compatibility([1, 2, 3, 4], set())
        assert g.adjacency.sum() == 12

    def test_everything_forbidden_is_empty(self):
        g = build_compatibility(range(1, 8), set(range(1, 8)))
        assert not g.adjacency.any()

    def test_published_codewords_are_a_clique(self, s5, code5):
        d = detection_diff_set(enumerate_errors(5, 1, 1), s5)
        g = build_compatibility(range(64), d)
        assert g.is_clique(code5.codewords)

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            CompatibilityGraph([1, 2], np.array([[False, True], [False, False]]))

    def test_neighbor_masks(self):
        g = build_compatibility([1, 2, 3], {3})
        assert g.neighbor_masks() == [0b100, 0b100, 0b011]

    def test_candidate_order(self):
        assert candidate_order([6, 1, 3, 4, 1]) == [1, 4, 3, 6]


def brute_clique(adj):
    n = len(adj)
    for size in range(n, 0, -1):
        for sub in combinations(range(n), size):
            if all(adj[a][b] for a, b in combinations(sub, 2)):
                return size
    return 0


@st.composite
def random_graphs(draw):
    n = draw(st.integers(1, 20))
    p = draw(st.floats(0.1, 0.9))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, 1)
    return CompatibilityGraph(list(range(n)), upper | upper.T)


class TestMaxClique:
    @settings(max_examples=60, deadline=None)
    @given(random_graphs())
    def test_matches_exhaustive(self, g):
        res = max_clique(g)
        assert res.flag == "exact"
        assert g.is_clique(res.clique)
        assert len(res.clique) == brute_clique(g.adjacency)

    def test_no_edges(self):
        g = CompatibilityGraph([5, 9, 11], np.zeros((3, 3), dtype=bool))
        res = max_clique(g)
        assert len(res.clique) == 1 and res.flag == "exact"

    def test_empty(self):
        assert max_clique(build_compatibility([], set())).clique == []

    def test_ring5_detection(self, s5, induced5):
        d = detection_diff_set(enumerate_errors(5, 1, 1), s5)
        cand = candidate_order(v for v in range(1, 64) if v not in d)
        res = max_clique(build_compatibility(cand, d))
        words = [0] + res.clique
        assert len(words) >= 16 and res.exact
        assert detects(ClassicalCode(tuple(words), 5, 1), induced5)[0]

    def test_impossible_target_hits_budget(self, s7):
        d = detection_diff_set(enumerate_errors(7, 1, 4), s7)
        cand = candidate_order(v for v in range(1, 1 << 11) if v not in d)
        res = max_clique(build_compatibility(cand, d), target=2048, budget=3)
        assert res.flag == "budget" and 0 < len(res.clique) < 2048
        assert res.nodes == 4

    def test_target_stops_early(self):
        g = build_compatibility(range(1, 32), set())
        res = max_clique(g, target=3)
        assert res.flag == "target" and len(res.clique) >= 3

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2 ** 32 - 1))
    def test_translated_clique_still_detects(self, seed):
        s = standard_generators(ring_graph(5), 1)
        induced = induce_set(enumerate_errors(5, 1, 1), s)
        d = detection_diff_set(enumerate_errors(5, 1, 1), s)
        rng = random.Random(seed)
        cand = rng.sample(range(64), 20)
        res = max_clique(build_compatibility(cand, d))
        code = ClassicalCode.canonical(res.clique, 5, 1)
        assert detects(code, induced)[0]

    def test_seeded_runs_repeat(self, s5):
        d = detection_diff_set(enumerate_errors(5, 1, 1), s5)
        g = build_compatibility(candidate_order(v for v in range(1, 64) if v not in d), d)
        assert max_clique(g, seed=11).clique == max_clique(g, seed=11).clique

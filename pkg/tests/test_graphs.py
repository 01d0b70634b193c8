import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ebitforge import fixtures
from ebitforge.graphs import (
    CodeParams,
    Graph,
    StabilizerSet,
    anticommutation_signature,
    graph_from_edges,
    initial_generators,
    read_graph,
    ring_graph,
    standard_generators,
    symplectic_rank,
    write_graph,
)
from ebitforge.pauli import commutes, parse_pauli, render_pauli


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph_from_edges(n, edges)


class TestRing:
    def test_ring5_first_row(self):
        assert "".join(map(str, ring_graph(5).adjacency[0])) == "01001"

    def test_ring3_second_row(self):
        assert "".join(map(str, ring_graph(3).adjacency[1])) == "101"

    def test_symmetric_zero_diagonal(self):
        a = ring_graph(3).adjacency
        assert np.array_equal(a, a.T) and not np.diag(a).any()

    def test_too_small(self):
        with pytest.raises(ValueError):
            ring_graph(2)


class TestGraph:
    @pytest.mark.parametrize("adj", [[[0, 1], [0, 0]], [[1, 0], [0, 0]], [[0, 2], [2, 0]]])
    def test_rejects_bad_adjacency(self, adj):
        with pytest.raises(ValueError):
            Graph(np.array(adj))

    def test_file_roundtrip(self, tmp_path):
        g = graph_from_edges(6, [(1, 2), (2, 5), (3, 6), (1, 6)])
        path = tmp_path / "g.txt"
        write_graph(g, path)
        assert path.read_text().splitlines()[0] == "n 6"
        assert read_graph(path) == g

    def test_file_comments_and_errors(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("# ring\nn 3\n1 2\n2 3 # closing edge next\n3 1\n")
        assert read_graph(path) == ring_graph(3)
        path.write_text("3\n1 2\n")
        with pytest.raises(ValueError):
            read_graph(path)
        path.write_text("n 3\n1 4\n")
        with pytest.raises(ValueError):
            read_graph(path)


class TestStandardGenerators:
    def test_ring5_table(self):
        s = standard_generators(ring_graph(5), 1)
        assert [render_pauli(g) for g in s.generators] == fixtures.RING5["generators"]

    def test_ring7_table(self):
        s = standard_generators(ring_graph(7), 4)
        assert [render_pauli(g) for g in s.generators] == fixtures.RING7["generators"]
        assert render_pauli(s.h[-1]) == "IIIIIIZ|IIIX"

    def test_ring3_worked_example(self):
        s = standard_generators(ring_graph(3), 2)
        assert [render_pauli(g) for g in s.generators] == [
            "XZZ|II", "ZXZ|ZI", "ZZX|IZ", "IZI|XI", "IIZ|IX"]

    def test_no_ebits_is_plain_graph_state(self):
        g = graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 3)])
        s = standard_generators(g, 0)
        assert [render_pauli(x) for x in s.generators] == ["XZZI|", "ZXZI|", "ZZXZ|", "IIZX|"]

    @pytest.mark.parametrize("c", [-1, 6])
    def test_c_out_of_range(self, c):
        with pytest.raises(ValueError):
            standard_generators(ring_graph(5), c)

    @settings(max_examples=60)
    @given(graphs(), st.data())
    def test_invariants_on_random_graphs(self, g, data):
        c = data.draw(st.integers(0, g.n))
        s = standard_generators(g, c)
        assert len(s.generators) == g.n + c
        assert all(commutes(a, b) for a in s.generators for b in s.generators)
        assert symplectic_rank(s.generators) == g.n + c
        assert anticommutation_signature(s) == anticommutation_signature(initial_generators(g.n, c))
        assert anticommutation_signature(s) == (g.n - c, c)
        assert all(x.phase_exp == 0 for x in s.generators)

    def test_roles(self):
        s = standard_generators(ring_graph(5), 1)
        assert len(s.isotropic) == 4
        (g5, h), = s.symplectic_pairs
        assert render_pauli(g5) == "ZIIZX|Z" and render_pauli(h) == "IIIIZ|X"
        assert render_pauli(s.bob_z_generator(0)) == "ZIIZX|Z"


class TestInitialGenerators:
    def test_ring5(self):
        s = initial_generators(5, 1)
        assert [render_pauli(g) for g in s.generators] == [
            "ZIIII|I", "IZIII|I", "IIZII|I", "IIIZI|I", "IIIIZ|Z", "IIIIX|X"]

    def test_one_ebit(self):
        assert [render_pauli(g) for g in initial_generators(1, 1).generators] == ["Z|Z", "X|X"]

    def test_bad_c(self):
        with pytest.raises(ValueError):
            initial_generators(3, 4)


class TestStabilizerSetValidation:
    def test_anticommuting_rejected(self):
        with pytest.raises(ValueError, match="anticommute"):
            StabilizerSet((parse_pauli("XI|"), parse_pauli("ZI|")), 2, 0)

    def test_dependent_rejected(self):
        with pytest.raises(ValueError):
            StabilizerSet((parse_pauli("ZZ|"), parse_pauli("ZZ|")), 2, 0)

    def test_wrong_count(self):
        with pytest.raises(ValueError):
            StabilizerSet((parse_pauli("ZI|"),), 2, 0)


class TestCodeParams:
    def test_str(self):
        assert str(CodeParams(5, 16, 2, 1)) == "((5,16,2;1))"

    @pytest.mark.parametrize("args", [(5, 0, 2, 1), (5, 65, 2, 1), (5, 4, 0, 1), (3, 2, 2, 4)])
    def test_bounds(self, args):
        with pytest.raises(ValueError):
            CodeParams(*args)

    def test_max_dimension(self):
        assert CodeParams(5, 64, 1, 1).K == 64

import numpy as np
import pytest

from ssig import kernels
from ssig.arith import DomainError, Fp2, Fp2Element
from ssig.brandt import trace_formula, vertex_count
from ssig.ssgraph import (
    SUPPORTED_ELLS,
    build_graph,
    find_supersingular_seed,
    neighbors,
    validate_modpoly_table,
)


class TestModpolyTable:
    @pytest.mark.parametrize("ell", SUPPORTED_ELLS)
    def test_symmetry_and_kronecker_congruence(self, ell):
        validate_modpoly_table(ell)


class TestSeed:
    def test_p13_unique_seed(self):
        assert find_supersingular_seed(13) == Fp2Element(5, 0)

    def test_seed_curve_has_trace_zero(self):
        for p in (13, 109, 193):
            j = find_supersingular_seed(p).c0
            k = (1728 - j) % p
            a = 3 * j * k % p
            b = 2 * j * k * k % p
            assert kernels.curve_trace_sum(p, a, b) == 0

    def test_domain(self):
        with pytest.raises(DomainError):
            find_supersingular_seed(11)


class TestNeighbors:
    def test_out_degree(self):
        F = Fp2(109)
        g = build_graph(109, 3)
        for jval in g.vertices:
            mults = neighbors(F, jval, 3)
            assert sum(mults.values()) == 4

    def test_smallest_graph_neighbors(self):
        F = Fp2(13)
        j = Fp2Element(5, 0)
        assert neighbors(F, j, 2) == {j: 3}


class TestBuildGraph:
    def test_p13_adjacency(self):
        g = build_graph(13, 2)
        assert g.n == 1
        assert g.adjacency.tolist() == [[3]]

    def test_p109_structure(self, graphs):
        for ell in (2, 3):
            g = graphs(109, ell)
            assert g.n == 9
            assert (g.adjacency.sum(axis=1) == ell + 1).all()
            assert np.array_equal(g.adjacency, g.adjacency.T)
            assert g.trace() == trace_formula(109, ell)

    def test_p1009_simple(self, graphs):
        g = graphs(1009, 2)
        assert g.n == 84
        assert g.trace() == 0
        assert int(g.adjacency.max()) == 1

    @pytest.mark.parametrize("ell", [5, 7])
    def test_larger_degrees(self, graphs, ell):
        g = graphs(109, ell)
        assert g.n == vertex_count(109)
        assert (g.adjacency.sum(axis=1) == ell + 1).all()
        assert g.trace() == trace_formula(109, ell)
        assert g.brandt().entries.T.tolist() == g.adjacency.tolist()

    def test_no_extra_automorphism_vertices(self, graphs):
        for jv in graphs(109, 2).vertices:
            assert not (jv.c1 == 0 and jv.c0 in (0, 1728 % 109))

    def test_deterministic_across_seeds(self):
        a = build_graph(109, 2, seed=0)
        b = build_graph(109, 2, seed=99)
        assert a.vertices == b.vertices
        assert np.array_equal(a.adjacency, b.adjacency)

    def test_edge_count(self, graphs):
        g = graphs(109, 2)
        # 9 vertices of degree 3 plus one loop counted once
        assert g.edge_count() == (9 * 3 + 1) // 2

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            build_graph(11, 2)  # p = 11 mod 12
        with pytest.raises(DomainError):
            build_graph(14, 2)  # not prime
        with pytest.raises(DomainError):
            build_graph(109, 11)  # unsupported degree

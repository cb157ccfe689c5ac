import numpy as np
import pytest

from ssig.arith import DomainError
from ssig.brandt import (
    BrandtMatrix,
    TheoremViolation,
    brandt_coprime_product,
    brandt_prime_power,
    identity_matrix,
    sigma_coprime,
    trace_formula,
    vertex_count,
)


class TestSigmaCoprime:
    def test_values(self):
        assert sigma_coprime(6, 5) == 12
        assert sigma_coprime(6, 3) == 3  # only 1 and 2 are coprime to 3
        assert sigma_coprime(8, 109) == 15

    def test_row_sums_of_prime_powers(self, graphs):
        g = graphs(109, 2)
        for k in range(4):
            m = brandt_prime_power(g.brandt(), k)
            assert set(m.row_sums()) == {sigma_coprime(2**k, 109)}


class TestVertexCount:
    def test_congruence_one_mod_twelve(self):
        assert vertex_count(13) == 1
        assert vertex_count(109) == 9
        assert vertex_count(1009) == 84

    def test_other_residues(self):
        assert vertex_count(5) == 1
        assert vertex_count(7) == 1
        assert vertex_count(11) == 2
        assert vertex_count(23) == 3

    def test_domain(self):
        with pytest.raises(DomainError):
            vertex_count(4)


class TestTraceFormula:
    def test_frozen_values(self):
        assert trace_formula(109, 1) == 9
        assert trace_formula(109, 2) == 1
        assert trace_formula(109, 3) == 4
        assert trace_formula(109, 6) == 10
        assert trace_formula(109, 9) == 17
        assert trace_formula(193, 2) == 0
        assert trace_formula(1009, 2) == 0
        assert trace_formula(1009, 4) == 84

    def test_degree_one_gives_vertex_count(self):
        for p in (13, 37, 109, 193, 433, 1009):
            assert trace_formula(p, 1) == vertex_count(p)

    def test_domain(self):
        with pytest.raises(DomainError):
            trace_formula(12, 2)
        with pytest.raises(DomainError):
            trace_formula(109, 0)
        with pytest.raises(DomainError):
            trace_formula(109, 109)


@pytest.mark.parametrize("p", [109, 193, 433, 1009])
@pytest.mark.parametrize("ell", [2, 3])
class TestRouteAgreement:
    def test_prime_power_traces_match_formula(self, graphs, p, ell):
        base = graphs(p, ell).brandt()
        for k in range(4):
            assert brandt_prime_power(base, k).trace() == trace_formula(p, ell**k)

    def test_coprime_product_trace_matches_formula(self, graphs, p, ell):
        other = 5 if ell == 3 else 3
        a = graphs(p, ell).brandt()
        b = graphs(p, other).brandt()
        assert brandt_coprime_product(a, b).trace() == trace_formula(p, ell * other)

    def test_entrywise_product_equals_mixed_trace(self, graphs, p, ell):
        other = 5 if ell == 3 else 3
        a = graphs(p, ell).brandt().entries
        b = graphs(p, other).brandt().entries
        assert int((a * b).sum()) == trace_formula(p, ell * other)


class TestBrandtMatrixAlgebra:
    def test_identity(self):
        m = identity_matrix(4)
        assert m.trace() == 4
        assert m.degree == 1

    def test_recurrence_base_cases(self, graphs):
        base = graphs(109, 2).brandt()
        assert brandt_prime_power(base, 0) == identity_matrix(9, base.vertex_order)
        assert brandt_prime_power(base, 1) == base

    def test_symmetry_preserved(self, graphs):
        base = graphs(109, 3).brandt()
        m = brandt_prime_power(base, 3).entries
        assert np.array_equal(m, m.T)

    def test_coprime_requires_coprime_degrees(self, graphs):
        b = graphs(109, 2).brandt()
        with pytest.raises(DomainError):
            brandt_coprime_product(b, b)

    def test_rejects_negative_entries(self):
        with pytest.raises(DomainError):
            BrandtMatrix(2, [[1, -1], [0, 1]])

    def test_rejects_nonsquare(self):
        with pytest.raises(DomainError):
            BrandtMatrix(2, [[1, 2, 3]])

    def test_power_domain(self, graphs):
        base = graphs(109, 2).brandt()
        with pytest.raises(DomainError):
            brandt_prime_power(base, -1)
        with pytest.raises(DomainError):
            brandt_prime_power(base, 99)  # entries would leave int64 range

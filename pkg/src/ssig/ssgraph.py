"""Supersingular ell-isogeny graph construction over F_p^2.

Vertices are supersingular j-invariants found by BFS from a seed curve;
edge multiplicities are root multiplicities of the classical modular
polynomial specialized at a vertex.  The adjacency matrix is the Brandt
matrix B(ell), and every structural theorem about it is asserted at
build time.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .arith import DomainError, Fp2, Fp2Element, PolyFp2, is_prime
from .brandt import BrandtMatrix, TheoremViolation, trace_formula, vertex_count
from ._modpoly_data import MODULAR_POLYNOMIALS

SUPPORTED_ELLS = (2, 3, 5, 7)


def validate_modpoly_table(ell):
    """Structural self-checks on the shipped Phi_ell coefficient table."""
    table = MODULAR_POLYNOMIALS[ell]
    for (i, j), coef in table.items():
        if table.get((j, i), 0) != coef:
            raise TheoremViolation(f"Phi_{ell} table is not symmetric at {(i, j)}")
        if i > ell + 1 or j > ell + 1:
            raise TheoremViolation(f"Phi_{ell} table degree exceeds {ell + 1}")
    if table.get((ell + 1, 0), 0) != 1:
        raise TheoremViolation(f"Phi_{ell} is not monic of degree {ell + 1}")
    kronecker_target = {
        (ell + 1, 0): 1,
        (0, ell + 1): 1,
        (ell, ell): -1,
        (1, 1): -1,
    }
    for key in set(table) | set(kronecker_target):
        if (table.get(key, 0) - kronecker_target.get(key, 0)) % ell != 0:
            raise TheoremViolation(
                f"Phi_{ell} fails the Kronecker congruence at {key}"
            )


for _ell in SUPPORTED_ELLS:
    validate_modpoly_table(_ell)


@dataclass
class IsogenyGraph:
    """Multigraph Lambda_p(ell): vertex list plus adjacency multiplicities."""

    p: int
    ell: int
    field: Fp2
    vertices: list
    adjacency: np.ndarray
    index: dict = field(repr=False, default=None)

    @property
    def n(self):
        return len(self.vertices)

    def brandt(self):
        return BrandtMatrix(self.ell, self.adjacency, tuple(self.vertices))

    def trace(self):
        return int(np.trace(self.adjacency))

    def edge_count(self):
        """Undirected edge count, loops counted once."""
        return (self.n * (self.ell + 1) + self.trace()) // 2


def find_supersingular_seed(p):
    """Smallest j in F_p whose curve y^2 = x^3 + 3j(1728-j)x + 2j(1728-j)^2
    has exactly p + 1 points (trace zero implies supersingular)."""
    _check_graph_prime(p)
    j = kernels.supersingular_scan(p)
    if j < 0:
        raise TheoremViolation(
            f"no supersingular j-invariant found in F_{p}; one must exist"
        )
    return Fp2Element(j, 0)


def _check_graph_prime(p):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p % 12 != 1:
        raise DomainError(
            f"graph construction requires p = 1 mod 12 (got p={p}); "
            "j = 0 and 1728 would carry extra automorphisms otherwise"
        )
    if p < 13:
        raise DomainError(f"p must be at least 13, got {p}")


def _specialize(F, ell, jval, seed_powers=None):
    """Phi_ell(j, Y) as a PolyFp2 in Y."""
    table = MODULAR_POLYNOMIALS[ell]
    deg = ell + 1
    jpow = [F.one()]
    for _ in range(deg):
        jpow.append(F.mul(jpow[-1], jval))
    coeffs = [F.zero()] * (deg + 1)
    for (xi, yi), coef in table.items():
        term = F.mul(F.element(coef % F.p, 0), jpow[xi])
        coeffs[yi] = F.add(coeffs[yi], term)
    return PolyFp2(F, coeffs)


def neighbors(F, jval, ell, seed=0):
    """Multiset of neighboring j-invariants, as a root-multiplicity map."""
    from .arith import roots_with_multiplicity

    poly = _specialize(F, ell, jval)
    mults = roots_with_multiplicity(poly, seed=seed)
    if sum(mults.values()) != ell + 1:
        raise TheoremViolation(
            f"out-degree is not {ell + 1} at j={jval} (p={F.p}, ell={ell}); "
            "contradicts the (ell+1)-regularity of Lambda_p(ell)"
        )
    return mults


def build_graph(p, ell, seed=0):
    """Construct Lambda_p(ell) by BFS and verify all structural theorems."""
    _check_graph_prime(p)
    if ell not in SUPPORTED_ELLS:
        raise DomainError(f"ell must be one of {SUPPORTED_ELLS}, got {ell}")
    if p == ell:
        raise DomainError("ell must differ from p")
    F = Fp2(p)
    seed_j = find_supersingular_seed(p)
    order = [seed_j]
    index = {seed_j: 0}
    adj_rows = []
    frontier = 0
    while frontier < len(order):
        jval = order[frontier]
        row = {}
        for nb, mult in neighbors(F, jval, ell, seed=seed).items():
            if nb not in index:
                index[nb] = len(order)
                order.append(nb)
            row[index[nb]] = mult
        adj_rows.append(row)
        frontier += 1

    n = len(order)
    expected_n = vertex_count(p)
    if n != expected_n:
        raise TheoremViolation(
            f"vertex count {n} differs from the class-number formula value "
            f"{expected_n} for p={p}"
        )
    adjacency = np.zeros((n, n), dtype=np.int64)
    for i, row in enumerate(adj_rows):
        for k, mult in row.items():
            adjacency[i, k] = mult

    # canonical vertex order: lexicographic on (c1, c0)
    perm = sorted(range(n), key=lambda i: (order[i].c1, order[i].c0))
    vertices = [order[i] for i in perm]
    adjacency = adjacency[np.ix_(perm, perm)]
    index = {jv: i for i, jv in enumerate(vertices)}

    row_sums = adjacency.sum(axis=1)
    if not (row_sums == ell + 1).all():
        raise TheoremViolation(
            f"row sums are not ell+1={ell + 1} for p={p}; out-degree theorem fails"
        )
    if not np.array_equal(adjacency, adjacency.T):
        raise TheoremViolation(
            f"adjacency is not symmetric for p={p} = 1 mod 12"
        )
    bad = {0, 1728 % p}
    for jv in vertices:
        if jv.c1 == 0 and jv.c0 in bad:
            raise TheoremViolation(
                f"vertex j={jv.c0} appeared although p={p} = 1 mod 12"
            )
    g = IsogenyGraph(p=p, ell=ell, field=F, vertices=vertices,
                     adjacency=adjacency, index=index)
    if g.trace() != trace_formula(p, ell):
        raise TheoremViolation(
            f"graph loop count {g.trace()} disagrees with the trace formula "
            f"for p={p}, ell={ell}"
        )
    return g

"""Collision statistics: loops, multi-edges, intersection, bi-route numbers.

Every theorem bound is exposed as a checkable predicate, and the bi-route
number is computed by three computationally independent routes that must
agree exactly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import DomainError
from .brandt import (
    BrandtMatrix,
    TheoremViolation,
    brandt_coprime_product,
    brandt_prime_power,
    trace_formula,
)


@dataclass
class GraphStats:
    p: int
    ell: int
    n: int
    loop_count: int
    multi_edge_pair_count: int   # unordered pairs of parallel edges, C(m, 2)
    redundant_edges: int         # surplus beyond one edge per site, m - 1
    re_offdiag: dict             # m -> total redundant edges at m-fold pair sites
    re_loops: dict               # m -> total redundant loops at m-fold loop sites
    is_simple: bool
    trace_l: int
    trace_l2: int

    def loop_bound(self):
        return 2 * self.ell

    def redundant_bound(self):
        return math.floor(self.ell**2 + Fraction(self.ell, 4))

    def redundant_bracket(self):
        """Lower/upper bounds on redundant edges from Tr(B(ell^2)) - n."""
        excess = self.trace_l2 - self.n
        return (Fraction(excess, 2 * self.ell), Fraction(excess, 2))


@dataclass
class BirouteReport:
    p: int
    ell1: int
    ell2: int
    R: int
    value_definitional: int
    value_telescoped: int
    value_hurwitz: int
    upper_bound: int


def graph_stats(g):
    """All loop/multi-edge statistics of a graph, with identities asserted."""
    A = g.adjacency
    n = g.n
    ell = g.ell
    loop_count = int(np.trace(A))
    diag = np.diag(A)
    upper = np.triu(A, 1)

    def pairs(x):
        return int((x * (x - 1) // 2).sum())

    multi_pairs = pairs(upper) + pairs(diag)
    redundant = int(np.maximum(upper - 1, 0).sum() + np.maximum(diag - 1, 0).sum())
    re_offdiag = {}
    re_loops = {}
    for m in range(2, int(A.max()) + 1):
        sites = int((upper == m).sum())
        if sites:
            re_offdiag[m] = sites * (m - 1)
        loop_sites = int((diag == m).sum())
        if loop_sites:
            re_loops[m] = loop_sites * (m - 1)

    B2 = brandt_prime_power(g.brandt(), 2)
    trace_l2 = B2.trace()
    # decomposition of the trace excess over multiplicity classes
    decomposed = sum(2 * m * re for m, re in re_offdiag.items()) + sum(
        m * re for m, re in re_loops.items()
    )
    if trace_l2 - n != decomposed:
        raise TheoremViolation(
            f"multi-edge decomposition of Tr(B(ell^2)) - n fails for "
            f"p={g.p}, ell={ell}: {trace_l2 - n} != {decomposed}"
        )
    is_simple = loop_count == 0 and multi_pairs == 0
    if is_simple != (loop_count == 0 and trace_l2 == n):
        raise TheoremViolation(
            f"simplicity criterion Tr(B(ell^2)) = n fails for p={g.p}, ell={ell}"
        )
    return GraphStats(
        p=g.p,
        ell=ell,
        n=n,
        loop_count=loop_count,
        multi_edge_pair_count=multi_pairs,
        redundant_edges=redundant,
        re_offdiag=re_offdiag,
        re_loops=re_loops,
        is_simple=is_simple,
        trace_l=loop_count,
        trace_l2=trace_l2,
    )


def _check_pair(g1, g2):
    if g1.p != g2.p:
        raise DomainError("graphs live over different primes")
    if g1.vertices != g2.vertices:
        raise DomainError("graphs use different vertex orders")


def intersection_number(g1, g2):
    """Number of common edges: sum over i <= j of min(B_ij(l1), B_ij(l2))."""
    _check_pair(g1, g2)
    m = np.minimum(g1.adjacency, g2.adjacency)
    return int((np.triu(m, 1).sum()) + np.diag(m).sum())


def edit_distance(g1, g2):
    """|E1| + |E2| - 2 |E1 cap E2|, cross-checked by direct counting."""
    _check_pair(g1, g2)
    value = g1.edge_count() + g2.edge_count() - 2 * intersection_number(g1, g2)
    # independent route: symmetric difference of edge multisets
    diff = np.abs(g1.adjacency - g2.adjacency)
    direct = int(np.triu(diff, 1).sum() + np.diag(diff).sum())
    if value != direct:
        raise TheoremViolation(
            f"edit distance mismatch for p={g1.p}: {value} != {direct}"
        )
    return value


def _mixed_brandt(g1, g2, a, b):
    """B(ell1^a * ell2^b) from the two adjacency matrices."""
    m1 = brandt_prime_power(g1.brandt(), a)
    m2 = brandt_prime_power(g2.brandt(), b)
    return brandt_coprime_product(m1, m2)


def _cyclic_counts(g, amax):
    """C(ell^a) matrices for a = 1..amax: B(ell^a) - B(ell^(a-2))."""
    base = g.brandt()
    powers = [brandt_prime_power(base, a) for a in range(amax + 1)]
    out = []
    for a in range(1, amax + 1):
        prev = powers[a - 2].entries if a >= 2 else 0
        out.append(powers[a].entries - prev)
    return out


def biroute(g1, g2, R, method="all"):
    """R-th bi-route number of two isogeny graphs over the same prime.

    definitional: counts pairs of backtracking-free path classes directly
    from the cyclic-isogeny matrices C(ell^a).
    telescoped: the trace expression in the mixed Brandt matrices.
    hurwitz: the same expression with every trace from the class-number
    formula (no matrices involved).
    """
    _check_pair(g1, g2)
    if g1.ell == g2.ell:
        raise DomainError("bi-route number needs two distinct primes ell")
    if not 1 <= R <= 5:
        raise DomainError(f"R must be in [1, 5], got {R}")
    if method not in ("definitional", "telescoped", "hurwitz", "all"):
        raise DomainError(f"unknown method {method!r}")
    p = g1.p
    l1, l2 = g1.ell, g2.ell
    n = g1.n

    vals = {}
    if method in ("definitional", "all"):
        c1 = _cyclic_counts(g1, R)
        c2 = _cyclic_counts(g2, R)
        total = 0
        for a1 in range(R):
            for a2 in range(R):
                total += int((c1[a1] * c2[a2]).sum())
        vals["definitional"] = total
    if method in ("telescoped", "all"):
        def tr(a, b):
            if a == 0 and b == 0:
                return n
            return _mixed_brandt(g1, g2, a, b).trace()

        vals["telescoped"] = (
            tr(R, R) + tr(R - 1, R) + tr(R, R - 1) + tr(R - 1, R - 1)
            - tr(R, 0) - tr(R - 1, 0) - tr(0, R) - tr(0, R - 1) + n
        )
    if method in ("hurwitz", "all"):
        def trf(a, b):
            m = l1**a * l2**b
            return n if m == 1 else trace_formula(p, m)

        vals["hurwitz"] = (
            trf(R, R) + trf(R - 1, R) + trf(R, R - 1) + trf(R - 1, R - 1)
            - trf(R, 0) - trf(R - 1, 0) - trf(0, R) - trf(0, R - 1) + n
        )
    if len(set(vals.values())) > 1:
        raise TheoremViolation(
            f"bi-route routes disagree for p={p}, ({l1},{l2}), R={R}: {vals}"
        )
    value = next(iter(vals.values()))
    lo, hi = sorted((l1, l2))
    return BirouteReport(
        p=p,
        ell1=l1,
        ell2=l2,
        R=R,
        value_definitional=vals.get("definitional", value),
        value_telescoped=vals.get("telescoped", value),
        value_hurwitz=vals.get("hurwitz", value),
        upper_bound=biroute_bound(lo, hi, R),
    )


def _divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def biroute_bound(ell1, ell2, R):
    """Divisor-sum upper bound on the R-th bi-route number.

    (ell1 ell2)^floor(R/2) plus twice the sum of divisors above the square
    root, for each of the four mixed degrees.
    """
    if ell1 >= ell2:
        raise DomainError(f"requires ell1 < ell2, got {ell1} >= {ell2}")
    if R < 1:
        raise DomainError(f"R must be >= 1, got {R}")
    total = (ell1 * ell2) ** (R // 2)
    for a, b in ((R, R), (R - 1, R), (R, R - 1), (R - 1, R - 1)):
        m = ell1**a * ell2**b
        total += 2 * sum(d for d in _divisors(m) if d * d > m)
    return total


def _sqrt_lower(x, scale=10**12):
    """Rational lower bound for sqrt(x)."""
    return Fraction(math.isqrt(x * scale * scale), scale)


def biroute_bound_closed(ell1, ell2, R):
    """Closed-form O((ell1 ell2)^R) bound, rounded up to an integer.

    The subtracted square-root terms are evaluated with rational lower
    approximations, which only enlarges the bound and keeps it valid.
    """
    if ell1 >= ell2:
        raise DomainError(f"requires ell1 < ell2, got {ell1} >= {ell2}")
    if R < 1:
        raise DomainError(f"R must be >= 1, got {R}")
    l1, l2 = ell1, ell2
    main = (
        2 * Fraction((l1 * l2) ** R * (l1 + 1) * (l2 + 1), (l1 - 1) * (l2 - 1))
        + (l1 * l2) ** (R // 2)
        - 4 * Fraction(l2**R * (l2 + 1), (l1 - 1) * (l2 - 1))
    )
    s1 = _sqrt_lower(l1)
    s2 = _sqrt_lower(l2)
    s12 = _sqrt_lower((l1 * l2) ** (R - 1))
    sub = 2 * s12 * (s1 + 1) * (R * s2 + R + s2) / (l2 - 1)
    return math.ceil(main - sub)

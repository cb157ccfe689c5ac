"""Congruence-class theorems and first-prime searches.

Graph properties (no loops, no multi-edges, simplicity, disjointness)
are characterized two ways: as congruence classes on p derived from
Kronecker-character periodicity, and as exact trace-formula predicates.
The trace route is authoritative for small exceptional primes.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .arith import DomainError, is_prime, kronecker
from .brandt import trace_formula, vertex_count
from .classnum import decompose

PROPERTY_KINDS = ("noLoops", "noMultiEdges", "simple", "noCommonEdges")


@dataclass(frozen=True)
class GraphProperty:
    kind: str
    ells: tuple
    undirected: bool = True

    def __post_init__(self):
        if self.kind not in PROPERTY_KINDS:
            raise DomainError(f"unknown property kind {self.kind!r}")
        want = 2 if self.kind == "noCommonEdges" else 1
        if len(self.ells) != want:
            raise DomainError(f"{self.kind} takes {want} prime(s), got {self.ells}")
        if self.kind == "noCommonEdges" and self.ells[0] == self.ells[1]:
            raise DomainError("noCommonEdges needs two distinct primes")
        for ell in self.ells:
            if not is_prime(ell):
                raise DomainError(f"{ell} is not prime")


@dataclass(frozen=True)
class CongruenceClassSet:
    modulus: int
    residues: tuple
    # classes are exact for primes coprime to the modulus and larger than
    # every |discriminant| involved in the defining character conditions
    valid_above: int = 0

    def contains(self, p):
        return p % self.modulus in self.residues


def discriminant_set(prop):
    """Negative discriminants whose splitting governs the property."""
    discs = set()
    if prop.kind in ("noLoops", "simple"):
        for ell in prop.ells:
            smax = math.isqrt(4 * ell)
            discs.update(s * s - 4 * ell for s in range(smax + 1))
    if prop.kind in ("noMultiEdges", "simple"):
        for ell in prop.ells:
            discs.update(s * s - 4 * ell * ell for s in range(1, 2 * ell))
    if prop.kind == "noCommonEdges":
        l1, l2 = prop.ells
        m = l1 * l2
        smax = math.isqrt(4 * m - 1)
        discs.update(s * s - 4 * m for s in range(smax + 1))
    return sorted(discs)


def derive_congruences(prop):
    """Congruence classes on p equivalent to the property, minimal modulus.

    The symbol (d|p) depends only on p modulo the fundamental part of d,
    so the working modulus is the lcm of those conductors (and 12 when the
    graphs must be undirected); the result is then reduced to the smallest
    divisor that still describes the same residue set.
    """
    discs = discriminant_set(prop)
    conductors = []
    for d in discs:
        d_fund, _ = decompose(-d)
        conductors.append(abs(d_fund))
    modulus = 12 if prop.undirected else 1
    for c in conductors:
        modulus = math.lcm(modulus, c)
    funds = [decompose(-d)[0] for d in discs]
    residues = []
    for r in range(1, modulus):
        if math.gcd(r, modulus) != 1:
            continue
        if prop.undirected and r % 12 != 1:
            continue
        if all(kronecker(df, r) == 1 for df in funds):
            residues.append(r)
    modulus, residues = _minimize_modulus(modulus, residues)
    return CongruenceClassSet(
        modulus=modulus,
        residues=tuple(residues),
        valid_above=max(-d for d in discs),
    )


def _minimize_modulus(M, residues):
    """Smallest divisor M' of M describing the same set of residues."""
    res = set(residues)
    for Mp in sorted(d for d in range(1, M) if M % d == 0):
        folded = {r % Mp for r in res}
        lifted = {
            x
            for x in range(1, M)
            if math.gcd(x, M) == 1 and x % Mp in folded
        }
        if lifted == res:
            return Mp, sorted(folded)
    return M, sorted(res)


def holds_by_trace(prop, p):
    """Exact predicate for the property at a specific prime, via traces."""
    if not is_prime(p) or p < 5:
        raise DomainError(f"p must be a prime >= 5, got {p}")
    if p in prop.ells:
        raise DomainError(f"p={p} coincides with ell")
    if prop.undirected and p % 12 != 1:
        return False
    if prop.kind == "noLoops":
        return trace_formula(p, prop.ells[0]) == 0
    if prop.kind == "noMultiEdges":
        return trace_formula(p, prop.ells[0] ** 2) == vertex_count(p)
    if prop.kind == "simple":
        ell = prop.ells[0]
        return (
            trace_formula(p, ell) == 0
            and trace_formula(p, ell**2) == vertex_count(p)
        )
    l1, l2 = prop.ells
    return trace_formula(p, l1 * l2) == 0


def find_first_prime(props, start=5, cap=10**6):
    """Smallest prime >= start satisfying every property in props.

    Membership is decided by the exact trace predicates, so small
    exceptional primes excluded from the congruence classes are handled
    correctly.
    """
    if isinstance(props, GraphProperty):
        props = [props]
    if not props:
        raise DomainError("at least one property is required")
    if start < 5:
        start = 5
    skip = {ell for prop in props for ell in prop.ells}
    p = start
    while p <= cap:
        if is_prime(p) and p not in skip:
            if all(holds_by_trace(prop, p) for prop in props):
                return p
        p += 1
    raise DomainError(f"no prime satisfying the properties below {cap}")

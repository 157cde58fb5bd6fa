"""GL(k,2) orbits of polynomials and GF(2) span bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass

from z2bord.gf2 import Mat, ResourceLimitError, enumerate_gl, rank_of
from z2bord.membership import build_constraint_system, check_membership
from z2bord.repalg import Polynomial, ShapeError, apply_automorphism


@dataclass(frozen=True)
class PolynomialOrbit:
    seed: Polynomial
    elements: frozenset[Polynomial]
    stabilizer: tuple[Mat, ...]

    def __contains__(self, p: Polynomial) -> bool:
        return p in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def orbit(p: Polynomial, k: int) -> PolynomialOrbit:
    """Expand the orbit of p under all automorphisms of (Z/2)^k."""
    if k > 4:
        raise ResourceLimitError("orbit expansion supported for k <= 4")
    elements = set()
    stab = []
    for a in enumerate_gl(k):
        q = apply_automorphism(p, a)
        elements.add(q)
        if q == p:
            stab.append(a)
    return PolynomialOrbit(p, frozenset(elements), tuple(stab))


def stabilizer_matches(p: Polynomial, k: int, predicted) -> bool:
    """True iff the stabilizer is exactly {a in GL(k,2) : predicted(a)}."""
    stab = set(orbit(p, k).stabilizer)
    predicted_set = {a for a in enumerate_gl(k) if predicted(a)}
    return stab == predicted_set


def _indicator_rows(ps) -> list[int]:
    ps = list(ps)
    if not ps:
        return []
    shapes = {(p.n, p.k) for p in ps if not p.is_zero}
    if len(shapes) > 1:
        raise ShapeError("polynomials of mixed degree or rank")
    monomials = sorted({m for p in ps for m in p.monomials})
    index = {m: j for j, m in enumerate(monomials)}
    return [sum(1 << index[m] for m in p.monomials) for p in ps]


def span_dimension(ps) -> int:
    """GF(2) rank of the collection over its supporting monomials."""
    return rank_of(_indicator_rows(ps))


def extract_basis(ps) -> list[Polynomial]:
    """Greedy maximal linearly independent sublist, in input order."""
    ps = list(ps)
    rows = _indicator_rows(ps)
    basis_rows: list[int] = []
    out = []
    for p, row in zip(ps, rows):
        for b in basis_rows:
            row = min(row, row ^ b)
        if row:
            basis_rows.append(row)
            basis_rows.sort(reverse=True)
            out.append(p)
    return out


def verify_generating_set(n: int, k: int, generators) -> bool:
    """True iff the generators span exactly the realizable degree-n space."""
    generators = list(generators)
    cs = build_constraint_system(n, k)
    for p in generators:
        if not check_membership(p).accepted:
            raise ValueError(f"generator rejected by the membership criterion:\n{p}")
        if not cs.accepts(p):
            raise ValueError("membership checker and constraint system disagree")
    return span_dimension(generators) == cs.nullspace_dimension()

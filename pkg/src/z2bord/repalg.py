"""Monomials and GF(2) polynomials of irreducible (Z/2)^k-representations.

An irreducible representation is a functional on (Z/2)^k, stored as a
bit-packed vector (the zero vector is the trivial representation).  A
monomial is a multiset of such functionals; a polynomial is a GF(2)
set of monomials of a common degree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from z2bord.gf2 import Mat, Subspace, dot, parse_vec, rank_of, vec_str


class ShapeError(ValueError):
    """Degree or ambient-rank mismatch between operands."""


class InvalidAutomorphismError(ValueError):
    """The supplied matrix is not an automorphism of (Z/2)^k."""


class InvalidBasisError(ValueError):
    """The supplied list is not an ordered basis of the subspace."""


@dataclass(frozen=True, order=True)
class Monomial:
    """A multiset of functionals, stored as a sorted tuple of bit-packed ints."""

    factors: tuple[int, ...]
    k: int

    @classmethod
    def make(cls, factors, k: int) -> "Monomial":
        return cls(tuple(sorted(factors)), k)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def mult(self, gamma: int) -> int:
        return self.factors.count(gamma)

    def counter(self) -> Counter:
        return Counter(self.factors)

    def is_faithful(self) -> bool:
        """No trivial factor, and the factors span the full dual space."""
        if 0 in self.factors:
            return False
        return rank_of(self.factors) == self.k

    def __str__(self) -> str:
        return ",".join(vec_str(f, self.k) for f in self.factors)


@dataclass(frozen=True)
class Polynomial:
    """A GF(2) sum of monomials of common degree n over rank k."""

    monomials: frozenset[Monomial]
    n: int
    k: int

    @classmethod
    def make(cls, monomials, n: int | None = None, k: int | None = None) -> "Polynomial":
        monos = frozenset(monomials)
        degrees = {m.degree for m in monos}
        ranks = {m.k for m in monos}
        if len(degrees) > 1 or len(ranks) > 1:
            raise ShapeError("monomials of mixed degree or rank")
        if monos:
            n, k = degrees.pop(), ranks.pop()
        if n is None or k is None:
            raise ShapeError("zero polynomial needs explicit degree and rank")
        return cls(monos, n, k)

    @classmethod
    def zero(cls, n: int, k: int) -> "Polynomial":
        return cls(frozenset(), n, k)

    @property
    def is_zero(self) -> bool:
        return not self.monomials

    def support(self) -> list[Monomial]:
        return sorted(self.monomials)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not (self.is_zero or other.is_zero) and (self.n, self.k) != (other.n, other.k):
            raise ShapeError(
                f"cannot add degree {self.n} rank {self.k} "
                f"to degree {other.n} rank {other.k}"
            )
        shape = other if self.is_zero else self
        return Polynomial(self.monomials ^ other.monomials, shape.n, shape.k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.monomials != other.monomials:
            return False
        return self.is_zero or (self.n, self.k) == (other.n, other.k)

    def __hash__(self) -> int:
        return hash(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __str__(self) -> str:
        return render_polynomial(self)


def apply_automorphism(p: Polynomial, a: Mat) -> Polynomial:
    """Precompose every factor functional with the automorphism g -> Ag."""
    if not a.is_invertible() or a.n_cols != p.k:
        raise InvalidAutomorphismError("matrix is singular or of the wrong size")
    at = a.transpose()
    monos = {
        Monomial.make([at.apply(f) for f in m.factors], p.k) for m in p.monomials
    }
    return Polynomial(frozenset(monos), p.n, p.k)


def restrict_monomial(m: Monomial, h: Subspace, h_basis) -> Monomial:
    """Restrict every factor to the subgroup h via the ordered basis h_basis.

    Factor rho becomes the length-r vector (rho(b_1), ..., rho(b_r)); this
    is a concrete representative of the restricted representation class.
    """
    h_basis = list(h_basis)
    if len(h_basis) != h.dim or Subspace.span(h_basis, h.k) != h:
        raise InvalidBasisError("h_basis is not an ordered basis of h")
    r = len(h_basis)
    factors = []
    for f in m.factors:
        v = 0
        for j, b in enumerate(h_basis):
            v |= dot(f, b) << (r - 1 - j)
        factors.append(v)
    return Monomial.make(factors, r)


def sub_multiset_multiplicity(t: Monomial, s) -> int:
    """Number of ways the multiset s sits inside the factors of t.

    s is an iterable of bit-packed functionals; the count is a product of
    binomial coefficients of multiplicities, and 0 when s is not a
    sub-multiset of t.
    """
    tc = t.counter()
    return_val = 1
    for gamma, mult in Counter(s).items():
        return_val *= comb(tc.get(gamma, 0), mult)
    return return_val


def parse_polynomial(text: str) -> Polynomial:
    """Parse the one-monomial-per-line polynomial file format.

    Factors are comma-separated bit-strings of equal width; '#' starts a
    comment; blank lines are ignored; duplicate monomials cancel mod 2.
    """
    monos: set[Monomial] = set()
    n = k = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        factors = []
        width = None
        for tok in line.split(","):
            tok = tok.strip()
            try:
                bits, w = parse_vec(tok)
            except ValueError as e:
                raise ValueError(f"line {lineno}: {e}") from None
            if width is not None and w != width:
                raise ValueError(f"line {lineno}: inconsistent bit-string widths")
            width = w
            factors.append(bits)
        if k is not None and width != k:
            raise ValueError(f"line {lineno}: rank {width} != earlier rank {k}")
        if n is not None and len(factors) != n:
            raise ValueError(f"line {lineno}: degree {len(factors)} != earlier degree {n}")
        k, n = width, len(factors)
        monos ^= {Monomial.make(factors, k)}
    if k is None:
        return Polynomial.zero(0, 0)
    return Polynomial(frozenset(monos), n, k)


def render_polynomial(p: Polynomial) -> str:
    """Canonical text form: sorted factors within sorted monomials."""
    return "\n".join(str(m) for m in p.support()) + ("\n" if p.monomials else "")

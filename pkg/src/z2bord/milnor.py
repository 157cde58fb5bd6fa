"""Fixed-point polynomials of Milnor hypersurfaces under pulled-back actions.

An action of (Z/2)^r on the (m+n-1)-dimensional hypersurface in
RP^m x RP^n is induced by n subsets S_1..S_n of {1..r}; the fixed-point
polynomial is a two-part symmetric-difference formula evaluated literally
with GF(2) cancellation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from z2bord.gf2 import ResourceLimitError, vec_str
from z2bord.repalg import Monomial, Polynomial


class InvalidFamilyError(ValueError):
    """The subset family violates the distinct-nonempty precondition."""


class NonIsolatedError(ValueError):
    """A trivial factor appeared, so the fixed-point data is not isolated."""


def rho_of_subset(s, r: int) -> int:
    """Indicator functional of a subset of {1..r}."""
    v = 0
    for i in s:
        if not 1 <= i <= r:
            raise ValueError(f"element {i} outside 1..{r}")
        v |= 1 << (r - i)
    return v


@dataclass(frozen=True)
class SubsetFamily:
    r: int
    sets: tuple[frozenset[int], ...]

    @classmethod
    def make(cls, r: int, sets) -> "SubsetFamily":
        return cls(r, tuple(frozenset(s) for s in sets))

    @classmethod
    def parse(cls, r: int, text: str) -> "SubsetFamily":
        """Parse digit-string sets, e.g. '2;12;23;123'."""
        sets = []
        for tok in text.split(";"):
            tok = tok.strip()
            if tok.strip("123456789"):
                raise ValueError(f"bad subset token {tok!r}")
            sets.append(frozenset(int(c) for c in tok))
        return cls.make(r, sets)

    def rho(self, i: int) -> int:
        """Functional of S_i (1-based)."""
        return rho_of_subset(self.sets[i - 1], self.r)

    def rho_sym(self, i: int, j: int) -> int:
        """Functional of the symmetric difference of S_i and S_j."""
        return self.rho(i) ^ self.rho(j)


def _validate(m: int, n: int, family: SubsetFamily):
    if not 1 <= m <= n:
        raise InvalidFamilyError(f"need 1 <= m <= n, got m={m}, n={n}")
    if len(family.sets) != n:
        raise InvalidFamilyError(f"need {n} subsets, got {len(family.sets)}")
    if any(not s for s in family.sets):
        raise InvalidFamilyError("subsets must be nonempty")
    if len(set(family.sets)) != n:
        raise InvalidFamilyError("subsets must be distinct")


def _accumulate(monos: frozenset[Monomial], factors, r: int) -> frozenset[Monomial]:
    if 0 in factors:
        raise NonIsolatedError("a factor is the trivial representation")
    return monos ^ {Monomial.make(factors, r)}


def milnor_fixed_polynomial(m: int, n: int, family: SubsetFamily) -> Polynomial:
    """Literal evaluation of the two-part fixed-point formula, mod 2."""
    _validate(m, n, family)
    r = family.r
    f = family
    monos: frozenset[Monomial] = frozenset()
    # First part: prod_i<=m rho_{S_i} times the degree-(n-1) symmetric sum.
    for j in range(1, n + 1):
        factors = [f.rho(i) for i in range(1, m + 1)]
        factors += [f.rho_sym(k, j) for k in range(1, n + 1) if k != j]
        monos = _accumulate(monos, factors, r)
    # Second part: one block per i <= m.
    for i in range(1, m + 1):
        base = [f.rho(i)] + [f.rho_sym(k, i) for k in range(1, m + 1) if k != i]
        monos = _accumulate(monos, base + [f.rho(l) for l in range(1, n + 1) if l != i], r)
        for j in range(1, n + 1):
            if j == i:
                continue
            factors = base + [f.rho(j)]
            factors += [f.rho_sym(l, j) for l in range(1, n + 1) if l not in (i, j)]
            monos = _accumulate(monos, factors, r)
    return Polynomial(monos, m + n - 1, r)


def six_term_expansion(family: SubsetFamily) -> Polynomial:
    """The explicit six-monomial form of the m=2, n=4 case, evaluated
    directly as printed; an independent cross-check of the general formula."""
    if len(family.sets) != 4:
        raise InvalidFamilyError("six-term form requires exactly 4 subsets")
    f = family
    terms = [
        (f.rho(1), f.rho(2), f.rho_sym(1, 3), f.rho_sym(2, 3), f.rho_sym(3, 4)),
        (f.rho(1), f.rho(2), f.rho_sym(1, 4), f.rho_sym(2, 4), f.rho_sym(3, 4)),
        (f.rho(1), f.rho(3), f.rho_sym(1, 2), f.rho_sym(2, 3), f.rho_sym(3, 4)),
        (f.rho(1), f.rho(4), f.rho_sym(1, 2), f.rho_sym(2, 4), f.rho_sym(3, 4)),
        (f.rho(2), f.rho(3), f.rho_sym(1, 2), f.rho_sym(1, 3), f.rho_sym(3, 4)),
        (f.rho(2), f.rho(4), f.rho_sym(1, 2), f.rho_sym(1, 4), f.rho_sym(3, 4)),
    ]
    monos: frozenset[Monomial] = frozenset()
    for t in terms:
        monos = _accumulate(monos, list(t), family.r)
    return Polynomial(monos, 5, family.r)


@dataclass
class SearchReport:
    m: int
    n: int
    r: int
    families_tried: int = 0
    skipped_non_isolated: int = 0
    produced: dict = field(default_factory=dict)  # Polynomial -> first family
    hits: list = field(default_factory=list)  # per target: list of families
    unreached: list = field(default_factory=list)  # target indices never hit

    def distinct_polynomials(self) -> int:
        return len(self.produced)


def search_orbit_hits(m: int, n: int, r: int, targets) -> SearchReport:
    """Exhaustive search over ordered families of n distinct nonempty
    subsets of {1..r}; reports which target orbits are reached."""
    if r > 3 or n > 5:
        raise ResourceLimitError("search bounded by r <= 3, n <= 5")
    targets = list(targets)
    report = SearchReport(m, n, r, hits=[[] for _ in targets])
    subsets = [frozenset(s) for size in range(1, r + 1)
               for s in itertools.combinations(range(1, r + 1), size)]
    for sets in itertools.permutations(subsets, n):
        family = SubsetFamily(r, sets)
        report.families_tried += 1
        try:
            p = milnor_fixed_polynomial(m, n, family)
        except NonIsolatedError:
            report.skipped_non_isolated += 1
            continue
        if p not in report.produced:
            report.produced[p] = family
        for t_i, t in enumerate(targets):
            if p in t.elements:
                report.hits[t_i].append(family)
    report.unreached = [i for i, fams in enumerate(report.hits) if not fams]
    return report


def family_label(family: SubsetFamily) -> str:
    return ";".join("".join(map(str, sorted(s))) for s in family.sets)


def describe(p: Polynomial) -> str:
    return " + ".join(
        "*".join(vec_str(f, p.k) for f in m.factors) for m in p.support()
    ) or "0"

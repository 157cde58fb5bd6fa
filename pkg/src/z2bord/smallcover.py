"""Small covers over products of simplices.

The polytope is a product of simplices; a characteristic function labels
each facet with a nonzero vector of (Z/2)^n such that the labels at every
vertex form a basis.  Inverting the vertex label matrix recovers the
tangent monomial at the corresponding isolated fixed point; restricting
to an admissible subgroup gives fixed-point data for lower-rank actions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from z2bord.gf2 import Mat, Subspace, dot, enumerate_subspaces, nullspace, vec_str
from z2bord.graphs import LabeledGraph
from z2bord.repalg import InvalidBasisError, Monomial, Polynomial

Facet = tuple[int, int]  # (factor index, facet index within the factor)
Vertex = tuple[int, ...]


class InvalidCharacteristicError(ValueError):
    """Facet labels fail the basis condition at some vertex."""


class NonIsolatedError(ValueError):
    """A restricted factor is trivial, so fixed points are not isolated."""


@dataclass(frozen=True)
class ProductOfSimplices:
    factor_dims: tuple[int, ...]

    @classmethod
    def parse(cls, spec: str) -> "ProductOfSimplices":
        """Parse '1x4' or '5' into factor dimensions."""
        try:
            dims = tuple(int(t) for t in spec.lower().split("x"))
        except ValueError:
            raise ValueError(f"bad polytope spec {spec!r}; expected e.g. '1x4'") from None
        if not dims or any(d < 1 for d in dims):
            raise ValueError(f"factor dimensions must be positive: {dims}")
        return cls(dims)

    @property
    def dim(self) -> int:
        return sum(self.factor_dims)

    @cached_property
    def facets(self) -> tuple[Facet, ...]:
        """All facets in printed order: factor by factor."""
        return tuple(
            (j, i) for j, d in enumerate(self.factor_dims) for i in range(d + 1)
        )

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(itertools.product(*(range(d + 1) for d in self.factor_dims)))

    def vertex_facets(self, v: Vertex) -> tuple[Facet, ...]:
        """The dim-many facets through v, in printed order."""
        return tuple(
            (j, i)
            for j, d in enumerate(self.factor_dims)
            for i in range(d + 1)
            if i != v[j]
        )

    @cached_property
    def edges(self) -> tuple[tuple[Vertex, Vertex], ...]:
        """Unordered vertex pairs differing in a single coordinate."""
        out = []
        for v in self.vertices:
            for j, d in enumerate(self.factor_dims):
                for w in range(v[j] + 1, d + 1):
                    out.append((v, tuple(w if i == j else c for i, c in enumerate(v))))
        return tuple(sorted(out))

    def edge_facets(self, v: Vertex, w: Vertex) -> tuple[Facet, ...]:
        """The dim-1 facets containing the edge {v, w}."""
        return tuple(f for f in self.vertex_facets(v) if f in set(self.vertex_facets(w)))


@dataclass(frozen=True)
class CharacteristicFunction:
    polytope: ProductOfSimplices
    labels: tuple[int, ...]  # one label per facet, in printed order

    @classmethod
    def from_matrix(cls, factor_dims, matrix_rows) -> "CharacteristicFunction":
        """Rows of 0/1 entries; columns are facets in printed order."""
        p = ProductOfSimplices(tuple(factor_dims))
        m = Mat.from_entries(matrix_rows)
        if m.n_rows != p.dim or m.n_cols != len(p.facets):
            raise ValueError(
                f"label matrix must be {p.dim} x {len(p.facets)}, got {m.n_rows} x {m.n_cols}"
            )
        return cls(p, tuple(m.column(j) for j in range(1, m.n_cols + 1)))

    def label(self, f: Facet) -> int:
        return self.labels[self.polytope.facets.index(f)]

    def vertex_matrix(self, v: Vertex) -> Mat:
        """Columns are the labels of the facets through v, in printed order."""
        cols = [self.label(f) for f in self.polytope.vertex_facets(v)]
        return Mat.from_columns(cols, self.polytope.dim)

    def is_valid(self) -> bool:
        if 0 in self.labels:
            return False
        return all(self.vertex_matrix(v).is_invertible() for v in self.polytope.vertices)


def tangent_reps(cf: CharacteristicFunction) -> dict[Vertex, Monomial]:
    """Tangent monomial at each vertex: the rows of the inverted label matrix."""
    n = cf.polytope.dim
    out = {}
    for v in cf.polytope.vertices:
        m = cf.vertex_matrix(v)
        try:
            inv = m.inverse()
        except ValueError:
            raise InvalidCharacteristicError(
                f"facet labels at vertex {v} are not a basis"
            ) from None
        out[v] = Monomial.make(inv.rows, n)
    return out


def fixed_polynomial(cf: CharacteristicFunction) -> Polynomial:
    """Mod-2 sum of the tangent monomials over all vertices."""
    monos: frozenset[Monomial] = frozenset()
    for m in tangent_reps(cf).values():
        monos ^= {m}
    return Polynomial(monos, cf.polytope.dim, cf.polytope.dim)


def skeleton_graph(cf: CharacteristicFunction) -> LabeledGraph:
    """The labeled one-skeleton: each edge carries the unique functional
    annihilating the labels of the facets containing it."""
    p = cf.polytope
    edges = []
    for v, w in p.edges:
        rows = [cf.label(f) for f in p.edge_facets(v, w)]
        ann = nullspace(rows, p.dim)
        if ann.dim != 1:
            raise InvalidCharacteristicError(f"edge {v}-{w}: facet labels degenerate")
        edges.append(("v" + "".join(map(str, v)), "v" + "".join(map(str, w)), ann.basis[0]))
    return LabeledGraph.make(p.dim, edges)


def admissible_subgroups(cf: CharacteristicFunction, r: int) -> list[Subspace]:
    """Rank-r subgroups whose restricted action keeps the fixed points
    isolated: no edge's facet-label span contains the subgroup."""
    p = cf.polytope
    edge_spans = [
        Subspace.span([cf.label(f) for f in p.edge_facets(v, w)], p.dim)
        for v, w in p.edges
    ]
    out = []
    for h in enumerate_subspaces(p.dim, r):
        nonzero = [v for v in h.vectors() if v]
        if not any(all(w.contains(x) for x in nonzero) for w in edge_spans):
            out.append(h)
    return out


def restricted_polynomial(cf: CharacteristicFunction, h: Subspace, h_basis) -> Polynomial:
    """Restrict every vertex monomial to the subgroup h via h_basis and sum."""
    h_basis = list(h_basis)
    if len(h_basis) != h.dim or Subspace.span(h_basis, h.k) != h:
        raise InvalidBasisError("h_basis is not an ordered basis of h")
    r = len(h_basis)
    monos: frozenset[Monomial] = frozenset()
    for v, m in tangent_reps(cf).items():
        factors = []
        for f in m.factors:
            restricted = 0
            for j, b in enumerate(h_basis):
                restricted |= dot(f, b) << (r - 1 - j)
            if restricted == 0:
                raise NonIsolatedError(
                    f"factor {vec_str(f, m.k)} at vertex {v} restricts to the "
                    "trivial representation"
                )
            factors.append(restricted)
        monos ^= {Monomial.make(factors, r)}
    return Polynomial(monos, cf.polytope.dim, r)


def parse_characteristic(text: str, factor_dims=None) -> CharacteristicFunction:
    """Matrix file: optional header 'n_1 ... n_l', then rows of 0/1."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty characteristic matrix file")
    rows = [ln.split() for ln in lines]
    # A leading line with an entry other than 0/1, or with too few columns,
    # is the factor-dimension header.
    has_header = any(t not in ("0", "1") for t in rows[0]) or (
        len(rows) > 1 and len(rows[0]) < len(rows[1])
    )
    if has_header:
        header = tuple(int(t) for t in rows[0])
        rows = rows[1:]
        if factor_dims is not None and tuple(factor_dims) != header:
            raise ValueError(
                f"header {header} disagrees with requested polytope {tuple(factor_dims)}"
            )
        factor_dims = header
    elif factor_dims is None:
        raise ValueError("no factor-dimension header and no polytope given")
    entries = []
    for r in rows:
        if any(t not in ("0", "1") for t in r):
            raise ValueError(f"bad matrix row {' '.join(r)!r}")
        entries.append([int(t) for t in r])
    return CharacteristicFunction.from_matrix(factor_dims, entries)

"""Automorphism orbits, stabilizers, spans, generating sets."""

import random

import pytest

from z2bord.catalog import (
    GENERATORS,
    ORBIT2_SQUARES,
    ORBIT3_SQUARES,
    ORBIT4_SQUARES,
    STAB_SHAPES,
    poly,
)
from z2bord.gf2 import enumerate_gl
from z2bord.orbits import (
    extract_basis,
    orbit,
    span_dimension,
    stabilizer_matches,
    verify_generating_set,
)
from z2bord.repalg import apply_automorphism


ORBIT_SIZES = (7, 28, 42, 28)


class TestOrbit:
    def test_sizes(self):
        for g, size in zip(GENERATORS, ORBIT_SIZES):
            assert len(orbit(g, 3)) == size

    def test_contains_seed(self):
        for g in GENERATORS:
            o = orbit(g, 3)
            assert g in o and o.seed == g

    def test_orbit_stabilizer_product(self):
        for g in GENERATORS:
            o = orbit(g, 3)
            assert len(o) * len(o.stabilizer) == 168

    def test_closed_under_action(self):
        o = orbit(GENERATORS[0], 3)
        rng = random.Random(2)
        gl = enumerate_gl(3)
        for q in o.elements:
            for a in rng.sample(gl, 5):
                assert apply_automorphism(q, a) in o

    def test_stabilizer_fixes_seed(self):
        for g in GENERATORS:
            for a in orbit(g, 3).stabilizer:
                assert apply_automorphism(g, a) == g

    def test_stabilizer_shapes(self):
        for g, shape in zip(GENERATORS, STAB_SHAPES):
            assert stabilizer_matches(g, 3, shape)

    def test_named_squares_lie_in_their_orbits(self):
        o2, o3, o4 = (orbit(GENERATORS[i], 3) for i in (1, 2, 3))
        assert all(p in o3 for p in ORBIT3_SQUARES)
        assert all(p in o4 for p in ORBIT4_SQUARES)
        assert all(p in o2 for p in ORBIT2_SQUARES)


class TestSpan:
    def _ladder_pools(self):
        pool = []
        for g in GENERATORS:
            pool = pool + sorted(orbit(g, 3).elements, key=str)
            yield list(pool)

    def test_ladder(self):
        dims = [span_dimension(pool) for pool in self._ladder_pools()]
        assert dims == [7, 35, 56, 77]

    def test_permutation_invariance(self):
        pool = list(orbit(GENERATORS[1], 3).elements)
        rng = random.Random(9)
        base = span_dimension(pool)
        for _ in range(5):
            rng.shuffle(pool)
            assert span_dimension(pool) == base

    def test_extract_basis_size_matches_dimension(self):
        pool = sorted(orbit(GENERATORS[2], 3).elements, key=str)
        basis = extract_basis(pool)
        assert len(basis) == span_dimension(pool)
        assert span_dimension(basis) == len(basis)

    def test_dependency_identities(self):
        s = ORBIT3_SQUARES
        assert s[3] == s[0] + s[1] + s[2]
        assert s[4] == s[1] + s[2]
        assert s[5] == s[0] + s[1]

    def test_seven_term_identity(self):
        s4, s2 = ORBIT4_SQUARES, ORBIT2_SQUARES
        assert s4[3] == s4[0] + s4[1] + s4[2] + s2[0] + s2[1] + s2[2] + s2[3]


class TestGeneratingSet:
    def test_full_pool_generates(self):
        pool = []
        for g in GENERATORS:
            pool.extend(orbit(g, 3).elements)
        assert verify_generating_set(5, 3, pool)

    def test_first_orbit_alone_does_not(self):
        assert not verify_generating_set(5, 3, list(orbit(GENERATORS[0], 3).elements))

    def test_projective_plane_generates_degree_two(self):
        rp2 = poly("1 2\n1 12\n2 12", 2)
        assert verify_generating_set(2, 2, [rp2])

    def test_rejected_generator_raises(self):
        with pytest.raises(ValueError):
            verify_generating_set(2, 2, [poly("1 2", 2)])

"""Acceptance gate: the nine headline criteria, one report line each.

Every expected value here is an exact integer or boolean; there are no
tolerances.  Time budgets are asserted where the criteria state them.
"""

import itertools
import math
import random
import time

from z2bord.catalog import (
    DELTA5,
    GEN_1,
    GEN_2,
    GENERATORS,
    MILNOR_FAMILY_1,
    MILNOR_FAMILY_2,
    ORBIT2_SQUARES,
    ORBIT3_SQUARES,
    ORBIT4_SQUARES,
    REJECTED_SINGLETON,
    SMALL_COVER_1,
    SMALL_COVER_2,
    STAB_SHAPES,
    construction_subgroup,
)
from z2bord.gf2 import Mat, enumerate_gl, rank_of
from z2bord.membership import (
    build_constraint_system,
    check_membership,
    enumerate_faithful_monomials,
    image_dimension,
)
from z2bord.milnor import SubsetFamily, milnor_fixed_polynomial, search_orbit_hits
from z2bord.orbits import orbit, span_dimension, stabilizer_matches
from z2bord.repalg import Polynomial, apply_automorphism
from z2bord.smallcover import (
    CharacteristicFunction,
    NonIsolatedError,
    admissible_subgroups,
    fixed_polynomial,
    restricted_polynomial,
    tangent_reps,
)


def closed_form_dimension(n: int) -> int:
    """Independent oracle for the top-degree dimension at full rank."""
    total = (-1) ** n
    for i in range(n):
        prod = math.prod(2**n - 2**j for j in range(i + 1))
        total += (-1) ** (n - 1 - i) * prod // math.factorial(i + 1)
    return total


def report(name: str, expected, computed):
    status = "PASS" if expected == computed else "FAIL"
    print(f"{name}={expected}:{computed}:{status}")
    assert expected == computed


class TestAcceptance:
    def test_1_membership(self):
        start = time.monotonic()
        verdicts = [check_membership(g).accepted for g in GENERATORS]
        verdicts.append(not check_membership(REJECTED_SINGLETON).accepted)
        elapsed = time.monotonic() - start
        assert elapsed < 1.0
        report("criterion_1_membership", True, all(verdicts))

    def test_2_dimensions(self):
        start = time.monotonic()
        values = (
            image_dimension(5, 3),
            image_dimension(4, 3),
            image_dimension(2, 2),
            image_dimension(3, 3),
            image_dimension(1, 2),
            image_dimension(1, 3),
            image_dimension(2, 3),
        )
        elapsed = time.monotonic() - start
        assert elapsed < 60.0
        expected = (77, 32, 1, closed_form_dimension(3), 0, 0, 0)
        assert closed_form_dimension(3) == 13
        assert closed_form_dimension(2) == 1
        report("criterion_2_dimensions", expected, values)

    def test_3_orbits_and_stabilizers(self):
        sizes = tuple(len(orbit(g, 3)) for g in GENERATORS)
        shapes = all(
            stabilizer_matches(g, 3, s) for g, s in zip(GENERATORS, STAB_SHAPES)
        )
        report("criterion_3_orbits", ((7, 28, 42, 28), True), (sizes, shapes))

    def test_4_span_ladder_and_identities(self):
        pool = []
        ladder = []
        for g in GENERATORS:
            pool.extend(sorted(orbit(g, 3).elements, key=str))
            ladder.append(span_dimension(pool))
        s3, s4, s2 = ORBIT3_SQUARES, ORBIT4_SQUARES, ORBIT2_SQUARES
        identities = (
            s3[3] == s3[0] + s3[1] + s3[2]
            and s3[4] == s3[1] + s3[2]
            and s3[5] == s3[0] + s3[1]
            and s4[3] == s4[0] + s4[1] + s4[2] + s2[0] + s2[1] + s2[2] + s2[3]
        )
        report("criterion_4_span_ladder",
               ([7, 35, 56, 77], True), (ladder, identities))

    def test_5_generating_set_equivalence(self):
        cs = build_constraint_system(5, 3)
        pool = []
        for g in GENERATORS:
            pool.extend(orbit(g, 3).elements)
        # containment one way: every pool element satisfies the constraints
        contained = all(cs.accepts(p) for p in pool)
        # equality of dimensions closes the other containment
        same_dim = span_dimension(pool) == cs.nullspace_dimension() == 77
        report("criterion_5_generating_set", True, contained and same_dim)

    def test_6_constructions(self):
        results = []
        for data, seed in ((SMALL_COVER_1, GENERATORS[2]),
                           (SMALL_COVER_2, GENERATORS[3])):
            cf = CharacteristicFunction.from_matrix(
                data["factor_dims"], data["matrix"]
            )
            reps = tangent_reps(cf)
            results.append(
                sorted(sorted(m.factors) for m in reps.values())
                == sorted(sorted(m.factors) for m in data["tangent_monomials"])
            )
            restricted = restricted_polynomial(
                cf, construction_subgroup(data), data["subgroup_basis"]
            )
            results.append(restricted in orbit(seed, 3))
        p1 = milnor_fixed_polynomial(2, 4, SubsetFamily.make(3, MILNOR_FAMILY_1))
        p2 = milnor_fixed_polynomial(2, 4, SubsetFamily.make(3, MILNOR_FAMILY_2))
        results.extend((p1 == GEN_1, p2 == GEN_2))
        report("criterion_6_constructions", True, all(results))

    def test_7_simplex_five_impossibility(self):
        start = time.monotonic()
        cf = CharacteristicFunction.from_matrix(
            DELTA5["factor_dims"], DELTA5["matrix"]
        )
        subs = admissible_subgroups(cf, 3)
        assert len(subs) <= 155
        bad = 0
        for h in subs:
            try:
                p = restricted_polynomial(cf, h, h.basis)
            except NonIsolatedError:
                continue
            if not p.is_zero:
                bad += 1
        elapsed = time.monotonic() - start
        assert elapsed < 5.0
        report("criterion_7_simplex5_impossibility", 0, bad)

    def test_8_milnor_search(self):
        start = time.monotonic()
        targets = [orbit(g, 3) for g in GENERATORS]
        search = search_orbit_hits(2, 4, 3, targets)
        elapsed = time.monotonic() - start
        assert elapsed < 30.0
        outcome = (
            search.families_tried,
            bool(search.hits[0]),
            bool(search.hits[1]),
            len(search.hits[2]),
            len(search.hits[3]),
        )
        report("criterion_8_milnor_search", (840, True, True, 0, 0), outcome)

    def test_9_property_suites(self):
        rng = random.Random(2024)
        gl = enumerate_gl(3)
        monomials = enumerate_faithful_monomials(5, 3)
        cs = build_constraint_system(5, 3)

        # GL-equivariance of the verdict: 168 automorphisms x
        # (4 accepted generators + 20 random rejected polynomials)
        rejects = []
        while len(rejects) < 20:
            p = Polynomial(
                frozenset(rng.sample(monomials, rng.randint(1, 30))), 5, 3
            )
            if not check_membership(p).accepted:
                rejects.append(p)
        equivariant = all(
            check_membership(apply_automorphism(p, a)).accepted is verdict
            for p, verdict in [(g, True) for g in GENERATORS]
            + [(p, False) for p in rejects]
            for a in gl
        )

        # oracle equivalence: exhaustive at degree 3 rank 2
        small = enumerate_faithful_monomials(3, 2)
        cs32 = build_constraint_system(3, 2)
        exhaustive = all(
            check_membership(Polynomial(frozenset(monos), 3, 2)).accepted
            == cs32.accepts(Polynomial(frozenset(monos), 3, 2))
            for size in range(len(small) + 1)
            for monos in itertools.combinations(small, size)
        )

        # oracle equivalence: 10^4 random subsets at degree 5 rank 3
        sampled = all(
            check_membership(p).accepted == cs.accepts(p)
            for p in (
                Polynomial(
                    frozenset(rng.sample(monomials, rng.randint(1, 40))), 5, 3
                )
                for _ in range(10_000)
            )
        )

        # every sampled valid small cover has a realizable polynomial
        covers_ok = True
        for dims in ((2,), (1, 1)):
            from z2bord.smallcover import ProductOfSimplices

            poly = ProductOfSimplices(dims)
            n, nf = poly.dim, len(poly.facets)
            for labels in itertools.product(range(1, 2**n), repeat=nf):
                cf = CharacteristicFunction(poly, labels)
                if cf.is_valid():
                    covers_ok &= check_membership(fixed_polynomial(cf)).accepted
        for data in (SMALL_COVER_1, SMALL_COVER_2):
            cf0 = CharacteristicFunction.from_matrix(
                data["factor_dims"], data["matrix"]
            )
            k = len(data["matrix"])
            for _ in range(5):
                while True:
                    rows = tuple(rng.randrange(1, 2**k) for _ in range(k))
                    if rank_of(rows) == k:
                        break
                a = Mat(rows, k)
                cf = CharacteristicFunction(
                    cf0.polytope, tuple(a.apply(l) for l in cf0.labels)
                )
                covers_ok &= cf.is_valid()
                covers_ok &= check_membership(fixed_polynomial(cf)).accepted

        # orbit-stabilizer product on every tested polynomial
        tested = list(GENERATORS) + rejects[:5]
        orbit_stab = all(
            len(orbit(p, 3)) * len(orbit(p, 3).stabilizer) == 168 for p in tested
        )

        outcome = (equivariant, exhaustive, sampled, covers_ok, orbit_stab)
        report("criterion_9_property_suites",
               (True, True, True, True, True), outcome)

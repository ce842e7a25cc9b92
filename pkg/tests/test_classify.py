from __future__ import annotations

import random

import pytest

import fuzzgen
from wallkit import nikulin as nk
from wallkit.classify import (
    INTEGRAL_UNKNOWN,
    KNOWN_MONODROMY,
    NON_INTEGRAL,
    classify,
    classify_hat,
    classify_lambda,
    classify_lambda_direct,
    classify_lambda_via_twist,
    invariants_hat,
    invariants_lambda,
    known_monodromy_reflection,
    same_known_orbit,
)
from wallkit.errors import LatticeMismatch, NotPrimitive, PreconditionError, ZeroVector
from wallkit.isometry import apply, eichler_normalize
from wallkit.lattice import divisibility, make_standard, norm


class TestHatExamples:
    def test_delta_hat(self):
        c = classify_hat(nk.delta_hat())
        assert (c.case_id, c.i, c.representative) == (2, 0, nk.delta_hat())

    def test_e1(self):
        c = classify_hat(nk.hat_e1())
        assert (c.case_id, c.i) == (6, 0)
        assert c.invariants.qbar == 1

    def test_case2_negative(self):
        v = 2 * nk.L(-1) - nk.delta_hat()
        c = classify_hat(v)
        assert (c.case_id, c.i) == (2, -1)
        assert c.representative == v

    def test_div1(self):
        c = classify_hat(nk.L(5))
        assert (c.case_id, c.i) == (1, 5)

    def test_native_coordinates(self):
        v = nk.hat_to_hat1(2 * nk.L(-1) - nk.delta_hat())
        c = classify_hat(v)
        assert c.representative == v

    def test_hat1_primitivity(self):
        # h1_hat is primitive in Lambda_hat but not in Lambda_hat_1
        with pytest.raises(Exception):
            classify_hat(nk.h1_hat())
        c = classify_hat(2 * nk.h1_hat())
        assert c.invariants.q == -4


class TestLambdaExamples:
    def test_h2(self):
        c = classify_lambda(nk.h2())
        assert c.case_id == 4
        assert (c.invariants.q, c.invariants.div) == (-2, 2)

    def test_e1_1(self):
        c = classify_lambda(nk.e1_1())
        assert c.case_id == 6
        assert (c.invariants.q, c.invariants.div, c.invariants.e8_norm_mod4) == (-2, 1, 2)

    def test_delta_prime(self):
        c = classify_lambda(nk.delta_prime())
        assert (c.case_id, c.i, c.representative) == (2, 0, nk.delta_prime())

    def test_h1_plus_even_e8(self):
        # q = -10, div 2, (c14, c15) of mixed parity: case 4 with i = -2
        c = classify_lambda(nk.h1() + 2 * nk.e1_1())
        assert (c.case_id, c.i) == (4, -2)

    def test_routes_agree_on_examples(self):
        for v in (nk.h1(), nk.h2(), nk.delta_prime(), nk.sigma_prime(), nk.e1_1(), nk.e2_1(),
                  nk.L2(-3), nk.L2(1) + nk.e2_1() - nk.h1(), 2 * nk.e1_1() - nk.delta_prime()):
            a, b = classify_lambda_direct(v), classify_lambda_via_twist(v)
            assert (a.case_id, a.i, a.representative) == (b.case_id, b.i, b.representative)

    def test_errors(self):
        with pytest.raises(NotPrimitive):
            classify_lambda(2 * nk.h1())
        with pytest.raises(ZeroVector):
            classify_lambda(nk.lam().zero())
        with pytest.raises(PreconditionError):
            classify(make_standard("U").unit(0))


@pytest.mark.parametrize("case", range(1, 10))
def test_every_case_is_reached_and_reps_are_fixed(case):
    rng = random.Random(case)
    for _ in range(5000):
        v = fuzzgen.random_lambda(rng)
        c = classify_lambda(v)
        if c.case_id == case:
            again = classify_lambda(c.representative)
            assert (again.case_id, again.i, again.representative) == (c.case_id, c.i, c.representative)
            return
    pytest.fail(f"case {case} not reached")


def test_lambda_fuzz_invariants_preserved():
    rng = random.Random(21)
    for _ in range(1500):
        v = fuzzgen.random_lambda(rng)
        c = classify_lambda(v)
        rep = c.representative
        assert (norm(rep), divisibility(rep)) == (norm(v), divisibility(v))
        assert invariants_lambda(rep).hat_div1 == invariants_lambda(v).hat_div1
        # the orbit data lives on the twisted side: compare there
        a = invariants_hat(nk.hat1_generator(nk.twist_ray_to_hat(rep)))
        b = invariants_hat(nk.hat1_generator(nk.twist_ray_to_hat(v)))
        assert (a.q, a.div, a.e8_residue_zero, a.qbar) == (b.q, b.div, b.e8_residue_zero, b.qbar)


def test_hat_fuzz_invariants_preserved():
    rng = random.Random(22)
    for _ in range(1500):
        v = fuzzgen.random_hat1(rng)
        c = classify_hat(v)
        a, b = invariants_hat(v), invariants_hat(c.representative)
        assert (a.q, a.div, a.e8_residue_zero, a.qbar) == (b.q, b.div, b.e8_residue_zero, b.qbar)
        again = classify_hat(c.representative)
        assert (again.case_id, again.i) == (c.case_id, c.i)


def test_normalization_realizes_representatives_in_hat3():
    # vectors of U^3 + <delta_hat>: the normalizer is a constructive witness
    # that v and its listed representative share an orbit
    h3 = make_standard("Lambda_hat_3")
    rng = random.Random(23)
    seen = set()
    for _ in range(300):
        v = fuzzgen.random_primitive(rng, "Lambda_hat_3", bound=8)
        c = classify_hat(nk.embed_in_hat1(v))
        rep = nk.restrict_from_hat1(c.representative, "Lambda_hat_3")
        phi = eichler_normalize(h3, v, rep)
        assert apply(phi, v) == rep
        seen.add(c.case_id)
    assert seen == {1, 2}


class TestSameKnownOrbit:
    def test_examples(self):
        assert not same_known_orbit(nk.delta_hat(), 2 * nk.L(-1) - nk.delta_hat())
        v = nk.L2(2) + nk.e1_1()
        assert same_known_orbit(v, v)
        assert same_known_orbit(2 * nk.L(0) - nk.delta_hat(), nk.delta_hat())

    def test_mismatch(self):
        with pytest.raises(LatticeMismatch):
            same_known_orbit(nk.delta_prime(), nk.delta_hat())


class TestKnownMonodromy:
    def test_examples(self):
        assert known_monodromy_reflection(nk.delta_prime()) == KNOWN_MONODROMY
        assert known_monodromy_reflection(nk.sigma_prime()) == KNOWN_MONODROMY
        assert known_monodromy_reflection(nk.h2()) == KNOWN_MONODROMY
        assert known_monodromy_reflection(nk.e1_1()) == INTEGRAL_UNKNOWN

    def test_non_integral(self):
        # q = -4, div 1: 2 (x, v) / q is a half-integer for some x
        v = nk.e2_1()
        assert (norm(v), divisibility(v)) == (-4, 1)
        assert known_monodromy_reflection(v) == NON_INTEGRAL

    def test_nonnegative(self):
        with pytest.raises(PreconditionError):
            known_monodromy_reflection(nk.L2(1))

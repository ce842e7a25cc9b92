from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import fuzzgen
from wallkit import nikulin as nk
from wallkit.errors import NonIntegral, NotInSublattice, NotPrimitive, PreconditionError, UnknownName
from wallkit.isometry import apply, e8_simple_root_reflections, reflection
from wallkit.lattice import divisibility, make_standard, norm, primitive_part


class TestNamedClasses:
    @pytest.mark.parametrize("name,q,div", [
        ("delta_prime", -4, 2), ("sigma_prime", -4, 2), ("h1", -2, 2), ("h2", -2, 2),
        ("e1_1", -2, 1), ("e2_1", -4, 1), ("delta_hat", -2, 1), ("sigma_hat", -2, 1),
        ("e1", -4, 2), ("e2", -8, 2)])
    def test_invariants(self, name, q, div):
        v = nk.named_class(name)
        assert norm(v) == q and divisibility(v) == div

    def test_h_from_delta_sigma(self):
        assert nk.delta_prime() + nk.sigma_prime() == 2 * nk.h1()
        assert nk.delta_prime() - nk.sigma_prime() == 2 * nk.h2()

    def test_L_classes(self):
        for i in range(-4, 5):
            assert norm(nk.L(i)) == 2 * i
            assert norm(nk.L2(i)) == 4 * i
            assert nk.named_class(f"L_{i}") == nk.L(i)
            assert nk.named_class(f"L2_{i}") == nk.L2(i)

    def test_unknown(self):
        with pytest.raises(UnknownName):
            nk.named_class("nope")

    def test_hat1_determinants(self):
        assert abs(nk.lam_hat1().det) == 2 ** 10
        assert nk.FUJIKI_CONSTANT == 6


class TestHat1:
    def test_membership(self):
        assert nk.in_hat1(nk.delta_hat())
        assert not nk.in_hat1(nk.h1_hat())
        with pytest.raises(NotInSublattice):
            nk.hat_to_hat1(nk.h1_hat())

    def test_conversion_round_trip(self):
        rng = random.Random(2)
        for _ in range(200):
            v = fuzzgen.random_hat1(rng, bound=8, native=True)
            assert nk.hat_to_hat1(nk.hat1_to_hat(v)) == v

    def test_conversion_is_isometric(self):
        d = nk.hat_to_hat1(nk.delta_hat())
        assert d.coords[14:] == (1, 0)
        assert norm(d) == norm(nk.delta_hat())

    def test_generator(self):
        assert nk.hat1_generator(nk.h1_hat()) == 2 * nk.h1_hat()
        assert nk.hat1_generator(nk.delta_hat()) == nk.delta_hat()

    def test_embeddings(self):
        h3 = make_standard("Lambda_hat_3")
        v = h3.vector([1, 2, 3, 4, 5, 6, 7])
        e = nk.embed_in_hat1(v)
        assert norm(e) == norm(v)
        assert nk.restrict_from_hat1(e, "Lambda_hat_3") == v
        h2 = make_standard("Lambda_hat_2")
        w = h2.vector(list(range(15)))
        assert nk.restrict_from_hat1(nk.embed_in_hat1(w), "Lambda_hat_2") == w
        with pytest.raises(NotInSublattice):
            nk.restrict_from_hat1(nk.embed_in_hat1(w), "Lambda_hat_3")


class TestTwist:
    @pytest.mark.parametrize("lam_name,hat_name", [
        ("delta_prime", "delta_hat"), ("sigma_prime", "sigma_hat"),
        ("h1", "h1_hat"), ("h2", "h2_hat"), ("e1_1", "e1"), ("e2_1", "e2")])
    def test_named_correspondences(self, lam_name, hat_name):
        a, b = nk.named_class(lam_name), nk.named_class(hat_name)
        assert nk.twist_ray_to_hat(a) == b
        assert nk.twist_ray_to_lambda(b) == a

    @pytest.mark.parametrize("i", range(-5, 6))
    def test_L_correspondence(self, i):
        assert nk.twist_ray_to_hat(nk.L2(i)) == nk.L(i)
        assert nk.twist_ray_to_lambda(nk.L(i)) == nk.L2(i)

    def test_round_trips(self):
        rng = random.Random(4)
        for _ in range(500):
            v = fuzzgen.random_lambda(rng)
            assert nk.twist_ray_to_lambda(nk.twist_ray_to_hat(v)) == v
            w = fuzzgen.random_primitive(rng, "Lambda_hat")
            assert nk.twist_ray_to_hat(nk.twist_ray_to_lambda(w)) == w

    def test_norm_scaling(self):
        # before rescaling, the twist doubles the norm; rays scale by a square
        rng = random.Random(8)
        for _ in range(200):
            v = fuzzgen.random_lambda(rng)
            w = nk.twist_ray_to_hat(v)
            c = v.coords
            raw = make_standard("Lambda_hat").vector(
                tuple(2 * x for x in c[:6]) + c[6:14] + (2 * c[14], 2 * c[15]))
            assert norm(raw) == 2 * norm(v)
            k = raw.coords[[i for i, x in enumerate(raw.coords) if x][0]] // \
                w.coords[[i for i, x in enumerate(w.coords) if x][0]]
            assert raw == k * w and norm(raw) == k * k * norm(w)

    def test_native_hat1_input(self):
        d = nk.hat_to_hat1(nk.delta_hat())
        assert nk.twist_ray_to_lambda(d) == nk.delta_prime()

    def test_wrong_lattice(self):
        with pytest.raises(PreconditionError):
            nk.twist_ray_to_hat(nk.delta_hat())


class TestTransport:
    @pytest.mark.parametrize("cls", ["delta_prime", "sigma_prime", "h2"])
    def test_reflections_transport(self, cls):
        v = nk.named_class(cls)
        r = reflection(v)
        t = nk.transport_isometry_to_hat(r)
        back = nk.transport_isometry_to_lambda(t)
        assert back == r
        # the transported isometry acts on rays compatibly with the twist
        rng = random.Random(1)
        for _ in range(50):
            x = fuzzgen.random_lambda(rng, bound=6)
            assert apply(t, nk.twist_ray_to_hat(x)) == nk.twist_ray_to_hat(apply(r, x))

    def test_e8_reflections_transport(self):
        for r in e8_simple_root_reflections(nk.lam()):
            t = nk.transport_isometry_to_hat(r)
            assert nk.transport_isometry_to_lambda(t) == r

    def test_integral_reflections_transport(self):
        rng = random.Random(12)
        seen = 0
        while seen < 40:
            v = fuzzgen.random_lambda(rng, bound=3)
            if norm(v) >= 0:
                continue
            try:
                r = reflection(v)
            except NonIntegral:
                continue
            seen += 1
            assert nk.transport_isometry_to_lambda(nk.transport_isometry_to_hat(r)) == r

    def test_wrong_lattice(self):
        with pytest.raises(PreconditionError):
            nk.transport_isometry_to_lambda(reflection(nk.delta_prime()))


class TestHatDiv1:
    def test_agrees_with_divisibility(self):
        rng = random.Random(6)
        for _ in range(2000):
            v = fuzzgen.random_lambda(rng)
            w = nk.hat1_generator(nk.twist_ray_to_hat(v))
            assert nk.hat_div1_predicate(v) == (nk.hat1_divisibility(w) == 1)

    def test_examples(self):
        assert nk.hat_div1_predicate(nk.L2(3))
        assert not nk.hat_div1_predicate(nk.delta_prime())
        assert not nk.hat_div1_predicate(nk.L2(1) + nk.e1_1())
        assert not nk.hat_div1_predicate(nk.L2(1) + nk.h1())
        assert nk.hat_div1_predicate(nk.L2(1) + 2 * nk.e1_1() + nk.delta_prime())

    def test_needs_primitive(self):
        with pytest.raises(NotPrimitive):
            nk.hat_div1_predicate(2 * nk.L2(1))


@given(st.lists(st.integers(-9, 9), min_size=16, max_size=16).filter(any))
def test_twist_round_trip_property(c):
    v = primitive_part(nk.lam().vector(c))
    assert nk.twist_ray_to_lambda(nk.twist_ray_to_hat(v)) == v


class TestSymplectic:
    def test_summands(self):
        assert nk.symplectic_involution_criterion(["U", "E8(-2)"], True)
        assert not nk.symplectic_involution_criterion(["U", "E8(-2)"], False)
        assert not nk.symplectic_involution_criterion(["U", "E8(-1)"], True)
        assert nk.symplectic_involution_criterion(nk.DecomposedPicard(("E8m2",)), True)

    def test_lattice(self):
        assert nk.symplectic_involution_criterion(make_standard("E8(-2)"), True)
        assert nk.symplectic_involution_criterion(nk.lam_hat(), True)
        assert not nk.symplectic_involution_criterion(nk.lam(), True)

from __future__ import annotations

import random
from itertools import product

import pytest

import fuzzgen
from wallkit import nikulin as nk
from wallkit.classify import classify_lambda
from wallkit.errors import (
    NotInSublattice,
    NotNegativeDefinite,
    NotPositive,
    OmegaOnWall,
    PreconditionError,
    ZeroVector,
)
from wallkit.isometry import apply, reflection
from wallkit.lattice import divisibility, make_standard, norm, pairing, primitive_part
from wallkit.walls import (
    PicardEmbedding,
    check_in_sublattice,
    is_k3_wall,
    is_wall,
    k3_family_walls,
    kahler_side_test,
    orthocomplement_basis,
    orthocomplement_square_scan,
    walls_by_box_search,
    walls_in_picard,
)


def ray(v):
    c = v.coords
    return c if next(x for x in c if x) > 0 else tuple(-x for x in c)


def rays(vs):
    return {ray(v) for v in vs}


def pic(*basis):
    return PicardEmbedding(nk.lam(), basis)


GENERIC = (nk.h1(), nk.h2())
ONE_CURVE = (nk.L2(-1), nk.h1(), nk.h2())
TWO_CURVES = (nk.e1_1(), nk.h1(), nk.h2())


class TestIsWall:
    def test_examples(self):
        assert is_wall(nk.delta_prime())
        assert not is_wall(nk.h1())
        assert not is_wall(nk.L2(-3))
        assert is_wall(2 * nk.e1_1() - nk.delta_prime())
        assert is_wall(nk.e1_1())
        assert not is_wall(nk.e1_1() - nk.h1())
        assert is_wall(nk.L2(1) + nk.e2_1() - nk.h1())

    def test_minus_six(self):
        v = nk.L2(-1) - nk.h1()
        assert (norm(v), divisibility(v)) == (-6, 2)
        assert is_wall(v)

    def test_zero(self):
        with pytest.raises(ZeroVector):
            is_wall(nk.lam().zero())

    def test_wrong_lattice(self):
        with pytest.raises(PreconditionError):
            is_wall(nk.delta_hat())

    def test_negation_and_rescaling(self):
        rng = random.Random(9)
        for _ in range(500):
            v = fuzzgen.random_lambda(rng, bound=4)
            w = is_wall(v)
            assert is_wall(-v) == w
            assert is_wall(3 * v) == w

    def test_constant_on_classes(self):
        rng = random.Random(10)
        for _ in range(2000):
            v = fuzzgen.random_lambda(rng, bound=6)
            if norm(v) >= 0:
                continue
            assert is_wall(v) == is_wall(classify_lambda(v).representative)


class TestK3:
    def test_rules(self):
        k3 = make_standard("Lambda_K3")
        assert is_k3_wall(k3.unit(0) - k3.unit(1), "K3")
        k32 = make_standard("Lambda_K3_2")
        delta = k32.unit(22)
        assert is_k3_wall(delta, "K3[2]")
        v = 2 * (k32.unit(0) - k32.unit(1)) + delta
        assert (norm(v), divisibility(v)) == (-10, 2)
        assert is_k3_wall(v, "K3[2]")
        assert not is_k3_wall(k32.unit(0) - 3 * k32.unit(1), "K3[2]")

    def test_e8m2_has_no_walls(self):
        k32 = make_standard("Lambda_K3_2")
        basis = [k32.unit(6 + j) + k32.unit(14 + j) for j in range(8)]
        p = PicardEmbedding(k32, tuple(basis))
        assert p.lattice().gram == make_standard("E8(-2)").gram
        assert k3_family_walls("K3[2]", p).walls == ()

    def test_single_minus_two(self):
        k3 = make_standard("Lambda_K3")
        rep = k3_family_walls("K3", PicardEmbedding(k3, (k3.unit(0) - k3.unit(1),)))
        assert len(rep.walls) == 1
        k32 = make_standard("Lambda_K3_2")
        rep = k3_family_walls("K3[2]", PicardEmbedding(k32, (k32.unit(22),)))
        assert len(rep.walls) == 1 and rep.walls[0].q == -2

    def test_wrong_ambient(self):
        with pytest.raises(PreconditionError):
            k3_family_walls("K3", pic(nk.h1()))
        with pytest.raises(PreconditionError):
            k3_family_walls("K5", pic(nk.h1()))


class TestPicard:
    def test_rejects_dependent_and_unsaturated(self):
        with pytest.raises(PreconditionError):
            pic(nk.h1(), nk.h1())
        with pytest.raises(PreconditionError):
            pic(nk.delta_prime(), nk.sigma_prime())

    def test_round_trip(self):
        p = pic(*ONE_CURVE)
        q = PicardEmbedding.from_dict(p.to_dict())
        assert q.basis == p.basis

    def test_membership(self):
        p = pic(*GENERIC)
        assert check_in_sublattice(p, nk.delta_prime()) == [1, 1]
        with pytest.raises(NotInSublattice):
            check_in_sublattice(p, nk.e1_1())

    def test_indefinite(self):
        with pytest.raises(NotNegativeDefinite):
            walls_in_picard(pic(nk.L2(1), nk.h1(), nk.h2()))


def _brute(p, radius=4):
    """Double loop over a coordinate box; walls are kept one per ray."""
    out = set()
    for z in product(range(-radius, radius + 1), repeat=p.rank):
        if not any(z):
            continue
        v = p.to_ambient(z)
        if primitive_part(v) == v and norm(v) in (-2, -4, -6, -12) and is_wall(v):
            out.add(ray(v))
    return out


class TestEnumeration:
    def test_generic(self):
        walls = walls_in_picard(pic(*GENERIC))
        assert rays(walls.vectors) == rays([nk.delta_prime(), nk.sigma_prime()])
        assert {w.case_id for w in walls.walls} == {2}
        assert walls.complete

    def test_one_curve(self):
        dc, h1, h2 = ONE_CURVE
        walls = walls_in_picard(pic(*ONE_CURVE))
        expected = [dc, nk.delta_prime(), nk.sigma_prime(), dc + h1, dc - h1, dc + h2, dc - h2]
        assert rays(walls.vectors) == rays(expected)
        assert len(walls.walls) == 7

    def test_two_curves(self):
        dc = nk.e1_1()
        d, s = nk.delta_prime(), nk.sigma_prime()
        walls = walls_in_picard(pic(*TWO_CURVES))
        expected = [dc, d, s, 2 * dc + d, 2 * dc - d, 2 * dc + s, 2 * dc - s]
        assert rays(walls.vectors) == rays(expected)
        assert not any(ray(dc - nk.h1()) == r for r in rays(walls.vectors))

    @pytest.mark.parametrize("basis", [GENERIC, ONE_CURVE, TWO_CURVES])
    def test_oracles_agree(self, basis):
        p = pic(*basis)
        fast = rays(walls_in_picard(p).vectors)
        assert fast == rays(walls_by_box_search(p))
        assert fast == _brute(p)

    def test_orientation_by_omega(self):
        omega = 3 * nk.L2(1) - nk.h1()
        walls = walls_in_picard(pic(*GENERIC), omega)
        assert all(pairing(w.vector, omega) > 0 for w in walls.walls)

    @pytest.mark.parametrize("basis", [GENERIC, ONE_CURVE, TWO_CURVES])
    def test_reflections_preserve_wall_set(self, basis):
        p = pic(*basis)
        walls = rays(walls_in_picard(p).vectors)
        for w in walls_in_picard(p).walls:
            if (w.q, w.div) == (-4, 2):
                r = reflection(w.vector)
                assert rays(apply(r, nk.lam().vector(c)) for c in walls) == walls
        for h in (nk.h1(), nk.h2()):
            r = reflection(h)
            assert rays(apply(r, nk.lam().vector(c)) for c in walls) == walls


class TestKahler:
    walls = walls_in_picard(pic(*GENERIC))
    omega = 3 * nk.L2(1) - nk.h1()

    def test_self(self):
        assert kahler_side_test(self.omega, self.omega, self.walls)

    def test_other_side(self):
        alpha = 3 * nk.L2(1) + nk.h1()
        assert pairing(alpha, nk.delta_prime()) == -2
        assert not kahler_side_test(alpha, self.omega, self.walls)

    def test_nonpositive_alpha(self):
        assert not kahler_side_test(nk.L2(-1), self.omega, self.walls)
        assert not kahler_side_test(-self.omega, self.omega, self.walls)

    def test_errors(self):
        with pytest.raises(NotPositive):
            kahler_side_test(self.omega, nk.L2(-1), self.walls)
        with pytest.raises(OmegaOnWall):
            kahler_side_test(self.omega, 3 * nk.L2(1), self.walls)


class TestScan:
    def test_basis_is_orthogonal_and_divisible(self):
        v = nk.sigma_prime()
        for b in orthocomplement_basis(v, 2):
            w = nk.lam().vector(b)
            assert pairing(w, v) == 0
            assert all(x % 2 == 0 for x in nk.lam().apply_gram(b))

    def test_sigma_obstruction(self):
        rep = orthocomplement_square_scan(nk.sigma_prime(), (None, 2), 2000, seed=1)
        assert rep.samples == 2000
        assert rep.all_zero_mod4
        assert rep.count_norm(-2) == 0

    def test_delta_obstruction(self):
        rep = orthocomplement_square_scan(nk.delta_prime(), (None, 2), 2000, seed=2)
        assert rep.all_zero_mod4

    def test_div1_control(self):
        rep = orthocomplement_square_scan(nk.sigma_prime(), (None, 1), 2000, seed=3)
        assert set(rep.residues_mod4) == {0, 2}

    def test_norm_filter(self):
        rep = orthocomplement_square_scan(nk.sigma_prime(), (-4, 2), 50, seed=4, bound=1)
        assert set(rep.norm_counts) <= {-4}

    def test_deterministic(self):
        a = orthocomplement_square_scan(nk.sigma_prime(), (None, 2), 300, seed=5)
        b = orthocomplement_square_scan(nk.sigma_prime(), (None, 2), 300, seed=5)
        assert a.to_dict() == b.to_dict()

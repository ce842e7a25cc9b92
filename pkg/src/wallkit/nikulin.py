"""Named lattices and classes, and the twist correspondence between them.

Coordinates (0-based) of the 16-dimensional lattices:

* ``Lambda``: 0-5 three copies of U(2) as (e, f) pairs, 6-13 E8(-1),
  14 h1, 15 h2 with h1 = (delta' + Sigma')/2, h2 = (delta' - Sigma')/2.
* ``Lambda_hat``: the same slots with U, E8(-2), and two (-1) vectors
  h1_hat, h2_hat.
* ``Lambda_hat_1`` (own basis): U^3, E8(-2), delta_hat, sigma_hat.  As a
  sublattice of ``Lambda_hat`` it is {c14 + c15 even}, with
  delta_hat = h1_hat + h2_hat and sigma_hat = h1_hat - h2_hat.

The twist maps send a ray to a ray:

* Lambda -> Lambda_hat: (u, x, c1, c2) -> (2u, x, 2c1, 2c2), made primitive.
* Lambda_hat -> Lambda: (u, x, c1, c2) -> (u, 2x, c1, c2), made primitive.

Both scale norms by 2 on the nose before the primitive rescaling, and
composing them gives 2 * identity, so they are mutually inverse on rays.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPrimitive, NotInSublattice, PreconditionError, UnknownName
from .isometry import Isometry
from .lattice import (
    GramLattice,
    LatticeVector,
    content,
    divisibility,
    make_standard,
    primitive_part,
)

FUJIKI_CONSTANT = 6

U_SLICE = slice(0, 6)
E8_SLICE = slice(6, 14)


def lam() -> GramLattice:
    return make_standard("Lambda")


def lam_hat() -> GramLattice:
    return make_standard("Lambda_hat")


def lam_hat1() -> GramLattice:
    return make_standard("Lambda_hat_1")


def _vec(name: str, coords: dict[int, int]) -> LatticeVector:
    lat = make_standard(name)
    c = [0] * lat.rank
    for i, x in coords.items():
        c[i] = x
    return lat.vector(c)


# ---------------------------------------------------------------- named classes

def L(i: int) -> LatticeVector:
    """L_i = i e + f in the first U of Lambda_hat (norm 2i)."""
    return _vec("Lambda_hat", {0: i, 1: 1})


def L2(i: int) -> LatticeVector:
    """L_i^(2): the same coordinates in the first U(2) of Lambda (norm 4i)."""
    return _vec("Lambda", {0: i, 1: 1})


def hat_e1() -> LatticeVector:
    return _vec("Lambda_hat", {6: 1})


def hat_e2() -> LatticeVector:
    return _vec("Lambda_hat", {6: 1, 8: 1})


def e1_1() -> LatticeVector:
    return _vec("Lambda", {6: 1})


def e2_1() -> LatticeVector:
    return _vec("Lambda", {6: 1, 8: 1})


def h1() -> LatticeVector:
    return _vec("Lambda", {14: 1})


def h2() -> LatticeVector:
    return _vec("Lambda", {15: 1})


def delta_prime() -> LatticeVector:
    return _vec("Lambda", {14: 1, 15: 1})


def sigma_prime() -> LatticeVector:
    return _vec("Lambda", {14: 1, 15: -1})


def h1_hat() -> LatticeVector:
    return _vec("Lambda_hat", {14: 1})


def h2_hat() -> LatticeVector:
    return _vec("Lambda_hat", {15: 1})


def delta_hat() -> LatticeVector:
    return _vec("Lambda_hat", {14: 1, 15: 1})


def sigma_hat() -> LatticeVector:
    return _vec("Lambda_hat", {14: 1, 15: -1})


NAMED_CLASSES = {
    "delta_prime": delta_prime,
    "sigma_prime": sigma_prime,
    "h1": h1,
    "h2": h2,
    "e1_1": e1_1,
    "e2_1": e2_1,
    "delta_hat": delta_hat,
    "sigma_hat": sigma_hat,
    "h1_hat": h1_hat,
    "h2_hat": h2_hat,
    "e1": hat_e1,
    "e2": hat_e2,
}


def named_class(name: str) -> LatticeVector:
    """Look up a named class; ``L_<i>`` and ``L2_<i>`` are accepted too."""
    if name in NAMED_CLASSES:
        return NAMED_CLASSES[name]()
    for prefix, fn in (("L2_", L2), ("L_", L)):
        if name.startswith(prefix):
            try:
                return fn(int(name[len(prefix):]))
            except ValueError:
                break
    raise UnknownName(f"unknown class {name!r}")


# ---------------------------------------------------------------- Lambda_hat_1

def in_hat1(v: LatticeVector) -> bool:
    """Membership of a Lambda_hat vector in Lambda_hat_1."""
    _expect(v, "Lambda_hat")
    return (v.coords[14] + v.coords[15]) % 2 == 0


def hat_to_hat1(v: LatticeVector) -> LatticeVector:
    """Lambda_hat coordinates -> native Lambda_hat_1 coordinates."""
    if not in_hat1(v):
        raise NotInSublattice("vector is not in Lambda_hat_1 (c14 + c15 is odd)")
    c = v.coords
    return lam_hat1().vector(c[:14] + ((c[14] + c[15]) // 2, (c[14] - c[15]) // 2))


def hat1_to_hat(v: LatticeVector) -> LatticeVector:
    _expect(v, "Lambda_hat_1")
    c = v.coords
    return lam_hat().vector(c[:14] + (c[14] + c[15], c[14] - c[15]))


def as_hat1(v: LatticeVector) -> LatticeVector:
    """Native Lambda_hat_1 coordinates for a vector of Lambda_hat or Lambda_hat_1."""
    if v.lattice == lam_hat1():
        return v
    return hat_to_hat1(v)


def hat1_generator(v: LatticeVector) -> LatticeVector:
    """Primitive generator in Lambda_hat_1 of the ray through v (Lambda_hat coords).

    The ray may meet Lambda_hat_1 only in 2v, e.g. for h1_hat.
    """
    p = primitive_part(v)
    return p if in_hat1(p) else 2 * p


def embed_in_hat1(v: LatticeVector) -> LatticeVector:
    """Lambda_hat_2 or Lambda_hat_3 vector -> native Lambda_hat_1 coordinates."""
    name = v.lattice.name
    c = v.coords
    if v.lattice == make_standard("Lambda_hat_2"):
        return lam_hat1().vector(c + (0,))
    if v.lattice == make_standard("Lambda_hat_3"):
        return lam_hat1().vector(c[:6] + (0,) * 8 + (c[6], 0))
    raise PreconditionError(f"cannot embed a {name} vector into Lambda_hat_1")


def restrict_from_hat1(v: LatticeVector, target: str) -> LatticeVector:
    """Inverse of ``embed_in_hat1``; the vector must lie in the image."""
    c = as_hat1(v).coords
    if target == "Lambda_hat_2":
        if c[15]:
            raise NotInSublattice("vector has a sigma_hat component")
        return make_standard(target).vector(c[:15])
    if target == "Lambda_hat_3":
        if c[15] or any(c[6:14]):
            raise NotInSublattice("vector has E8 or sigma_hat components")
        return make_standard(target).vector(c[:6] + (c[14],))
    raise UnknownName(target)


# ---------------------------------------------------------------- twist maps

def _expect(v: LatticeVector, name: str):
    if v.lattice != make_standard(name):
        raise PreconditionError(f"expected a {name} vector, got {v.lattice.name}")


def twist_ray_to_hat(v: LatticeVector) -> LatticeVector:
    """Primitive Lambda_hat generator of the ray corresponding to v in Lambda."""
    _expect(v, "Lambda")
    c = v.coords
    w = tuple(2 * x for x in c[U_SLICE]) + c[E8_SLICE] + (2 * c[14], 2 * c[15])
    return primitive_part(lam_hat().vector(w))


def twist_ray_to_lambda(v: LatticeVector) -> LatticeVector:
    """Primitive Lambda generator of the ray through v in Lambda_hat or Lambda_hat_1."""
    if v.lattice == lam_hat1():
        v = hat1_to_hat(v)
    _expect(v, "Lambda_hat")
    c = v.coords
    w = c[U_SLICE] + tuple(2 * x for x in c[E8_SLICE]) + c[14:16]
    return primitive_part(lam().vector(w))


def _twist_matrices() -> tuple[list[int], list[int]]:
    to_hat = [2] * 6 + [1] * 8 + [2, 2]
    to_lam = [1] * 6 + [2] * 8 + [1, 1]
    return to_hat, to_lam


def transport_isometry_to_hat(iso: Isometry) -> Isometry:
    """Conjugate an isometry of Lambda through the coordinate identification.

    With P = diag(to_hat) and Q = diag(to_lambda) we have P Q = 2 I, so the
    transported matrix is P M Q / 2.  Raises if it is not integral.
    """
    _expect_lat(iso.lattice, "Lambda")
    p, q = _twist_matrices()
    n = 16
    m = []
    for i in range(n):
        row = []
        for j in range(n):
            x = Fraction(p[i] * iso.matrix[i][j] * q[j], 2)
            if x.denominator != 1:
                raise PreconditionError("transported matrix is not integral")
            row.append(int(x))
        m.append(tuple(row))
    return Isometry(lam_hat(), tuple(m))


def transport_isometry_to_lambda(iso: Isometry) -> Isometry:
    _expect_lat(iso.lattice, "Lambda_hat")
    p, q = _twist_matrices()
    m = []
    for i in range(16):
        row = []
        for j in range(16):
            x = Fraction(q[i] * iso.matrix[i][j] * p[j], 2)
            if x.denominator != 1:
                raise PreconditionError("transported matrix is not integral")
            row.append(int(x))
        m.append(tuple(row))
    return Isometry(lam(), tuple(m))


def _expect_lat(lat: GramLattice, name: str):
    if lat != make_standard(name):
        raise PreconditionError(f"expected {name}, got {lat.name}")


# ---------------------------------------------------------------- predicates

def hat_div1_predicate(v: LatticeVector) -> bool:
    """Whether the twisted ray of v has divisibility 1 in Lambda_hat_1.

    Evaluated directly in Lambda: the U(2)^3 part is not divisible by 2, the
    E8(-1) part is divisible by 2, and the (-2)^2 part lies in the span of
    delta' and Sigma' (c14 = c15 mod 2).
    """
    _expect(v, "Lambda")
    if content(v) != 1:
        raise NotPrimitive("hat_div1_predicate needs a primitive vector")
    c = v.coords
    u_odd = any(x % 2 for x in c[U_SLICE])
    e8_even = all(x % 2 == 0 for x in c[E8_SLICE])
    in_span = (c[14] - c[15]) % 2 == 0
    return u_odd and e8_even and in_span


def hat1_divisibility(v: LatticeVector) -> int:
    """Divisibility in Lambda_hat_1 of a Lambda_hat or Lambda_hat_1 vector."""
    return divisibility(as_hat1(v))


@dataclass(frozen=True)
class DecomposedPicard:
    """A Picard lattice presented as named orthogonal summands."""

    summands: tuple[str, ...]


def symplectic_involution_criterion(pic: DecomposedPicard | GramLattice | tuple | list,
                                    has_invariant_kahler: bool) -> bool:
    """Lattice side of the symplectic involution criterion.

    True iff the given decomposition has an E8(-2) summand and the caller
    asserts that some Kahler class is orthogonal to it.  No embedding search
    is attempted.
    """
    if isinstance(pic, GramLattice):
        e8m2 = make_standard("E8(-2)").gram
        found = any(
            b.length == 8 and tuple(tuple(r[b.start:b.start + 8]) for r in pic.gram[b.start:b.start + 8]) == e8m2
            for b in pic.blocks)
    else:
        summands = pic.summands if isinstance(pic, DecomposedPicard) else tuple(pic)
        found = any(s.replace(" ", "").replace("−", "-") in ("E8(-2)", "E8m2") for s in summands)
    return bool(found and has_invariant_kahler)


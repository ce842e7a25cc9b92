"""Orbit invariants and canonical representatives.

Two ambients are supported.  In ``Lambda_hat_1`` a primitive vector has
divisibility 1 or 2; for divisibility 2 the class is decided by q mod 8,
whether the residue e of v_E8/2 vanishes, and the value qbar(e) in Z/2.
In ``Lambda`` the same nine classes are read off from parity data, and
cross-checked against the route through the twist map.

Representatives use the fixed classes L_i = i e + f, e1 = b1 and
e2 = b1 + b3.  A multiple of L_0 is dropped from a representative (for
divisibility 2 the L_0 summand can be removed by a monodromy operator), and
representatives lying entirely in span(delta, Sigma) are taken with positive
sign.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from . import nikulin as nk
from .errors import (
    InfeasibleInvariants,
    InternalMismatch,
    LatticeMismatch,
    NotPrimitive,
    PreconditionError,
    ZeroVector,
)
from .isometry import is_reflection_integral
from .lattice import (
    LatticeVector,
    content,
    disc_residue,
    divisibility,
    make_standard,
    norm,
    primitive_part,
)


@dataclass(frozen=True)
class Invariants:
    q: int
    div: int
    e8_residue: tuple[int, ...] | None = None  # class of v_E8/2 (hat side)
    e8_residue_zero: bool | None = None
    qbar: int | None = None
    e8_zero_mod4: bool | None = None  # v_E8 in 4 E8(-1) (Lambda side, div 2)
    e8_norm_mod4: int | None = None  # q(v_E8) mod 4 (Lambda side, div 1)
    hat_div1: bool | None = None

    def key(self) -> tuple:
        return (self.q, self.div, self.e8_residue_zero, self.qbar,
                self.e8_zero_mod4, self.e8_norm_mod4, self.hat_div1)

    def to_dict(self) -> dict:
        d = {k: v for k, v in asdict(self).items() if v is not None}
        if "e8_residue" in d:
            d["e8_residue"] = list(d["e8_residue"])
        return d


@dataclass(frozen=True)
class OrbitClass:
    ambient: str  # "Lambda_hat_1" or "Lambda"
    case_id: int
    i: int
    representative: LatticeVector
    invariants: Invariants

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "case": self.case_id,
            "i": self.i,
            "representative": self.representative.to_dict(),
            "invariants": self.invariants.to_dict(),
        }


def _require_primitive(v: LatticeVector):
    if not any(v.coords):
        raise ZeroVector("zero vector")
    if content(v) != 1:
        raise NotPrimitive(f"{list(v.coords)} is not primitive")


# ---------------------------------------------------------------- Lambda_hat_1

def invariants_hat(v: LatticeVector) -> Invariants:
    """(q, div, residue of v_E8/2, qbar) of a primitive vector of Lambda_hat_1.

    ``v`` may be given in Lambda_hat coordinates or native Lambda_hat_1
    coordinates; primitivity and divisibility are taken in Lambda_hat_1.
    """
    n = nk.as_hat1(v)
    _require_primitive(n)
    q = norm(n)
    div = divisibility(n)
    if div == 1:
        return Invariants(q, 1)
    e8 = make_standard("E8(-2)").vector(n.coords[nk.E8_SLICE])
    res = disc_residue(e8, 2)
    q_e8 = norm(e8)
    if q_e8 % 4:
        raise InternalMismatch("E8(-2) norm not divisible by 4")
    qbar = (q_e8 // 4) % 2
    if res.qbar != qbar:
        raise InternalMismatch("discriminant form disagrees with q(v_E8)/4")
    return Invariants(q, div, res.coords, res.is_zero, qbar)


def _hat_rep(case: int, i: int) -> LatticeVector:
    """Representative in Lambda_hat coordinates."""
    def twice_L(k):
        return 2 * nk.L(k) if k else nk.lam_hat().zero()

    d, s, e1, e2 = nk.delta_hat(), nk.sigma_hat(), nk.hat_e1(), nk.hat_e2()
    if case == 1:
        return nk.L(i)
    if case == 2:
        return twice_L(i) - d if i else d
    if case == 3:
        return twice_L(i + 1) + e2 - d
    if case == 4:
        return twice_L(i) - d - s if i else d + s
    if case == 5:
        return twice_L(i + 1) + e2 - d - s
    if case == 6:
        return twice_L(i) + e1
    if case == 7:
        return twice_L(i) + e1 - d
    if case == 8:
        return twice_L(i) + e1 - d - s
    if case == 9:
        return twice_L(i + 1) + e2
    raise InfeasibleInvariants(f"no case {case}")


def _hat_case(inv: Invariants) -> tuple[int, int]:
    q = inv.q
    if inv.div == 1:
        if q % 2:
            raise InfeasibleInvariants(f"odd norm {q} in an even lattice")
        return 1, q // 2
    if inv.div != 2:
        raise InfeasibleInvariants(f"divisibility {inv.div}")
    key = (q % 8, inv.e8_residue_zero, inv.qbar)
    table = {
        (6, True, 0): (2, 2), (6, False, 0): (3, 2),
        (4, True, 0): (4, 4), (4, False, 0): (5, 4), (4, False, 1): (6, 4),
        (2, False, 1): (7, 6),
        (0, False, 1): (8, 8), (0, False, 0): (9, 0),
    }
    if key not in table:
        raise InfeasibleInvariants(f"no case for (q mod 8, e=0, qbar) = {key}")
    case, shift = table[key]
    return case, (q + shift) // 8


def classify_hat(v: LatticeVector) -> OrbitClass:
    """Case and canonical representative of a primitive vector of Lambda_hat_1.

    The representative is returned in the coordinates of the input.
    """
    inv = invariants_hat(v)
    case, i = _hat_case(inv)
    rep = _hat_rep(case, i)
    if v.lattice == nk.lam_hat1():
        rep = nk.hat_to_hat1(rep)
    return OrbitClass("Lambda_hat_1", case, i, rep, inv)


# ---------------------------------------------------------------- Lambda

def invariants_lambda(v: LatticeVector) -> Invariants:
    nk._expect(v, "Lambda")
    _require_primitive(v)
    q = norm(v)
    div = divisibility(v)
    x = v.coords[nk.E8_SLICE]
    hat1 = nk.hat_div1_predicate(v)
    if div == 2:
        return Invariants(q, div, e8_zero_mod4=all(c % 4 == 0 for c in x), hat_div1=hat1)
    q_e8 = norm(make_standard("E8(-1)").vector(x))
    return Invariants(q, div, e8_norm_mod4=q_e8 % 4, hat_div1=hat1)


def _lambda_case_direct(v: LatticeVector, inv: Invariants) -> tuple[int, int]:
    """Case and parameter from parity conditions in Lambda itself."""
    q = inv.q
    c = v.coords
    c1, c2 = c[14], c[15]
    if inv.hat_div1:
        return 1, q // 4
    if inv.div == 2:
        if (c1 - c2) % 2:
            return 4, (q + 2) // 4
        if c1 % 2 and c2 % 2:
            if q % 16 == 12:
                return (2 if inv.e8_zero_mod4 else 3), (q + 4) // 16
            if q % 16 == 4:
                return 7, (q + 12) // 16
        raise InfeasibleInvariants(f"div 2, q = {q}, (c14, c15) = ({c1}, {c2})")
    if inv.div == 1:
        if q % 4 == 2:
            return (5 if inv.e8_norm_mod4 == 0 else 6), (q + 2) // 4
        if q % 4 == 0:
            if inv.e8_norm_mod4 == 2:
                return 8, (q + 4) // 4
            return 9, q // 4
    raise InfeasibleInvariants(f"(q, div) = ({q}, {inv.div})")


def _lambda_rep(case: int, i: int) -> LatticeVector:
    """Representatives written directly in Lambda."""
    def L2(k):
        return nk.L2(k) if k else nk.lam().zero()

    d, h1 = nk.delta_prime(), nk.h1()
    e1, e2 = nk.e1_1(), nk.e2_1()
    if case == 1:
        return nk.L2(i)
    if case == 2:
        return 2 * L2(i) - d if i else d
    if case == 3:
        return 2 * L2(i + 1) + 2 * e2 - d
    if case == 4:
        return L2(i) - h1 if i else h1
    if case == 5:
        return L2(i + 1) + e2 - h1
    if case == 6:
        return L2(i) + e1
    if case == 7:
        return 2 * L2(i) + 2 * e1 - d
    if case == 8:
        return L2(i) + e1 - h1
    if case == 9:
        return L2(i + 1) + e2
    raise InfeasibleInvariants(f"no case {case}")


def classify_lambda_direct(v: LatticeVector) -> OrbitClass:
    inv = invariants_lambda(v)
    case, i = _lambda_case_direct(v, inv)
    return OrbitClass("Lambda", case, i, _lambda_rep(case, i), inv)


def classify_lambda_via_twist(v: LatticeVector) -> OrbitClass:
    inv = invariants_lambda(v)
    w = nk.hat1_generator(nk.twist_ray_to_hat(v))
    hat = classify_hat(w)
    rep = nk.twist_ray_to_lambda(hat.representative)
    return OrbitClass("Lambda", hat.case_id, hat.i, rep, inv)


def classify_lambda(v: LatticeVector) -> OrbitClass:
    """Classify a primitive vector of Lambda by two independent routes.

    Raises InternalMismatch if the direct parity table and the route through
    the twist map disagree.
    """
    a = classify_lambda_direct(v)
    b = classify_lambda_via_twist(v)
    if (a.case_id, a.i, a.representative) != (b.case_id, b.i, b.representative):
        raise InternalMismatch(
            f"direct ({a.case_id}, {a.i}) and twisted ({b.case_id}, {b.i}) classifications differ")
    return a


def classify(v: LatticeVector) -> OrbitClass:
    if v.lattice == nk.lam():
        return classify_lambda(v)
    if v.lattice in (nk.lam_hat(), nk.lam_hat1()):
        return classify_hat(v)
    raise PreconditionError(f"no classifier for {v.lattice.name}")


def _ambient(v: LatticeVector) -> str:
    if v.lattice == nk.lam():
        return "Lambda"
    if v.lattice in (nk.lam_hat(), nk.lam_hat1()):
        return "Lambda_hat_1"
    raise PreconditionError(f"no classifier for {v.lattice.name}")


def same_known_orbit(v: LatticeVector, w: LatticeVector) -> bool:
    """True if both vectors land in the same listed class.

    True implies the same monodromy orbit.  False only means that no
    identification is known.
    """
    if _ambient(v) != _ambient(w):
        raise LatticeMismatch("vectors live in different ambients")
    a, b = classify(v), classify(w)
    return (a.case_id, a.i) == (b.case_id, b.i)


KNOWN_MONODROMY = "known_monodromy"
INTEGRAL_UNKNOWN = "integral_unknown"
NON_INTEGRAL = "non_integral"


def known_monodromy_reflection(v: LatticeVector) -> str:
    """Status of the reflection in v as a monodromy operator of Lambda.

    Reflections in primitive classes with (q, div) = (-2, 2) or (-4, 2) are
    monodromy operators.  For anything else only integrality is reported.
    """
    nk._expect(v, "Lambda")
    if norm(v) >= 0:
        raise PreconditionError("reflection status needs a negative vector")
    p = primitive_part(v)
    if (norm(p), divisibility(p)) in ((-2, 2), (-4, 2)):
        return KNOWN_MONODROMY
    return INTEGRAL_UNKNOWN if is_reflection_integral(p) else NON_INTEGRAL

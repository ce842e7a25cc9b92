"""Golden-value suites for the worked Picard lattices.

Geometric classes are modelled by lattice vectors of Lambda:

* generic:    Pic = <h1, h2>
* one curve:  D_C = L^(2)_{-1}, Pic = <D_C, h1, h2>
* two curves: D_C = e1^(1), Pic = <D_C, h1, h2>
* elliptic:   D_gamma = L^(2)_1 + e2^(1), A = D_gamma - h1
* involution: the complement of Sigma' and the class h2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from . import nikulin as nk
from .errors import UnknownName
from .isometry import apply, is_reflection_integral, reflection
from .lattice import LatticeVector, divisibility, norm, pairing
from .walls import (
    PicardEmbedding,
    is_wall,
    orthocomplement_square_scan,
    walls_by_box_search,
    walls_in_picard,
)


@dataclass
class Check:
    description: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {"check": self.description, "expected": _jsonable(self.expected),
                "actual": _jsonable(self.actual), "pass": self.passed}


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, description: str, expected: Any, actual: Any) -> None:
        self.checks.append(Check(description, expected, actual))

    def to_dict(self) -> dict:
        return {"suite": self.suite, "pass": self.passed,
                "checks": [c.to_dict() for c in self.checks]}


def _jsonable(x):
    if isinstance(x, LatticeVector):
        return list(x.coords)
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(y) for y in x)
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def _qd(v: LatticeVector) -> tuple[int, int]:
    return norm(v), divisibility(v)


def _ray(v: LatticeVector) -> tuple[int, ...]:
    """Sign-normalized coordinates, so that +-v compare equal."""
    c = v.coords
    return c if next(x for x in c if x) > 0 else tuple(-x for x in c)


def _rays(vs) -> frozenset:
    return frozenset(_ray(v) for v in vs)


def _pic(*basis: LatticeVector) -> PicardEmbedding:
    return PicardEmbedding(nk.lam(), tuple(basis))


def verify_generic() -> VerificationReport:
    rep = VerificationReport("generic")
    d, s = nk.delta_prime(), nk.sigma_prime()
    walls = walls_in_picard(_pic(nk.h1(), nk.h2()))
    rep.add("number of wall rays", 2, len(walls.walls))
    rep.add("wall rays are delta' and Sigma'", _rays([d, s]), _rays(walls.vectors))
    rep.add("q(delta')", -4, norm(d))
    rep.add("div(delta')", 2, divisibility(d))
    rep.add("q(Sigma')", -4, norm(s))
    rep.add("div(Sigma')", 2, divisibility(s))
    rep.add("every wall has (q, div) = (-4, 2)", {(-4, 2)}, {(w.q, w.div) for w in walls.walls})
    return rep


def verify_one_curve() -> VerificationReport:
    rep = VerificationReport("one-curve")
    dc, h1, h2 = nk.L2(-1), nk.h1(), nk.h2()
    d, s = nk.delta_prime(), nk.sigma_prime()
    rep.add("(q, div) of D_C", (-4, 2), _qd(dc))
    rep.add("(q, div) of D_C - (delta'+Sigma')/2", (-6, 2), _qd(dc - h1))
    rep.add("D_C - (delta'+Sigma')/2 is a wall", True, is_wall(dc - h1))
    pic = _pic(dc, h1, h2)
    walls = walls_in_picard(pic)
    expected = _rays([dc, d, s, dc + h1, dc - h1, dc + h2, dc - h2])
    rep.add("number of wall rays", 7, len(walls.walls))
    rep.add("wall rays", expected, _rays(walls.vectors))
    rep.add("box search agrees", expected, _rays(walls_by_box_search(pic)))
    return rep


def verify_two_curves() -> VerificationReport:
    rep = VerificationReport("two-curves")
    dc, h1, h2 = nk.e1_1(), nk.h1(), nk.h2()
    d, s = nk.delta_prime(), nk.sigma_prime()
    rep.add("(q, div) of D_C", (-2, 1), _qd(dc))
    for name, v in (("2 D_C - delta'", 2 * dc - d), ("2 D_C - Sigma'", 2 * dc - s)):
        rep.add(f"(q, div) of {name}", (-12, 2), _qd(v))
        rep.add(f"U(2)^3 part of {name} is divisible by 2", True,
                all(x % 2 == 0 for x in v.coords[nk.U_SLICE]))
        rep.add(f"{name} is a wall", True, is_wall(v))
    rep.add("D_C - (delta'+Sigma')/2 is a wall", False, is_wall(dc - h1))
    rep.add("(q, div) of D_C - (delta'+Sigma')/2", (-4, 1), _qd(dc - h1))
    pic = _pic(dc, h1, h2)
    walls = walls_in_picard(pic)
    expected = _rays([dc, d, s, 2 * dc + d, 2 * dc - d, 2 * dc + s, 2 * dc - s])
    rep.add("number of wall rays", 7, len(walls.walls))
    rep.add("wall rays", expected, _rays(walls.vectors))
    rep.add("box search agrees", expected, _rays(walls_by_box_search(pic)))
    return rep


def verify_elliptic() -> VerificationReport:
    rep = VerificationReport("elliptic")
    dg = nk.L2(1) + nk.e2_1()
    a = dg - nk.h1()
    d, s = nk.delta_prime(), nk.sigma_prime()
    rep.add("(q, div) of D_gamma", (0, 1), _qd(dg))
    rep.add("(q, div) of A = D_gamma - (delta'+Sigma')/2", (-2, 1), _qd(a))
    rep.add("A is a wall", True, is_wall(a))
    rep.add("(Sigma', A)", 2, pairing(s, a))
    image = apply(reflection(a), s)
    rep.add("R_A(Sigma') = 2 D_gamma - delta'", list((2 * dg - d).coords), list(image.coords))
    rep.add("(q, div) of 2 D_gamma - delta'", (-4, 2), _qd(2 * dg - d))
    rep.add("2 D_gamma - delta' is a wall", True, is_wall(2 * dg - d))
    return rep


def verify_involution_obstruction(samples: int = 10_000, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("involution")
    scan = orthocomplement_square_scan(nk.sigma_prime(), (None, 2), samples, seed=seed)
    rep.add("div-2 samples drawn from Sigma'-perp", samples, scan.samples)
    rep.add("q mod 4 over the samples", {0}, set(scan.residues_mod4))
    rep.add("samples with q = -2", 0, scan.count_norm(-2))
    rep.add("(q, div) of h2", (-2, 2), _qd(nk.h2()))
    rep.add("reflection in h2 is integral", True, is_reflection_integral(nk.h2()))
    return rep


SUITES: dict[str, Callable[[], VerificationReport]] = {
    "generic": verify_generic,
    "one-curve": verify_one_curve,
    "two-curves": verify_two_curves,
    "elliptic": verify_elliptic,
    "involution": verify_involution_obstruction,
}


def run_suites(name: str = "all") -> list[VerificationReport]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise UnknownName(f"unknown suite {name!r}")
    return [SUITES[name]()]

"""Wall divisors: membership, enumeration in definite Picard lattices, Kahler side test.

Membership in Lambda (for a primitive class D):

    q(D) = -2 and div(D) = 1
    q(D) = -4 and div(D) = 2
    q(D) = -6 and div(D) = 2
    q(D) = -12, div(D) = 2 and the U(2)^3 part of D is divisible by 2

For the K3 and K3^[2] families the rules are q = -2, respectively q = -2 or
(q = -10 and div = 2).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import intmat
from . import nikulin as nk
from .errors import (
    LatticeMismatch,
    NotInSublattice,
    NotNegativeDefinite,
    NotPositive,
    OmegaOnWall,
    PreconditionError,
    ZeroVector,
)
from .lattice import (
    GramLattice,
    LatticeVector,
    divisibility,
    gram_lattice,
    is_negative_definite,
    make_standard,
    norm,
    pairing,
    primitive_part,
    short_vectors,
)

LAMBDA_WALL_NORMS = (-2, -4, -6, -12)
K3_WALL_NORMS = (-2,)
K3N2_WALL_NORMS = (-2, -10)


@dataclass(frozen=True, eq=False)
class PicardEmbedding:
    """A saturated sublattice given by a basis in ambient coordinates."""

    ambient: GramLattice
    basis: tuple[LatticeVector, ...]

    def __post_init__(self):
        basis = tuple(self.basis)
        if not basis:
            raise PreconditionError("empty Picard basis")
        for b in basis:
            if b.lattice != self.ambient:
                raise LatticeMismatch("basis vector outside the ambient lattice")
        object.__setattr__(self, "basis", basis)
        mat = [[b.coords[r] for b in basis] for r in range(self.ambient.rank)]
        factors = intmat.invariant_factors(mat)
        if len(factors) < len(basis) or any(f == 0 for f in factors[:len(basis)]):
            raise PreconditionError("Picard basis is linearly dependent")
        if any(f != 1 for f in factors[:len(basis)]):
            raise PreconditionError("Picard basis does not span a saturated sublattice")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def induced_gram(self) -> list[list[int]]:
        return [[pairing(a, b) for b in self.basis] for a in self.basis]

    def lattice(self) -> GramLattice:
        return gram_lattice(self.induced_gram, name="Pic")

    def to_ambient(self, z: Sequence[int]) -> LatticeVector:
        c = [0] * self.ambient.rank
        for zi, b in zip(z, self.basis):
            if zi:
                c = [x + zi * y for x, y in zip(c, b.coords)]
        return self.ambient.vector(c)

    def to_dict(self) -> dict:
        return {"ambient": self.ambient.name, "basis": [list(b.coords) for b in self.basis]}

    @classmethod
    def from_dict(cls, data: dict) -> "PicardEmbedding":
        amb = make_standard(data.get("ambient", "Lambda"))
        return cls(amb, tuple(amb.vector(c) for c in data["basis"]))


@dataclass(frozen=True)
class WallEntry:
    vector: LatticeVector
    q: int
    div: int
    case_id: int | None = None

    def to_dict(self) -> dict:
        d = {"coords": list(self.vector.coords), "q": self.q, "div": self.div}
        if self.case_id is not None:
            d["case"] = self.case_id
        return d


@dataclass(frozen=True)
class WallReport:
    walls: tuple[WallEntry, ...]
    complete: bool = True
    ambient: str = "Lambda"

    @property
    def vectors(self) -> list[LatticeVector]:
        return [w.vector for w in self.walls]

    def to_dict(self) -> dict:
        return {"ambient": self.ambient, "complete": self.complete, "count": len(self.walls),
                "walls": [w.to_dict() for w in self.walls]}


# ---------------------------------------------------------------- membership

def _lambda_rule(p: LatticeVector) -> bool:
    q, d = norm(p), divisibility(p)
    if (q, d) in ((-2, 1), (-4, 2), (-6, 2)):
        return True
    if (q, d) == (-12, 2):
        return all(x % 2 == 0 for x in p.coords[nk.U_SLICE])
    return False


def is_wall(D: LatticeVector) -> bool:
    """Wall-divisor test in Lambda; non-primitive input is replaced by its primitive ray."""
    nk._expect(D, "Lambda")
    if not any(D.coords):
        raise ZeroVector("zero vector")
    return _lambda_rule(primitive_part(D))


def is_k3_wall(D: LatticeVector, kind: str) -> bool:
    if not any(D.coords):
        raise ZeroVector("zero vector")
    p = primitive_part(D)
    q = norm(p)
    if q == -2:
        return True
    return kind == "K3[2]" and q == -10 and divisibility(p) == 2


# ---------------------------------------------------------------- enumeration

def _orient(v: LatticeVector, z: Sequence[int], omega: LatticeVector | None) -> bool:
    """Whether v is the chosen generator of its +- pair."""
    if omega is not None:
        s = pairing(v, omega)
        if s:
            return s > 0
    return next(x for x in z if x) > 0


def _enumerate(pic: PicardEmbedding, norms: Sequence[int], rule: Callable[[LatticeVector], bool],
               annotate: Callable[[LatticeVector], int | None], omega: LatticeVector | None,
               ambient_name: str) -> WallReport:
    sub = pic.lattice()
    if not is_negative_definite(sub):
        raise NotNegativeDefinite("Picard lattice is not negative definite; test classes pointwise")
    entries = []
    for z in short_vectors(sub, norms):
        v = pic.to_ambient(z.coords)
        if primitive_part(v) != v or not rule(v):
            continue
        if not _orient(v, z.coords, omega):
            continue
        entries.append(WallEntry(v, norm(v), divisibility(v), annotate(v)))
    return WallReport(tuple(entries), True, ambient_name)


def walls_in_picard(pic: PicardEmbedding, omega: LatticeVector | None = None) -> WallReport:
    """All primitive wall rays of a negative definite Picard lattice in Lambda.

    One generator per ray is listed: the one pairing positively with
    ``omega`` when given, else the one whose first nonzero Picard coordinate
    is positive.
    """
    from .classify import classify_lambda

    nk._expect_lat(pic.ambient, "Lambda")
    return _enumerate(pic, LAMBDA_WALL_NORMS, _lambda_rule,
                      lambda v: classify_lambda(v).case_id, omega, "Lambda")


def k3_family_walls(kind: str, pic: PicardEmbedding) -> WallReport:
    """Wall rays for a negative definite Picard lattice of a K3 or K3^[2] type."""
    if kind == "K3":
        nk._expect_lat(pic.ambient, "Lambda_K3")
        norms = K3_WALL_NORMS
    elif kind == "K3[2]":
        nk._expect_lat(pic.ambient, "Lambda_K3_2")
        norms = K3N2_WALL_NORMS
    else:
        raise PreconditionError(f"unknown family {kind!r}")
    return _enumerate(pic, norms, lambda v: is_k3_wall(v, kind), lambda v: None, None,
                      pic.ambient.name)


def walls_by_box_search(pic: PicardEmbedding) -> list[LatticeVector]:
    """Reference enumeration: scan a coordinate box and keep walls, one per ray.

    The box radius comes from the exact bound |z_i| <= sqrt(12 (A^-1)_ii)
    on the positive definite form A = -Gram.
    """
    from .lattice import short_vectors_box

    sub = pic.lattice()
    out = []
    for z in short_vectors_box(sub, LAMBDA_WALL_NORMS):
        v = pic.to_ambient(z.coords)
        if primitive_part(v) == v and _lambda_rule(v) and next(x for x in z.coords if x) > 0:
            out.append(v)
    return out


# ---------------------------------------------------------------- Kahler side

def kahler_side_test(alpha: LatticeVector, omega: LatticeVector, walls: WallReport) -> bool:
    """Whether alpha lies in the chamber of the positive cone containing omega.

    Each wall D is oriented so that (D, omega) > 0; alpha must satisfy
    q(alpha) > 0, (alpha, omega) > 0 and (alpha, D) > 0 for all such D.
    """
    if alpha.lattice != omega.lattice:
        raise LatticeMismatch("alpha and omega live in different lattices")
    if norm(omega) <= 0:
        raise NotPositive("omega must have positive norm")
    oriented = []
    for w in walls.walls:
        s = pairing(w.vector, omega)
        if s == 0:
            raise OmegaOnWall(f"omega is orthogonal to the wall {list(w.vector.coords)}")
        oriented.append(w.vector if s > 0 else -w.vector)
    if norm(alpha) <= 0 or pairing(alpha, omega) <= 0:
        return False
    return all(pairing(alpha, d) > 0 for d in oriented)


# ---------------------------------------------------------------- orthogonal complement scan

@dataclass
class ScanReport:
    samples: int
    residues_mod4: Counter = field(default_factory=Counter)
    norm_counts: Counter = field(default_factory=Counter)
    attempts: int = 0

    @property
    def all_zero_mod4(self) -> bool:
        return set(self.residues_mod4) <= {0}

    def count_norm(self, q: int) -> int:
        return self.norm_counts.get(q, 0)

    def to_dict(self) -> dict:
        return {"samples": self.samples, "attempts": self.attempts,
                "residues_mod4": {str(k): v for k, v in sorted(self.residues_mod4.items())},
                "minus_two_hits": self.count_norm(-2)}


def orthocomplement_basis(v: LatticeVector, div: int) -> list[list[int]]:
    """Basis of {w in v-perp : (w, L) is contained in div Z}.

    The condition G w in div Z^n is solved through the Smith form
    U G V = D: w = V y with y_i a multiple of div / gcd(div, d_i).
    """
    lat = v.lattice
    n = lat.rank
    d, _, vmat = intmat.smith_normal_form(lat.gram)
    steps = []
    for i in range(n):
        di = d[i][i]
        steps.append(div // intmat.gcd_list([div, di]))
    gens = [[vmat[r][i] * steps[i] for r in range(n)] for i in range(n)]
    gv = lat.apply_gram(v.coords)
    row = [sum(a * b for a, b in zip(gv, g)) for g in gens]
    ker = intmat.integer_kernel([row])
    return [[sum(k[j] * gens[j][r] for j in range(n)) for r in range(n)] for k in ker]


def orthocomplement_square_scan(v: LatticeVector, predicate: tuple[int | None, int],
                                sample_count: int, seed: int = 0, bound: int = 3) -> ScanReport:
    """Sample vectors w of v-perp with div(w) == predicate div, tally q(w) mod 4.

    ``predicate`` is a (q, div) pair; q may be None to accept every norm.
    Samples are random integer combinations (coefficients in [-bound, bound])
    of a basis of the subgroup of v-perp whose pairings are all divisible by
    the requested div; only vectors of exactly that divisibility are kept.
    """
    want_q, want_div = predicate
    if not any(v.coords):
        raise ZeroVector("zero vector")
    basis = orthocomplement_basis(v, want_div)
    lat = v.lattice
    rng = random.Random(seed)
    rep = ScanReport(0)
    limit = 50 * sample_count + 1000
    while rep.samples < sample_count and rep.attempts < limit:
        rep.attempts += 1
        coeffs = [rng.randint(-bound, bound) for _ in basis]
        w = [0] * lat.rank
        for c, b in zip(coeffs, basis):
            if c:
                w = [x + c * y for x, y in zip(w, b)]
        if not any(w):
            continue
        wv = lat.vector(w)
        if divisibility(wv) != want_div:
            continue
        q = norm(wv)
        if want_q is not None and q != want_q:
            continue
        rep.samples += 1
        rep.residues_mod4[q % 4] += 1
        rep.norm_counts[q] += 1
    return rep


def check_in_sublattice(pic: PicardEmbedding, v: LatticeVector) -> list[int]:
    from .lattice import coordinates_in_basis

    z = coordinates_in_basis(pic.basis, v)
    if z is None:
        raise NotInSublattice("vector is not in the Picard lattice")
    return z

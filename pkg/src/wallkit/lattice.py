"""Integral lattices given by a Gram matrix with a named block structure.

>>> U = make_standard("U")
>>> e, f = U.basis()
>>> pairing(e, f), norm(3 * e + f)
(1, 6)
>>> divisibility(make_standard("Lambda").vector([0] * 14 + [1, 1]))
2
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import floor, gcd, isqrt, sqrt
from typing import Iterable, Sequence

from . import intmat
from .errors import (
    DegenerateLattice,
    LatticeMismatch,
    NotInDual,
    NotNegativeDefinite,
    PreconditionError,
    UnknownName,
    ZeroVector,
)


@dataclass(frozen=True)
class Block:
    name: str
    start: int
    length: int

    @property
    def indices(self) -> range:
        return range(self.start, self.start + self.length)


@dataclass(frozen=True, eq=False)
class GramLattice:
    """A nondegenerate integral lattice.

    ``blocks`` records an orthogonal decomposition of the basis into
    consecutive index ranges.  ``groups`` maps extra names to tuples of block
    names, so that e.g. ``"U(2)^3"`` can address three blocks at once.
    """

    name: str
    gram: tuple[tuple[int, ...], ...]
    blocks: tuple[Block, ...] = ()
    groups: tuple[tuple[str, tuple[str, ...]], ...] = ()

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        n = len(g)
        if n == 0 or any(len(row) != n for row in g):
            raise PreconditionError("gram must be a nonempty square matrix")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise PreconditionError("gram must be symmetric")
        object.__setattr__(self, "gram", g)
        blocks = self.blocks or (Block(self.name, 0, n),)
        pos = 0
        for b in blocks:
            if b.start != pos or b.length <= 0:
                raise PreconditionError("blocks must tile the basis in order")
            pos += b.length
        if pos != n:
            raise PreconditionError("blocks must tile the basis in order")
        owner = [k for k, b in enumerate(blocks) for _ in b.indices]
        if any(g[i][j] for i in range(n) for j in range(n) if owner[i] != owner[j]):
            raise PreconditionError("distinct blocks must be orthogonal")
        object.__setattr__(self, "blocks", tuple(blocks))
        if self.det == 0:
            raise DegenerateLattice(f"{self.name}: gram is degenerate")

    # identity is structural; names are labels only
    def __eq__(self, other):
        return self is other or (isinstance(other, GramLattice) and self.gram == other.gram)

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"GramLattice({self.name!r}, rank={self.rank})"

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return intmat.determinant(self.gram)

    @cached_property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @cached_property
    def sparse_rows(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        return tuple(tuple((j, x) for j, x in enumerate(row) if x) for row in self.gram)

    @cached_property
    def inverse_gram(self) -> list[list[Fraction]]:
        return intmat.inverse_rational(self.gram)

    def block(self, name: str) -> Block:
        for b in self.blocks:
            if b.name == name:
                return b
        raise UnknownName(f"{self.name} has no block {name!r}")

    def block_indices(self, name: str) -> list[int]:
        """Indices of a block or of a named group of blocks."""
        for gname, members in self.groups:
            if gname == name:
                return [i for m in members for i in self.block(m).indices]
        return list(self.block(name).indices)

    def has_block(self, name: str) -> bool:
        try:
            self.block_indices(name)
        except UnknownName:
            return False
        return True

    def apply_gram(self, coords: Sequence[int]) -> list[int]:
        """Return G * coords (the pairings with every basis vector)."""
        return [sum(x * coords[j] for j, x in row) for row in self.sparse_rows]

    def vector(self, coords: Iterable[int]) -> "LatticeVector":
        return LatticeVector(self, tuple(coords))

    def zero(self) -> "LatticeVector":
        return LatticeVector(self, (0,) * self.rank)

    def basis(self) -> list["LatticeVector"]:
        return [self.unit(i) for i in range(self.rank)]

    def unit(self, i: int) -> "LatticeVector":
        c = [0] * self.rank
        c[i] = 1
        return LatticeVector(self, tuple(c))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "gram": [list(r) for r in self.gram],
            "blocks": [{"name": b.name, "start": b.start, "length": b.length} for b in self.blocks],
            "det": self.det,
            "even": self.is_even,
        }


@dataclass(frozen=True, slots=True)
class LatticeVector:
    lattice: GramLattice
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.lattice.rank:
            raise PreconditionError(
                f"expected {self.lattice.rank} coordinates, got {len(self.coords)}")

    def _check(self, other: "LatticeVector"):
        if other.lattice is not self.lattice and other.lattice != self.lattice:
            raise LatticeMismatch(f"{self.lattice.name} vs {other.lattice.name}")

    def __add__(self, other):
        self._check(other)
        return LatticeVector(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return LatticeVector(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return LatticeVector(self.lattice, tuple(-a for a in self.coords))

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return LatticeVector(self.lattice, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"LatticeVector({self.lattice.name}, {list(self.coords)})"

    def to_dict(self) -> dict:
        return {"lattice": self.lattice.name, "coords": list(self.coords)}


# ---------------------------------------------------------------- basics

def pairing(v: LatticeVector, w: LatticeVector) -> int:
    v._check(w)
    wc = w.coords
    total = 0
    for i, row in enumerate(v.lattice.sparse_rows):
        vi = v.coords[i]
        if vi:
            total += vi * sum(x * wc[j] for j, x in row)
    return total


def norm(v: LatticeVector) -> int:
    return pairing(v, v)


def _require_nonzero(v: LatticeVector):
    if not any(v.coords):
        raise ZeroVector("zero vector")


def divisibility(v: LatticeVector) -> int:
    """Positive generator of the ideal (v, L)."""
    _require_nonzero(v)
    return intmat.gcd_list(v.lattice.apply_gram(v.coords))


def content(v: LatticeVector) -> int:
    _require_nonzero(v)
    return intmat.gcd_list(v.coords)


def is_primitive(v: LatticeVector) -> bool:
    return content(v) == 1


def primitive_part(v: LatticeVector) -> LatticeVector:
    c = content(v)
    return LatticeVector(v.lattice, tuple(x // c for x in v.coords))


def project_block(v: LatticeVector, block: str) -> LatticeVector:
    keep = set(v.lattice.block_indices(block))
    return LatticeVector(v.lattice, tuple(x if i in keep else 0 for i, x in enumerate(v.coords)))


# ---------------------------------------------------------------- constructors

def direct_sum(parts: Sequence[GramLattice], name: str | None = None,
               groups: Sequence[tuple[str, tuple[str, ...]]] = ()) -> GramLattice:
    if not parts:
        raise PreconditionError("direct_sum needs at least one part")
    if len(parts) == 1 and name is None and not groups:
        return parts[0]
    n = sum(p.rank for p in parts)
    gram = [[0] * n for _ in range(n)]
    blocks, off = [], 0
    for p in parts:
        for i in range(p.rank):
            gram[off + i][off:off + p.rank] = p.gram[i]
        for b in p.blocks:
            blocks.append(Block(b.name, off + b.start, b.length))
        off += p.rank
    names = [b.name for b in blocks]
    if len(set(names)) != len(names):
        # disambiguate repeated block names with a running suffix
        seen: dict[str, int] = {}
        total = {x: names.count(x) for x in names}
        renamed = []
        for b in blocks:
            if total[b.name] > 1:
                seen[b.name] = seen.get(b.name, 0) + 1
                renamed.append(Block(f"{b.name}_{seen[b.name]}", b.start, b.length))
            else:
                renamed.append(b)
        blocks = renamed
    label = name or " + ".join(p.name for p in parts)
    return GramLattice(label, tuple(map(tuple, gram)), tuple(blocks), tuple(groups))


def rescale(lat: GramLattice, n: int, name: str | None = None) -> GramLattice:
    if n == 0:
        raise PreconditionError("rescale factor must be nonzero")
    if n == 1 and name is None:
        return lat
    label = name or _twist_name(lat.name, n)
    gram = tuple(tuple(n * x for x in row) for row in lat.gram)
    if len(lat.blocks) == 1:
        blocks = (Block(label, 0, lat.rank),)
    else:
        blocks = tuple(Block(_twist_name(b.name, n), b.start, b.length) for b in lat.blocks)
    return GramLattice(label, gram, blocks)


def _twist_name(name: str, n: int) -> str:
    m = re.fullmatch(r"(.*)\((-?\d+)\)", name)
    if m:
        k = int(m.group(2)) * n
        return f"{m.group(1)}({k})" if k != 1 else m.group(1)
    if re.fullmatch(r"\(-?\d+\)", name):
        return f"({int(name[1:-1]) * n})"
    return f"{name}({n})"


# Chain b1-b2-...-b7 with b8 attached to b5, as in the fixed basis.
_E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7))


def _e8(scale: int) -> tuple[tuple[int, ...], ...]:
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2 * scale
    for i, j in _E8_EDGES:
        g[i][j] = g[j][i] = scale
    return tuple(map(tuple, g))


def _u(n: int, label: str) -> GramLattice:
    return GramLattice(label, ((0, n), (n, 0)))


def _rank_one(n: int, label: str | None = None) -> GramLattice:
    return GramLattice(label or f"({n})", ((n,),))


def _lambda() -> GramLattice:
    u2 = [_u(2, f"U(2)_{k}") for k in (1, 2, 3)]
    parts = u2 + [GramLattice("E8(-1)", _e8(1)), _rank_one(-2, "h1"), _rank_one(-2, "h2")]
    lat = direct_sum(parts, name="Lambda",
                     groups=[("U(2)^3", ("U(2)_1", "U(2)_2", "U(2)_3")),
                             ("(-2)^2", ("h1", "h2"))])
    # h1 = (delta' + Sigma')/2 and h2 = (delta' - Sigma')/2 each have norm -2
    return lat


def _hat_u3() -> list[GramLattice]:
    return [_u(1, f"U_{k}") for k in (1, 2, 3)]


_U3_GROUP = ("U^3", ("U_1", "U_2", "U_3"))


def _lambda_hat() -> GramLattice:
    parts = _hat_u3() + [GramLattice("E8(-2)", _e8(2)), _rank_one(-1, "h1_hat"),
                         _rank_one(-1, "h2_hat")]
    return direct_sum(parts, name="Lambda_hat", groups=[_U3_GROUP, ("(-1)^2", ("h1_hat", "h2_hat"))])


def _lambda_hat_1() -> GramLattice:
    parts = _hat_u3() + [GramLattice("E8(-2)", _e8(2)), _rank_one(-2, "delta_hat"),
                         _rank_one(-2, "sigma_hat")]
    return direct_sum(parts, name="Lambda_hat_1", groups=[_U3_GROUP])


def _lambda_hat_2() -> GramLattice:
    parts = _hat_u3() + [GramLattice("E8(-2)", _e8(2)), _rank_one(-2, "delta_hat")]
    return direct_sum(parts, name="Lambda_hat_2", groups=[_U3_GROUP])


def _lambda_hat_3() -> GramLattice:
    parts = _hat_u3() + [_rank_one(-2, "delta_hat")]
    return direct_sum(parts, name="Lambda_hat_3", groups=[_U3_GROUP])


def _lambda_k3(with_delta: bool) -> GramLattice:
    parts = _hat_u3() + [GramLattice("E8(-1)_1", _e8(1)), GramLattice("E8(-1)_2", _e8(1))]
    if with_delta:
        parts.append(_rank_one(-2, "delta"))
    return direct_sum(parts, name="Lambda_K3_2" if with_delta else "Lambda_K3",
                      groups=[_U3_GROUP])


_COMPOSITES = {
    "Lambda": _lambda,
    "Lambda_hat": _lambda_hat,
    "Lambda_hat_1": _lambda_hat_1,
    "Lambda_hat_2": _lambda_hat_2,
    "Lambda_hat_3": _lambda_hat_3,
    "Lambda_K3": lambda: _lambda_k3(False),
    "Lambda_K3_2": lambda: _lambda_k3(True),
}

_ALIASES = {
    "E8m1": "E8(-1)", "E8m2": "E8(-2)", "Λ": "Lambda", "Λ̂": "Lambda_hat",
    "Lambda_hat_1_ambient": "Lambda_hat_1", "Lambda_K3[2]": "Lambda_K3_2",
}

_CACHE: dict[str, GramLattice] = {}


def make_standard(name: str) -> GramLattice:
    """Build a named lattice in its fixed basis.

    Accepted names: ``U``, ``U(n)``, ``E8(-1)``, ``E8(-2)`` (aliases ``E8m1``,
    ``E8m2``), ``(n)`` for rank one, and the composites ``Lambda``,
    ``Lambda_hat``, ``Lambda_hat_1``, ``Lambda_hat_2``, ``Lambda_hat_3``,
    ``Lambda_K3``, ``Lambda_K3_2``.  Results are cached; lattices are immutable.
    """
    if name in _CACHE:
        return _CACHE[name]
    clean = name.replace(" ", "").replace("−", "-")
    key = _ALIASES.get(clean, clean)
    if key in _CACHE:
        _CACHE[name] = _CACHE[key]
        return _CACHE[key]
    if key in _COMPOSITES:
        lat = _COMPOSITES[key]()
    elif key == "U":
        lat = _u(1, "U")
    elif key == "E8(-1)":
        lat = GramLattice("E8(-1)", _e8(1))
    elif key == "E8(-2)":
        lat = GramLattice("E8(-2)", _e8(2))
    elif m := re.fullmatch(r"U\((-?\d+)\)", key):
        n = int(m.group(1))
        if n == 0:
            raise UnknownName("U(0) is degenerate")
        lat = _u(n, key)
    elif m := re.fullmatch(r"(?:A1)?\((-?\d+)\)", key):
        n = int(m.group(1))
        if n == 0:
            raise UnknownName("(0) is degenerate")
        lat = _rank_one(n)
    else:
        raise UnknownName(f"unknown lattice {name!r}")
    _CACHE[key] = _CACHE[name] = lat
    return lat


def gram_lattice(gram: Sequence[Sequence[int]], name: str = "L") -> GramLattice:
    return GramLattice(name, tuple(tuple(r) for r in gram))


# ---------------------------------------------------------------- discriminant

@dataclass(frozen=True, slots=True)
class DiscElement:
    group: "DiscriminantGroup"
    coords: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def qbar(self) -> Fraction | None:
        return self.group.qbar(self.coords)

    def __add__(self, other):
        return self.group.element(a + b for a, b in zip(self.coords, other.coords))

    def __eq__(self, other):
        return (isinstance(other, DiscElement) and self.coords == other.coords
                and self.group.lattice == other.group.lattice)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"DiscElement({list(self.coords)} mod {list(self.group.invariant_factors)})"


@dataclass(frozen=True, eq=False)
class DiscriminantGroup:
    """The finite group L^v / L.

    Elements are coordinate tuples modulo ``invariant_factors`` (only the
    factors > 1 are kept).  ``generator_lifts[i]`` is a rational vector in
    lattice coordinates whose class is the i-th generator.
    """

    lattice: GramLattice
    invariant_factors: tuple[int, ...]
    generator_lifts: tuple[tuple[Fraction, ...], ...]
    _residue_rows: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    @property
    def order(self) -> int:
        o = 1
        for d in self.invariant_factors:
            o *= d
        return o

    def element(self, coords: Iterable[int]) -> DiscElement:
        return DiscElement(self, tuple(c % d for c, d in zip(coords, self.invariant_factors)))

    def zero(self) -> DiscElement:
        return self.element([0] * len(self.invariant_factors))

    def elements(self) -> list[DiscElement]:
        """All elements, lexicographic in coordinates."""
        return [DiscElement(self, c) for c in product(*(range(d) for d in self.invariant_factors))]

    def index(self, a: DiscElement | Sequence[int]) -> int:
        coords = a.coords if isinstance(a, DiscElement) else a
        idx = 0
        for c, d in zip(coords, self.invariant_factors):
            idx = idx * d + c
        return idx

    def residue_of_dual(self, x: Sequence[Fraction]) -> DiscElement:
        """Class of a dual-lattice vector given in rational coordinates."""
        y = self.lattice.apply_gram(x)
        if any(Fraction(t).denominator != 1 for t in y):
            raise NotInDual("vector is not in the dual lattice")
        y = [int(t) for t in y]
        return self.element(sum(a * b for a, b in zip(row, y)) for row in self._residue_rows)

    def residue_of_scaled(self, num: Sequence[int], den: int) -> DiscElement:
        """Class of num/den for an integer vector num, without Fractions."""
        gv = self.lattice.apply_gram(num)
        if any(x % den for x in gv):
            raise NotInDual("vector is not in the dual lattice")
        y = [x // den for x in gv]
        return self.element(sum(a * b for a, b in zip(row, y) if a) for row in self._residue_rows)

    @cached_property
    def lift_numerators(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        """Each generator lift as (integer numerator vector, denominator)."""
        out = []
        for lift, d in zip(self.generator_lifts, self.invariant_factors):
            out.append((tuple(int(x * d) for x in lift), d))
        return tuple(out)

    def lift(self, a: DiscElement) -> list[Fraction]:
        n = self.lattice.rank
        out = [Fraction(0)] * n
        for c, g in zip(a.coords, self.generator_lifts):
            if c:
                out = [o + c * x for o, x in zip(out, g)]
        return out

    def qbar(self, coords: Sequence[int]) -> Fraction | None:
        """q(lift) in Q/2Z, normalized to [0, 2).  None for odd lattices."""
        if not self.lattice.is_even:
            return None
        den = 1
        for d in self.invariant_factors:
            den = den * d // gcd(den, d)
        x = [0] * self.lattice.rank
        for c, (num, d) in zip(coords, self.lift_numerators):
            if c:
                k = c * (den // d)
                x = [a + k * b for a, b in zip(x, num)]
        gx = self.lattice.apply_gram(x)
        return Fraction(sum(a * b for a, b in zip(x, gx)), den * den) % 2

    @cached_property
    def qbar_values(self) -> dict[tuple[int, ...], Fraction] | None:
        if not self.lattice.is_even:
            return None
        return {a.coords: self.qbar(a.coords) for a in self.elements()}


def discriminant_group(lat: GramLattice) -> DiscriminantGroup:
    cached = lat.__dict__.get("_disc")
    if cached is not None:
        return cached
    d, u, v = intmat.smith_normal_form(lat.gram)
    n = lat.rank
    keep = [i for i in range(n) if d[i][i] > 1]
    factors = tuple(d[i][i] for i in keep)
    lifts = tuple(tuple(Fraction(v[r][i], d[i][i]) for r in range(n)) for i in keep)
    rows = tuple(tuple(u[i]) for i in keep)
    group = DiscriminantGroup(lat, factors, lifts, rows)
    lat.__dict__["_disc"] = group
    return group


def disc_residue(v: LatticeVector, divisor: int) -> DiscElement:
    """Class of v/divisor in the discriminant group of v's lattice."""
    if divisor <= 0:
        raise PreconditionError("divisor must be positive")
    gv = v.lattice.apply_gram(v.coords)
    if any(x % divisor for x in gv):
        raise NotInDual(f"v/{divisor} is not in the dual lattice")
    group = discriminant_group(v.lattice)
    y = [x // divisor for x in gv]
    return group.element(sum(a * b for a, b in zip(row, y)) for row in group._residue_rows)


# ---------------------------------------------------------------- short vectors

def _ldl(a: Sequence[Sequence[int]]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Exact decomposition q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.

    Raises NotNegativeDefinite (for the caller's negated form) if some d_i <= 0.
    """
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = m[i][i]
        if d[i] <= 0:
            raise NotNegativeDefinite("lattice is not negative definite")
        for j in range(i + 1, n):
            mu[i][j] = m[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                m[j][k] -= mu[i][j] * m[i][k]
                m[k][j] = m[j][k]
    return d, mu


def is_negative_definite(lat: GramLattice) -> bool:
    try:
        _ldl([[-x for x in row] for row in lat.gram])
    except NotNegativeDefinite:
        return False
    return True


def short_vectors(lat: GramLattice, norms: Iterable[int]) -> list[LatticeVector]:
    """All vectors whose norm lies in ``norms``, sorted by coordinates.

    Fincke-Pohst style depth-first search on the positive definite form -G,
    with an exact LDL^T decomposition.  Floats are only used to guess the
    coordinate range at each level; every candidate is then checked exactly.
    """
    targets = set(int(t) for t in norms)
    if any(t >= 0 for t in targets):
        raise PreconditionError("target norms must be negative")
    a = [[-x for x in row] for row in lat.gram]
    d, mu = _ldl(a)
    if not targets:
        return []
    bound = Fraction(max(-t for t in targets))
    n = lat.rank
    want = {-t for t in targets}
    found: list[tuple[int, ...]] = []
    x = [0] * n

    def interval(centre: Fraction, radius_sq: Fraction) -> range:
        r = sqrt(float(radius_sq)) if radius_sq > 0 else 0.0
        lo = floor(float(-centre) - r) - 1
        hi = floor(float(-centre) + r) + 2
        return range(lo, hi)

    def search(i: int, remaining: Fraction):
        centre = sum((mu[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        rad = remaining / d[i]
        for xi in interval(centre, rad):
            t = xi + centre
            used = d[i] * t * t
            if used > remaining:
                continue
            x[i] = xi
            if i == 0:
                q = bound - remaining + used
                if q in want:
                    found.append(tuple(x))
            else:
                search(i - 1, remaining - used)
        x[i] = 0

    search(n - 1, bound)
    found.sort()
    return [LatticeVector(lat, c) for c in found]


def short_vectors_box(lat: GramLattice, norms: Iterable[int]) -> list[LatticeVector]:
    """Slow reference enumeration over the exact coordinate box.

    For q(x) <= N on a positive definite A, |x_i| <= sqrt(N * (A^-1)_ii).
    Used as an independent oracle for ``short_vectors`` on small lattices.
    """
    targets = set(int(t) for t in norms)
    if not targets:
        return []
    a = [[-x for x in row] for row in lat.gram]
    _ldl(a)
    inv = intmat.inverse_rational(a)
    big = max(-t for t in targets)
    radii = []
    for i in range(lat.rank):
        s = big * inv[i][i]
        r = isqrt(s.numerator // s.denominator)
        while (r + 1) * (r + 1) <= s:
            r += 1
        radii.append(r)
    out = []
    for c in product(*(range(-r, r + 1) for r in radii)):
        v = LatticeVector(lat, c)
        if any(c) and norm(v) in targets:
            out.append(v)
    return out


def coordinates_in_basis(vectors: Sequence[LatticeVector], target: LatticeVector) -> list[int] | None:
    """Integer z with sum z_i vectors_i == target, or None."""
    cols = [list(v.coords) for v in vectors]
    k = len(cols)
    n = target.lattice.rank
    mat = [[cols[j][i] for j in range(k)] for i in range(n)]
    d, u, vv = intmat.smith_normal_form(mat)
    rhs = intmat.matvec(u, target.coords)
    y = []
    for i in range(n):
        di = d[i][i] if i < k else 0
        if di == 0:
            if rhs[i]:
                return None
            if i < k:
                y.append(0)
        else:
            if rhs[i] % di:
                return None
            y.append(rhs[i] // di)
    return intmat.matvec(vv, y[:k])



"""Isometries: reflections, Eichler transvections, discriminant actions, orbits.

Matrices act on coordinate columns: the image of basis vector j is column j.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import intmat
from .errors import (
    InternalMismatch,
    InvariantMismatch,
    LatticeMismatch,
    NonIntegral,
    NotAnIsometry,
    NotPrimitive,
    NoUSquare,
    PreconditionError,
    ZeroNorm,
)
from .lattice import (
    _e8,
    DiscriminantGroup,
    GramLattice,
    LatticeVector,
    disc_residue,
    discriminant_group,
    divisibility,
    is_primitive,
    norm,
    pairing,
)


def _gram_preserved(lat: GramLattice, m: Sequence[Sequence[int]]) -> bool:
    n = lat.rank
    cols = [[m[r][c] for r in range(n)] for c in range(n)]
    gcols = [lat.apply_gram(c) for c in cols]
    for i in range(n):
        ci = cols[i]
        for j in range(i, n):
            if sum(a * b for a, b in zip(ci, gcols[j])) != lat.gram[i][j]:
                return False
    return True


@dataclass(frozen=True, eq=False)
class Isometry:
    """An integral matrix M with M^T G M = G (checked on construction).

    Since det G != 0 this forces det M = +-1.
    """

    lattice: GramLattice
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        n = self.lattice.rank
        if len(m) != n or any(len(r) != n for r in m):
            raise PreconditionError("matrix has the wrong shape")
        if not _gram_preserved(self.lattice, m):
            raise NotAnIsometry("matrix does not preserve the Gram matrix")
        object.__setattr__(self, "matrix", m)

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.matrix == other.matrix and self.lattice == other.lattice

    def __hash__(self):
        return hash(self.matrix)

    def __call__(self, v: LatticeVector) -> LatticeVector:
        return apply(self, v)

    @property
    def is_identity(self) -> bool:
        return all(x == int(i == j) for i, row in enumerate(self.matrix) for j, x in enumerate(row))

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def identity(lat: GramLattice) -> Isometry:
    return Isometry(lat, tuple(map(tuple, intmat.identity(lat.rank))))


def _same(a: GramLattice, b: GramLattice):
    if a is not b and a != b:
        raise LatticeMismatch(f"{a.name} vs {b.name}")


def apply(iso: Isometry, v: LatticeVector) -> LatticeVector:
    _same(iso.lattice, v.lattice)
    return LatticeVector(v.lattice, tuple(intmat.matvec(iso.matrix, v.coords)))


def compose(*isos: Isometry) -> Isometry:
    """compose(f, g)(v) == f(g(v))."""
    if not isos:
        raise PreconditionError("compose needs at least one isometry")
    lat = isos[0].lattice
    m = [list(r) for r in isos[-1].matrix]
    for f in reversed(isos[:-1]):
        _same(lat, f.lattice)
        m = intmat.matmul(f.matrix, m)
    return Isometry(lat, tuple(map(tuple, m)))


def inverse(iso: Isometry) -> Isometry:
    """M^-1 = G^-1 M^T G."""
    lat = iso.lattice
    mt_g = intmat.matmul(intmat.transpose(iso.matrix), lat.gram)
    inv = intmat.matmul(lat.inverse_gram, mt_g)
    if any(Fraction(x).denominator != 1 for row in inv for x in row):
        raise InternalMismatch("inverse of an isometry is not integral")
    return Isometry(lat, tuple(tuple(int(x) for x in row) for row in inv))


def reflection(x: LatticeVector) -> Isometry:
    """R_x(y) = y - 2 (y, x) / (x, x) * x, certified integral entry by entry."""
    q = norm(x)
    if q == 0:
        raise ZeroNorm("cannot reflect in an isotropic vector")
    if q > 0:
        raise PreconditionError("reflections are only taken in negative vectors")
    lat = x.lattice
    gx = lat.apply_gram(x.coords)
    n = lat.rank
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for j in range(n):
        num = 2 * gx[j]
        if not num:
            continue
        for i in range(n):
            if x.coords[i]:
                t = num * x.coords[i]
                if t % q:
                    raise NonIntegral(
                        f"reflection in {list(x.coords)} is not integral (basis vector {j})")
                m[i][j] -= t // q
    return Isometry(lat, tuple(map(tuple, m)))


def is_reflection_integral(x: LatticeVector) -> bool:
    try:
        reflection(x)
    except NonIntegral:
        return False
    return True


# ---------------------------------------------------------------- discriminant action

@dataclass(frozen=True)
class DiscAction:
    """A permutation of the discriminant group, indexed by ``group.index``."""

    group: DiscriminantGroup
    perm: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.perm))


def induced_disc_action(iso: Isometry) -> DiscAction:
    group = discriminant_group(iso.lattice)
    images = [group.residue_of_scaled(intmat.matvec(iso.matrix, num), d).coords
              for num, d in group.lift_numerators]
    factors = group.invariant_factors
    perm = []
    for a in group.elements():
        c = [0] * len(factors)
        for coeff, img in zip(a.coords, images):
            if coeff:
                c = [x + coeff * y for x, y in zip(c, img)]
        perm.append(group.index([x % d for x, d in zip(c, factors)]))
    return DiscAction(group, tuple(perm))


def acts_trivially_on_discriminant(iso: Isometry) -> bool:
    """Cheap check on generators only."""
    group = discriminant_group(iso.lattice)
    for k, (num, d) in enumerate(group.lift_numerators):
        image = group.residue_of_scaled(intmat.matvec(iso.matrix, num), d).coords
        expect = tuple(int(i == k) for i in range(len(group.invariant_factors)))
        if image != expect:
            return False
    return True


def orbits(generators: Sequence[Sequence[int]], domain_size: int) -> list[list[int]]:
    """Orbit partition of range(domain_size) under the given permutations.

    Breadth-first closure.  Orbits are returned sorted, in order of their
    minimal element.
    """
    gens = [tuple(g) for g in generators]
    for g in gens:
        if len(g) != domain_size or sorted(g) != list(range(domain_size)):
            raise PreconditionError("generators must be permutations of the domain")
    seen = [False] * domain_size
    out = []
    for start in range(domain_size):
        if seen[start]:
            continue
        seen[start] = True
        orbit, queue = [start], deque([start])
        while queue:
            a = queue.popleft()
            for g in gens:
                b = g[a]
                if not seen[b]:
                    seen[b] = True
                    orbit.append(b)
                    queue.append(b)
        out.append(sorted(orbit))
    return out


def e8_simple_root_reflections(lat: GramLattice, block: str | None = None) -> list[Isometry]:
    """Reflections in the eight fixed basis vectors of an E8(-1) or E8(-2) block."""
    name = block
    if name is None:
        cands = [b.name for b in lat.blocks if b.name.startswith("E8(")]
        if not cands:
            raise PreconditionError(f"{lat.name} has no E8 block")
        name = cands[0]
    b = lat.block(name)
    sub = [row[b.start:b.start + 8] for row in lat.gram[b.start:b.start + 8]]
    if b.length != 8 or not any(tuple(map(tuple, sub)) == _e8(s) for s in (1, 2)):
        raise PreconditionError(f"block {name!r} is not E8(-1) or E8(-2)")
    return [reflection(lat.unit(i)) for i in b.indices]



# ---------------------------------------------------------------- Eichler transvections

def _u_blocks(lat: GramLattice, names: Sequence[str] | None = None) -> list[tuple[int, int]]:
    """(e_index, f_index) for blocks isometric to U in their fixed basis."""
    if names is None:
        names = [b.name for b in lat.blocks]
    out = []
    for name in names:
        b = lat.block(name)
        if b.length == 2:
            s = b.start
            if (lat.gram[s][s], lat.gram[s][s + 1], lat.gram[s + 1][s + 1]) == (0, 1, 0):
                out.append((s, s + 1))
    return out


def eichler_transvection(e: LatticeVector, a: LatticeVector) -> Isometry:
    """t(x) = x + (x,e) a - (x,a) e - 1/2 (a,a)(x,e) e.

    e must be a basis vector of a U block (isotropic, primitive) and a must
    be orthogonal to e; the lattice must be even.
    """
    lat = e.lattice
    _same(lat, a.lattice)
    if not lat.is_even:
        raise PreconditionError("Eichler transvections need an even lattice")
    nz = [i for i, c in enumerate(e.coords) if c]
    ublocks = _u_blocks(lat)
    if len(nz) != 1 or abs(e.coords[nz[0]]) != 1 or not any(nz[0] in ef for ef in ublocks):
        raise PreconditionError("e must be a basis vector of a U block")
    if pairing(e, a):
        raise PreconditionError("a must be orthogonal to e")
    n = lat.rank
    m = [list(r) for r in intmat.identity(n)]
    _apply_transvection_rows(lat, m, e.coords, a.coords)
    return Isometry(lat, tuple(map(tuple, m)))


def _transvect_vector(lat: GramLattice, x: list[int], e: Sequence[int], a: Sequence[int]) -> None:
    """In-place x <- t(e, a)(x)."""
    ge = lat.apply_gram(e)
    ga = lat.apply_gram(a)
    xe = sum(p * q for p, q in zip(ge, x) if p)
    xa = sum(p * q for p, q in zip(ga, x) if p)
    if not xe and not xa:
        return
    half_aa = sum(p * q for p, q in zip(ga, a) if p) // 2
    ce = -xa - half_aa * xe
    for i in range(len(x)):
        if a[i]:
            x[i] += xe * a[i]
        if e[i]:
            x[i] += ce * e[i]


def _apply_transvection_rows(lat: GramLattice, m: list[list[int]], e: Sequence[int], a: Sequence[int]) -> None:
    """In-place M <- t(e, a) * M, touching only rows in the support of e and a."""
    n = lat.rank
    ge = lat.apply_gram(e)
    ga = lat.apply_gram(a)
    half_aa = sum(p * q for p, q in zip(ga, a) if p) // 2
    se = [i for i in range(n) if ge[i]]
    sa = [i for i in range(n) if ga[i]]
    row_e = [sum(ge[i] * m[i][j] for i in se) for j in range(n)]
    row_a = [sum(ga[i] * m[i][j] for i in sa) for j in range(n)]
    for i in range(n):
        if a[i]:
            ai = a[i]
            m[i] = [x + ai * y for x, y in zip(m[i], row_e)]
        if e[i]:
            ei = e[i]
            m[i] = [x - ei * (ya + half_aa * ye) for x, ya, ye in zip(m[i], row_a, row_e)]


class _Reducer:
    """Moves a primitive vector to r*e1 + c*f1 + m with m outside U1 + U2.

    Works on the 2x2 matrix X = [[a1, a2], [-b2, b1]] of the coefficients of
    v on e1, e2, f1, f2.  Transvections with e, a in U1 + U2 act on X as
    elementary row and column operations.
    """

    def __init__(self, lat: GramLattice, u1: tuple[int, int], u2: tuple[int, int]):
        self.lat = lat
        self.e1, self.f1 = u1
        self.e2, self.f2 = u2
        self.n = lat.rank
        self.u_idx = {self.e1, self.f1, self.e2, self.f2}
        self.m_idx = [i for i in range(self.n) if i not in self.u_idx]

    def _unit(self, i, k=1):
        c = [0] * self.n
        c[i] = k
        return c

    def run(self, v: Sequence[int]) -> tuple[list, list[int]]:
        x = list(v)
        ops: list[tuple[list[int], list[int]]] = []

        def t(e_i, a):
            e = self._unit(e_i)
            _transvect_vector(self.lat, x, e, a)
            ops.append((e, a))

        def X():
            return [[x[self.e1], x[self.e2]], [-x[self.f2], x[self.f1]]]

        # elementary operations on X
        def row1_add_row2(k):
            t(self.e1, self._unit(self.e2, k))

        def row2_add_row1(k):
            t(self.f1, self._unit(self.f2, -k))

        def col2_add_col1(k):
            t(self.f1, self._unit(self.e2, k))

        def col1_add_col2(k):
            t(self.e1, self._unit(self.f2, -k))

        def diagonalize():
            while True:
                m = X()
                if m[0][1] == 0 and m[1][0] == 0:
                    a, d = m[0][0], m[1][1]
                    if a == 0 and d == 0:
                        return
                    if a == 0 or d % a:
                        row1_add_row2(1)
                        continue
                    if a < 0:
                        # (row1, row2) -> (-row1, -row2)
                        for _ in range(2):
                            row1_add_row2(1)
                            row2_add_row1(-1)
                            row1_add_row2(1)
                    return
                # clear X[0][1] by column Euclid
                while X()[0][1]:
                    m = X()
                    if m[0][0] == 0:
                        col1_add_col2(1)
                        continue
                    col2_add_col1(-(m[0][1] // m[0][0]))
                    m = X()
                    if m[0][1]:
                        col1_add_col2(-(m[0][0] // m[0][1]))
                # clear X[1][0] by row Euclid
                while X()[1][0]:
                    m = X()
                    if m[0][0] == 0:
                        row1_add_row2(1)
                        continue
                    row2_add_row1(-(m[1][0] // m[0][0]))
                    m = X()
                    if m[1][0]:
                        row1_add_row2(-(m[0][0] // m[1][0]))

        diagonalize()
        mpart = [x[i] for i in self.m_idx]
        if any(mpart):
            gm = self.lat.apply_gram(x)
            pair = [gm[i] for i in self.m_idx]
            s, coeff = intmat.bezout(pair)
            if not x[self.e1] or s % x[self.e1]:
                # (x, a) = -s pushes s into the e2 coefficient
                a = [0] * self.n
                for c, i in zip(coeff, self.m_idx):
                    a[i] = -c
                t(self.e2, a)
                diagonalize()
        if x[self.e2] or x[self.f2]:
            raise InternalMismatch("reduction left a U2 component")
        return ops, x


def _designated_u(lat: GramLattice, u_blocks: Sequence[str] | None):
    found = _u_blocks(lat, u_blocks)
    if len(found) < 2:
        raise NoUSquare(f"{lat.name} does not have two designated U blocks")
    return found[0], found[1]


def eichler_normalize(lat: GramLattice, v: LatticeVector, w: LatticeVector,
                      u_blocks: Sequence[str] | None = None) -> Isometry:
    """An isometry phi with phi(v) = w acting trivially on the discriminant group.

    Requires two orthogonal copies of U (the first two U blocks unless
    ``u_blocks`` names them) and that v, w are primitive with equal norm,
    divisibility r and residue of v/r.  phi is a product of transvections.
    """
    _same(lat, v.lattice)
    _same(lat, w.lattice)
    if not lat.is_even:
        raise PreconditionError("Eichler normalization needs an even lattice")
    u1, u2 = _designated_u(lat, u_blocks)
    for z in (v, w):
        if not any(z.coords):
            raise PreconditionError("zero vector")
        if not is_primitive(z):
            raise NotPrimitive(f"{list(z.coords)} is not primitive")
    failures = []
    if norm(v) != norm(w):
        failures.append("norm")
    r = divisibility(v)
    if r != divisibility(w):
        failures.append("divisibility")
    elif disc_residue(v, r) != disc_residue(w, r):
        failures.append("residue")
    if failures:
        raise InvariantMismatch(failures)

    red = _Reducer(lat, u1, u2)
    ops_v, xv = red.run(v.coords)
    ops_w, xw = red.run(w.coords)
    if xv[red.e1] != r or xw[red.e1] != r:
        raise InternalMismatch("reduced form does not expose the divisibility")
    link = [0] * lat.rank
    for i in red.m_idx:
        diff = xw[i] - xv[i]
        if diff % r:
            raise InternalMismatch("residue condition did not give an integral link")
        link[i] = diff // r
    e_f1 = red._unit(red.f1)

    m = [list(row) for row in intmat.identity(lat.rank)]
    for e, a in ops_v:
        _apply_transvection_rows(lat, m, e, a)
    _apply_transvection_rows(lat, m, e_f1, link)
    for e, a in reversed(ops_w):
        _apply_transvection_rows(lat, m, e, [-c for c in a])
    phi = Isometry(lat, tuple(map(tuple, m)))
    if apply(phi, v) != w:
        raise InternalMismatch("normalizer does not map v to w")
    if not acts_trivially_on_discriminant(phi):
        raise InternalMismatch("normalizer acts nontrivially on the discriminant group")
    return phi

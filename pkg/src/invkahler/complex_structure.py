"""Almost complex structures: integrability, special classes, compatibility."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionMismatch, JSquareViolation, NotAnAutomorphism
from .exterior import TwoForm
from .lie import LieAlgebra, bracket, is_automorphism
from .linalg import Vec


@dataclass(frozen=True)
class AlmostComplexStructure:
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def apply(self, x: Sequence[Fraction]) -> Vec:
        return linalg.mat_vec(self.matrix, x)


def almost_complex_structure(rows: Sequence[Sequence]) -> AlmostComplexStructure:
    """Validate J.J = -I exactly at construction."""
    m = linalg.mat(rows)
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("J must be square")
    sq = linalg.mat_mul(m, m)
    for i in range(n):
        for j in range(n):
            expected = Fraction(-1) if i == j else Fraction(0)
            if sq[i][j] != expected:
                raise JSquareViolation(i + 1, j + 1, sq[i][j])
    return AlmostComplexStructure(linalg.freeze(m))


def j_from_images(dim: int, images: dict[int, Sequence[tuple[int, object]]]) -> AlmostComplexStructure:
    """Convenience builder from relations like {1: [(2, 1)]} meaning J e_1 = e_2;
    the opposite relations J e_2 = -e_1 are synthesized from J^2 = -I when the
    image is a single scaled basis vector."""
    m = linalg.zeros(dim, dim)
    for src, terms in images.items():
        for (dst, c) in terms:
            m[dst - 1][src - 1] += Fraction(c)
    for src, terms in images.items():
        if len(terms) == 1:
            dst, c = terms[0]
            m[src - 1][dst - 1] += Fraction(-1) / Fraction(c)
    return almost_complex_structure(m)


def nijenhuis(g: LieAlgebra, j: AlmostComplexStructure, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    """N_J(x,y) = [Jx,Jy] - [x,y] - J[Jx,y] - J[x,Jy]."""
    if j.dim != g.dim:
        raise DimensionMismatch("J dimension does not match algebra")
    jx, jy = j.apply(x), j.apply(y)
    out = bracket(g, jx, jy)
    out = linalg.vec_sub(out, bracket(g, x, y))
    out = linalg.vec_sub(out, j.apply(bracket(g, jx, y)))
    out = linalg.vec_sub(out, j.apply(bracket(g, x, jy)))
    return out


def is_integrable(g: LieAlgebra, j: AlmostComplexStructure) -> bool:
    n = g.dim
    for a in range(n):
        for b in range(a + 1, n):
            if not linalg.vec_is_zero(nijenhuis(g, j, linalg.unit_vec(n, a), linalg.unit_vec(n, b))):
                return False
    return True


def is_abelian_complex_structure(g: LieAlgebra, j: AlmostComplexStructure) -> bool:
    """[Jx, Jy] = [x, y] on all basis pairs."""
    n = g.dim
    for a in range(n):
        ja = j.apply(linalg.unit_vec(n, a))
        for b in range(a + 1, n):
            jb = j.apply(linalg.unit_vec(n, b))
            if bracket(g, ja, jb) != g.bracket_basis(a, b):
                return False
    return True


def is_complex_lie_structure(g: LieAlgebra, j: AlmostComplexStructure) -> bool:
    """J[x, y] = [Jx, y] on all basis pairs (J-bilinear bracket)."""
    n = g.dim
    for a in range(n):
        ja = j.apply(linalg.unit_vec(n, a))
        for b in range(a + 1, n):
            eb = linalg.unit_vec(n, b)
            if j.apply(g.bracket_basis(a, b)) != bracket(g, ja, eb):
                return False
    return True


def is_compatible(omega: TwoForm, j: AlmostComplexStructure) -> bool:
    """omega(Jx, Jy) = omega(x, y), tested as the matrix identity Jt G J = G."""
    if omega.dim != j.dim:
        raise DimensionMismatch("form and J dimensions differ")
    jm = [list(r) for r in j.matrix]
    g = [list(r) for r in omega.gram]
    return linalg.mat_eq(linalg.mat_mul(linalg.transpose(jm), linalg.mat_mul(g, jm)), g)


def intertwines(
    g: LieAlgebra,
    a: Sequence[Sequence[Fraction]],
    j1: AlmostComplexStructure,
    j2: AlmostComplexStructure,
) -> bool:
    """True iff the automorphism a satisfies A J1 = J2 A."""
    if not is_automorphism(g, a):
        raise NotAnAutomorphism("matrix is not a Lie algebra automorphism")
    am = [list(r) for r in a]
    return linalg.mat_eq(
        linalg.mat_mul(am, [list(r) for r in j1.matrix]),
        linalg.mat_mul([list(r) for r in j2.matrix], am),
    )

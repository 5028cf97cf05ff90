"""Chevalley-Eilenberg exterior algebra on the dual of a Lie algebra.

Sign convention: d(alpha)(x, y) = -alpha([x, y]) for 1-forms and

    d(omega)(x, y, z) = -omega([x,y],z) + omega([x,z],y) - omega([y,z],x)

for 2-forms, which makes d o d = 0 equivalent to the Jacobi identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import DimensionMismatch, IndexOutOfRange
from .lie import LieAlgebra
from .linalg import Vec

ZERO = Fraction(0)


@dataclass(frozen=True)
class OneForm:
    coeffs: Vec  # on the dual basis e^i

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return linalg.dot(self.coeffs, x)


@dataclass(frozen=True)
class TwoForm:
    """Antisymmetric bilinear form, stored as its full Gram matrix."""

    gram: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.gram)

    def value(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length does not match form dimension")
        return sum((x[i] * linalg.dot(self.gram[i], y) for i in range(self.dim)), ZERO)

    def coeff(self, i: int, j: int) -> Fraction:
        """w_ij for 1-based indices."""
        return self.gram[i - 1][j - 1]

    def upper_coeffs(self) -> Vec:
        """Coefficients on the wedge basis e^i ^ e^j, i < j, lexicographic."""
        n = self.dim
        return tuple(self.gram[i][j] for i in range(n) for j in range(i + 1, n))

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.gram for c in row)

    def scale(self, c: Fraction) -> "TwoForm":
        return TwoForm(linalg.freeze(linalg.mat_scale(c, [list(r) for r in self.gram])))

    def add(self, other: "TwoForm") -> "TwoForm":
        if self.dim != other.dim:
            raise DimensionMismatch("adding forms of different dimension")
        return TwoForm(linalg.freeze(linalg.mat_add(self.gram, other.gram)))


def two_form(dim: int, coeffs: Iterable[tuple[int, int, object]]) -> TwoForm:
    """Build from sparse 1-based (i, j, w) entries with strict i < j."""
    gram = linalg.zeros(dim, dim)
    for (i, j, w) in coeffs:
        if not (1 <= i < j <= dim):
            raise IndexOutOfRange(f"two-form indices must satisfy 1 <= i < j <= dim: ({i},{j})")
        w = Fraction(w)
        gram[i - 1][j - 1] += w
        gram[j - 1][i - 1] -= w
    return TwoForm(linalg.freeze(gram))


def wedge_pair_index(n: int, i: int, j: int) -> int:
    """Position of e^i ^ e^j (1-based, i < j) in the lexicographic wedge basis."""
    i0, j0 = i - 1, j - 1
    return i0 * n - i0 * (i0 + 1) // 2 + (j0 - i0 - 1)


def two_form_from_upper(dim: int, upper: Sequence[Fraction]) -> TwoForm:
    pairs = [(i + 1, j + 1) for i in range(dim) for j in range(i + 1, dim)]
    if len(upper) != len(pairs):
        raise DimensionMismatch("wrong number of wedge coefficients")
    return two_form(dim, [(i, j, c) for (i, j), c in zip(pairs, upper) if c != 0])


@dataclass(frozen=True)
class ThreeForm:
    """Alternating trilinear form by coefficients t_ijk, i < j < k (1-based keys)."""

    dim: int
    coeffs: tuple[tuple[tuple[int, int, int], Fraction], ...]

    def is_zero(self) -> bool:
        return all(c == 0 for _, c in self.coeffs)

    def coeff(self, i: int, j: int, k: int) -> Fraction:
        for key, c in self.coeffs:
            if key == (i, j, k):
                return c
        return ZERO


def d_one(g: LieAlgebra, alpha: OneForm) -> TwoForm:
    if alpha.dim != g.dim:
        raise DimensionMismatch("1-form dimension does not match algebra")
    entries = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            c = -alpha.value(g.bracket_basis(i, j))
            if c != 0:
                entries.append((i + 1, j + 1, c))
    return two_form(g.dim, entries)


def d_two(g: LieAlgebra, omega: TwoForm) -> ThreeForm:
    if omega.dim != g.dim:
        raise DimensionMismatch("2-form dimension does not match algebra")
    n = g.dim
    items = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = (linalg.unit_vec(n, t) for t in (i, j, k))
                c = (
                    -omega.value(g.bracket_basis(i, j), ek)
                    + omega.value(g.bracket_basis(i, k), ej)
                    - omega.value(g.bracket_basis(j, k), ei)
                )
                items.append(((i + 1, j + 1, k + 1), c))
    return ThreeForm(n, tuple(items))


def is_closed(g: LieAlgebra, omega: TwoForm) -> bool:
    return d_two(g, omega).is_zero()


def is_nondegenerate(omega: TwoForm) -> bool:
    """Maximal rank test: exact determinant of the Gram matrix (the square
    of the Pfaffian).  Odd-dimensional forms are never nondegenerate."""
    if omega.dim % 2 == 1:
        return False
    return linalg.det([list(r) for r in omega.gram]) != 0


def pfaffian(omega_gram: Sequence[Sequence[Fraction]]) -> Fraction:
    """Pfaffian of an antisymmetric matrix by expansion along the first row."""
    n = len(omega_gram)
    if n % 2 == 1:
        return ZERO
    if n == 0:
        return Fraction(1)
    if n == 2:
        return omega_gram[0][1]
    total = ZERO
    rest = list(range(1, n))
    for pos, j in enumerate(rest):
        a = omega_gram[0][j]
        if a == 0:
            continue
        keep = [r for r in rest if r != j]
        minor = [[omega_gram[r][c] for c in keep] for r in keep]
        sign = Fraction(-1) ** pos
        total += sign * a * pfaffian(minor)
    return total

"""Finite-dimensional real Lie algebras given by exact structure constants.

Structure constants are stored sparsely over the strict lower index
triangle (i < j); antisymmetry is synthesized by the accessors and never
stored twice.  Construction validates the Jacobi identity exactly on all
basis triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import DimensionMismatch, IndexOutOfRange, JacobiViolation, SingularMatrix
from .linalg import Vec, vec_is_zero, zero_vec

BracketEntry = tuple[int, int, int, Fraction]


@dataclass(frozen=True)
class LieAlgebra:
    """dim plus the table of [e_i, e_j] for 1 <= i < j <= dim (0-based inside)."""

    dim: int
    table: tuple[tuple[Vec, ...], ...]  # table[i][j - i - 1] = [e_i, e_j], i < j

    def bracket_basis(self, i: int, j: int) -> Vec:
        """[e_i, e_j] for 0-based i, j, with antisymmetry synthesized."""
        if i == j:
            return zero_vec(self.dim)
        if i < j:
            return self.table[i][j - i - 1]
        return linalg.vec_scale(Fraction(-1), self.table[j][i - j - 1])

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
        return bracket(self, x, y)

    def sparse_entries(self) -> list[BracketEntry]:
        """Nonzero constants as 1-based (i, j, k, c) with i < j."""
        out = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k, c in enumerate(self.bracket_basis(i, j)):
                    if c != 0:
                        out.append((i + 1, j + 1, k + 1, c))
        return out


@dataclass(frozen=True)
class Subspace:
    """Subspace of the ambient algebra; basis kept in reduced row-echelon
    form so equality of subspaces is equality of dataclasses."""

    ambient_dim: int
    basis: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.ambient_dim:
            raise DimensionMismatch(f"vector length {len(x)} in ambient dim {self.ambient_dim}")
        if vec_is_zero(x):
            return True
        return linalg.rank(list(self.basis) + [list(x)]) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)


def subspace(ambient_dim: int, vectors: Iterable[Sequence[Fraction]]) -> Subspace:
    rows = [list(v) for v in vectors]
    for row in rows:
        if len(row) != ambient_dim:
            raise DimensionMismatch(f"vector length {len(row)} in ambient dim {ambient_dim}")
    return Subspace(ambient_dim, tuple(linalg.row_space_basis(rows)))


def span_of_indices(ambient_dim: int, indices: Sequence[int]) -> Subspace:
    """Span of basis vectors, 1-based indices."""
    return subspace(ambient_dim, [linalg.unit_vec(ambient_dim, i - 1) for i in indices])


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return subspace(a.ambient_dim, list(a.basis) + list(b.basis))


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus-free intersection: kernel of [A; B] stacked columns."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces in different ambient spaces")
    if not a.basis or not b.basis:
        return subspace(a.ambient_dim, [])
    # solve sum c_i a_i = sum d_j b_j: nullspace of columns [A | -B]
    cols = [list(v) for v in a.basis] + [[-x for x in v] for v in b.basis]
    system = linalg.transpose(cols)
    kernel = linalg.nullspace(system, n_cols=len(cols))
    vectors = []
    for sol in kernel:
        v = zero_vec(a.ambient_dim)
        for c, bas in zip(sol[: len(a.basis)], a.basis):
            v = linalg.vec_add(v, linalg.vec_scale(c, bas))
        vectors.append(v)
    return subspace(a.ambient_dim, vectors)


def apply_matrix_subspace(m: Sequence[Sequence[Fraction]], s: Subspace) -> Subspace:
    return subspace(s.ambient_dim, [linalg.mat_vec(m, v) for v in s.basis])


# -- construction ------------------------------------------------------------

def new_lie_algebra(dim: int, brackets: Iterable[tuple[int, int, int, object]]) -> LieAlgebra:
    """Build and validate an algebra from sparse 1-based (i, j, k, c) entries.

    Raises IndexOutOfRange for bad indices and JacobiViolation (with the
    failing triple) if the Jacobi identity does not hold exactly.
    """
    if dim < 1:
        raise IndexOutOfRange(f"dimension must be positive, got {dim}")
    rows = [[list(zero_vec(dim)) for _ in range(dim - i - 1)] for i in range(dim)]
    for (i, j, k, c) in brackets:
        if not (1 <= i < j <= dim):
            raise IndexOutOfRange(f"bracket indices must satisfy 1 <= i < j <= dim: ({i},{j})")
        if not (1 <= k <= dim):
            raise IndexOutOfRange(f"bracket target index out of range: {k}")
        rows[i - 1][j - i - 1][k - 1] += Fraction(c)
    table = tuple(tuple(tuple(v) for v in row) for row in rows)
    algebra = LieAlgebra(dim, table)
    _check_jacobi(algebra)
    return algebra


def _check_jacobi(g: LieAlgebra) -> None:
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = (linalg.unit_vec(n, t) for t in (i, j, k))
                s = bracket(g, bracket(g, ei, ej), ek)
                s = linalg.vec_add(s, bracket(g, bracket(g, ej, ek), ei))
                s = linalg.vec_add(s, bracket(g, bracket(g, ek, ei), ej))
                if not vec_is_zero(s):
                    raise JacobiViolation(i + 1, j + 1, k + 1, residual=list(s))


def bracket(g: LieAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    """Bilinear extension of the structure constants."""
    n = g.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"vectors of length {len(x)}, {len(y)} in dim {n}")
    out = list(zero_vec(n))
    for i in range(n):
        xi = x[i]
        for j in range(i + 1, n):
            c = xi * y[j] - x[j] * y[i]
            if c != 0:
                for k, v in enumerate(g.table[i][j - i - 1]):
                    if v != 0:
                        out[k] += c * v
    return tuple(out)


def ad_matrix(g: LieAlgebra, x: Sequence[Fraction]) -> linalg.Mat:
    """Matrix of ad_x = [x, .] in the given basis."""
    cols = [bracket(g, x, linalg.unit_vec(g.dim, j)) for j in range(g.dim)]
    return linalg.transpose(cols)


# -- structural predicates ----------------------------------------------------

def derived_algebra(g: LieAlgebra) -> Subspace:
    vectors = [g.bracket_basis(i, j) for i in range(g.dim) for j in range(i + 1, g.dim)]
    return subspace(g.dim, vectors)


def _bracket_of_subspaces(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vectors = [bracket(g, u, v) for u in a.basis for v in b.basis]
    return subspace(g.dim, vectors)


def is_solvable(g: LieAlgebra) -> bool:
    current = subspace(g.dim, [linalg.unit_vec(g.dim, i) for i in range(g.dim)])
    for _ in range(g.dim + 1):
        if current.dim == 0:
            return True
        nxt = _bracket_of_subspaces(g, current, current)
        if nxt.dim == current.dim:
            return False
        current = nxt
    return current.dim == 0


def is_nilpotent(g: LieAlgebra) -> bool:
    whole = subspace(g.dim, [linalg.unit_vec(g.dim, i) for i in range(g.dim)])
    current = whole
    for _ in range(g.dim + 1):
        if current.dim == 0:
            return True
        nxt = _bracket_of_subspaces(g, whole, current)
        if nxt.dim == current.dim:
            return False
        current = nxt
    return current.dim == 0


def is_completely_solvable(g: LieAlgebra) -> bool:
    """Solvable with every ad_x real-rooted, decided exactly: Sturm count on
    the characteristic polynomial of each basis ad and of one fixed generic
    rational combination."""
    if not is_solvable(g):
        return False
    for i in range(g.dim):
        if not linalg.all_roots_real(linalg.charpoly(ad_matrix(g, linalg.unit_vec(g.dim, i)))):
            return False
    generic = tuple(Fraction(1, i + 1) for i in range(g.dim))
    return linalg.all_roots_real(linalg.charpoly(ad_matrix(g, generic)))


def is_unimodular(g: LieAlgebra) -> bool:
    for i in range(g.dim):
        m = ad_matrix(g, linalg.unit_vec(g.dim, i))
        if sum(m[k][k] for k in range(g.dim)) != 0:
            return False
    return True


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    if s.ambient_dim != g.dim:
        raise DimensionMismatch("subspace lives in a different ambient space")
    for i in range(g.dim):
        ei = linalg.unit_vec(g.dim, i)
        for v in s.basis:
            if not s.contains(bracket(g, ei, v)):
                return False
    return True


def is_subalgebra(g: LieAlgebra, s: Subspace) -> bool:
    return all(s.contains(bracket(g, u, v)) for u in s.basis for v in s.basis)


def is_abelian_subspace(g: LieAlgebra, s: Subspace) -> bool:
    return all(vec_is_zero(bracket(g, u, v)) for u in s.basis for v in s.basis)


def is_isomorphism(src: LieAlgebra, dst: LieAlgebra, a: Sequence[Sequence[Fraction]]) -> bool:
    """True iff the invertible matrix a maps src brackets to dst brackets:
    a[x, y]_src = [a x, a y]_dst on all basis pairs."""
    if src.dim != dst.dim or len(a) != src.dim:
        raise DimensionMismatch("isomorphism candidate has wrong shape")
    if linalg.det(a) == 0:
        raise SingularMatrix("candidate matrix is singular")
    n = src.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = linalg.mat_vec(a, src.bracket_basis(i, j))
            rhs = bracket(dst, linalg.column(a, i), linalg.column(a, j))
            if lhs != rhs:
                return False
    return True


def is_automorphism(g: LieAlgebra, a: Sequence[Sequence[Fraction]]) -> bool:
    return is_isomorphism(g, g, a)

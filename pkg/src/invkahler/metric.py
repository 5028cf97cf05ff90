"""Pseudo-Riemannian layer: metric from a compatible pair, Levi-Civita
connection via the Koszul formula, curvature, Ricci, geodesic field.

All tensors are exact.  The only floating point in the package is the
RK4 geodesic demo at the bottom, which is an inspection facility and
feeds no classification verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .complex_structure import AlmostComplexStructure, is_compatible, is_integrable
from .errors import (
    Degenerate,
    DegenerateMetric,
    DimensionMismatch,
    NotClosed,
    NotCompatible,
    NotIntegrable,
)
from .exterior import TwoForm, is_closed, is_nondegenerate
from .lie import LieAlgebra
from .linalg import Vec

ZERO = Fraction(0)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class MetricTensor:
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def value(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        return linalg.dot(linalg.mat_vec(self.matrix, y), x)

    def is_nondegenerate(self) -> bool:
        return linalg.det([list(r) for r in self.matrix]) != 0


@dataclass(frozen=True)
class SymmetricBilinear:
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def value(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        return linalg.dot(linalg.mat_vec(self.matrix, y), x)

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.matrix for c in row)


@dataclass(frozen=True)
class Connection:
    """Left-invariant connection by coefficients: nabla_{e_i} e_j = gamma[i][j]."""

    dim: int
    gamma: tuple[tuple[Vec, ...], ...]

    def nabla_basis(self, i: int, j: int) -> Vec:
        return self.gamma[i][j]

    def nabla(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
        """nabla_x y for constant-coefficient (left-invariant) fields."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch("vector length does not match connection dimension")
        out = [ZERO] * n
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                c = x[i] * y[j]
                if c != 0:
                    for k, v in enumerate(self.gamma[i][j]):
                        if v != 0:
                            out[k] += c * v
        return tuple(out)


@dataclass(frozen=True)
class CurvatureTensor:
    """R(e_i, e_j) e_k = sum_l coeffs[i][j][k][l] e_l."""

    dim: int
    coeffs: tuple[tuple[tuple[Vec, ...], ...], ...]

    def apply_basis(self, i: int, j: int, k: int) -> Vec:
        return self.coeffs[i][j][k]

    def apply(self, x: Sequence[Fraction], y: Sequence[Fraction], z: Sequence[Fraction]) -> Vec:
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                c0 = x[i] * y[j]
                if c0 == 0:
                    continue
                for k in range(n):
                    c = c0 * z[k]
                    if c != 0:
                        for l, v in enumerate(self.coeffs[i][j][k]):
                            if v != 0:
                                out[l] += c * v
        return tuple(out)

    def is_zero(self) -> bool:
        return all(
            v == 0
            for plane in self.coeffs
            for row in plane
            for vec_ in row
            for v in vec_
        )


# -- constructors --------------------------------------------------------------

def metric_matrix_from_pair(j: AlmostComplexStructure, omega: TwoForm) -> MetricTensor:
    """g(x, y) = omega(Jx, y) with no precondition gates; used internally and
    by tests that deliberately feed non-closed forms."""
    jt = linalg.transpose([list(r) for r in j.matrix])
    m = linalg.mat_mul(jt, [list(r) for r in omega.gram])
    return MetricTensor(linalg.freeze(m))


def metric_from_pair(g: LieAlgebra, j: AlmostComplexStructure, omega: TwoForm) -> MetricTensor:
    """The pseudo-Kahler metric of a compatible pair; every precondition is
    checked and the violated one is named."""
    if not is_integrable(g, j):
        raise NotIntegrable("J has nonvanishing Nijenhuis tensor")
    if not is_closed(g, omega):
        raise NotClosed("omega is not closed")
    if not is_compatible(omega, j):
        raise NotCompatible("omega(Jx,Jy) != omega(x,y)")
    if not is_nondegenerate(omega):
        raise Degenerate("omega has non-maximal rank")
    return metric_matrix_from_pair(j, omega)


def signature(m: MetricTensor) -> tuple[int, int]:
    return linalg.congruence_signature([list(r) for r in m.matrix])


def levi_civita(g: LieAlgebra, m: MetricTensor) -> Connection:
    """Unique torsion-free metric connection solved exactly from
    2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y)."""
    if g.dim != m.dim:
        raise DimensionMismatch("metric dimension does not match algebra")
    if not m.is_nondegenerate():
        raise DegenerateMetric("metric matrix is singular")
    n = g.dim
    minv = linalg.inverse([list(r) for r in m.matrix])
    basis = [linalg.unit_vec(n, i) for i in range(n)]
    gamma_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            rhs = []
            for k in range(n):
                val = (
                    m.value(g.bracket_basis(i, j), basis[k])
                    - m.value(g.bracket_basis(j, k), basis[i])
                    + m.value(g.bracket_basis(k, i), basis[j])
                )
                rhs.append(HALF * val)
            row.append(linalg.mat_vec(minv, rhs))
        gamma_rows.append(tuple(row))
    return Connection(n, tuple(gamma_rows))


def is_parallel(g: LieAlgebra, conn: Connection, j: AlmostComplexStructure) -> bool:
    """nabla J = 0: nabla_{e_i}(J e_j) = J(nabla_{e_i} e_j) for all i, j."""
    n = conn.dim
    for i in range(n):
        ei = linalg.unit_vec(n, i)
        for jj in range(n):
            ej = linalg.unit_vec(n, jj)
            lhs = conn.nabla(ei, j.apply(ej))
            rhs = j.apply(conn.nabla(ei, ej))
            if lhs != rhs:
                return False
    return True


def curvature(g: LieAlgebra, conn: Connection) -> CurvatureTensor:
    """R(x,y) = [nabla_x, nabla_y] - nabla_{[x,y]} on basis triples."""
    n = g.dim
    basis = [linalg.unit_vec(n, i) for i in range(n)]
    out = []
    for i in range(n):
        plane = []
        for j in range(n):
            row = []
            for k in range(n):
                v = conn.nabla(basis[i], conn.nabla(basis[j], basis[k]))
                v = linalg.vec_sub(v, conn.nabla(basis[j], conn.nabla(basis[i], basis[k])))
                v = linalg.vec_sub(v, conn.nabla(g.bracket_basis(i, j), basis[k]))
                row.append(v)
            plane.append(tuple(row))
        out.append(tuple(plane))
    return CurvatureTensor(n, tuple(out))


def ricci(g: LieAlgebra, conn: Connection) -> SymmetricBilinear:
    """ric(x, y) = trace of z -> R(z, x) y, frame-free and exact."""
    r = curvature(g, conn)
    return ricci_from_curvature(r)


def ricci_from_curvature(r: CurvatureTensor) -> SymmetricBilinear:
    n = r.dim
    m = [[sum((r.coeffs[m_][i][j][m_] for m_ in range(n)), ZERO) for j in range(n)] for i in range(n)]
    return SymmetricBilinear(linalg.freeze(m))


def plane_curvature(r: CurvatureTensor, m: MetricTensor, v: Sequence[Fraction], w: Sequence[Fraction]) -> Fraction:
    """g(R(v,w)w, v): the unnormalized sectional curvature numerator."""
    return m.value(r.apply(v, w, w), v)


def geodesic_field(conn: Connection, x: Sequence[Fraction]) -> Vec:
    """Right side of the geodesic equation on the algebra: -nabla_x x."""
    return linalg.vec_scale(Fraction(-1), conn.nabla(x, x))


def integrate_geodesic(
    conn: Connection, x0: Sequence, t_end: float, steps: int
) -> list[tuple[float, tuple[float, ...]]]:
    """Classical fixed-step RK4 over the double-precision projection of the
    quadratic field -nabla_x x.  Demo facility only; outputs are approximate
    and never feed a classification verdict."""
    if steps < 1:
        raise DimensionMismatch("steps must be >= 1")
    n = conn.dim
    gamma = [[[float(c) for c in conn.gamma[i][j]] for j in range(n)] for i in range(n)]

    def field(state: list[float]) -> list[float]:
        out = [0.0] * n
        for i in range(n):
            si = state[i]
            if si == 0.0:
                continue
            for j in range(n):
                c = si * state[j]
                if c != 0.0:
                    gk = gamma[i][j]
                    for k in range(n):
                        out[k] -= c * gk[k]
        return out

    h = float(t_end) / steps
    state = [float(v) for v in x0]
    samples = [(0.0, tuple(state))]
    for step in range(steps):
        k1 = field(state)
        k2 = field([s + 0.5 * h * d for s, d in zip(state, k1)])
        k3 = field([s + 0.5 * h * d for s, d in zip(state, k2)])
        k4 = field([s + h * d for s, d in zip(state, k3)])
        state = [
            s + h / 6.0 * (a + 2 * b + 2 * c + d)
            for s, a, b, c, d in zip(state, k1, k2, k3, k4)
        ]
        samples.append(((step + 1) * h, tuple(state)))
    return samples

"""Solve exactly for the space of closed J-compatible 2-forms on (g, J) and
sample nondegenerate representatives.

The unknowns are the wedge coefficients w_ij (i < j); closedness on every
basis triple and compatibility on every basis pair are linear constraints,
so the space is an exact nullspace.  Nondegeneracy over a linear family is
decided through the Pfaffian: in dimension 4 it is a quadratic form in the
family coordinates and is expanded symbolically; in higher (even) dimension
identical vanishing is certified by evaluating the degree-(n/2) Pfaffian
polynomial on an integer grid large enough to force a nonzero polynomial to
show itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .complex_structure import AlmostComplexStructure, is_compatible, is_integrable
from .errors import NotIntegrable
from .exterior import TwoForm, is_closed, is_nondegenerate, pfaffian, two_form_from_upper
from .lie import LieAlgebra

ZERO = Fraction(0)


@dataclass(frozen=True)
class FormSpace:
    dim_ambient: int
    basis: tuple[TwoForm, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def element(self, coeffs: Sequence[Fraction]) -> TwoForm:
        if len(coeffs) != len(self.basis):
            raise ValueError("coefficient count does not match basis size")
        total = linalg.zeros(self.dim_ambient, self.dim_ambient)
        for c, form in zip(coeffs, self.basis):
            if c != 0:
                total = linalg.mat_add(total, linalg.mat_scale(Fraction(c), [list(r) for r in form.gram]))
        return TwoForm(linalg.freeze(total))

    def span_matrix(self) -> list[list[Fraction]]:
        return [list(f.upper_coeffs()) for f in self.basis]


def _wedge_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _coefficient_row(n: int, u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
    """Row of w-coefficients representing omega(u, v) as a linear form."""
    return [u[i] * v[j] - u[j] * v[i] for (i, j) in _wedge_pairs(n)]


def _closedness_rows(g: LieAlgebra) -> list[list[Fraction]]:
    n = g.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = (linalg.unit_vec(n, t) for t in (i, j, k))
                row = [ZERO] * (n * (n - 1) // 2)
                for sign, u, v in (
                    (Fraction(-1), g.bracket_basis(i, j), ek),
                    (Fraction(1), g.bracket_basis(i, k), ej),
                    (Fraction(-1), g.bracket_basis(j, k), ei),
                ):
                    for col, val in enumerate(_coefficient_row(n, u, v)):
                        row[col] += sign * val
                rows.append(row)
    return rows


def _compatibility_rows(j: AlmostComplexStructure) -> list[list[Fraction]]:
    n = j.dim
    rows = []
    for a in range(n):
        ja = j.apply(linalg.unit_vec(n, a))
        for b in range(a + 1, n):
            jb = j.apply(linalg.unit_vec(n, b))
            lhs = _coefficient_row(n, ja, jb)
            rhs = _coefficient_row(n, linalg.unit_vec(n, a), linalg.unit_vec(n, b))
            rows.append([x - y for x, y in zip(lhs, rhs)])
    return rows


def compatible_forms(g: LieAlgebra, j: AlmostComplexStructure) -> FormSpace:
    """J-compatible 2-forms with no closedness constraint (helper used by the
    Kahler-equivalence tests)."""
    n = g.dim
    kernel = linalg.nullspace(_compatibility_rows(j), n_cols=n * (n - 1) // 2)
    return FormSpace(n, tuple(two_form_from_upper(n, v) for v in kernel))


def compatible_closed_forms(g: LieAlgebra, j: AlmostComplexStructure) -> FormSpace:
    """Exact nullspace of {closedness on all triples} + {compatibility on all
    pairs}; basis in reduced echelon form over the wedge coordinates."""
    if not is_integrable(g, j):
        raise NotIntegrable("J has nonvanishing Nijenhuis tensor")
    n = g.dim
    rows = _closedness_rows(g) + _compatibility_rows(j)
    kernel = linalg.nullspace(rows, n_cols=n * (n - 1) // 2)
    space = FormSpace(n, tuple(two_form_from_upper(n, v) for v in kernel))
    for form in space.basis:
        assert is_closed(g, form) and is_compatible(form, j)
    return space


# -- nondegenerate sampling -------------------------------------------------------

def _pfaffian_quadratic(space: FormSpace) -> list[list[Fraction]]:
    """Dimension-4 only: the symmetric matrix Q with Pf(sum t_a B_a) = t Q t,
    obtained by polarizing Pf = w12 w34 - w13 w24 + w14 w23."""
    def pf_bilinear(a: TwoForm, b: TwoForm) -> Fraction:
        g1, g2 = a.gram, b.gram
        total = (
            g1[0][1] * g2[2][3]
            - g1[0][2] * g2[1][3]
            + g1[0][3] * g2[1][2]
            + g2[0][1] * g1[2][3]
            - g2[0][2] * g1[1][3]
            + g2[0][3] * g1[1][2]
        )
        return total / 2

    d = space.dimension
    return [[pf_bilinear(space.basis[a], space.basis[b]) for b in range(d)] for a in range(d)]


def pfaffian_identically_zero(space: FormSpace) -> bool:
    """Whether the Pfaffian vanishes on the whole linear family, decided
    symbolically in dim 4 and by a grid certificate otherwise."""
    if space.dimension == 0:
        return True
    if space.dim_ambient % 2 == 1:
        return True
    if space.dim_ambient == 4:
        q = _pfaffian_quadratic(space)
        return linalg.mat_is_zero(q)
    half = space.dim_ambient // 2
    # Pf has total degree <= half, hence degree <= half in each of the d
    # coordinates: vanishing on {0..half}^d forces the zero polynomial.
    for point in itertools.product(range(half + 1), repeat=space.dimension):
        if any(point):
            form = space.element([Fraction(c) for c in point])
            if pfaffian([list(r) for r in form.gram]) != 0:
                return False
    return True


def _sample_points(d: int, half: int) -> Iterable[tuple[int, ...]]:
    """Deterministic search order: single basis elements first, then the
    lexicographic integer box {0..half}^d (which is exhaustive for a
    polynomial of degree half per coordinate)."""
    for a in range(d):
        point = [0] * d
        point[a] = 1
        yield tuple(point)
    yield from itertools.product(range(half + 1), repeat=d)


def sample_nondegenerate(space: FormSpace) -> TwoForm | None:
    """First nondegenerate element in the deterministic search order, or
    None when the Pfaffian vanishes identically on the span."""
    if space.dimension == 0 or space.dim_ambient % 2 == 1:
        return None
    if pfaffian_identically_zero(space):
        return None
    half = space.dim_ambient // 2
    for point in _sample_points(space.dimension, half):
        if not any(point):
            continue
        form = space.element([Fraction(c) for c in point])
        if is_nondegenerate(form):
            return form
    return None


# -- batch driver ------------------------------------------------------------------

@dataclass(frozen=True)
class ScanRow:
    j_id: str
    integrable: bool
    dimension: int | None
    basis: tuple[TwoForm, ...]
    sample: TwoForm | None

    @property
    def has_kahler_pair(self) -> bool:
        return self.integrable and self.sample is not None


def kahler_scan(
    g: LieAlgebra, structures: Sequence[tuple[str, AlmostComplexStructure]]
) -> list[ScanRow]:
    """Aggregate compatible_closed_forms + sample_nondegenerate per J into a
    table row; non-integrable J's are reported rather than skipped."""
    rows = []
    for j_id, j in structures:
        if not is_integrable(g, j):
            rows.append(ScanRow(j_id, False, None, (), None))
            continue
        space = compatible_closed_forms(g, j)
        rows.append(
            ScanRow(j_id, True, space.dimension, space.basis, sample_nondegenerate(space))
        )
    return rows

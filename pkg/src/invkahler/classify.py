"""Verdict layer: flat / Ricci-flat / Einstein, isotropic and lagrangian
subspaces, totally geodesic subspaces, Walker planes and the passage from a
Walker Kahler metric to a hypersymplectic product structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .complex_structure import AlmostComplexStructure
from .errors import (
    ClosednessFailed,
    DegenerateMetric,
    NotDirectSum,
    PreconditionFailed,
)
from .exterior import TwoForm, is_closed, is_nondegenerate
from .lie import (
    LieAlgebra,
    Subspace,
    apply_matrix_subspace,
    bracket,
    derived_algebra,
    is_abelian_subspace,
    is_ideal,
    is_subalgebra,
    span_of_indices,
    subspace,
    subspace_intersection,
    subspace_sum,
)
from .metric import Connection, CurvatureTensor, MetricTensor, SymmetricBilinear, levi_civita

ZERO = Fraction(0)


# -- curvature verdicts --------------------------------------------------------

def is_flat(r: CurvatureTensor) -> bool:
    return r.is_zero()


@dataclass(frozen=True)
class EinsteinVerdict:
    kind: str  # "einstein" | "ricci_flat" | "not_einstein"
    nu: Fraction | None = None
    witness: tuple[int, int] | None = None

    @property
    def is_einstein(self) -> bool:
        return self.kind == "einstein"

    @property
    def is_ricci_flat(self) -> bool:
        return self.kind == "ricci_flat"


def einstein_verdict(ric: SymmetricBilinear, m: MetricTensor) -> EinsteinVerdict:
    """ric = nu * g decided exactly; nu is read off the first nonzero metric
    entry and then verified globally, so degenerate interactions cannot fake
    a positive."""
    if not m.is_nondegenerate():
        raise DegenerateMetric("Einstein verdict needs a nondegenerate metric")
    if ric.is_zero():
        return EinsteinVerdict("ricci_flat")
    n = m.dim
    nu = None
    for i in range(n):
        for j in range(n):
            if m.matrix[i][j] != 0:
                nu = ric.matrix[i][j] / m.matrix[i][j]
                break
        if nu is not None:
            break
    for i in range(n):
        for j in range(n):
            if ric.matrix[i][j] != nu * m.matrix[i][j]:
                return EinsteinVerdict("not_einstein", witness=(i + 1, j + 1))
    return EinsteinVerdict("einstein", nu=nu)


# -- isotropy ------------------------------------------------------------------

def is_isotropic(omega: TwoForm, s: Subspace) -> bool:
    return all(
        omega.value(u, v) == 0
        for a, u in enumerate(s.basis)
        for v in s.basis[a + 1 :]
    )


def is_lagrangian(omega: TwoForm, s: Subspace) -> bool:
    return (
        is_nondegenerate(omega)
        and is_isotropic(omega, s)
        and 2 * s.dim == s.ambient_dim
    )


def orthogonal_complement(m: MetricTensor, s: Subspace) -> Subspace:
    """W-perp with respect to the (possibly indefinite) metric."""
    rows = [list(linalg.mat_vec(m.matrix, v)) for v in s.basis]
    if not rows:
        return subspace(m.dim, [linalg.unit_vec(m.dim, i) for i in range(m.dim)])
    return subspace(m.dim, linalg.nullspace(rows, n_cols=m.dim))


def lagrangian_metric_check(m: MetricTensor, j: AlmostComplexStructure, s: Subspace) -> bool:
    """Metric-side lagrangian test: J(h) equals the g-orthogonal of h."""
    return apply_matrix_subspace(j.matrix, s) == orthogonal_complement(m, s)


@dataclass(frozen=True)
class IsotropicIdealReport:
    h_abelian: bool
    jh_subalgebra: bool
    jh_isotropic: bool
    intersection_ideal: bool

    @property
    def all_clauses(self) -> bool:
        return self.h_abelian and self.jh_subalgebra and self.jh_isotropic and self.intersection_ideal


def lemma_tota_check(
    g: LieAlgebra, j: AlmostComplexStructure, omega: TwoForm, h: Subspace
) -> IsotropicIdealReport:
    """For an omega-isotropic ideal h: h abelian, Jh an isotropic subalgebra,
    and h ^ Jh an ideal of h + Jh; returns per-clause booleans."""
    if not is_ideal(g, h):
        raise PreconditionFailed("h is not an ideal")
    if not is_isotropic(omega, h):
        raise PreconditionFailed("h is not omega-isotropic")
    jh = apply_matrix_subspace(j.matrix, h)
    both = subspace_sum(h, jh)
    meet = subspace_intersection(h, jh)
    meet_is_ideal = all(
        meet.contains(bracket(g, u, v)) for u in both.basis for v in meet.basis
    )
    return IsotropicIdealReport(
        h_abelian=is_abelian_subspace(g, h),
        jh_subalgebra=is_subalgebra(g, jh),
        jh_isotropic=is_isotropic(omega, jh),
        intersection_ideal=meet_is_ideal,
    )


# -- totally geodesic / Walker ---------------------------------------------------

def is_totally_geodesic(conn: Connection, s: Subspace) -> bool:
    return all(s.contains(conn.nabla(x, y)) for x in s.basis for y in s.basis)


@dataclass(frozen=True)
class WalkerWitness:
    subspace: Subspace
    null: bool
    parallel: bool

    @property
    def is_walker(self) -> bool:
        return self.null and self.parallel


def is_walker(m: MetricTensor, conn: Connection, w: Subspace) -> WalkerWitness:
    """g(W, W) = 0 and nabla_y W inside W for every y, both exact."""
    null = all(m.value(u, v) == 0 for u in w.basis for v in w.basis)
    n = conn.dim
    parallel = all(
        w.contains(conn.nabla(linalg.unit_vec(n, i), v))
        for i in range(n)
        for v in w.basis
    )
    return WalkerWitness(w, null, parallel)


def default_walker_candidates(
    g: LieAlgebra, j: AlmostComplexStructure | None = None
) -> list[Subspace]:
    """All spans of basis-vector pairs, the derived algebra and its J-image."""
    n = g.dim
    candidates = [
        span_of_indices(n, (a + 1, b + 1)) for a in range(n) for b in range(a + 1, n)
    ]
    der = derived_algebra(g)
    if der.dim > 0:
        candidates.append(der)
        if j is not None:
            candidates.append(apply_matrix_subspace(j.matrix, der))
    seen: list[Subspace] = []
    for c in candidates:
        if c not in seen:
            seen.append(c)
    return seen


def walker_search(
    m: MetricTensor,
    conn: Connection,
    candidates: Sequence[Subspace],
) -> list[WalkerWitness]:
    found = []
    for c in candidates:
        witness = is_walker(m, conn, c)
        if witness.is_walker and c.dim > 0:
            found.append(witness)
    return found


# -- hypersymplectic --------------------------------------------------------------

@dataclass(frozen=True)
class ProductStructureReport:
    e_matrix: tuple[tuple[Fraction, ...], ...]
    e_squared_identity: bool
    anticommutes_with_j: bool
    anti_isometry: bool
    closed_forms: tuple[str, ...] = field(default_factory=tuple)

    @property
    def all_checks(self) -> bool:
        return self.e_squared_identity and self.anticommutes_with_j and self.anti_isometry


def walker_to_hypersymplectic(
    g: LieAlgebra,
    j: AlmostComplexStructure,
    m: MetricTensor,
    w: Subspace,
) -> ProductStructureReport:
    """Build E = +id on W, -id on JW and verify the hypersymplectic axioms:
    E^2 = I, EJ = -JE, g(Ex, Ey) = -g(x, y) and closedness of the three
    associated 2-forms g(J.,.), g(E.,.), g(JE.,.)."""
    conn = levi_civita(g, m)
    witness = is_walker(m, conn, w)
    if not witness.null:
        raise PreconditionFailed("W is not null for g")
    if not witness.parallel:
        raise PreconditionFailed("W is not parallel")
    jw = apply_matrix_subspace(j.matrix, w)
    combined = list(w.basis) + list(jw.basis)
    if linalg.rank(combined) != g.dim:
        raise NotDirectSum("ambient space is not W + JW as a direct sum")
    n = g.dim
    p = linalg.transpose(combined)  # columns are W basis then JW basis
    d = [[Fraction(1 if c < w.dim else -1) if r == c else ZERO for c in range(n)] for r in range(n)]
    e = linalg.mat_mul(p, linalg.mat_mul(d, linalg.inverse(p)))

    e_sq = linalg.mat_eq(linalg.mat_mul(e, e), linalg.identity(n))
    jm = [list(r) for r in j.matrix]
    anti_j = linalg.mat_eq(
        linalg.mat_mul(e, jm), linalg.mat_scale(Fraction(-1), linalg.mat_mul(jm, e))
    )
    gm = [list(r) for r in m.matrix]
    anti_iso = linalg.mat_eq(
        linalg.mat_mul(linalg.transpose(e), linalg.mat_mul(gm, e)),
        linalg.mat_scale(Fraction(-1), gm),
    )

    closed_ids = []
    for form_id, op in (("g(J.,.)", jm), ("g(E.,.)", e), ("g(JE.,.)", linalg.mat_mul(jm, e))):
        gram = linalg.mat_mul(linalg.transpose(op), gm)
        # a 2-form needs antisymmetry first
        if not linalg.mat_eq(gram, linalg.mat_scale(Fraction(-1), linalg.transpose(gram))):
            raise ClosednessFailed(form_id + " (not antisymmetric)")
        form = TwoForm(linalg.freeze(gram))
        if not is_closed(g, form):
            raise ClosednessFailed(form_id)
        closed_ids.append(form_id)

    return ProductStructureReport(
        e_matrix=linalg.freeze(e),
        e_squared_identity=e_sq,
        anticommutes_with_j=anti_j,
        anti_isometry=anti_iso,
        closed_forms=tuple(closed_ids),
    )

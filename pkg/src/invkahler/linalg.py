"""Exact rational linear algebra on small dense matrices.

Matrices are lists (or tuples) of rows of Fractions.  Everything here is
fraction-free in spirit but plain Fraction arithmetic in practice: the
matrices in this problem domain are tiny (dimension <= 8), so clarity wins
over pivoting tricks.  Polynomial helpers (characteristic polynomial,
Sturm chains) live here too since they share the scalar type.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix

ZERO = Fraction(0)
ONE = Fraction(1)

Vec = tuple[Fraction, ...]
Mat = list[list[Fraction]]


# -- construction -----------------------------------------------------------

def vec(values: Iterable) -> Vec:
    return tuple(Fraction(v) for v in values)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(ONE if k == i else ZERO for k in range(n))


def mat(rows: Sequence[Sequence]) -> Mat:
    return [[Fraction(v) for v in row] for row in rows]


def identity(n: int) -> Mat:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Mat:
    return [[ZERO] * c for _ in range(r)]


def freeze(rows: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in rows)


# -- vector arithmetic -------------------------------------------------------

def vec_add(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c: Fraction, x: Sequence[Fraction]) -> Vec:
    return tuple(c * a for a in x)


def vec_is_zero(x: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in x)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    return sum((a * b for a, b in zip(x, y)), ZERO)


# -- matrix arithmetic -------------------------------------------------------

def mat_vec(m: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vec:
    if m and len(m[0]) != len(x):
        raise DimensionMismatch(f"matrix has {len(m[0])} columns, vector length {len(x)}")
    return tuple(dot(row, x) for row in m)


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Mat:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch(f"{len(a[0])} columns vs {len(b)} rows")
    bt = list(zip(*b))
    return [[dot(row, col) for col in bt] for row in a]


def mat_add(a, b) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: Fraction, a) -> Mat:
    return [[c * x for x in row] for row in a]


def transpose(a: Sequence[Sequence[Fraction]]) -> Mat:
    return [list(col) for col in zip(*a)]


def mat_eq(a, b) -> bool:
    return [list(r) for r in a] == [list(r) for r in b]


def mat_is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def column(a: Sequence[Sequence[Fraction]], j: int) -> Vec:
    return tuple(row[j] for row in a)


# -- elimination -------------------------------------------------------------

def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[Mat, list[int]]:
    """Reduced row-echelon form, returning (matrix, pivot columns)."""
    m = [list(row) for row in rows]
    if not m:
        return [], []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def row_space_basis(rows) -> list[Vec]:
    """Nonzero rows of the rref: canonical basis of the row span."""
    red, pivots = rref(rows)
    return [tuple(red[i]) for i in range(len(pivots))]


def nullspace(rows: Sequence[Sequence[Fraction]], n_cols: int | None = None) -> list[Vec]:
    """Kernel basis of the linear map given by `rows`, rref-normalized."""
    m = [list(row) for row in rows]
    if n_cols is None:
        if not m:
            raise DimensionMismatch("cannot infer column count of an empty system")
        n_cols = len(m[0])
    if not m:
        return [unit_vec(n_cols, i) for i in range(n_cols)]
    red, pivots = rref(m)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for c in free:
        v = [ZERO] * n_cols
        v[c] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r][c]
        basis.append(tuple(v))
    # rref-normalize the kernel basis itself so the output is canonical
    return row_space_basis(basis)


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [list(row) for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("determinant of a non-square matrix")
    result = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        inv = ONE / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def inverse(rows: Sequence[Sequence[Fraction]]) -> Mat:
    n = len(rows)
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in red]


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vec:
    """Unique solution of a square system; raises SingularMatrix otherwise."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrix("system is singular")
    return tuple(red[i][n] for i in range(n))


# -- symmetric congruence / signature ----------------------------------------

def congruence_signature(sym: Sequence[Sequence[Fraction]]) -> tuple[int, int]:
    """Signature (p, q) of a symmetric matrix by exact congruence
    diagonalization (Sylvester's law); p+q < n for degenerate input."""
    m = [list(row) for row in sym]
    n = len(m)
    p = q = 0
    k = 0
    while k < n:
        if m[k][k] == 0:
            j = next((i for i in range(k + 1, n) if m[i][i] != 0), None)
            if j is not None:
                # symmetric swap of rows/cols k and j
                m[k], m[j] = m[j], m[k]
                for row in m:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((i for i in range(k + 1, n) if m[k][i] != 0), None)
                if j is None:
                    k += 1
                    continue
                # zero diagonal block: add row/col j into k, making 2*m[k][j]
                for c in range(n):
                    m[k][c] += m[j][c]
                for r in range(n):
                    m[r][k] += m[r][j]
        d = m[k][k]
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / d
                for c in range(n):
                    m[i][c] -= f * m[k][c]
                for r in range(n):
                    m[r][i] -= f * m[r][k]
        if d > 0:
            p += 1
        else:
            q += 1
        k += 1
    return p, q


# -- polynomials (coefficient lists, low degree first) -----------------------

def poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_deriv(p: Sequence[Fraction]) -> list[Fraction]:
    return [Fraction(k) * c for k, c in enumerate(p) if k > 0]


def poly_neg(p: Sequence[Fraction]) -> list[Fraction]:
    return [-c for c in p]


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    b = poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    deg_b = len(b) - 1
    lead = b[-1]
    quot = [ZERO] * max(0, len(a) - deg_b)
    rem = poly_trim(a)
    while len(rem) - 1 >= deg_b and rem:
        shift = len(rem) - 1 - deg_b
        f = rem[-1] / lead
        quot[shift] = f
        for k in range(len(b)):
            rem[shift + k] -= f * b[k]
        rem = poly_trim(rem)
    return poly_trim(quot), rem


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a = poly_trim(list(a))
    b = poly_trim(list(b))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def charpoly(m: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Characteristic polynomial det(xI - M) via Faddeev-LeVerrier,
    returned low degree first (monic)."""
    n = len(m)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = identity(n)
    for k in range(1, n + 1):
        mk = mat_mul(m, mk) if k > 1 else [list(r) for r in m]
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs[n - k] = ck
        for i in range(n):
            mk[i][i] += ck
    return coeffs


def _sign_changes(values: list[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_distinct_real_roots(p: Sequence[Fraction]) -> int:
    """Number of distinct real roots via the Sturm chain over (-inf, inf)."""
    p = poly_trim(list(p))
    if len(p) <= 1:
        return 0
    chain = [p, poly_deriv(p)]
    while poly_trim(list(chain[-1])):
        _, r = poly_divmod(chain[-2], chain[-1])
        r = poly_trim(r)
        if not r:
            break
        chain.append(poly_neg(r))
    at_pos = []
    at_neg = []
    for q in chain:
        q = poly_trim(list(q))
        if not q:
            continue
        lead = q[-1]
        deg = len(q) - 1
        at_pos.append(lead)
        at_neg.append(lead if deg % 2 == 0 else -lead)
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def all_roots_real(p: Sequence[Fraction]) -> bool:
    """True iff every complex root of p is real (multiplicities ignored)."""
    p = poly_trim(list(p))
    if len(p) <= 1:
        return True
    g = poly_gcd(p, poly_deriv(p))
    squarefree, _ = poly_divmod(p, g)
    squarefree = poly_trim(squarefree)
    deg = len(squarefree) - 1
    return sturm_distinct_real_roots(squarefree) == deg

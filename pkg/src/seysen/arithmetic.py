"""Exact rational and float linear algebra used by the rest of the package.

Matrices are plain tuples of row tuples.  In exact mode the entries are
:class:`fractions.Fraction` (always in lowest terms with a positive
denominator); in float mode they are Python floats or a float ``ndarray``.
Everything here is pure: inputs are never mutated.
"""

from fractions import Fraction
from math import lcm

import numpy as np

from .errors import NoConvergence, NotSymmetric, SingularMatrix

DEFAULT_EIG_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 100


def as_fraction_matrix(rows):
    """Return ``rows`` as an immutable matrix of Fractions."""
    mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if not mat or not mat[0]:
        raise ValueError("matrix must have at least one row and one column")
    if any(len(row) != len(mat[0]) for row in mat):
        raise ValueError("ragged matrix")
    return mat


def identity(n):
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a))


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def trace(a):
    return sum(a[i][i] for i in range(len(a)))


def _integer_rows(a):
    """Scale each row of a rational matrix to integers.

    Returns ``(rows, scales)`` with ``rows[i] = scales[i] * a[i]``.
    """
    rows, scales = [], []
    for row in a:
        c = lcm(*(Fraction(x).denominator for x in row))
        rows.append([int(Fraction(x) * c) for x in row])
        scales.append(c)
    return rows, scales


def _pivot_row(a, k):
    best = max(range(k, len(a)), key=lambda r: abs(a[r][k]))
    return best if a[best][k] != 0 else None


def _bareiss(a):
    """Determinant of a square integer matrix (list of lists, mutated)."""
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        p = _pivot_row(a, k)
        if p is None:
            return 0
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk, row_k = a[k][k], a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det_exact(m):
    """Exact determinant of a square rational matrix.

    Denominators are cleared row by row, then fraction-free (Bareiss)
    elimination with largest-magnitude pivots runs on pure integers.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("det_exact needs a square matrix")
    rows, scales = _integer_rows(m)
    d = _bareiss(rows)
    denom = 1
    for c in scales:
        denom *= c
    return Fraction(d, denom)


def _adjugate_solve(a):
    """Fraction-free Gauss-Jordan on an integer matrix.

    Returns ``(d, X)`` where ``d`` is +-det(a) and ``X`` is the integer matrix
    with ``a^{-1} = X / d``.
    """
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    width = 2 * n
    prev = 1
    for k in range(n):
        p = _pivot_row(aug, k)
        if p is None:
            raise SingularMatrix("matrix is singular")
        if p != k:
            aug[k], aug[p] = aug[p], aug[k]
        row_k = aug[k]
        akk = row_k[k]
        for i in range(n):
            if i == k:
                continue
            row_i = aug[i]
            aik = row_i[k]
            for j in range(width):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
        prev = akk
    return prev, [row[n:] for row in aug]


def inverse_exact(m):
    """Exact inverse of a square rational matrix; raises SingularMatrix."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse_exact needs a square matrix")
    rows, scales = _integer_rows(m)
    # rows = diag(scales) * m, hence m^{-1} = rows^{-1} * diag(scales)
    d, x = _adjugate_solve(rows)
    return tuple(
        tuple(Fraction(x[i][j] * scales[j], d) for j in range(n)) for i in range(n)
    )


def frobenius_sq(m):
    """Sum of squared entries; exact for rational input."""
    return sum(x * x for row in m for x in row)


def sym_eigh(s, tol=DEFAULT_EIG_TOL, max_sweeps=DEFAULT_MAX_SWEEPS):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi.

    Returns ``(eigenvalues, vectors)`` sorted by descending eigenvalue, with
    eigenvectors in the columns of ``vectors``.  A rotation is skipped once
    ``|a_pq| <= eps * sqrt(|a_pp a_qq|)``, which keeps small eigenvalues of
    well-scaled positive definite matrices accurate to high relative
    precision.
    """
    a = np.array(s, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("sym_eigh needs a square matrix")
    n = a.shape[0]
    scale = max(1.0, float(np.abs(a).max()))
    if not np.allclose(a, a.T, rtol=0.0, atol=tol * scale):
        raise NotSymmetric("matrix is not symmetric within tol")
    a = (a + a.T) / 2
    v = np.eye(n)
    eps = np.finfo(float).eps

    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= eps * np.sqrt(abs(a[p, p] * a[q, q])) or apq == 0.0:
                    continue
                rotated = True
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s_ = t * c
                app, aqq = a[p, p], a[q, q]
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s_ * col_q
                a[:, q] = s_ * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s_ * vq
                v[:, q] = s_ * vp + c * vq
        if not rotated:
            break
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")

    lam = np.diag(a).copy()
    s_orig = np.array(s, dtype=float)
    residual = np.abs(s_orig @ v - v * lam).sum(axis=0)
    if residual.max() > tol * scale or abs(lam.sum() - np.trace(s_orig)) > n * tol * scale:
        raise NoConvergence("Jacobi residual above tolerance")
    order = np.argsort(lam)[::-1]
    return lam[order], v[:, order]


def sym_eigenvalues(s, tol=DEFAULT_EIG_TOL, max_sweeps=DEFAULT_MAX_SWEEPS):
    """Eigenvalues of a symmetric matrix, in descending order."""
    return tuple(float(x) for x in sym_eigh(s, tol, max_sweeps)[0])


def gram_eigenvalues(v, tol=DEFAULT_EIG_TOL, max_sweeps=DEFAULT_MAX_SWEEPS):
    """Eigenvalues of ``V V^t`` by one-sided (Hestenes) Jacobi on the rows of ``V``.

    Pairs of rows are rotated until mutually orthogonal; the squared row
    norms are then the eigenvalues.  ``V V^t`` is never formed, so small
    eigenvalues keep about ``eps * sqrt(cond)`` relative accuracy instead
    of ``eps * cond``.  Returned in descending order.
    """
    v = np.array(v, dtype=float)
    if v.ndim != 2 or v.shape[0] > v.shape[1]:
        raise ValueError("gram_eigenvalues needs an n x m matrix with n <= m")
    n = v.shape[0]
    eps = np.finfo(float).eps
    total = float(np.sum(v * v))

    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                app, aqq, apq = v[p] @ v[p], v[q] @ v[q], v[p] @ v[q]
                if abs(apq) <= eps * np.sqrt(app * aqq) or apq == 0.0:
                    continue
                rotated = True
                theta = (aqq - app) / (2.0 * apq)
                t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s_ = t * c
                vp = v[p].copy()
                v[p] = c * vp - s_ * v[q]
                v[q] = s_ * vp + c * v[q]
        if not rotated:
            break
    else:
        raise NoConvergence(f"one-sided Jacobi did not converge in {max_sweeps} sweeps")

    lam = np.sum(v * v, axis=1)
    if abs(lam.sum() - total) > n * tol * max(1.0, total):
        raise NoConvergence("one-sided Jacobi lost the trace")
    return tuple(float(x) for x in np.sort(lam)[::-1])

"""Seysen measure, orthogonality defect and related quality numbers.

The Seysen measure ``S(B) = sum_i |b_i|^2 |b*_i|^2`` is evaluated along five
routes that are algebraically identical:

* ``seysen_dual``      -- straight from the dual basis;
* ``seysen_trace_form`` -- ``tr(D^2 M^{-1})`` with ``M = BB^t``, i.e. the squared
  Frobenius norm of ``V^{-1}`` where ``B = DV`` and ``D`` holds the row norms;
* ``seysen_cofactor``  -- diagonal cofactors of ``M`` as sublattice volumes;
* ``seysen_angles``    -- ``sum_i 1 / sin^2(alpha_i)``;
* ``seysen_eigen``     -- ``sum_i 1 / lambda_i`` over the eigenvalues of the
  correlation matrix ``D^{-1} M D^{-1}`` (float only; computed from the
  unit rows ``V`` by one-sided Jacobi so that skewed bases stay accurate).

The first four are exact for rational bases and must agree to the last bit.
"""

from dataclasses import dataclass

import numpy as np

from . import arithmetic
from .errors import RouteMismatch
from .lattice import dual_basis, sin_alpha_sq, sublattice_volume_sq

DEFAULT_TOL = 1e-9


def seysen_dual(b):
    dual = dual_basis(b)
    return sum(nb * sum(x * x for x in d) for nb, d in zip(b.norms_sq, dual.rows))


def seysen_trace_form(b):
    ginv = b.gram_inverse
    return sum(nb * ginv[i][i] for i, nb in enumerate(b.norms_sq))


def seysen_cofactor(b):
    vol = b.volume_sq
    return sum(nb * sublattice_volume_sq(b, i) / vol for i, nb in enumerate(b.norms_sq))


def seysen_angles(b):
    return sum(1 / sin_alpha_sq(b, i) for i in range(b.n))


def correlation_matrix(b):
    """``U = D^{-1} B B^t D^{-1}``: the cosines between basis vectors."""
    g = np.array([[float(x) for x in r] for r in b.gram])
    d = np.sqrt(np.diag(g))
    u = g / np.outer(d, d)
    np.fill_diagonal(u, 1.0)
    return u


def normalized_rows(b):
    """``V = D^{-1} B``: the basis rows scaled to unit length, so ``U = V V^t``."""
    a = b.array()
    return a / np.sqrt(np.array([float(x) for x in b.norms_sq]))[:, None]


def correlation_eigenvalues(b, tol=arithmetic.DEFAULT_EIG_TOL):
    """Eigenvalues of :func:`correlation_matrix`, taken from ``V`` directly."""
    return arithmetic.gram_eigenvalues(normalized_rows(b), tol)


def seysen_eigen(b, tol=arithmetic.DEFAULT_EIG_TOL):
    return float(sum(1.0 / lam for lam in correlation_eigenvalues(b, tol)))


def orthogonality_defect(b):
    prod = 1
    for nb in b.norms_sq:
        prod *= nb
    return 1 - b.volume_sq / prod


def kappa_sq(b, rtol=DEFAULT_TOL, check=True):
    """Squared Frobenius condition number of ``V = D^{-1} B``.

    Equal to ``n * S(B)``; computed exactly from the trace form.  With
    ``check`` the value is also computed directly from ``V`` in floats and the
    two must agree within ``rtol``.
    """
    value = b.n * seysen_trace_form(b)
    if check:
        direct = kappa_sq_direct(b)
        if abs(direct - float(value)) > rtol * float(value):
            raise RouteMismatch(f"kappa^2 cross-check failed: {direct!r} vs {float(value)!r}")
    return value


def kappa_sq_direct(b):
    """``|V|^2 |V^+|^2`` in floats (``V^+`` is the inverse when ``n = m``)."""
    a = b.array()
    v = a / np.linalg.norm(a, axis=1)[:, None]
    vinv = np.linalg.inv(v) if b.n == b.m else np.linalg.pinv(v)
    return float(np.sum(v * v) * np.sum(vinv * vinv))


@dataclass(frozen=True)
class MetricReport:
    n: int
    m: int
    mode: str
    seysen_dual: object
    seysen_trace: object
    seysen_cofactor: object
    seysen_angles: object
    seysen_eigen: float
    od: object
    volume_sq: object
    kappa_sq: object
    eigenvalues: tuple
    max_route_discrepancy: float

    @property
    def seysen(self):
        return self.seysen_dual


def _rel(a, b):
    a, b = float(a), float(b)
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def metric_report(b, tol=DEFAULT_TOL):
    """Every measure of ``b`` in one record.

    Exact routes are compared with ``==`` (float bases: within ``tol``
    relative) and a disagreement raises :class:`RouteMismatch`.
    ``max_route_discrepancy`` is the largest pairwise relative difference
    across all five routes, which in exact mode comes from the eigen route.
    """
    exact_routes = {
        "dual": seysen_dual(b),
        "trace": seysen_trace_form(b),
        "cofactor": seysen_cofactor(b),
        "angles": seysen_angles(b),
    }
    values = list(exact_routes.values())
    if b.exact:
        if any(v != values[0] for v in values):
            raise RouteMismatch(f"exact Seysen routes disagree: {exact_routes}")
    elif any(_rel(v, values[0]) > tol for v in values):
        raise RouteMismatch(f"float Seysen routes disagree beyond tol: {exact_routes}")

    eig = correlation_eigenvalues(b)
    s_eig = float(sum(1.0 / lam for lam in eig))
    all_routes = values + [s_eig]
    disc = max(_rel(x, y) for x in all_routes for y in all_routes)
    return MetricReport(
        n=b.n,
        m=b.m,
        mode=b.mode,
        seysen_dual=exact_routes["dual"],
        seysen_trace=exact_routes["trace"],
        seysen_cofactor=exact_routes["cofactor"],
        seysen_angles=exact_routes["angles"],
        seysen_eigen=s_eig,
        od=orthogonality_defect(b),
        volume_sq=b.volume_sq,
        kappa_sq=kappa_sq(b, rtol=max(tol, 1e-9)),
        eigenvalues=eig,
        max_route_discrepancy=disc,
    )


def seysen(b):
    """Default evaluation of the Seysen measure (trace form)."""
    return seysen_trace_form(b)

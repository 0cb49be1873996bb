"""Greedy pairwise Seysen reduction, exact LLL, and unimodular scrambling.

A Seysen pair step replaces ``b_i`` by ``b_i + lam b_j``; keeping the dual in
sync then only needs ``b*_j -> b*_j - lam b*_i``.  Only ``|b_i|^2`` and
``|b*_j|^2`` change, so the change in ``S`` is a quadratic in ``lam`` whose
integer minimiser has a closed form.  Both Gram matrices are updated in
``O(n)`` per step.
"""

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, InvariantBroken, SweepLimitReached
from .lattice import Basis, dual_basis
from .rng import Xoshiro256

ROW_MAJOR = "row_major"
BEST_FIRST = "best_first"


@dataclass(frozen=True)
class ReductionConfig:
    max_sweeps: int = 1000
    tol: float = 1e-12
    pair_order: str = ROW_MAJOR
    check_duality: bool = True

    def __post_init__(self):
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be >= 1")
        if self.pair_order not in (ROW_MAJOR, BEST_FIRST):
            raise ValueError(f"unknown pair_order {self.pair_order!r}")


@dataclass(frozen=True)
class Step:
    i: int
    j: int
    lam: int
    delta_s: object
    s_after: object


@dataclass
class ReductionTrace:
    steps: list = field(default_factory=list)
    sweeps: int = 0
    s_initial: object = None
    s_final: object = None
    transform: tuple = None
    hit_sweep_limit: bool = False

    @property
    def s_values(self):
        return [self.s_initial] + [st.s_after for st in self.steps]


class ReductionState:
    """Basis, dual, both Gram matrices and the accumulated transform.

    Mutated in place by :func:`apply_step`; use :meth:`copy` to branch.
    """

    def __init__(self, basis):
        self.mode = basis.mode
        self.exact = basis.exact
        n = basis.n
        self.u = [[int(i == j) for j in range(n)] for i in range(n)]
        self.trace = []
        self._load(basis)

    def _load(self, basis):
        self.b = [list(r) for r in basis.rows]
        self.bstar = [list(r) for r in dual_basis(basis).rows]
        self.g = [list(r) for r in basis.gram]
        self.gstar = [list(r) for r in basis.gram_inverse]
        self.s = sum(self.g[i][i] * self.gstar[i][i] for i in range(len(self.b)))

    def resync(self):
        """Recompute dual, Gram matrices and ``S`` from the current basis.

        Only needed in float mode, where the incremental updates drift.
        """
        self._load(self.basis())

    @property
    def n(self):
        return len(self.b)

    def copy(self):
        new = object.__new__(ReductionState)
        new.mode, new.exact = self.mode, self.exact
        for name in ("b", "bstar", "g", "gstar", "u"):
            setattr(new, name, [list(r) for r in getattr(self, name)])
        new.s = self.s
        new.trace = list(self.trace)
        return new

    def basis(self):
        return Basis(tuple(tuple(r) for r in self.b), self.mode)

    def transform(self):
        return tuple(tuple(r) for r in self.u)


def _round_half_to_zero(x):
    fl = math.floor(x)
    frac = x - fl
    if frac > 0.5:
        return fl + 1
    if frac < 0.5:
        return fl
    return fl if x > 0 else fl + 1


def optimal_pair_step(state, i, j):
    """Best integer ``lam`` for ``b_i <- b_i + lam b_j`` and the change in ``S``."""
    if i == j:
        raise ValueError("i and j must differ")
    gij, gjj = state.g[i][j], state.g[j][j]
    hij, hii = state.gstar[i][j], state.gstar[i][i]
    lam = _round_half_to_zero((hij / hii - gij / gjj) / 2)
    return lam, pair_delta(state, i, j, lam)


def pair_delta(state, i, j, lam):
    gij, gjj = state.g[i][j], state.g[j][j]
    hij, hii = state.gstar[i][j], state.gstar[i][i]
    return hii * (2 * lam * gij + lam * lam * gjj) + gjj * (-2 * lam * hij + lam * lam * hii)


def _check_duality(state, i, j, tol):
    bi, bsj = state.b[i], state.bstar[j]
    for k in range(state.n):
        want = 1 if k == i else 0
        got_row = sum(x * y for x, y in zip(bi, state.bstar[k]))
        want_col = 1 if k == j else 0
        got_col = sum(x * y for x, y in zip(state.b[k], bsj))
        if state.exact:
            ok = got_row == want and got_col == want_col
        else:
            ok = abs(got_row - want) <= tol and abs(got_col - want_col) <= tol
        if not ok:
            raise InvariantBroken(f"duality lost after step on ({i}, {j})")


def apply_step(state, i, j, lam, check=True, tol=1e-8):
    """Apply ``b_i <- b_i + lam b_j`` (and the dual compensation) in place."""
    if i == j:
        raise ValueError("i and j must differ")
    lam = int(lam)
    delta = pair_delta(state, i, j, lam)
    n = state.n

    state.b[i] = [x + lam * y for x, y in zip(state.b[i], state.b[j])]
    state.u[i] = [x + lam * y for x, y in zip(state.u[i], state.u[j])]
    state.bstar[j] = [x - lam * y for x, y in zip(state.bstar[j], state.bstar[i])]

    g = state.g
    row = [g[i][k] + lam * g[j][k] for k in range(n)]
    row[i] = g[i][i] + 2 * lam * g[i][j] + lam * lam * g[j][j]
    g[i] = row
    for k in range(n):
        g[k][i] = row[k]

    h = state.gstar
    row = [h[j][k] - lam * h[i][k] for k in range(n)]
    row[j] = h[j][j] - 2 * lam * h[i][j] + lam * lam * h[i][i]
    h[j] = row
    for k in range(n):
        h[k][j] = row[k]

    state.s = state.s + delta
    state.trace.append(Step(i, j, lam, delta, state.s))
    if check:
        _check_duality(state, i, j, tol)
    return state


def _accept(state, delta, cfg):
    if state.exact:
        return delta < 0
    return delta <= -cfg.tol * state.s


def _sweep_row_major(state, cfg):
    applied = 0
    n = state.n
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lam, delta = optimal_pair_step(state, i, j)
            if lam != 0 and _accept(state, delta, cfg):
                apply_step(state, i, j, lam, check=cfg.check_duality)
                applied += 1
    return applied


def _sweep_best_first(state, cfg):
    best = None
    n = state.n
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lam, delta = optimal_pair_step(state, i, j)
            if lam != 0 and (best is None or delta < best[3]):
                best = (i, j, lam, delta)
    if best is None or not _accept(state, best[3], cfg):
        return 0
    apply_step(state, *best[:3], check=cfg.check_duality)
    return 1


def seysen_reduce(b, cfg=None):
    """Greedy descent on ``S`` by single integer row operations.

    Returns ``(reduced_basis, U, trace)`` with ``reduced = U . b``.  The
    output is pair-locally Seysen reduced: no single ``b_i <- b_i + lam b_j``
    lowers ``S``.  Whether this is the global minimum is not certified.
    """
    cfg = cfg or ReductionConfig()
    state = ReductionState(b)
    trace = ReductionTrace(s_initial=state.s)
    sweep = _sweep_row_major if cfg.pair_order == ROW_MAJOR else _sweep_best_first
    while True:
        if trace.sweeps >= cfg.max_sweeps:
            trace.hit_sweep_limit = True
            warnings.warn(
                f"Seysen reduction stopped after {cfg.max_sweeps} sweeps", SweepLimitReached, stacklevel=2
            )
            break
        trace.sweeps += 1
        applied = sweep(state, cfg)
        if not state.exact:
            state.resync()
        if applied == 0:
            break
    trace.steps = state.trace
    trace.s_final = state.s
    trace.transform = state.transform()
    return state.basis(), trace.transform, trace


def is_pair_locally_reduced(b):
    state = ReductionState(b)
    for i in range(b.n):
        for j in range(b.n):
            if i != j:
                lam, delta = optimal_pair_step(state, i, j)
                if lam != 0 and delta < 0:
                    return False
    return True


# --- LLL -------------------------------------------------------------------


def _dot(x, y):
    return sum(a * c for a, c in zip(x, y))


def gram_schmidt(rows):
    """Exact Gram-Schmidt: returns ``(mu, bstar_norms_sq)``."""
    rows = [[Fraction(x) for x in r] for r in rows]
    n = len(rows)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar, norms = [], []
    for k in range(n):
        v = [Fraction(x) for x in rows[k]]
        for j in range(k):
            mu[k][j] = _dot(rows[k], bstar[j]) / norms[j]
            v = [a - mu[k][j] * c for a, c in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(_dot(v, v))
    return mu, norms


def _check_delta(delta):
    if not 0.25 < delta <= 1:
        raise DomainError(f"LLL delta must lie in (1/4, 1], got {delta}")


def is_lll_reduced(b, delta=0.75):
    _check_delta(delta)
    d = Fraction(delta)
    mu, norms = gram_schmidt(b.rows)
    n = b.n
    if any(abs(mu[k][j]) > Fraction(1, 2) for k in range(n) for j in range(k)):
        return False
    return all(norms[k] >= (d - mu[k][k - 1] ** 2) * norms[k - 1] for k in range(1, n))


def lll_reduce(b, delta=0.75):
    """LLL reduction with exact rational Gram-Schmidt updates.

    Returns ``(reduced_basis, U)`` with ``reduced = U . b``.  Float bases are
    reduced exactly on the binary values of their entries.
    """
    _check_delta(delta)
    d = Fraction(delta)
    half = Fraction(1, 2)
    rows = [[Fraction(x) for x in r] for r in b.rows]
    n = len(rows)
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [None] * n
    norms = [None] * n

    def gso_row(k):
        v = list(rows[k])
        for j in range(k):
            mu[k][j] = _dot(rows[k], bstar[j]) / norms[j]
            v = [a - mu[k][j] * c for a, c in zip(v, bstar[j])]
        bstar[k] = v
        norms[k] = _dot(v, v)

    def size_reduce(k, l):
        if abs(mu[k][l]) > half:
            q = round(mu[k][l])
            rows[k] = [a - q * c for a, c in zip(rows[k], rows[l])]
            u[k] = [a - q * c for a, c in zip(u[k], u[l])]
            mu[k][l] -= q
            for i in range(l):
                mu[k][i] -= q * mu[l][i]

    def swap(k, kmax):
        rows[k], rows[k - 1] = rows[k - 1], rows[k]
        u[k], u[k - 1] = u[k - 1], u[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        big = norms[k] + m * m * norms[k - 1]
        mu[k][k - 1] = m * norms[k - 1] / big
        old = bstar[k - 1]
        bstar[k - 1] = [a + m * c for a, c in zip(bstar[k], old)]
        bstar[k] = [-mu[k][k - 1] * a + (norms[k] / big) * c for a, c in zip(bstar[k], old)]
        norms[k] = norms[k - 1] * norms[k] / big
        norms[k - 1] = big
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    gso_row(0)
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            gso_row(k)
        size_reduce(k, k - 1)
        if norms[k] < (d - mu[k][k - 1] ** 2) * norms[k - 1]:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return b.with_rows(rows), tuple(tuple(r) for r in u)


# --- test-ensemble scrambling -------------------------------------------------


def random_unimodular(n, seed, steps):
    """Product of ``steps`` seeded elementary integer row operations.

    Each step is, with probabilities 1/2, 1/4, 1/4: ``r_i += c r_j`` with
    ``c`` in {+-1, +-2, +-3}; a swap of two rows; a sign flip of one row.
    """
    rng = Xoshiro256(seed)
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.below(4) if n > 1 else 3
        if op <= 1:
            i = rng.below(n)
            j = rng.below(n - 1)
            j += j >= i
            c = rng.integer(1, 3) * rng.choice((-1, 1))
            u[i] = [a + c * x for a, x in zip(u[i], u[j])]
        elif op == 2:
            i = rng.below(n)
            j = rng.below(n - 1)
            j += j >= i
            u[i], u[j] = u[j], u[i]
        else:
            i = rng.below(n)
            u[i] = [-a for a in u[i]]
    return tuple(tuple(r) for r in u)


def apply_transform(u, b):
    rows = [[sum(c * r[k] for c, r in zip(urow, b.rows)) for k in range(b.m)] for urow in u]
    return b.with_rows(rows)


def unimodular_scramble(b, seed, steps):
    """``U . b`` for a seeded random unimodular ``U`` (same lattice)."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    return apply_transform(random_unimodular(b.n, seed, steps), b)

"""Lattice bases, Gram matrices, volumes, dual bases and angles.

A :class:`Basis` holds ``n`` linearly independent row vectors of length
``m >= n``.  Exact bases store Fractions; float bases store Python floats.
Volumes are always reported squared so that exact mode never needs a root.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import arithmetic
from .errors import RankDeficient
from .rng import Xoshiro256

EXACT = "exact"
FLOAT = "float"


@dataclass(frozen=True, eq=False)
class Basis:
    """Row basis of a lattice.

    Build with :meth:`from_rows`; the constructor only validates shape and
    rank, it does not convert entries.
    """

    rows: tuple
    mode: str = EXACT

    def __post_init__(self):
        if self.mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not self.rows or not self.rows[0]:
            raise ValueError("basis must have at least one row and one column")
        if any(len(r) != len(self.rows[0]) for r in self.rows):
            raise ValueError("ragged basis")
        if self.n > self.m:
            raise RankDeficient(f"{self.n} rows cannot be independent in dimension {self.m}")
        # forces the rank check
        self.volume_sq

    @classmethod
    def from_rows(cls, rows, mode=EXACT):
        if mode == EXACT:
            return cls(arithmetic.as_fraction_matrix(rows), EXACT)
        return cls(tuple(tuple(float(x) for x in row) for row in rows), FLOAT)

    @property
    def n(self):
        return len(self.rows)

    @property
    def m(self):
        return len(self.rows[0])

    @property
    def exact(self):
        return self.mode == EXACT

    def __eq__(self, other):
        if not isinstance(other, Basis):
            return NotImplemented
        return self.mode == other.mode and self.rows == other.rows

    def __hash__(self):
        return hash((self.mode, self.rows))

    def __repr__(self):
        return f"Basis({[[str(x) for x in r] for r in self.rows]}, mode={self.mode!r})"

    def to_float(self):
        return Basis.from_rows(self.rows, FLOAT) if self.exact else self

    def array(self):
        """The basis as a float ndarray (lossy in exact mode)."""
        return np.array([[float(x) for x in r] for r in self.rows])

    def with_rows(self, rows):
        return Basis.from_rows(rows, self.mode)

    @cached_property
    def gram(self):
        if not self.exact:
            a = np.array(self.rows)
            return tuple(tuple(float(x) for x in r) for r in a @ a.T)
        ints, scales = arithmetic._integer_rows(self.rows)
        n = self.n
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                g = Fraction(sum(x * y for x, y in zip(ints[i], ints[j])), scales[i] * scales[j])
                out[i][j] = out[j][i] = g
        return tuple(tuple(r) for r in out)

    @cached_property
    def norms_sq(self):
        return tuple(self.gram[i][i] for i in range(self.n))

    @cached_property
    def volume_sq(self):
        g = self.gram
        if self.exact:
            d = arithmetic.det_exact(g)
            if d <= 0:
                raise RankDeficient("rows are linearly dependent: det(BB^t) = 0", d)
            return d
        d = float(np.linalg.det(np.array(g)))
        if not d > 0 or np.linalg.matrix_rank(np.array(self.rows)) < self.n:
            raise RankDeficient(f"rows are numerically dependent: det(BB^t) = {d!r}", d)
        return d

    @cached_property
    def sublattice_volumes_sq(self):
        """``Vol^2`` of the lattice spanned by all rows but ``b_i``, for each ``i``.

        This is the determinant of ``M`` with row and column ``i`` removed.
        """
        if self.n == 1:
            return (Fraction(1) if self.exact else 1.0,)
        out = []
        for i in range(self.n):
            minor = tuple(tuple(x for c, x in enumerate(r) if c != i) for k, r in enumerate(self.gram) if k != i)
            if self.exact:
                d = arithmetic.det_exact(minor)
            else:
                d = float(np.linalg.det(np.array(minor)))
            out.append(d)
        return tuple(out)

    @cached_property
    def gram_inverse(self):
        if self.exact:
            return arithmetic.inverse_exact(self.gram)
        return tuple(tuple(float(x) for x in r) for r in np.linalg.inv(np.array(self.gram)))


@dataclass(frozen=True, eq=False)
class DualBasis:
    rows: tuple
    source: Basis

    def pairing(self):
        """The matrix ``B . Bstar^t``; the identity for a true dual."""
        return arithmetic.matmul(self.source.rows, arithmetic.transpose(self.rows))

    def as_basis(self):
        return Basis(self.rows, self.source.mode)


@dataclass(frozen=True)
class AngleProfile:
    """Per-vector angles: ``sin^2`` of the angle between ``b_i`` and the span
    of the other vectors, and ``cos^2`` of the angle between ``b_i`` and
    ``b*_i``.  The two sequences are equal."""

    sin_alpha_sq: tuple
    cos_beta_sq: tuple


def gram(b):
    return b.gram


def volume_sq(b):
    return b.volume_sq


def dual_basis(b):
    """Reciprocal basis ``(BB^t)^{-1} B``, i.e. the transposed pseudo-inverse."""
    ginv = b.gram_inverse
    if b.exact:
        rows = arithmetic.matmul(ginv, b.rows)
    else:
        rows = tuple(tuple(float(x) for x in r) for r in np.array(ginv) @ np.array(b.rows))
    return DualBasis(rows, b)


def sublattice_volume_sq(b, i):
    """Squared volume of the lattice spanned by every basis vector but ``b_i``.

    For ``n = 1`` this is the empty lattice, whose volume is taken as 1.
    """
    if not 0 <= i < b.n:
        raise IndexError(i)
    return b.sublattice_volumes_sq[i]


def sin_alpha_sq(b, i):
    """``sin^2`` of the angle between ``b_i`` and the sublattice ``L_i``."""
    sub = sublattice_volume_sq(b, i)
    return b.volume_sq / (b.norms_sq[i] * sub)


def angle_profile(b):
    dual = dual_basis(b)
    sin_sq = tuple(sin_alpha_sq(b, i) for i in range(b.n))
    cos_sq = []
    for bi, di, nb in zip(b.rows, dual.rows, b.norms_sq):
        ip = sum(x * y for x, y in zip(bi, di))
        cos_sq.append(ip * ip / (nb * sum(x * x for x in di)))
    return AngleProfile(sin_sq, tuple(cos_sq))


def embed_isometric(b, k, seed):
    """Append ``k`` zero columns, then apply a seeded signed column permutation.

    The result spans a lattice isometric to the input and has the same Gram
    matrix, exactly.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    rng = Xoshiro256(seed)
    zero = Fraction(0) if b.exact else 0.0
    m = b.m + k
    perm = list(range(m))
    rng.shuffle(perm)
    signs = [rng.choice((-1, 1)) for _ in range(m)]
    padded = [tuple(r) + (zero,) * k for r in b.rows]
    rows = tuple(tuple(signs[c] * r[perm[c]] for c in range(m)) for r in padded)
    return Basis(rows, b.mode)

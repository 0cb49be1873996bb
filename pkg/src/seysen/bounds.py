"""Inequalities relating the Seysen measure to lengths, volume and defect.

Every ``check_*`` function returns a :class:`BoundVerdict` for ``lhs <= rhs``.
Bounds with integer exponents are compared in squared (or ``2n``-th power)
form with exact rationals.  Where ``e`` enters, it is replaced by the upper
bound :data:`E_UP`, which only makes the right-hand side larger, so
floating-point rounding can never produce a false violation.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .measures import orthogonality_defect, seysen_trace_form

E_UP = 2.718281828459046
_E_UP = Fraction(E_UP)
assert E_UP > math.e


@dataclass(frozen=True)
class BoundVerdict:
    name: str
    lhs: object
    rhs: object
    satisfied: bool
    margin: float

    def __bool__(self):
        return self.satisfied


def _verdict(name, lhs, rhs):
    return BoundVerdict(name, lhs, rhs, lhs <= rhs, float(rhs - lhs))


def _float_verdict(name, lhs, rhs):
    """Verdict for a float right-hand side, rounded up one ulp first."""
    rhs_up = math.nextafter(rhs, math.inf)
    return BoundVerdict(name, lhs, rhs, lhs <= rhs_up, rhs - lhs)


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def check_zhang_sandwich(b, s=None):
    """``n <= S(B) <= n / (1 - od(B))``.

    The upper side is compared as ``S(B) * (1 - od) <= n`` with the ratio
    reported, since ``1 - od`` is exact and positive.
    """
    s = seysen_trace_form(b) if s is None else s
    n = b.n
    one_minus_od = 1 - orthogonality_defect(b)
    return (
        _verdict("zhang_lower", Fraction(n), s),
        _verdict("zhang_upper", s, n / one_minus_od),
    )


def check_zhang_od(b, s=None):
    """``od(B) <= 1 - 1 / (S - n + 1)^(n-1)``."""
    s = seysen_trace_form(b) if s is None else s
    n = b.n
    return _verdict("zhang_od", orthogonality_defect(b), 1 - 1 / (s - n + 1) ** (n - 1))


def check_product_bound_zhang(b, s=None):
    """``prod |b_i|^2 <= (S - n + 1)^(n-1) Vol^2``."""
    s = seysen_trace_form(b) if s is None else s
    n = b.n
    return _verdict("zhang_product", _prod(b.norms_sq), (s - n + 1) ** (n - 1) * b.volume_sq)


def check_min_bound(b, s=None):
    """``min |b_i|^(2n) <= (S - n + 1)^(n-1) Vol^2``."""
    s = seysen_trace_form(b) if s is None else s
    n = b.n
    return _verdict("zhang_min", min(b.norms_sq) ** n, (s - n + 1) ** (n - 1) * b.volume_sq)


def check_amgm_product(b, s=None):
    """``prod |b_i|^2 <= (S / n)^n Vol^2``."""
    s = seysen_trace_form(b) if s is None else s
    n = b.n
    return _verdict("amgm_product", _prod(b.norms_sq), (s / n) ** n * b.volume_sq)


def check_new_product_bound(b, s=None):
    """``prod |b_i|^2 <= e ((S + 1) / n)^(n-1) Vol^2``."""
    s = seysen_trace_form(b) if s is None else s
    n = b.n
    return _verdict("new_product", _prod(b.norms_sq), _E_UP * ((s + 1) / n) ** (n - 1) * b.volume_sq)


def check_new_od_bound(b, s=None):
    """``od(B) <= 1 - (1/e) (n / (S + 1))^(n-1)``."""
    s = seysen_trace_form(b) if s is None else s
    n = b.n
    return _verdict("new_od", orthogonality_defect(b), 1 - (n / (s + 1)) ** (n - 1) / _E_UP)


def min_length_ratio(b):
    """``min |b_i| / Vol^(1/n)`` as a float (Hermite-type ratio)."""
    n = b.n
    return math.exp(0.5 * math.log(min(b.norms_sq)) - 0.5 * math.log(b.volume_sq) / n)


def reduced_min_constant(n, kind, delta=0.75):
    """Constant ``C`` in ``min |b_i| <= C Vol^(1/n)`` for reduced bases."""
    if kind == "kz_minkowski":
        return math.sqrt(n)
    if kind == "lll":
        if not 0.25 < delta <= 1:
            raise DomainError(f"LLL delta must lie in (1/4, 1], got {delta}")
        return (1 / (delta - 0.25)) ** ((n - 1) / 4)
    raise ValueError(f"unknown reduction kind {kind!r}")


def check_reduced_min_bound(b, kind="lll", delta=0.75):
    """``min |b_i| <= C Vol^(1/n)`` with ``C`` from :func:`reduced_min_constant`.

    Reported as ``lhs = min |b_i| / Vol^(1/n)`` against ``rhs = C``.  For
    ``kz_minkowski`` the comparison is exact (``min^(2n) <= n^n Vol^2``).
    """
    n = b.n
    c = reduced_min_constant(n, kind, delta)
    ratio = min_length_ratio(b)
    if kind == "kz_minkowski":
        ok = min(b.norms_sq) ** n <= n**n * b.volume_sq
        return BoundVerdict("kz_minkowski_min", ratio, c, ok, c - ratio)
    return _float_verdict("lll_min", ratio, c)


def seysen_existence_bound(n):
    """``exp((2/ln 2 + 1)(ln n)^2 + 4 ln n)``: a value of ``S`` attained by
    some basis of every ``n``-dimensional lattice."""
    if n < 1:
        raise DomainError("n must be >= 1")
    ln = math.log(n)
    return math.exp((2 / math.log(2) + 1) * ln * ln + 4 * ln)


def seysen_min_growth(n):
    """Leading growth ``exp((1/ln 2 + 1/2)(ln n)^2)`` of the length ratio of
    a minimal-``S`` basis.  The lower-order term is unknown, so this is only
    used as a reporting yardstick."""
    ln = math.log(n)
    return math.exp((1 / math.log(2) + 0.5) * ln * ln)


@dataclass(frozen=True)
class MeanTriple:
    """Arithmetic, geometric and harmonic means with weight ``alpha = 1/n``."""

    a: float
    g: float
    h: float
    alpha: float

    @classmethod
    def from_values(cls, xs):
        xs = [float(x) for x in xs]
        if len(xs) < 2 or min(xs) <= 0:
            raise DomainError("need at least two positive values")
        n = len(xs)
        a = math.fsum(xs) / n
        g = math.exp(math.fsum(math.log(x) for x in xs) / n)
        h = n / math.fsum(1 / x for x in xs)
        return cls(a, g, h, 1 / n)


def hga_upper(t):
    """Upper bound on the geometric mean given ``a``, ``h`` and ``alpha``.

    Collapses to ``sqrt(a h)`` at ``alpha = 1/2`` and to ``h`` when ``a = h``.
    """
    a, h, alpha = t.a, t.h, t.alpha
    if not 0 < alpha <= 0.5:
        raise DomainError(f"alpha must lie in (0, 1/2], got {alpha}")
    if h > a:
        # harmonic <= arithmetic always; tolerate a few ulps of rounding
        if h - a > 1e-12 * a:
            raise DomainError(f"harmonic mean {h} exceeds arithmetic mean {a}")
        h = a
    k = 1 - 2 * alpha
    root = math.sqrt((a - h) * (a - h * k * k))
    # (a - hk - root) / (2 alpha), rationalised: the direct form cancels badly
    left = 2 * alpha * a * h / (a - h * k + root)
    right = (a + h * k + root) / (2 * (1 - alpha))
    return left**alpha * right ** (1 - alpha)


def check_all(b, s=None):
    """Every bound that holds for an arbitrary basis."""
    s = seysen_trace_form(b) if s is None else s
    lower, upper = check_zhang_sandwich(b, s)
    return [
        lower,
        upper,
        check_zhang_od(b, s),
        check_product_bound_zhang(b, s),
        check_min_bound(b, s),
        check_amgm_product(b, s),
        check_new_product_bound(b, s),
        check_new_od_bound(b, s),
    ]

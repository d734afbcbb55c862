"""Generators for the classical polynomial and number families.

Every family is produced from its exponential generating function through
the series engine: expand the kernel to sufficient order, multiply by
e^{x t} over the polynomial coefficient ring, and read off n! times the
t^n coefficient.  Closed-form summation formulas for the same families
live only in the identity suite, as an independent second computation
path.

Kernels (all with constant term 1, so every family is monic):

* Frobenius-Euler, order r:      ((1 - lambda)/(e^t - lambda))^r
* higher-order Bernoulli:        (t/(e^t - 1))^s
* higher-order Euler:            (2/(e^t + 1))^s
* poly-Bernoulli, index k:       Li_k(1 - e^{-t})/(1 - e^{-t})
* mixed type (r, k):             the product of the first and the last

Negative orders r and indices k <= 0 are fully supported: negative powers
go through the reciprocal series (invertible, constant term 1), and the
polylogarithm is the finite truncated sum, a formal series for any
integer index.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .polynomials import Polynomial, X
from .series import TruncatedSeries, exp_series

__all__ = [
    "FamilyParams",
    "truncation_slack",
    "default_order",
    "require_not_one",
    "stirling2",
    "stirling2_triangle",
    "exp_minus_one",
    "one_minus_exp_neg",
    "polylog_series",
    "frobenius_euler_kernel",
    "bernoulli_kernel",
    "euler_kernel",
    "poly_bernoulli_kernel",
    "mixed_kernel",
    "polys_from_kernel",
    "numbers_from_kernel",
    "bernoulli_poly",
    "bernoulli_polys",
    "bernoulli_numbers",
    "euler_poly",
    "euler_polys",
    "frobenius_euler_poly",
    "frobenius_euler_polys",
    "frobenius_euler_numbers",
    "poly_bernoulli_poly",
    "poly_bernoulli_polys",
    "poly_bernoulli_numbers",
    "mixed_type_poly",
    "mixed_type_polys",
    "mixed_type_numbers",
]

SLACK_ENV = "UMBRALCALC_SLACK"


def truncation_slack() -> int:
    """Extra truncation orders beyond the requested degree (default 2);
    overridable through the UMBRALCALC_SLACK environment variable."""
    raw = os.environ.get(SLACK_ENV)
    if raw is None:
        return 2
    try:
        slack = int(raw)
    except ValueError as exc:
        raise ValueError(f"{SLACK_ENV} must be an integer, got {raw!r}") from exc
    if slack < 1:
        raise ValueError(f"{SLACK_ENV} must be >= 1, got {slack}")
    return slack


def default_order(n: int) -> int:
    """Series truncation order used when generating degree-n families."""
    return n + truncation_slack()


def require_not_one(value, name: str) -> Fraction:
    value = Fraction(value)
    if value == 1:
        raise ValueError(f"{name} must differ from 1")
    return value


def _require_degree(n: int) -> None:
    if n < 0:
        raise ValueError("degree must be nonnegative")


def _require_order_param(s: int) -> None:
    if s < 0:
        raise ValueError("order parameter must be nonnegative")


@dataclass(frozen=True)
class FamilyParams:
    """Parameter bundle for family generation; validates the constraints
    shared by every family (n, s >= 0; lambda, mu != 1)."""

    n: int
    r: int | None = None
    k: int | None = None
    s: int | None = None
    lam: Fraction | None = None
    mu: Fraction | None = None

    def __post_init__(self):
        _require_degree(self.n)
        if self.s is not None:
            _require_order_param(self.s)
        if self.lam is not None:
            object.__setattr__(self, "lam", require_not_one(self.lam, "lambda"))
        if self.mu is not None:
            object.__setattr__(self, "mu", require_not_one(self.mu, "mu"))


# ---------------------------------------------------------------------------
# Stirling numbers of the second kind

def stirling2_triangle(n_max: int) -> list:
    """Rows 0..n_max of the second-kind Stirling triangle, computed from
    the recurrence S2(n, m) = m*S2(n-1, m) + S2(n-1, m-1)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for m in range(1, n + 1):
            row[m] = (m * prev[m] if m < n else 0) + prev[m - 1]
        rows.append(row)
    return rows


def stirling2(n: int, m: int) -> int:
    """S2(n, m): partitions of an n-set into m nonempty blocks."""
    if n < 0 or m < 0:
        raise ValueError("Stirling numbers need nonnegative arguments")
    if m > n:
        return 0
    return stirling2_triangle(n)[n][m]


# ---------------------------------------------------------------------------
# Kernel series

def exp_minus_one(order: int) -> TruncatedSeries:
    """e^t - 1."""
    return TruncatedSeries(
        [Fraction(0)] + [Fraction(1, factorial(j)) for j in range(1, order + 1)], order
    )


def one_minus_exp_neg(order: int) -> TruncatedSeries:
    """1 - e^{-t}."""
    return TruncatedSeries(
        [Fraction(0)]
        + [Fraction((-1) ** (j + 1), factorial(j)) for j in range(1, order + 1)],
        order,
    )


def polylog_series(index: int, order: int) -> TruncatedSeries:
    """Li_index(1 - e^{-t}) truncated at the given order.

    Since 1 - e^{-t} has valuation 1, partial sums beyond j = order
    contribute nothing below t^{order+1}, so the sum is finite.
    """
    acc = TruncatedSeries.constant(0, order)
    power = None
    y = one_minus_exp_neg(order)
    for j in range(1, order + 1):
        power = y if power is None else power * y
        acc = acc + power * Fraction(j) ** (-index)
    return acc


def frobenius_euler_kernel(r: int, lam, order: int) -> TruncatedSeries:
    """((1 - lambda)/(e^t - lambda))^r for any integer r."""
    lam = require_not_one(lam, "lambda")
    base = (exp_series(1, order) - lam) * (Fraction(1) / (1 - lam))
    return base ** (-r)


def bernoulli_kernel(s: int, order: int) -> TruncatedSeries:
    """(t/(e^t - 1))^s."""
    _require_order_param(s)
    return exp_minus_one(order + 1).divide_by_t() ** (-s)


def euler_kernel(s: int, order: int) -> TruncatedSeries:
    """(2/(e^t + 1))^s."""
    _require_order_param(s)
    base = (exp_series(1, order) + 1) * Fraction(1, 2)
    return base ** (-s)


def poly_bernoulli_kernel(index: int, order: int) -> TruncatedSeries:
    """Li_index(1 - e^{-t})/(1 - e^{-t})."""
    numerator = polylog_series(index, order + 1).divide_by_t()
    denominator = one_minus_exp_neg(order + 1).divide_by_t()
    return numerator * denominator.invert()


def mixed_kernel(r: int, index: int, lam, order: int) -> TruncatedSeries:
    """Product kernel of the mixed-type family."""
    return frobenius_euler_kernel(r, lam, order) * poly_bernoulli_kernel(index, order)


# ---------------------------------------------------------------------------
# Families from kernels

def polys_from_kernel(kernel: TruncatedSeries, n_max: int) -> list:
    """Polynomials p_n(x) = n! [t^n] kernel * e^{x t} for n = 0..n_max."""
    if n_max > kernel.order:
        raise ValueError("kernel truncation order is too small")
    product = kernel * exp_series(X, kernel.order)
    polys = []
    for n in range(n_max + 1):
        c = product.coefficient(n)
        poly = c if isinstance(c, Polynomial) else Polynomial([c])
        polys.append(factorial(n) * poly)
    return polys


def numbers_from_kernel(kernel: TruncatedSeries, n_max: int) -> list:
    """Numbers n! [t^n] kernel for n = 0..n_max."""
    if n_max > kernel.order:
        raise ValueError("kernel truncation order is too small")
    return [factorial(n) * kernel.coefficient(n) for n in range(n_max + 1)]


def bernoulli_polys(n_max: int, s: int) -> list:
    """Higher-order Bernoulli polynomials of order s, degrees 0..n_max."""
    _require_degree(n_max)
    return polys_from_kernel(bernoulli_kernel(s, default_order(n_max)), n_max)


def bernoulli_poly(n: int, s: int) -> Polynomial:
    return bernoulli_polys(n, s)[n]


def bernoulli_numbers(n_max: int) -> list:
    """Ordinary Bernoulli numbers B_0..B_{n_max} (B_1 = -1/2)."""
    _require_degree(n_max)
    return numbers_from_kernel(bernoulli_kernel(1, default_order(n_max)), n_max)


def euler_polys(n_max: int, s: int) -> list:
    """Higher-order Euler polynomials of order s, degrees 0..n_max."""
    _require_degree(n_max)
    return polys_from_kernel(euler_kernel(s, default_order(n_max)), n_max)


def euler_poly(n: int, s: int) -> Polynomial:
    return euler_polys(n, s)[n]


def frobenius_euler_polys(n_max: int, r: int, lam) -> list:
    """Frobenius-Euler polynomials of order r at parameter lambda."""
    _require_degree(n_max)
    return polys_from_kernel(frobenius_euler_kernel(r, lam, default_order(n_max)), n_max)


def frobenius_euler_poly(n: int, r: int, lam) -> Polynomial:
    return frobenius_euler_polys(n, r, lam)[n]


def frobenius_euler_numbers(n_max: int, r: int, lam) -> list:
    _require_degree(n_max)
    return numbers_from_kernel(frobenius_euler_kernel(r, lam, default_order(n_max)), n_max)


def poly_bernoulli_polys(n_max: int, k: int) -> list:
    """Poly-Bernoulli polynomials of index k, degrees 0..n_max."""
    _require_degree(n_max)
    return polys_from_kernel(poly_bernoulli_kernel(k, default_order(n_max)), n_max)


def poly_bernoulli_poly(n: int, k: int) -> Polynomial:
    return poly_bernoulli_polys(n, k)[n]


def poly_bernoulli_numbers(n_max: int, k: int) -> list:
    _require_degree(n_max)
    return numbers_from_kernel(poly_bernoulli_kernel(k, default_order(n_max)), n_max)


def mixed_type_polys(n_max: int, r: int, k: int, lam) -> list:
    """Mixed-type Frobenius-Euler/poly-Bernoulli polynomials, degrees
    0..n_max, for integer orders r, k and rational lambda != 1."""
    _require_degree(n_max)
    return polys_from_kernel(mixed_kernel(r, k, lam, default_order(n_max)), n_max)


def mixed_type_poly(n: int, r: int, k: int, lam) -> Polynomial:
    return mixed_type_polys(n, r, k, lam)[n]


def mixed_type_numbers(n_max: int, r: int, k: int, lam) -> list:
    _require_degree(n_max)
    return numbers_from_kernel(mixed_kernel(r, k, lam, default_order(n_max)), n_max)

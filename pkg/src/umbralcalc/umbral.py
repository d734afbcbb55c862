"""The umbral pairing, operator action, Sheffer sequences, and connection
constants.

A truncated series f(t) = sum a_k t^k doubles as a linear functional on
polynomials through <t^k | x^n> = n! delta_{n,k}; there is no separate
functional object, so the pairing is plain coefficient contraction.
Acting with f(t) as an operator sends p(x) to sum a_k p^(k)(x).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from time import perf_counter

from .polynomials import Polynomial, X
from .series import TruncatedSeries, exp_series

__all__ = [
    "VerificationReport",
    "ShefferPair",
    "pairing",
    "apply_operator",
    "sheffer_polynomials",
    "sheffer_orthogonality_check",
    "appell_next",
    "connection_constants",
    "expand_in_basis",
]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exact identity sweep.

    ``status`` is "pass" exactly when no counterexample was found;
    ``counterexample`` holds the first failing parameter tuple together
    with both computed sides.  ``counterexamples`` carries every recorded
    failure when a sweep ran in collect-all mode.
    """

    identity: str
    grid: dict
    status: str
    counterexample: dict | None
    elapsed_ms: float
    checked: int = 0
    counterexamples: tuple = field(default=())

    def __post_init__(self):
        if (self.status == "pass") != (self.counterexample is None):
            raise ValueError("status must be 'pass' exactly when there is no counterexample")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_jsonable(self) -> dict:
        out = {
            "id": self.identity,
            "grid": self.grid,
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if len(self.counterexamples) > 1:
            out["counterexamples"] = list(self.counterexamples)
        out["checked"] = self.checked
        out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _report(identity, grid, failures, checked, started, collect_all=False) -> VerificationReport:
    elapsed = (perf_counter() - started) * 1000.0
    return VerificationReport(
        identity=identity,
        grid=grid,
        status="pass" if not failures else "fail",
        counterexample=failures[0] if failures else None,
        elapsed_ms=elapsed,
        checked=checked,
        counterexamples=tuple(failures) if collect_all else tuple(failures[:1]),
    )


def pairing(functional: TruncatedSeries, p: Polynomial) -> Fraction:
    """<f(t) | p(x)> = sum_k a_k k! [x^k] p, for rational-coefficient f."""
    if functional.order < p.degree:
        raise ValueError(
            f"functional truncated at order {functional.order} cannot pair "
            f"with a degree-{p.degree} polynomial"
        )
    acc = Fraction(0)
    for k, c in enumerate(p.coefficients):
        if c:
            a = functional.coefficient(k)
            if not isinstance(a, (int, Fraction)):
                raise TypeError("pairing requires a rational-coefficient series")
            if a:
                acc += a * factorial(k) * c
    return acc


def apply_operator(op: TruncatedSeries, p: Polynomial) -> Polynomial:
    """f(t) acting on p(x): sum_k a_k p^(k)(x)."""
    if op.order < p.degree:
        raise ValueError(
            f"operator truncated at order {op.order} cannot act on a "
            f"degree-{p.degree} polynomial"
        )
    acc = Polynomial()
    d = p
    for k in range(p.degree + 1):
        a = op.coefficient(k)
        if a:
            acc = acc + a * d
        d = d.derivative()
    return acc


@dataclass(frozen=True)
class ShefferPair:
    """The pair (g, f) with o(g) = 0 and o(f) = 1 defining a Sheffer
    sequence."""

    g: TruncatedSeries
    f: TruncatedSeries

    def __post_init__(self):
        if not self.g.is_invertible:
            raise ValueError("g must be an invertible series (nonzero constant term)")
        if not self.f.is_delta:
            raise ValueError("f must be a delta series (valuation exactly 1)")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    @property
    def is_appell(self) -> bool:
        return self.f._is_identity()


def sheffer_polynomials(pair: ShefferPair, n_max: int) -> list:
    """S_0..S_{n_max} for the pair (g, f): n! times the t^n coefficient of
    g(fbar(t))^{-1} e^{x fbar(t)}, computed over the polynomial ring."""
    if pair.order < n_max + 1:
        raise ValueError("pair truncation order must be at least n_max + 1")
    fbar = pair.f.comp_inverse()
    prefactor = pair.g.compose(fbar).invert()
    generating = prefactor * exp_series(X, prefactor.order).compose(fbar)
    polys = []
    for n in range(n_max + 1):
        c = generating.coefficient(n)
        poly = c if isinstance(c, Polynomial) else Polynomial([c])
        polys.append(factorial(n) * poly)
    return polys


def sheffer_orthogonality_check(pair: ShefferPair, polys, n_max: int) -> VerificationReport:
    """Check the biorthogonality <g f^k | S_n> = n! delta_{n,k} for all
    0 <= n, k <= n_max."""
    started = perf_counter()
    if pair.order < n_max:
        raise ValueError("pair truncation order must be at least n_max")
    failures = []
    checked = 0
    fk = pair.g
    for k in range(n_max + 1):
        for n in range(n_max + 1):
            value = pairing(fk, polys[n])
            expected = Fraction(factorial(n)) if n == k else Fraction(0)
            checked += 1
            if value != expected:
                failures.append(
                    {"n": n, "k": k, "lhs": str(value), "rhs": str(expected)}
                )
                break
        if failures:
            break
        if k < n_max:
            fk = fk * pair.f
    return _report(
        "sheffer-orthogonality", {"n_max": n_max}, failures, checked, started
    )


def appell_next(pair: ShefferPair, s_n: Polynomial) -> Polynomial:
    """One step of the Appell recurrence S_{n+1} = (x - g'(t)/g(t)) S_n;
    only valid when f = t."""
    if not pair.is_appell:
        raise ValueError("the recurrence requires f = t")
    if pair.g.order < s_n.degree + 1:
        raise ValueError("pair truncation order must exceed deg S_n")
    ratio = pair.g.derivative() * pair.g.invert()
    return X * s_n - apply_operator(ratio, s_n)


def connection_constants(source: ShefferPair, target: ShefferPair, n_max: int) -> list:
    """Lower-triangular constants C[n][m] expressing the source Sheffer
    sequence in the target one: S_n(x) = sum_m C[n][m] r_m(x).

    Computed from C_{n,m} = (n!/m!) [t^n] (h(fbar)/g(fbar)) l(fbar)^m,
    where (g, f) is the source pair, (h, l) the target, and fbar the
    compositional inverse of f.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if source.order < n_max or target.order < n_max:
        raise ValueError("pair truncation orders must be at least n_max")
    fbar = source.f.comp_inverse()
    prefactor = target.g.compose(fbar) * source.g.compose(fbar).invert()
    ell = target.f.compose(fbar)
    rows = [[Fraction(0)] * (n + 1) for n in range(n_max + 1)]
    power = prefactor
    for m in range(n_max + 1):
        scale = Fraction(1, factorial(m))
        for n in range(m, n_max + 1):
            rows[n][m] = factorial(n) * scale * power.coefficient(n)
        if m < n_max:
            power = power * ell
    return rows


def expand_in_basis(polys, basis) -> list:
    """Exact triangular solve: coefficients C[n][m] with
    polys[n] = sum_m C[n][m] basis[m].

    Requires deg basis[m] = m.  This is the independent linear-algebra
    oracle for `connection_constants`.
    """
    for m, b in enumerate(basis):
        if b.degree != m:
            raise ValueError(f"basis element {m} must have degree {m}")
    rows = []
    for p in polys:
        remainder = p
        row = [Fraction(0)] * (p.degree + 1 if p else 1)
        for m in range(p.degree, -1, -1):
            c = remainder.coefficient(m) / basis[m].coefficient(m)
            row[m] = c
            if c:
                remainder = remainder - c * basis[m]
        if remainder:
            raise ValueError("polynomial is not expressible in the given basis")
        rows.append(row)
    return rows

"""Exact verifiers for the mixed-family identities.

Each verifier sweeps a parameter grid and compares two (or three) values
of an identity that are computed through disjoint code paths: the
generating-function expansion on one side and closed-form summation,
umbral pairing, or an exact triangular linear solve on the other.  All
comparisons are exact rational equality; there is no tolerance anywhere.

Grids are traversed in a fixed documented order (r, then k, then lambda,
then the extra axes, then the degree n), so the first counterexample of a
failing sweep is deterministic.  Grid points are independent pure
computations; with ``jobs > 1`` they are evaluated in a process pool and
joined back in traversal order, which keeps reports order-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb, factorial
from time import perf_counter

from .families import (
    bernoulli_kernel,
    bernoulli_numbers,
    bernoulli_polys,
    default_order,
    euler_kernel,
    euler_polys,
    exp_minus_one,
    frobenius_euler_kernel,
    frobenius_euler_numbers,
    frobenius_euler_polys,
    mixed_kernel,
    mixed_type_numbers,
    mixed_type_polys,
    numbers_from_kernel,
    one_minus_exp_neg,
    poly_bernoulli_kernel,
    poly_bernoulli_numbers,
    poly_bernoulli_polys,
    polylog_series,
    polys_from_kernel,
    require_not_one,
    stirling2_triangle,
)
from .polynomials import Polynomial, X, falling_factorial, rising_factorial
from .series import TruncatedSeries
from .umbral import (
    ShefferPair,
    VerificationReport,
    apply_operator,
    connection_constants,
    expand_in_basis,
    pairing,
    _report,
)

__all__ = [
    "SweepGrid",
    "DEFAULT_GRID",
    "VERIFIERS",
    "MINIMUM_DEGREE",
    "verify_closed_forms",
    "verify_step_recurrence",
    "verify_derived_recurrence",
    "verify_derivative_expansion",
    "verify_alternating_sum",
    "verify_basis_expansions",
    "verify_foundations",
    "verify_all",
]

@dataclass(frozen=True)
class SweepGrid:
    """Parameter grid for identity sweeps.

    The lambda sweep of five rational points with degrees up to 12
    certifies identities that are rational in lambda (at least deg + 1
    distinct sample points over an infinite field).
    """

    n_min: int = 0
    n_max: int = 12
    r_values: tuple = (-2, -1, 0, 1, 2, 3)
    k_values: tuple = (-3, -2, -1, 0, 1, 2, 3)
    s_values: tuple = (0, 1, 2, 3, 4)
    lambda_values: tuple = (
        Fraction(-1),
        Fraction(2),
        Fraction(1, 2),
        Fraction(-3, 5),
        Fraction(7),
    )
    mu_values: tuple = (Fraction(-1), Fraction(3), Fraction(2, 3))

    def __post_init__(self):
        if self.n_min < 0:
            raise ValueError("n_min must be nonnegative")
        if self.n_max < self.n_min:
            raise ValueError("n_max must be at least n_min")
        for name in ("r_values", "k_values", "s_values", "lambda_values", "mu_values"):
            if not getattr(self, name):
                raise ValueError(f"{name} must be nonempty")
        if any(s < 0 for s in self.s_values):
            raise ValueError("s values must be nonnegative")
        object.__setattr__(
            self,
            "lambda_values",
            tuple(require_not_one(v, "lambda") for v in self.lambda_values),
        )
        object.__setattr__(
            self, "mu_values", tuple(require_not_one(v, "mu") for v in self.mu_values)
        )

    def degrees(self) -> tuple:
        return tuple(range(self.n_min, self.n_max + 1))


DEFAULT_GRID = SweepGrid()


def _axes(grid: SweepGrid, with_s=False, with_mu=False) -> dict:
    out = {
        "n_min": grid.n_min,
        "n_max": grid.n_max,
        "r": list(grid.r_values),
        "k": list(grid.k_values),
        "lambda": [str(v) for v in grid.lambda_values],
    }
    if with_s:
        out["s"] = list(grid.s_values)
    if with_mu:
        out["mu"] = [str(v) for v in grid.mu_values]
    return out


def _fail(r, k, lam, n, check, lhs, rhs, **extra) -> dict:
    out = {"r": r, "k": k, "lambda": str(lam), "n": n}
    out.update(extra)
    out["check"] = check
    out["lhs"] = str(lhs)
    out["rhs"] = str(rhs)
    return out


def _sweep(identity, grid_desc, tasks, worker, collect_all, jobs) -> VerificationReport:
    started = perf_counter()
    failures = []
    checked = 0
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for task_checked, task_failures in pool.map(worker, tasks):
                checked += task_checked
                failures.extend(task_failures)
                if failures and not collect_all:
                    break
    else:
        for task in tasks:
            task_checked, task_failures = worker(task)
            checked += task_checked
            failures.extend(task_failures)
            if failures and not collect_all:
                break
    return _report(identity, grid_desc, failures, checked, started, collect_all)


def _shifted_power_table(n_top: int) -> list:
    """table[j][l] = (x - j)^l for 0 <= j, l <= n_top."""
    table = []
    for j in range(n_top + 1):
        xj = Polynomial([-j, 1])
        row = [Polynomial([1])]
        for _ in range(n_top):
            row.append(row[-1] * xj)
        table.append(row)
    return table


# ---------------------------------------------------------------------------
# closed forms (id "thm1-2")

def _closed_forms_task(task):
    r, k, lam, ns, collect_all = task
    n_top = max(ns)
    t_polys = mixed_type_polys(n_top, r, k, lam)
    h_nums = frobenius_euler_numbers(n_top, r, lam)
    s2 = stirling2_triangle(n_top)
    inv_weights = [Fraction(m + 1) ** (-k) for m in range(n_top + 1)]
    fact_weights = [factorial(m) * w for m, w in enumerate(inv_weights)]
    powers = _shifted_power_table(n_top)
    failures = []
    checked = 0
    for n in ns:
        expected = t_polys[n]
        shifted = []
        for j in range(n + 1):
            acc = Polynomial()
            row = powers[j]
            for l in range(n + 1):
                c = comb(n, l) * h_nums[n - l]
                if c:
                    acc = acc + c * row[l]
            shifted.append(acc)
        first = Polynomial()
        for m in range(n + 1):
            inner = Polynomial()
            for j in range(m + 1):
                term = comb(m, j) * shifted[j]
                inner = inner + (term if j % 2 == 0 else -term)
            first = first + inv_weights[m] * inner
        checked += 1
        if first != expected:
            failures.append(_fail(r, k, lam, n, "triple-sum form", first, expected))
            if not collect_all:
                break
        coeffs = []
        for l in range(n + 1):
            total = Fraction(0)
            for j in range(l, n + 1):
                h = h_nums[j - l]
                if not h:
                    continue
                outer = comb(n, j) * comb(j, l) * h
                for m in range(n - j + 1):
                    v = s2[n - j][m]
                    if v:
                        term = outer * fact_weights[m] * v
                        total += term if (n - m - j) % 2 == 0 else -term
            coeffs.append(total)
        second = Polynomial(coeffs)
        checked += 1
        if second != expected:
            failures.append(_fail(r, k, lam, n, "coefficient form", second, expected))
            if not collect_all:
                break
    return checked, failures


def verify_closed_forms(grid: SweepGrid = DEFAULT_GRID, collect_all=False, jobs=1):
    """Both closed-form expansions of the mixed family against the
    generating-function values."""
    ns = grid.degrees()
    tasks = [
        (r, k, lam, ns, collect_all)
        for r in grid.r_values
        for k in grid.k_values
        for lam in grid.lambda_values
    ]
    return _sweep("thm1-2", _axes(grid), tasks, _closed_forms_task, collect_all, jobs)


# ---------------------------------------------------------------------------
# step recurrence (id "thm3")

def _step_recurrence_task(task):
    r, k, lam, ns, collect_all = task
    n_top = max(ns)
    t_rk = mixed_type_polys(n_top + 1, r, k, lam)
    t_up = mixed_type_polys(n_top, r + 1, k, lam)
    t_dn = mixed_type_polys(n_top + 1, r, k - 1, lam)
    bern = bernoulli_numbers(n_top + 1)
    coef = Fraction(r) * lam / (1 - lam)
    failures = []
    checked = 0
    for n in ns:
        rhs = (X - r) * t_rk[n] - coef * t_up[n]
        acc = Polynomial()
        for l in range(n + 2):
            b = bern[l]
            if b:
                acc = acc + comb(n + 1, l) * b * (t_rk[n + 1 - l] - t_dn[n + 1 - l])
        rhs = rhs - acc / (n + 1)
        checked += 1
        if rhs != t_rk[n + 1]:
            failures.append(_fail(r, k, lam, n, "step recurrence", rhs, t_rk[n + 1]))
            if not collect_all:
                break
    return checked, failures


def verify_step_recurrence(grid: SweepGrid = DEFAULT_GRID, collect_all=False, jobs=1):
    """Recurrence producing degree n+1 from degree-n data, with the
    Bernoulli-weighted index-lowering correction."""
    ns = grid.degrees()
    tasks = [
        (r, k, lam, ns, collect_all)
        for r in grid.r_values
        for k in grid.k_values
        for lam in grid.lambda_values
    ]
    return _sweep("thm3", _axes(grid), tasks, _step_recurrence_task, collect_all, jobs)


# ---------------------------------------------------------------------------
# derived recurrence (id "thm4", degrees n >= 2)

def _derived_recurrence_task(task):
    r, k, lam, ns, collect_all = task
    n_top = max(ns)
    t_rk = mixed_type_polys(n_top, r, k, lam)
    t_up = mixed_type_polys(n_top - 1, r + 1, k, lam)
    t_dn = mixed_type_polys(n_top, r, k - 1, lam)
    bern = bernoulli_numbers(n_top)
    failures = []
    checked = 0
    for n in ns:
        lhs = (n + 1) * t_rk[n] + n * ((Fraction(r) - Fraction(1, 2)) - X) * t_rk[n - 1]
        for l in range(n - 1):
            b = bern[n - l]
            if b:
                lhs = lhs + comb(n, l) * b * t_rk[l]
        rhs = -(Fraction(r) * lam * n / (1 - lam)) * t_up[n - 1]
        for l in range(n + 1):
            b = bern[n - l]
            if b:
                rhs = rhs + comb(n, l) * b * t_dn[l]
        checked += 1
        if lhs != rhs:
            failures.append(_fail(r, k, lam, n, "derived recurrence", lhs, rhs))
            if not collect_all:
                break
    return checked, failures


def verify_derived_recurrence(grid: SweepGrid = DEFAULT_GRID, collect_all=False, jobs=1):
    """The differentiated form of the step recurrence; stated only for
    degrees n >= 2, so grids reaching below that are rejected."""
    if grid.n_min < 2:
        raise ValueError("this identity requires degrees n >= 2; raise n_min")
    ns = grid.degrees()
    tasks = [
        (r, k, lam, ns, collect_all)
        for r in grid.r_values
        for k in grid.k_values
        for lam in grid.lambda_values
    ]
    return _sweep("thm4", _axes(grid), tasks, _derived_recurrence_task, collect_all, jobs)


# ---------------------------------------------------------------------------
# derivative expansion (id "thm5", degrees n >= 1)

def _derivative_expansion_task(task):
    r, k, lam, ns, collect_all = task
    n_top = max(ns)
    t_rk = mixed_type_polys(n_top, r, k, lam)
    t_up = mixed_type_polys(n_top - 1, r + 1, k, lam)
    h_shift = [h.shift(-1) for h in frobenius_euler_polys(n_top - 1, r, lam)]
    s2 = stirling2_triangle(n_top - 1)
    weights = []
    for d in range(n_top):
        w = Fraction(0)
        for m in range(d + 1):
            v = s2[d][m]
            if v:
                term = factorial(m + 1) * Fraction(m + 2) ** (-k) * v
                w += -term if m % 2 else term
        weights.append(w)
    coef = Fraction(r) * lam / (1 - lam)
    failures = []
    checked = 0
    for n in ns:
        rhs = (X - r) * t_rk[n - 1] - coef * t_up[n - 1]
        for l in range(n):
            d = n - 1 - l
            term = comb(n - 1, l) * weights[d] * h_shift[l]
            rhs = rhs + (term if d % 2 == 0 else -term)
        checked += 1
        if rhs != t_rk[n]:
            failures.append(_fail(r, k, lam, n, "derivative expansion", rhs, t_rk[n]))
            if not collect_all:
                break
    return checked, failures


def verify_derivative_expansion(grid: SweepGrid = DEFAULT_GRID, collect_all=False, jobs=1):
    """Degree-lowering formula with shifted Frobenius-Euler terms; stated
    for degrees n >= 1."""
    if grid.n_min < 1:
        raise ValueError("this identity requires degrees n >= 1; raise n_min")
    ns = grid.degrees()
    tasks = [
        (r, k, lam, ns, collect_all)
        for r in grid.r_values
        for k in grid.k_values
        for lam in grid.lambda_values
    ]
    return _sweep(
        "thm5", _axes(grid), tasks, _derivative_expansion_task, collect_all, jobs
    )


# ---------------------------------------------------------------------------
# alternating binomial sum (id "thm6")

def _alternating_sum_task(task):
    r, k, lam, ns, collect_all = task
    n_top = max(ns)
    t_nums = mixed_type_numbers(n_top, r, k, lam)
    pb_nums = poly_bernoulli_numbers(n_top, k - 1)
    h_nums = frobenius_euler_numbers(n_top, r, lam)
    order = default_order(n_top + 1)
    functional = frobenius_euler_kernel(r, lam, order) * polylog_series(k, order)
    failures = []
    checked = 0
    for n in ns:
        lhs = Fraction(0)
        for m in range(n + 1):
            term = comb(n + 1, m) * t_nums[m]
            lhs += term if (n - m) % 2 == 0 else -term
        rhs = Fraction(0)
        for l in range(n + 1):
            h = h_nums[n - l]
            if not h:
                continue
            outer = comb(n + 1, l + 1) * h
            for m in range(l + 1):
                term = outer * comb(l, m) * pb_nums[m]
                rhs += term if (l - m) % 2 == 0 else -term
        checked += 1
        if lhs != rhs:
            failures.append(_fail(r, k, lam, n, "number identity", lhs, rhs))
            if not collect_all:
                break
        direct = pairing(functional, Polynomial.monomial(n + 1))
        checked += 1
        if lhs != direct:
            failures.append(_fail(r, k, lam, n, "pairing cross-check", lhs, direct))
            if not collect_all:
                break
    return checked, failures


def verify_alternating_sum(grid: SweepGrid = DEFAULT_GRID, collect_all=False, jobs=1):
    """Alternating binomial sum of mixed numbers against the
    poly-Bernoulli/Frobenius-Euler convolution, with a third direct
    pairing computation of the left side."""
    ns = grid.degrees()
    tasks = [
        (r, k, lam, ns, collect_all)
        for r in grid.r_values
        for k in grid.k_values
        for lam in grid.lambda_values
    ]
    return _sweep("thm6", _axes(grid), tasks, _alternating_sum_task, collect_all, jobs)


# ---------------------------------------------------------------------------
# basis expansions (id "bases")

def _basis_instances(grid: SweepGrid, n_top: int) -> dict:
    """Target data shared by every (r, k, lambda) task: basis polynomials
    and Sheffer pairs per basis instance, in sweep order."""
    order = default_order(n_top)
    identity_f = TruncatedSeries.identity(order)
    instances = []
    for s in grid.s_values:
        pair = ShefferPair(bernoulli_kernel(s, order).invert(), identity_f)
        instances.append(("bernoulli", s, None, bernoulli_polys(n_top, s), pair))
    for s in grid.s_values:
        pair = ShefferPair(euler_kernel(s, order).invert(), identity_f)
        instances.append(("euler", s, None, euler_polys(n_top, s), pair))
    for s in grid.s_values:
        for mu in grid.mu_values:
            pair = ShefferPair(frobenius_euler_kernel(s, mu, order).invert(), identity_f)
            instances.append(
                ("frobenius-euler", s, mu, frobenius_euler_polys(n_top, s, mu), pair)
            )
    fall_pair = ShefferPair(TruncatedSeries.constant(1, order), exp_minus_one(order))
    instances.append(
        ("falling", None, None, [falling_factorial(m) for m in range(n_top + 1)], fall_pair)
    )
    rise_pair = ShefferPair(TruncatedSeries.constant(1, order), one_minus_exp_neg(order))
    instances.append(
        ("rising", None, None, [rising_factorial(m) for m in range(n_top + 1)], rise_pair)
    )
    return {
        "order": order,
        "n_top": n_top,
        "s_max": max(grid.s_values),
        "s2": stirling2_triangle(n_top + max(grid.s_values)),
        "instances": instances,
    }


def _summation_constants(basis_name, s, mu, n, t_nums, values, s2) -> list:
    """Closed-form connection constants of the mixed family in the given
    target basis, for a single degree n."""
    row = []
    if basis_name == "bernoulli":
        for m in range(n + 1):
            total = Fraction(0)
            for l in range(n - m + 1):
                total += (
                    Fraction(comb(n - m, l), comb(s + l, l))
                    * s2[l + s][s]
                    * t_nums[n - m - l]
                )
            row.append(comb(n, m) * total)
    elif basis_name == "euler":
        half = Fraction(1, 2**s)
        for m in range(n + 1):
            total = sum(comb(s, j) * values[n - m][j] for j in range(s + 1))
            row.append(half * comb(n, m) * total)
    elif basis_name == "frobenius-euler":
        scale = Fraction(1) / (1 - mu) ** s
        for m in range(n + 1):
            total = Fraction(0)
            for j in range(s + 1):
                total += comb(s, j) * (-mu) ** (s - j) * values[n - m][j]
            row.append(scale * comb(n, m) * total)
    else:
        signed = basis_name == "rising"
        for m in range(n + 1):
            total = Fraction(0)
            for l in range(n - m + 1):
                term = comb(n, l + m) * s2[l + m][m] * t_nums[n - m - l]
                if signed and l % 2:
                    term = -term
                total += term
            row.append(total)
    return row


def _constants_text(row) -> str:
    return "[" + ", ".join(str(c) for c in row) + "]"


def _basis_task(task):
    r, k, lam, ns, collect_all, shared = task
    n_top = shared["n_top"]
    order = shared["order"]
    s2 = shared["s2"]
    kernel = mixed_kernel(r, k, lam, order)
    t_polys = polys_from_kernel(kernel, n_top)
    t_nums = numbers_from_kernel(kernel, n_top)
    source = ShefferPair(kernel.invert(), TruncatedSeries.identity(order))
    values = [
        [t_polys[i](j) for j in range(shared["s_max"] + 1)] for i in range(n_top + 1)
    ]
    failures = []
    checked = 0
    for basis_name, s, mu, basis, target in shared["instances"]:
        pairing_rows = connection_constants(source, target, n_top)
        solve_rows = expand_in_basis(t_polys, basis)
        extra = {"basis": basis_name}
        if s is not None:
            extra["s"] = s
        if mu is not None:
            extra["mu"] = str(mu)
        for n in ns:
            row = _summation_constants(basis_name, s, mu, n, t_nums, values, s2)
            checked += 1
            if row != pairing_rows[n]:
                failures.append(
                    _fail(
                        r, k, lam, n, "summation vs pairing constants",
                        _constants_text(row), _constants_text(pairing_rows[n]), **extra,
                    )
                )
                if not collect_all:
                    return checked, failures
            checked += 1
            if row != solve_rows[n]:
                failures.append(
                    _fail(
                        r, k, lam, n, "summation vs solved constants",
                        _constants_text(row), _constants_text(solve_rows[n]), **extra,
                    )
                )
                if not collect_all:
                    return checked, failures
            rebuilt = Polynomial()
            for m, c in enumerate(row):
                if c:
                    rebuilt = rebuilt + c * basis[m]
            checked += 1
            if rebuilt != t_polys[n]:
                failures.append(
                    _fail(r, k, lam, n, "basis reconstruction", rebuilt, t_polys[n], **extra)
                )
                if not collect_all:
                    return checked, failures
    return checked, failures


def verify_basis_expansions(grid: SweepGrid = DEFAULT_GRID, collect_all=False, jobs=1):
    """Expansion of the mixed family in five Sheffer bases, with the
    connection constants computed three ways: closed-form summation,
    umbral pairing, and an exact triangular solve.

    Basis instances (bernoulli and euler per s, frobenius-euler per
    (s, mu), then falling and rising factorials) are swept inside each
    (r, k, lambda) point."""
    ns = grid.degrees()
    shared = _basis_instances(grid, max(ns))
    tasks = [
        (r, k, lam, ns, collect_all, shared)
        for r in grid.r_values
        for k in grid.k_values
        for lam in grid.lambda_values
    ]
    return _sweep(
        "bases",
        _axes(grid, with_s=True, with_mu=True),
        tasks,
        _basis_task,
        collect_all,
        jobs,
    )


# ---------------------------------------------------------------------------
# foundations (id "foundations")

def _foundations_task(task):
    r, k, lam, ns, collect_all = task
    n_top = max(ns)
    t_polys = mixed_type_polys(n_top, r, k, lam)
    t_zero = mixed_type_polys(n_top, 0, k, lam)
    pb_polys = poly_bernoulli_polys(n_top, k)
    pb_nums = poly_bernoulli_numbers(n_top, k)
    h_polys = frobenius_euler_polys(n_top, r, lam)
    h_nums = frobenius_euler_numbers(n_top, r, lam)
    s2 = stirling2_triangle(n_top)
    powers = _shifted_power_table(n_top)
    operator = poly_bernoulli_kernel(k, default_order(n_top))
    inv_weights = [Fraction(m + 1) ** (-k) for m in range(n_top + 1)]
    failures = []
    checked = 0

    def record(n, check, lhs, rhs):
        failures.append(_fail(r, k, lam, n, check, lhs, rhs))

    for n in ns:
        checks = []
        if n >= 1:
            checks.append(
                ("derivative rule", t_polys[n].derivative(), n * t_polys[n - 1])
            )
        conv_a = Polynomial()
        conv_b = Polynomial()
        for l in range(n + 1):
            c = comb(n, l)
            conv_a = conv_a + c * h_nums[n - l] * pb_polys[l]
            conv_b = conv_b + c * pb_nums[l] * h_polys[n - l]
        checks.append(("number/polynomial convolution", conv_a, t_polys[n]))
        checks.append(("polynomial/number convolution", conv_b, t_polys[n]))
        checks.append(
            (
                "binomial expansion",
                Polynomial([comb(n, l) * h_nums[n - l] for l in range(n + 1)]),
                h_polys[n],
            )
        )
        alternating = Polynomial()
        for m in range(n + 1):
            inner = Polynomial()
            for j in range(m + 1):
                term = comb(m, j) * powers[j][n]
                inner = inner + (term if j % 2 == 0 else -term)
            alternating = alternating + inv_weights[m] * inner
        checks.append(("alternating-shift action", alternating, pb_polys[n]))
        coeffs = []
        for j in range(n + 1):
            total = Fraction(0)
            for m in range(n - j + 1):
                v = s2[n - j][m]
                if v:
                    term = inv_weights[m] * comb(n, j) * factorial(m) * v
                    total += term if (n - m - j) % 2 == 0 else -term
            coeffs.append(total)
        checks.append(("partition-sum action", Polynomial(coeffs), pb_polys[n]))
        checks.append(
            (
                "operator action",
                apply_operator(operator, Polynomial.monomial(n)),
                pb_polys[n],
            )
        )
        checks.append(("order-zero degeneration", t_zero[n], pb_polys[n]))
        for check, lhs, rhs in checks:
            checked += 1
            if lhs != rhs:
                record(n, check, lhs, rhs)
                if not collect_all:
                    return checked, failures
    return checked, failures


def verify_foundations(grid: SweepGrid = DEFAULT_GRID, collect_all=False, jobs=1):
    """Structural facts the other verifiers build on: the derivative
    rule, both convolutions, the two poly-Bernoulli actions on monomials
    against the operator route, the binomial expansion, and the order-zero
    degeneration."""
    ns = grid.degrees()
    tasks = [
        (r, k, lam, ns, collect_all)
        for r in grid.r_values
        for k in grid.k_values
        for lam in grid.lambda_values
    ]
    return _sweep("foundations", _axes(grid), tasks, _foundations_task, collect_all, jobs)


# ---------------------------------------------------------------------------
# registry

VERIFIERS = {
    "thm1-2": verify_closed_forms,
    "thm3": verify_step_recurrence,
    "thm4": verify_derived_recurrence,
    "thm5": verify_derivative_expansion,
    "thm6": verify_alternating_sum,
    "bases": verify_basis_expansions,
    "foundations": verify_foundations,
}

#: Smallest degree an identity is stated for; verify_all clamps grids to it.
MINIMUM_DEGREE = {"thm4": 2, "thm5": 1}


def verify_all(grid: SweepGrid = DEFAULT_GRID, collect_all=False, jobs=1):
    """Run every registered verifier, yielding reports in registry order.

    Identities stated only from some minimum degree get the grid clamped
    to that degree; if the clamp empties the degree range the verifier is
    reported as a vacuous pass.
    """
    for identity, verifier in VERIFIERS.items():
        floor = MINIMUM_DEGREE.get(identity, 0)
        if grid.n_max < floor:
            yield VerificationReport(
                identity=identity,
                grid=_axes(grid),
                status="pass",
                counterexample=None,
                elapsed_ms=0.0,
                checked=0,
            )
            continue
        g = grid if grid.n_min >= floor else replace(grid, n_min=floor)
        yield verifier(g, collect_all=collect_all, jobs=jobs)

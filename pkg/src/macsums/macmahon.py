"""Generating functions for the two families of generalized divisor sums.

M(t, n) counts partitions of n with t part sizes allowed to repeat (weakly
increasing size tuples, product of frequencies as weight); MO(t, n) is the
strict-tuple variant.  Both families come with several equivalent series
formulas: the defining multiple sums, a single alternating sum, a conjugate
(smallest-part weighted) sum, a theta quotient, an umbral expansion, and
closed recurrences.  Cross-checking those routes against each other is the
main correctness instrument of this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .divisors import (
    THETA_FAMILY,
    eisenstein,
    odd_square_product,
    sigma_series,
    theta_moment,
    umbral_eval,
)
from .reports import IdentityReport, merge_reports, series_report
from .series import Series, euler_function, geometric_pow


# ---------------------------------------------------------------------------
# chain enumeration


def chain_series(factors, order, *, strict_after=(), max_part=None, exp_weight=None):
    """Truncated sum over chains k_1 <= k_2 <= ... <= k_m of part values >= 1,
    of the product factors[i](k_i).

    factors is a list of callables k -> Series.  Positions named in
    strict_after (1-based) require k_i < k_(i+1).  exp_weight[i-1] = 1
    declares that factors[i](k) has q-valuation at least k, which is what
    bounds the enumeration; a position whose remaining tail weight is zero
    needs max_part instead.

    Evaluation runs over states (position, minimum part value) so shared
    suffixes are computed once; this realizes the tuple enumeration without
    walking individual tuples.
    """
    m = len(factors)
    strict = set(strict_after)
    if exp_weight is None:
        exp_weight = [1] * m
    if len(exp_weight) != m:
        raise ValueError("exp_weight must match the number of positions")

    tailw = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        tailw[i] = tailw[i + 1] + exp_weight[i]
    bounds = []
    for i in range(m):
        b = max_part
        if tailw[i] > 0:
            b = order // tailw[i] if b is None else min(b, order // tailw[i])
        if b is None:
            raise ValueError(f"chain position {i + 1} is unbounded; pass max_part")
        bounds.append(b)

    zero = Series.zero(order)
    one = Series.one(order)
    nxt_row = None
    for i in range(m - 1, -1, -1):
        bi = bounds[i]
        row = [zero] * (bi + 2)
        step = 1 if (i + 1) in strict else 0
        for v in range(bi, 0, -1):
            if i == m - 1:
                nxt = one
            else:
                vn = v + step
                nxt = nxt_row[vn] if vn <= bounds[i + 1] else zero
            here = row[v + 1]
            if not nxt.is_zero():
                here = here + factors[i](v) * nxt
            row[v] = here
        nxt_row = row
    return nxt_row[1] if m else one


def weighted_geometric(k, order):
    """q^k/(1-q^k)^2 as a series: coefficient j at each exponent j*k."""
    out = [0] * (order + 1)
    for j in range(1, order // k + 1):
        out[j * k] = j
    return Series(out, order)


def geometric_tail(k, order):
    """q^k/(1-q^k): coefficient 1 at positive multiples of k."""
    out = [0] * (order + 1)
    for j in range(1, order // k + 1):
        out[j * k] = 1
    return Series(out, order)


def geometric_full(k, order):
    """1/(1-q^k): coefficient 1 at all multiples of k."""
    out = [0] * (order + 1)
    for j in range(0, order // k + 1):
        out[j * k] = 1
    return Series(out, order)


# ---------------------------------------------------------------------------
# the defining multiple sums


def weak_multisum(t: int, order: int) -> Series:
    """M-family generating function: weakly increasing t-tuples of part
    sizes, each contributing q^k/(1-q^k)^2."""
    if t < 1:
        raise ValueError("t >= 1")
    fac = lambda k: weighted_geometric(k, order)
    return chain_series([fac] * t, order)


def strict_multisum(t: int, order: int) -> Series:
    """MO-family generating function: strictly increasing t-tuples."""
    if t < 1:
        raise ValueError("t >= 1")
    fac = lambda k: weighted_geometric(k, order)
    return chain_series([fac] * t, order, strict_after=range(1, t))


# ---------------------------------------------------------------------------
# single-sum, conjugate, theta-quotient, umbral, and recurrence routes


def m_single_sum(t: int, order: int) -> Series:
    """Alternating single sum for the M family: terms
    (-1)^(k-1) (1+q^k) q^(C(k,2)+t*k) / (1-q^k)^(2t)."""
    if t < 1:
        raise ValueError("t >= 1")
    acc = Series.zero(order)
    k = 1
    while k * (k - 1) // 2 + t * k <= order:
        e = k * (k - 1) // 2 + t * k
        g = geometric_pow(k, 2 * t, order)
        term = g.shift(e) + g.shift(e + k)
        acc = acc - term if k % 2 == 0 else acc + term
        k += 1
    return acc


def m_conjugate_form(t: int, order: int) -> Series:
    """Smallest-part weighted sum over weak (2t-1)-tuples: weight k_1, with
    q^(k_j)/(1-q^(k_j)) at odd positions and 1/(1-q^(k_j)) at even ones."""
    if t < 1:
        raise ValueError("t >= 1")
    m = 2 * t - 1

    def make(pos):
        if pos == 1:
            return lambda k: k * geometric_tail(k, order)
        if pos % 2 == 1:
            return lambda k: geometric_tail(k, order)
        return lambda k: geometric_full(k, order)

    factors = [make(pos) for pos in range(1, m + 1)]
    weights = [1 if pos % 2 == 1 else 0 for pos in range(1, m + 1)]
    return chain_series(factors, order, exp_weight=weights)


def mo_andrews_rose(t: int, order: int) -> Series:
    """Theta quotient for the MO family: a finite alternating theta-like sum
    with weights (2k+1)/(2t+1) * C(k+t, k-t), divided by the cube of the
    Euler product.  Exact rational arithmetic; the output must be integral."""
    if t < 1:
        raise ValueError("t >= 1")
    num = [Fraction(0)] * (order + 1)
    k = t
    while k * (k + 1) // 2 <= order:
        c = Fraction(2 * k + 1, 2 * t + 1) * comb(k + t, k - t)
        if (k + t) % 2:
            c = -c
        num[k * (k + 1) // 2] += c
        k += 1
    out = Series(num, order) * (euler_function(order) ** 3).invert()
    for i, c in enumerate(out.coeffs):
        if not isinstance(c, int):
            raise ArithmeticError(f"non-integer coefficient {c} at q^{i}: formula transcription error")
    return out


def mo_umbral(t: int, order: int) -> Series:
    """Umbral route for the MO family: expand X(X^2-1^2)...(X^2-(2t-1)^2),
    substitute the theta family, divide by its first member, and scale by
    (-1)^t / (4^t (2t+1)!)."""
    if t < 1:
        raise ValueError("t >= 1")
    poly = odd_square_product(t)
    combo = umbral_eval(poly, THETA_FAMILY, order)
    scale = Fraction((-1) ** t, 4**t * factorial(2 * t + 1))
    out = combo * theta_moment(1, order).invert() * scale
    for i, c in enumerate(out.coeffs):
        if not isinstance(c, int):
            raise ArithmeticError(f"non-integer coefficient {c} at q^{i}: formula transcription error")
    return out


def mo_recurrence(t: int, order: int) -> Series:
    """Closed first-order recurrence for the MO family, seeded with the
    divisor-sum series at t = 1."""
    if t < 1:
        raise ValueError("t >= 1")
    u = sigma_series(1, order)
    if t == 1:
        return u
    u1 = u
    for s in range(2, t + 1):
        u = ((6 * u1 + s * (s - 1)) * u - 2 * u.q_derivative()) * Fraction(1, 2 * s * (2 * s + 1))
    return u


def m_recurrence(t: int, order: int, mo_formula=None) -> Series:
    """Convolution recurrence for the M family from the MO series, via the
    alternating elementary/homogeneous relation."""
    if t < 1:
        raise ValueError("t >= 1")
    mo_formula = mo_formula or strict_multisum
    e = [Series.one(order)] + [mo_formula(i, order) for i in range(1, t + 1)]
    h = [Series.one(order)]
    for s in range(1, t + 1):
        acc = Series.zero(order)
        for i in range(1, s + 1):
            term = e[i] * h[s - i]
            acc = acc + term if i % 2 else acc - term
        h.append(acc)
    return h[t]


def mo_from_m(t: int, order: int) -> Series:
    """Fifth MO route: solve the elementary/homogeneous relation for the
    strict series, feeding in M values from the convolution recurrence."""
    if t < 1:
        raise ValueError("t >= 1")
    h = [Series.one(order)] + [m_recurrence(s, order) for s in range(1, t + 1)]
    e = [Series.one(order)]
    for s in range(1, t + 1):
        acc = Series.zero(order)
        for i in range(s):
            term = e[i] * h[s - i]
            acc = acc + term if (s + 1 + i) % 2 == 0 else acc - term
        e.append(acc)
    return e[t]


M_FORMULAS = {
    "multisum": weak_multisum,
    "single-sum": m_single_sum,
    "conjugate": m_conjugate_form,
    "recurrence": m_recurrence,
}

MO_FORMULAS = {
    "multisum": strict_multisum,
    "andrews-rose": mo_andrews_rose,
    "umbral": mo_umbral,
    "recurrence": mo_recurrence,
    "symmetric": mo_from_m,
}

DEFAULT_FORMULA = {"M": "single-sum", "MO": "andrews-rose"}


# ---------------------------------------------------------------------------
# coefficient tables


@dataclass(frozen=True)
class CoefficientTable:
    family: str
    t: int
    order: int
    provenance: str
    values: tuple

    def __getitem__(self, n):
        return self.values[n]


_TABLE_CACHE: dict = {}


def coefficient_table(family: str, t: int, order: int, formula: str | None = None) -> CoefficientTable:
    """Integer coefficient table for a family, cached per formula and order.

    Integrality and the vanishing of the leading window (below t for M,
    below t(t+1)/2 for MO) are asserted at construction.
    """
    if family not in ("M", "MO"):
        raise ValueError(f"unknown family {family!r}; use M or MO")
    formula = formula or DEFAULT_FORMULA[family]
    table = M_FORMULAS if family == "M" else MO_FORMULAS
    if formula not in table:
        raise ValueError(f"unknown formula {formula!r} for family {family}; known: {sorted(table)}")
    key = (family, t, order, formula)
    hit = _TABLE_CACHE.get(key)
    if hit is not None:
        return hit
    series = table[formula](t, order)
    vals = []
    for n, c in enumerate(series.coeffs):
        if not isinstance(c, int):
            raise ArithmeticError(f"{family}({t},{n}) is not an integer: {c}")
        vals.append(c)
    window = t if family == "M" else t * (t + 1) // 2
    for n in range(min(window, order + 1)):
        if vals[n] != 0:
            raise ArithmeticError(f"{family}({t},{n}) = {vals[n]} below the minimal partition size")
    result = CoefficientTable(family, t, order, formula, tuple(vals))
    _TABLE_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# closed forms and named identities


def _sigma_combination(order, combos):
    """Series whose n-th coefficient is sum over (poly, s) of poly(n)*sigma_s(n),
    with the n = 0 coefficient set to zero."""
    out = [0] * (order + 1)
    for poly, s in combos:
        ss = sigma_series(s, order)
        for n in range(1, order + 1):
            out[n] += poly(n) * ss[n]
    return Series(out, order)


def closed_form_check(which: str, order: int) -> IdentityReport:
    """Evaluate both sides of a named closed-form identity exactly."""
    p = {"which": which}
    if which == "V2_ode":
        v1 = weak_multisum(1, order)
        v2 = weak_multisum(2, order)
        rhs = ((7 * v1 - 1) * v1 + v1.q_derivative()) * Fraction(1, 10)
        return series_report("closed-form-V2", p, order, v2, rhs)
    if which == "V3_ode":
        v1 = weak_multisum(1, order)
        v2 = weak_multisum(2, order)
        v3 = weak_multisum(3, order)
        rhs = ((19 * v1 - 3) * v2 - 4 * v1**3 + v1 * v1 + v2.q_derivative()) * Fraction(1, 21)
        return series_report("closed-form-V3-ode", p, order, v3, rhs)
    if which == "V3_sigma":
        v3 = weak_multisum(3, order)
        rhs = _sigma_combination(
            order,
            [
                (lambda n: 40 * n * n + 60 * n + 9, 1),
                (lambda n: -70 * (n + 1), 3),
                (lambda n: 31, 5),
            ],
        ) * Fraction(1, 1920)
        return series_report("closed-form-V3", p, order, v3, rhs)
    if which == "U3mV3_sigma":
        lhs = strict_multisum(3, order) - weak_multisum(3, order)
        rhs = _sigma_combination(
            order,
            [
                (lambda n: -160 * n + 28, 1),
                (lambda n: 40 * n + 120, 3),
                (lambda n: -28, 5),
            ],
        ) * Fraction(1, 1920)
        return series_report("closed-form-U3-minus-V3", p, order, lhs, rhs)
    if which == "U4_sigma":
        u4 = strict_multisum(4, order)
        rhs = _sigma_combination(
            order,
            [
                (lambda n: -840 * n**3 + 5880 * n**2 - 9870 * n + 3229, 1),
                (lambda n: 756 * n**2 - 4410 * n + 4935, 3),
                (lambda n: -126 * n + 441, 5),
                (lambda n: 5, 7),
            ],
        ) * Fraction(1, 967680)
        return series_report("closed-form-U4", p, order, u4, rhs)
    if which == "MO251":
        # convolution identity: 12*sum sigma1(j)sigma1(n-j) = 5 sigma3 + (1-6n) sigma1
        s1 = sigma_series(1, order)
        lhs = 12 * (s1 * s1)
        rhs = _sigma_combination(order, [(lambda n: 1 - 6 * n, 1), (lambda n: 5, 3)])
        return series_report("sigma1-convolution", p, order, lhs, rhs)
    if which == "excess_V2U2":
        lhs = weak_multisum(2, order) - strict_multisum(2, order)
        rhs = (sigma_series(3, order) - sigma_series(1, order)) * Fraction(1, 6)
        return series_report("excess-V2-U2", p, order, lhs, rhs)
    if which == "V1_E2":
        lhs = weak_multisum(1, order)
        rhs = (Series.one(order) - eisenstein("E2", order)) * Fraction(1, 24)
        return series_report("V1-eisenstein", p, order, lhs, rhs)
    raise ValueError(f"unknown closed form {which!r}")


CLOSED_FORMS = ("V2_ode", "V3_ode", "V3_sigma", "U3mV3_sigma", "U4_sigma", "MO251", "excess_V2U2", "V1_E2")


def symmetric_relation_check(t: int, order: int) -> IdentityReport:
    """Alternating sum of strict times weak series over total weight t is zero."""
    e = [Series.one(order)] + [strict_multisum(i, order) for i in range(1, t + 1)]
    h = [Series.one(order)] + [weak_multisum(i, order) for i in range(1, t + 1)]
    acc = Series.zero(order)
    for i in range(t + 1):
        term = e[i] * h[t - i]
        acc = acc - term if i % 2 else acc + term
    return series_report("symmetric-relation", {"t": t}, order, acc, Series.zero(order))


# ---------------------------------------------------------------------------
# specializations of Jacobi's product identity


_JACOBI_DENOMS = {
    4: lambda m, order: Series.one(order) + 2 * Series.monomial(1, m, order) + Series.monomial(1, 2 * m, order),
    2: lambda m, order: Series.one(order) + Series.monomial(1, 2 * m, order),
    1: lambda m, order: Series.one(order) - Series.monomial(1, m, order) + Series.monomial(1, 2 * m, order),
}


def jacobi_product_side(c: int, order: int) -> Series:
    """Product over m of (1-q^m)^2 / (1 - 2 cos(2x) q^m + q^(2m)) at the
    specialization with 4 sin^2(x) = c."""
    num = euler_function(order) ** 2
    den = Series.one(order)
    for m in range(1, order + 1):
        den = den * _JACOBI_DENOMS[c](m, order)
    return num * den.invert()


def jacobi_theta_side(c: int, order: int) -> Series:
    """Single theta-style sum for the same specialization."""
    acc = Series.zero(order)
    m = 1
    while m * (m - 1) // 2 <= order:
        num = Series.one(order) - Series.monomial(1, m, order)
        num = num * (Series.one(order) - Series.monomial(1, 2 * m, order))
        term = (num * _JACOBI_DENOMS[c](m, order).invert()).shift(m * (m - 1) // 2)
        acc = acc - term if m % 2 == 0 else acc + term
        m += 1
    return acc


def jacobi_weak_sum_side(c: int, order: int) -> Series:
    """Sum over n of (-c)^n times the weak n-tuple enumeration."""
    acc = Series.one(order)
    sign = 1
    for n in range(1, order + 1):
        sign = -sign
        acc = acc + (sign * c**n) * weak_multisum(n, order)
    return acc


def jacobi_specialization_check(c: int, order: int) -> IdentityReport:
    if c not in (4, 2, 1):
        raise ValueError("specializations exist for c in {4, 2, 1}")
    p = {"c": c}
    prod = jacobi_product_side(c, order)
    theta = jacobi_theta_side(c, order)
    weak = jacobi_weak_sum_side(c, order)
    return merge_reports(
        "jacobi-specialization",
        p,
        order,
        [
            series_report("", p, order, prod, theta, note="product vs theta"),
            series_report("", p, order, theta, weak, note="theta vs weak sum"),
        ],
    )


# ---------------------------------------------------------------------------
# the conjugate chain with alternating strict and weak inequalities


def conjugate_chain_m_form(t: int, order: int) -> Series:
    """Sum over chains M_1 > M_2 >= M_3 > M_4 >= ... >= M_(2t-1) >= 1 of
    q^(M_1) / ((1-q^(M_1)) * prod_j (1-q^(M_j))).

    Enumerated in ascending order (from M_(2t-1) up to M_1), so strictness
    sits after the even original positions.
    """
    if t < 1:
        raise ValueError("t >= 1")
    m = 2 * t - 1

    def make(pos):
        # ascending position pos holds original index m + 1 - pos
        if pos == m:
            return lambda k: weighted_geometric(k, order)
        return lambda k: geometric_full(k, order)

    factors = [make(pos) for pos in range(1, m + 1)]
    weights = [1 if pos == m else 0 for pos in range(1, m + 1)]
    strict = [pos for pos in range(1, m) if (m + 1 - pos) % 2 == 0]
    return chain_series(factors, order, strict_after=strict, exp_weight=weights)


def conjugate_chain_check(t: int, order: int) -> IdentityReport:
    """Test the alternating-inequality chain against both multisum families
    and report which family's coefficients it reproduces."""
    chain = conjugate_chain_m_form(t, order)
    weak = weak_multisum(t, order)
    if chain.agrees(weak):
        return IdentityReport(
            "conjugate-chain", {"t": t}, order, True,
            note="chain matches the weak (M-family) series",
        )
    strict = strict_multisum(t, order)
    if chain.agrees(strict):
        return IdentityReport(
            "conjugate-chain", {"t": t}, order, False,
            mismatch_at=chain.first_mismatch(weak),
            note="chain matches the strict (MO-family) series, not the weak one",
        )
    idx = chain.first_mismatch(weak)
    return IdentityReport(
        "conjugate-chain", {"t": t}, order, False, mismatch_at=idx,
        lhs=str(chain[idx]), rhs=str(weak[idx]),
        note="chain matches neither multisum family",
    )

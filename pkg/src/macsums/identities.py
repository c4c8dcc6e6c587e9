"""Finite q-identity catalog and certificate checks.

Every identity here is verified by computing BOTH sides independently as
exact truncated series (or exact rationals for the specializations at
q = 1) and comparing coefficients.  Denominators of the form [k]_q are
expanded as (1-q) times a geometric series, so every object stays a true
power series; nothing symbolic is carried along.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .macmahon import (
    chain_series,
    geometric_full,
    geometric_tail,
    weighted_geometric,
)
from .qcombo import IntPoly, gbinom, q_binomial, q_factorial, q_int
from .reports import IdentityReport, merge_reports, series_report, value_report
from .series import Series, geometric_pow


def one_minus_q_pow(r: int) -> IntPoly:
    """The polynomial (1-q)^r."""
    return IntPoly([(-1) ** i * comb(r, i) for i in range(r + 1)])


def _inv_poly(p: IntPoly, order: int) -> Series:
    return p.to_series(order).invert()


# ---------------------------------------------------------------------------
# the triplet of equivalent finite q-harmonic sums


def harmonic_multisum(t: int, n: int, order: int) -> Series:
    """Weak t-tuples with parts at most n, each factor q^k/[k]_q^2."""
    if t == 0:
        return Series.one(order)
    if n == 0:
        return Series.zero(order)
    fac = lambda k: weighted_geometric(k, order)
    core = chain_series([fac] * t, order, max_part=n)
    return core * one_minus_q_pow(2 * t).to_series(order)


def harmonic_single_sum(t: int, n: int, order: int) -> Series:
    """Alternating single sum with Gaussian binomial weights, equal to the
    multisum for every t, n."""
    if t == 0:
        return Series.one(order)
    acc = Series.zero(order)
    omq = one_minus_q_pow(2 * t)
    for k in range(1, n + 1):
        e = k * (k - 1) // 2 + t * k
        if e > order:
            continue
        base = (
            (q_binomial(n, k) * omq).to_series(order)
            * geometric_pow(k, 2 * t, order)
            * _inv_poly(q_binomial(n + k, k), order)
        )
        term = base.shift(e) + base.shift(e + k)
        acc = acc + term if k % 2 else acc - term
    return acc


def harmonic_single_sum_alt(t: int, n: int, order: int) -> Series:
    """Second displayed shape of the single sum, normalized by qbin(2n, n)."""
    if t == 0:
        return Series.one(order)
    if n == 0:
        return Series.zero(order)
    acc = Series.zero(order)
    omq = one_minus_q_pow(2 * t)
    for k in range(1, n + 1):
        e = k * (k - 1) // 2 + t * k
        if e > order:
            continue
        base = (q_binomial(2 * n, n - k) * omq).to_series(order) * geometric_pow(k, 2 * t, order)
        term = base.shift(e) + base.shift(e + k)
        acc = acc + term if k % 2 else acc - term
    return acc * _inv_poly(q_binomial(2 * n, n), order)


def harmonic_paired_sum(t: int, n: int, order: int) -> Series:
    """Paired 2t-fold sum with the shifted first denominator [n+k_1]_q."""
    if t == 0:
        return Series.one(order)
    if n == 0:
        return Series.zero(order)
    m = 2 * t

    def fac_a(pos):
        if pos == 1:
            return lambda k: geometric_full(n + k, order).shift(k)
        if pos % 2 == 0:
            return lambda k: geometric_full(k, order)
        return lambda k: geometric_tail(k, order)

    def fac_b(pos):
        if pos == 1:
            return lambda k: geometric_full(n + k, order)
        if pos % 2 == 0:
            return lambda k: geometric_tail(k, order)
        return lambda k: geometric_full(k, order)

    weights = [0] * m
    part_a = chain_series([fac_a(p) for p in range(1, m + 1)], order, max_part=n, exp_weight=weights)
    part_b = chain_series([fac_b(p) for p in range(1, m + 1)], order, max_part=n, exp_weight=weights)
    return (part_a.shift(n) + part_b) * one_minus_q_pow(m).to_series(order)


TRIPLET = {
    "multisum": harmonic_multisum,
    "single-sum": harmonic_single_sum,
    "paired-sum": harmonic_paired_sum,
}


def triplet_check(t: int, n: int, order: int) -> IdentityReport:
    p = {"t": t, "n": n}
    f = harmonic_multisum(t, n, order)
    g = harmonic_single_sum(t, n, order)
    h = harmonic_paired_sum(t, n, order)
    return merge_reports(
        "theorem-FGH",
        p,
        order,
        [
            series_report("", p, order, f, g, note="multisum vs single-sum"),
            series_report("", p, order, g, h, note="single-sum vs paired-sum"),
        ],
    )


def triplet_recurrence_check(which: str, t: int, n: int, order: int) -> IdentityReport:
    """X_t(n) - X_t(n-1) = q^n/[n]_q^2 * X_(t-1)(n) for each of the three sums."""
    fn = TRIPLET[which]
    lhs = fn(t, n, order) - fn(t, n - 1, order)
    step = one_minus_q_pow(2).to_series(order) * geometric_pow(n, 2, order)
    rhs = fn(t - 1, n, order) * step.shift(n)
    return series_report("FGH-recurrence", {"which": which, "t": t, "n": n}, order, lhs, rhs)


def single_sum_forms_check(t: int, n: int, order: int) -> IdentityReport:
    lhs = harmonic_single_sum(t, n, order)
    rhs = harmonic_single_sum_alt(t, n, order)
    return series_report("G-forms", {"t": t, "n": n}, order, lhs, rhs)


def certify_rational_equality(lhs: Series, rhs: Series, bound: int) -> bool:
    """Promote truncated agreement to rational-function equality.

    Sound when bound dominates deg(numerator) + deg(denominator) of both
    sides as rational functions: two distinct rational functions of that
    complexity cannot agree on 2*bound+1 series coefficients.
    """
    need = 2 * bound + 1
    if lhs.order < need or rhs.order < need:
        raise ValueError(f"insufficient truncation: bound {bound} needs order {need}")
    return lhs.agrees(rhs, upto=need)


def triplet_degree_bound(t: int, n: int) -> int:
    # conservative: common denominator of every term on either side
    return 2 * t * sum(range(1, 2 * n + 1))


# ---------------------------------------------------------------------------
# Dilcher-type single-sum identities


def dilcher_sides(t: int, n: int, order: int):
    omq = one_minus_q_pow(t)
    lhs = Series.zero(order)
    for k in range(1, n + 1):
        e = k * (k - 1) // 2 + t * k
        if e > order:
            continue
        base = (q_binomial(n, k) * omq).to_series(order) * geometric_pow(k, t, order)
        term = base.shift(e)
        lhs = lhs + term if k % 2 else lhs - term
    fac = lambda k: geometric_tail(k, order)
    rhs = chain_series([fac] * t, order, max_part=n) * omq.to_series(order)
    return lhs, rhs


def dilcher_check(t: int, n: int, order: int) -> IdentityReport:
    lhs, rhs = dilcher_sides(t, n, order)
    return series_report("dilcher", {"t": t, "n": n}, order, lhs, rhs)


def mss_sides(t: int, n: int, x: int, order: int):
    lhs = Series.zero(order)
    omq = one_minus_q_pow(t + 1)
    for k in range(1, n + 1):
        e = k * (k - 1) // 2 + t * k
        if e > order:
            continue
        base = (q_binomial(n, k) * q_int(k) * omq).to_series(order) * geometric_pow(x + k, t + 1, order)
        term = base.shift(e)
        lhs = lhs + term if k % 2 else lhs - term
    fac = lambda k: geometric_full(x + k, order).shift(k)
    core = chain_series([fac] * t, order, max_part=n)
    rhs = _inv_poly(q_binomial(x + n, n), order) * one_minus_q_pow(t).to_series(order) * core
    return lhs, rhs


def mss_check(t: int, n: int, x: int, order: int) -> IdentityReport:
    lhs, rhs = mss_sides(t, n, x, order)
    return series_report("mss", {"t": t, "n": n, "x": x}, order, lhs, rhs)


def _bounded_x_multisum(t, kmax, x, order):
    fac = lambda k: geometric_full(x + k, order).shift(k)
    core = chain_series([fac] * t, order, max_part=kmax)
    return one_minus_q_pow(t).to_series(order) * core


def mss_precursor_sides(t: int, n: int, x: int, order: int, reading: str = "inverse-pair"):
    """The unnumbered precursor with exponent C(k,2) - k(n-1).

    Both sides are multiplied through by q^(n(n-1)) so the negative
    exponents of the kernel become honest series shifts.

    reading = "printed": the display read literally, as a product of the
    k-sum (including its [k]_q factor) with the full multiple sum bounded
    by n.  reading = "inverse-pair": the k-sum carries no [k]_q, and the
    multiple sum inside it is bounded by the summation index k; this is
    the inverse q-binomial transform applied to the companion identity.
    """
    base_shift = n * (n - 1)
    rhs = (q_int(n) * one_minus_q_pow(t + 1)).to_series(order) * geometric_pow(x + n, t + 1, order)
    rhs = rhs.shift(t * n + base_shift)
    if reading == "printed":
        ksum = Series.zero(order)
        for k in range(1, n + 1):
            e = k * (k - 1) // 2 + (n - k) * (n - 1)
            base = (q_binomial(n, k) * q_int(k)).to_series(order) * _inv_poly(q_binomial(x + k, k), order)
            term = base.shift(e)
            ksum = ksum + term if k % 2 else ksum - term
        lhs = ksum * _bounded_x_multisum(t, n, x, order)
    elif reading == "inverse-pair":
        lhs = Series.zero(order)
        for k in range(1, n + 1):
            e = k * (k - 1) // 2 + (n - k) * (n - 1)
            base = (
                q_binomial(n, k).to_series(order)
                * _inv_poly(q_binomial(x + k, k), order)
                * _bounded_x_multisum(t, k, x, order)
            )
            term = base.shift(e)
            lhs = lhs + term if k % 2 else lhs - term
    else:
        raise ValueError(f"unknown reading {reading!r}")
    return lhs, rhs


def mss_precursor_check(t: int, n: int, x: int, order: int) -> IdentityReport:
    """Check the inverse-pair reading; the note records what the literal
    display does at the same parameters."""
    p = {"t": t, "n": n, "x": x}
    lhs, rhs = mss_precursor_sides(t, n, x, order, reading="inverse-pair")
    main = series_report("mss-precursor", p, order, lhs, rhs)
    lit_lhs, lit_rhs = mss_precursor_sides(t, n, x, order, reading="printed")
    lit_ok = lit_lhs.agrees(lit_rhs)
    main.note = (
        "inverse-pair reading; literal printed form "
        + ("also holds" if lit_ok else f"fails (first mismatch at q^{lit_lhs.first_mismatch(lit_rhs)})")
    )
    return main


def atid_b_sides(t: int, n: int, x: int, order: int):
    omq = one_minus_q_pow(2 * t)
    lhs = Series.zero(order)
    for k in range(1, n + 1):
        e = k * (k - 1) // 2 + (x + 2 * t) * k
        if e > order:
            continue
        base = (
            (q_binomial(n, k) * omq).to_series(order)
            * geometric_pow(k, 2 * t, order)
            * _inv_poly(q_binomial(x + k, k), order)
        )
        term = base.shift(e)
        lhs = lhs + term if k % 2 else lhs - term

    def make(pos):
        if pos == 1:
            return lambda k: geometric_full(x + k, order).shift(x + k)
        return lambda k: geometric_tail(k, order)

    core = chain_series([make(p) for p in range(1, 2 * t + 1)], order, max_part=n)
    rhs = omq.to_series(order) * core
    return lhs, rhs


def atid_b_check(t: int, n: int, x: int, order: int) -> IdentityReport:
    lhs, rhs = atid_b_sides(t, n, x, order)
    return series_report("atidB", {"t": t, "n": n, "x": x}, order, lhs, rhs)


def cor52_sides(t: int, n: int, x: int, z: int, order: int):
    lhs = Series.zero(order)
    for k in range(1, n + 1):
        e = k * (k - 1) // 2 + (x + t) * k
        if e > order:
            continue
        base = (
            (q_binomial(n, k) * one_minus_q_pow(t)).to_series(order)
            * geometric_pow(z + k, t, order)
            * _inv_poly(q_binomial(x + k, k), order)
        )
        term = base.shift(e)
        lhs = lhs + term if k % 2 else lhs - term

    def pos1(k):
        return (
            (q_int(k) * q_binomial(z + k, k)).to_series(order)
            * geometric_full(x + k, order)
            * geometric_full(z + k, order)
        ).shift(k)

    def rest(k):
        return geometric_full(z + k, order).shift(k)

    factors = [pos1] + [rest] * (t - 1)
    core = chain_series(factors, order, max_part=n)
    rhs = (
        _inv_poly(q_binomial(z + n, n), order)
        * one_minus_q_pow(t + 1).to_series(order)
        * core
    ).shift(x)
    return lhs, rhs


def cor52_check(t: int, n: int, x: int, z: int, order: int) -> IdentityReport:
    lhs, rhs = cor52_sides(t, n, x, z, order)
    return series_report("cor52", {"t": t, "n": n, "x": x, "z": z}, order, lhs, rhs)


def cor53_sides(t: int, n: int, z: int, order: int):
    lhs = Series.zero(order)
    for k in range(1, n + 1):
        e = k * (k - 1) // 2 + t * k
        if e > order:
            continue
        base = (q_binomial(n, k) * q_int(k) * one_minus_q_pow(t + 1)).to_series(order) * geometric_pow(
            z + k, t + 1, order
        )
        term = base.shift(e)
        lhs = lhs + term if k % 2 else lhs - term
    fac = lambda k: geometric_full(z + k, order).shift(k)
    core = chain_series([fac] * t, order, max_part=n)
    rhs = _inv_poly(q_binomial(z + n, n), order) * one_minus_q_pow(t).to_series(order) * core
    return lhs, rhs


def cor53_check(t: int, n: int, z: int, order: int) -> IdentityReport:
    lhs, rhs = cor53_sides(t, n, z, order)
    return series_report("cor53", {"t": t, "n": n, "z": z}, order, lhs, rhs)


# ---------------------------------------------------------------------------
# the rational specializations (q = 1), exact rational arithmetic throughout


def _check_poles(n, z, x=None):
    for k in range(1, n + 1):
        if z + k == 0:
            raise ValueError("parameter hits pole: z + k = 0")
        if x is not None and x + k == 0:
            raise ValueError("parameter hits pole: x + k = 0")


def master_lemma_sides(t: int, n: int, z, a_seq):
    """General form: any sequence a with b defined by the alternating
    binomial transform satisfies the lemma."""
    z = Fraction(z)
    _check_poles(n, z)
    a = [Fraction(v) for v in a_seq]
    if len(a) < n:
        raise ValueError("need a_1..a_n")
    b = []
    for m in range(1, n + 1):
        s = Fraction(0)
        for k in range(1, m + 1):
            term = comb(m, k) * a[k - 1]
            s += term if k % 2 else -term
        b.append(s)
    lhs = Fraction(0)
    for k in range(1, n + 1):
        term = comb(n, k) * a[k - 1] / (z + k) ** t
        lhs += term if k % 2 else -term
    denom = gbinom(z + n, n)
    if denom == 0:
        raise ValueError("parameter hits pole: C(z+n, n) = 0")
    rhs = Fraction(0)
    for tup in combinations_with_replacement(range(1, n + 1), t):
        k1 = tup[0]
        num = b[k1 - 1] * gbinom(z + k1, k1)
        den = Fraction(1)
        for kj in tup:
            den *= z + kj
        rhs += num / den
    rhs /= denom
    return lhs, rhs


def rational_master_sides(t: int, n: int, z, x):
    """Master identity specialized: a_k = 1/C(x+k, k), b_k = k/(x+k)."""
    z = Fraction(z)
    x = Fraction(x)
    _check_poles(n, z, x)
    lhs = Fraction(0)
    for k in range(1, n + 1):
        bk = gbinom(x + k, k)
        if bk == 0:
            raise ValueError("parameter hits pole: C(x+k, k) = 0")
        term = Fraction(comb(n, k)) / ((z + k) ** t * bk)
        lhs += term if k % 2 else -term
    denom = gbinom(z + n, n)
    if denom == 0:
        raise ValueError("parameter hits pole: C(z+n, n) = 0")
    rhs = Fraction(0)
    for tup in combinations_with_replacement(range(1, n + 1), t):
        k1 = tup[0]
        num = k1 * gbinom(z + k1, k1)
        den = (x + k1) * Fraction(1)
        for kj in tup:
            den *= z + kj
        rhs += num / den
    rhs /= denom
    return lhs, rhs


def rational_master_check(t: int, n: int, z, x) -> IdentityReport:
    try:
        lhs, rhs = rational_master_sides(t, n, z, x)
    except ValueError as exc:
        return IdentityReport(
            "rational-master", {"t": t, "n": n, "z": str(z), "x": str(x)}, None, False, note=str(exc)
        )
    return value_report("rational-master", {"t": t, "n": n, "z": str(z), "x": str(x)}, lhs, rhs)


def rational_hypothesis_check(n: int, x) -> IdentityReport:
    """The seed identity: alternating sum of C(n,k)/C(x+k,k) equals n/(x+n)."""
    x = Fraction(x)
    lhs = Fraction(0)
    for k in range(1, n + 1):
        bk = gbinom(x + k, k)
        if bk == 0:
            raise ValueError("parameter hits pole: C(x+k, k) = 0")
        term = Fraction(comb(n, k)) / bk
        lhs += term if k % 2 else -term
    rhs = Fraction(n) / (x + n)
    return value_report("rational-hypothesis", {"n": n, "x": str(x)}, lhs, rhs)


def rational_triplet_check(t: int, n: int) -> IdentityReport:
    """The q = 1 shadow of the triplet (set x = n in the master corollary):
    multisum of 1/(k_1^2...k_t^2) equals twice the alternating single sum,
    equals the paired 2t-fold sum."""
    s1 = Fraction(0)
    for tup in combinations_with_replacement(range(1, n + 1), t):
        den = 1
        for k in tup:
            den *= k * k
        s1 += Fraction(1, den)
    s2 = Fraction(0)
    for k in range(1, n + 1):
        term = Fraction(2 * comb(n, k), k ** (2 * t) * comb(n + k, k))
        s2 += term if k % 2 else -term
    s3 = Fraction(0)
    for tup in combinations_with_replacement(range(1, n + 1), 2 * t):
        den = (n + tup[0]) * 1
        for k in tup[1:]:
            den *= k
        s3 += Fraction(2, den)
    return merge_reports(
        "rational-FGH-limit",
        {"t": t, "n": n},
        None,
        [
            value_report("", {}, s1, s2, note="multisum vs single sum"),
            value_report("", {}, s2, s3, note="single sum vs paired sum"),
        ],
    )


# ---------------------------------------------------------------------------
# WZ certificate checks


def wz_master_check(z, nmax: int) -> IdentityReport:
    """Certificate for the binomial sum used by the master lemma:
    F(m,k) = C(z+k,k)/(z+k) * C(k,m), G(m,k) = F(m,k)(k-m)/(z+m)."""
    z = Fraction(z)

    def F(m, k):
        return gbinom(z + k, k) / (z + k) * comb(k, m)

    def G(m, k):
        return F(m, k) * (k - m) / (z + m)

    p = {"z": str(z), "nmax": nmax}
    for m in range(1, nmax + 1):
        if z + m == 0:
            return IdentityReport("wz-master", p, None, False, note="z + m = 0 pole")
        total = Fraction(0)
        for k in range(m, nmax + 1):
            if F(m, k) != G(m, k + 1) - G(m, k):
                return IdentityReport(
                    "wz-master", p, None, False,
                    note=f"pair relation fails at m={m}, k={k}",
                )
            total += F(m, k)
            # telescoping closed form at every endpoint n = k
            closed = gbinom(z + k, k) / (z + m) * comb(k, m)
            if total != closed:
                return IdentityReport(
                    "wz-master", p, None, False,
                    note=f"telescoped sum fails at m={m}, n={k}",
                )
    return IdentityReport("wz-master", p, None, True)


def wz_cor32_check(x, nmax: int) -> IdentityReport:
    """Certificate for the seed identity of the master corollary.

    As printed the pair relation is garbled; the relation that holds is
    F(n,k) = G(n,k) - G(n,k+1) with G(n,k) = (x+k)/(x+n) F(n,k).
    """
    x = Fraction(x)

    def F(n, k):
        s = Fraction(comb(n, k)) / gbinom(x + k, k)
        return s if k % 2 else -s

    def G(n, k):
        return (x + k) / (x + n) * F(n, k)

    p = {"x": str(x), "nmax": nmax}
    for n in range(1, nmax + 1):
        total = Fraction(0)
        for k in range(1, n + 1):
            if F(n, k) != G(n, k) - G(n, k + 1):
                return IdentityReport(
                    "wz-cor32", p, None, False, note=f"pair relation fails at n={n}, k={k}"
                )
            total += F(n, k)
        if total != Fraction(n) / (x + n):
            return IdentityReport("wz-cor32", p, None, False, note=f"sum wrong at n={n}")
    return IdentityReport("wz-cor32", p, None, True)


def _wz_lemma51_F(m, k, z, order):
    base = (q_binomial(z + k, k) * q_binomial(k, m)).to_series(order) * _inv_poly(q_int(z + k), order)
    return base.shift(k)


def _wz_lemma51_G(m, k, z, order):
    # F(m,k) [k-m]_q q^(m-k) / [z+m]_q; the q^k inside F cancels down to q^m,
    # so this is a genuine power series
    if k <= m:
        return Series.zero(order)
    base = (
        (q_binomial(z + k, k) * q_binomial(k, m) * q_int(k - m)).to_series(order)
        * _inv_poly(q_int(z + k), order)
        * _inv_poly(q_int(z + m), order)
    )
    return base.shift(m)


def wz_lemma51_check(z: int, nmax: int, order: int) -> IdentityReport:
    """q-certificate behind the z-shifted transform lemma."""
    p = {"z": z, "nmax": nmax}
    for m in range(1, nmax + 1):
        total = Series.zero(order)
        for k in range(m, nmax + 1):
            F = _wz_lemma51_F(m, k, z, order)
            diff = _wz_lemma51_G(m, k + 1, z, order) - _wz_lemma51_G(m, k, z, order)
            if not F.agrees(diff):
                return IdentityReport(
                    "wz-lemma51", p, order, False, note=f"pair relation fails at m={m}, k={k}"
                )
            total = total + F
            closed = (
                (q_binomial(z + k, k) * q_binomial(k, m)).to_series(order)
                * _inv_poly(q_int(z + m), order)
            ).shift(m)
            if not total.agrees(closed):
                return IdentityReport(
                    "wz-lemma51", p, order, False, note=f"telescoped sum fails at m={m}, n={k}"
                )
    return IdentityReport("wz-lemma51", p, order, True)


def _wz52_F(n, k, x, order):
    # (-1)^(k-1) qbin(n,k) a_k / b_n with a_k = q^(C(k,2)+xk)/qbin(x+k,k),
    # b_n = [n]_q q^x/[x+n]_q; exponent C(k,2) + x(k-1) stays nonnegative
    if k > n:
        return Series.zero(order)
    e = k * (k - 1) // 2 + x * (k - 1)
    base = (
        (q_binomial(n, k) * q_int(x + n)).to_series(order)
        * _inv_poly(q_binomial(x + k, k), order)
        * _inv_poly(q_int(n), order)
    )
    s = base.shift(e)
    return s if k % 2 else -s


def _wz52_G(n, k, x, order):
    # -F(n,k) [x+k][k-1] q^(n+1-k) / ([x+n][n+1-k]), written with
    # qbin(n,k)/[n+1-k] = qbin(n,k-1)/[k] so the k = n+1 boundary is regular
    if k < 1 or k > n + 1:
        return Series.zero(order)
    e = k * (k - 1) // 2 + x * (k - 1) + n + 1 - k
    base = (
        (q_binomial(n, k - 1) * q_int(x + k) * q_int(k - 1)).to_series(order)
        * _inv_poly(q_int(k), order)
        * _inv_poly(q_binomial(x + k, k), order)
        * _inv_poly(q_int(n), order)
    )
    s = base.shift(e)
    return -s if k % 2 else s


def wz_cor52_check(x: int, nmax: int, order: int) -> IdentityReport:
    p = {"x": x, "nmax": nmax}
    for n in range(1, nmax + 1):
        # normalized row sums equal 1: the transform hypothesis itself
        total = Series.zero(order)
        for k in range(1, n + 1):
            total = total + _wz52_F(n, k, x, order)
        if not total.agrees(Series.one(order)):
            return IdentityReport("wz-cor52", p, order, False, note=f"row sum differs from 1 at n={n}")
        for k in range(1, n + 2):
            lhs = _wz52_F(n + 1, k, x, order) - _wz52_F(n, k, x, order)
            rhs = _wz52_G(n, k + 1, x, order) - _wz52_G(n, k, x, order)
            if not lhs.agrees(rhs):
                return IdentityReport(
                    "wz-cor52", p, order, False, note=f"pair relation fails at n={n}, k={k}"
                )
    return IdentityReport("wz-cor52", p, order, True)


def _wz53_F(n, k, z, order):
    # a_k = [k]_q q^C(k,2)/[z+k]_q, b_k = 1/qbin(z+k,k)
    if k > n:
        return Series.zero(order)
    e = k * (k - 1) // 2
    base = (q_binomial(n, k) * q_int(k) * q_binomial(z + n, n)).to_series(order) * _inv_poly(
        q_int(z + k), order
    )
    s = base.shift(e)
    return s if k % 2 else -s


def _wz53_G(n, k, z, order):
    if k < 1 or k > n + 1:
        return Series.zero(order)
    e = k * (k - 1) // 2 + n + 1 - k
    base = (q_binomial(n, k - 1) * q_int(k - 1) * q_binomial(z + n, n)).to_series(order) * _inv_poly(
        q_int(n), order
    )
    s = base.shift(e)
    return -s if k % 2 else s


def wz_cor53_check(z: int, nmax: int, order: int) -> IdentityReport:
    p = {"z": z, "nmax": nmax}
    for n in range(1, nmax + 1):
        total = Series.zero(order)
        for k in range(1, n + 1):
            total = total + _wz53_F(n, k, z, order)
        if not total.agrees(Series.one(order)):
            return IdentityReport("wz-cor53", p, order, False, note=f"row sum differs from 1 at n={n}")
        for k in range(1, n + 2):
            lhs = _wz53_F(n + 1, k, z, order) - _wz53_F(n, k, z, order)
            rhs = _wz53_G(n, k + 1, z, order) - _wz53_G(n, k, z, order)
            if not lhs.agrees(rhs):
                return IdentityReport(
                    "wz-cor53", p, order, False, note=f"pair relation fails at n={n}, k={k}"
                )
    return IdentityReport("wz-cor53", p, order, True)


def qbin_difference_check(nmax: int, order: int) -> IdentityReport:
    """Finite-difference lemma used to prove the single-sum recurrence:
    qbin(n,k)/qbin(n+k,k) - qbin(n-1,k)/qbin(n+k-1,k)
      = [n-1]!^2 [k]_q^2 q^(n-k) / ([n-k]! [n+k]!).

    The numerator factor is [k]_q^2: expanding the factorial ratio gives
    ([n]^2 - [n-k][n+k]) = q^(n-k) (1-q^k)^2 / (1-q)^2."""
    p = {"nmax": nmax}
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            lhs = q_binomial(n, k).to_series(order) * _inv_poly(q_binomial(n + k, k), order)
            lhs = lhs - q_binomial(n - 1, k).to_series(order) * _inv_poly(q_binomial(n + k - 1, k), order)
            num = q_factorial(n - 1) * q_factorial(n - 1) * q_int(k) * q_int(k)
            rhs = (
                num.to_series(order)
                * _inv_poly(q_factorial(n - k) * q_factorial(n + k), order)
            ).shift(n - k)
            if not lhs.agrees(rhs):
                return IdentityReport(
                    "wz-qbin-diff", p, order, False, note=f"fails at n={n}, k={k}"
                )
    return IdentityReport("wz-qbin-diff", p, order, True)

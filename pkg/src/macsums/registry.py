"""Data-driven identity catalog.

Each entry binds an identity id to a runner over a parameter grid.  The
command-line front end and the test suite iterate the same registry, so
anything verifiable from the CLI is exactly what the tests verify.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import identities as ident
from . import macmahon as mac
from .divisors import (
    LAMBERT_FAMILY,
    TAIL_FAMILY,
    alternating_tail_quotient,
    binomial_lambert,
    eisenstein,
    lambert_series,
    lower_factorial,
    power_lambert,
    raising_factorial,
    square_product,
    umbral_eval,
)
from .qcombo import central_T, central_u
from .reports import IdentityReport, series_report
from .series import Series, q_derivative


@dataclass(frozen=True)
class IdentitySpec:
    ident: str
    runner: Callable  # (grids: dict[str, list[int]], order: int) -> list[IdentityReport]
    description: str
    grid_params: tuple = ()
    defaults: dict = field(default_factory=dict)


REGISTRY: dict[str, IdentitySpec] = {}


def register(ident_id, description, grid_params=(), **defaults):
    def wrap(fn):
        REGISTRY[ident_id] = IdentitySpec(ident_id, fn, description, tuple(grid_params), defaults)
        return fn

    return wrap


def _grid(grids, name, defaults):
    return grids.get(name) or defaults[name]


@register("theorem-FGH", "three equal finite q-harmonic sums", ("t", "n"), t=(1, 2, 3), n=(1, 2, 3, 4))
def _run_fgh(grids, order):
    out = []
    for t in _grid(grids, "t", _run_fgh.defaults):
        for n in _grid(grids, "n", _run_fgh.defaults):
            out.append(ident.triplet_check(t, n, order))
    return out


_run_fgh.defaults = {"t": (1, 2, 3), "n": (1, 2, 3, 4)}


def _simple(defaults):
    def deco(fn):
        fn.defaults = defaults
        return fn

    return deco


@register("FGH-recurrence", "first-difference recurrence for all three sums", ("t", "n"))
@_simple({"t": (1, 2, 3), "n": (1, 2, 3)})
def _run_fgh_rec(grids, order):
    out = []
    for t in _grid(grids, "t", _run_fgh_rec.defaults):
        for n in _grid(grids, "n", _run_fgh_rec.defaults):
            for which in ("multisum", "single-sum", "paired-sum"):
                out.append(ident.triplet_recurrence_check(which, t, n, order))
    return out


@register("G-forms", "both shapes of the alternating single sum agree", ("t", "n"))
@_simple({"t": (1, 2, 3), "n": (1, 2, 3)})
def _run_gforms(grids, order):
    out = []
    for t in _grid(grids, "t", _run_gforms.defaults):
        for n in _grid(grids, "n", _run_gforms.defaults):
            out.append(ident.single_sum_forms_check(t, n, order))
    return out


@register("dilcher", "single sum vs multisum with simple q-integer denominators", ("t", "n"))
@_simple({"t": (1, 2, 3, 4), "n": (1, 2, 3, 4)})
def _run_dilcher(grids, order):
    out = []
    for t in _grid(grids, "t", _run_dilcher.defaults):
        for n in _grid(grids, "n", _run_dilcher.defaults):
            out.append(ident.dilcher_check(t, n, order))
    return out


@register("mss", "x-shifted single sum vs multisum", ("t", "n", "x"))
@_simple({"t": (1, 2, 3), "n": (1, 2, 3), "x": (0, 1, 2)})
def _run_mss(grids, order):
    out = []
    for t in _grid(grids, "t", _run_mss.defaults):
        for n in _grid(grids, "n", _run_mss.defaults):
            for x in _grid(grids, "x", _run_mss.defaults):
                out.append(ident.mss_check(t, n, x, order))
    return out


@register("mss-precursor", "inverse-pair reading of the unnumbered precursor", ("t", "n", "x"))
@_simple({"t": (1, 2), "n": (1, 2, 3), "x": (0, 1, 2)})
def _run_mss_pre(grids, order):
    out = []
    for t in _grid(grids, "t", _run_mss_pre.defaults):
        for n in _grid(grids, "n", _run_mss_pre.defaults):
            for x in _grid(grids, "x", _run_mss_pre.defaults):
                out.append(ident.mss_precursor_check(t, n, x, order))
    return out


@register("atidB", "x-shifted 2t-fold identity", ("t", "n", "x"))
@_simple({"t": (1, 2, 3), "n": (1, 2, 3), "x": (0, 1, 2)})
def _run_atidb(grids, order):
    out = []
    for t in _grid(grids, "t", _run_atidb.defaults):
        for n in _grid(grids, "n", _run_atidb.defaults):
            for x in _grid(grids, "x", _run_atidb.defaults):
                out.append(ident.atid_b_check(t, n, x, order))
    return out


@register("cor52", "two-parameter (x, z) single sum vs weighted multisum", ("t", "n", "x", "z"))
@_simple({"t": (1, 2), "n": (1, 2, 3), "x": (0, 1), "z": (0, 1)})
def _run_cor52(grids, order):
    out = []
    d = _run_cor52.defaults
    for t in _grid(grids, "t", d):
        for n in _grid(grids, "n", d):
            for x in _grid(grids, "x", d):
                for z in _grid(grids, "z", d):
                    out.append(ident.cor52_check(t, n, x, z, order))
    return out


@register("cor53", "z-shifted recovery of the x-shifted identity", ("t", "n", "z"))
@_simple({"t": (1, 2, 3), "n": (1, 2, 3), "z": (0, 1, 2)})
def _run_cor53(grids, order):
    out = []
    d = _run_cor53.defaults
    for t in _grid(grids, "t", d):
        for n in _grid(grids, "n", d):
            for z in _grid(grids, "z", d):
                out.append(ident.cor53_check(t, n, z, order))
    return out


_RATIONAL_PARAMS = (0, 1, 2, Fraction(1, 2), Fraction(7, 3))


@register("rational-master", "exact rational master identity at q = 1", ("t", "n"))
@_simple({"t": (1, 2, 3, 4), "n": (1, 2, 4, 6, 8)})
def _run_rational_master(grids, order):
    out = []
    d = _run_rational_master.defaults
    for t in _grid(grids, "t", d):
        for n in _grid(grids, "n", d):
            for z in _RATIONAL_PARAMS:
                for x in _RATIONAL_PARAMS:
                    out.append(ident.rational_master_check(t, n, z, x))
    return out


@register("rational-hypothesis", "alternating binomial seed identity", ("n",))
@_simple({"n": (1, 2, 3, 4, 5, 6)})
def _run_rational_hyp(grids, order):
    out = []
    for n in _grid(grids, "n", _run_rational_hyp.defaults):
        for x in _RATIONAL_PARAMS:
            out.append(ident.rational_hypothesis_check(n, x))
    return out


@register("rational-FGH-limit", "the q = 1 shadow of the triplet", ("t", "n"))
@_simple({"t": (1, 2, 3), "n": (1, 2, 3, 4, 5, 6)})
def _run_rational_fgh(grids, order):
    out = []
    d = _run_rational_fgh.defaults
    for t in _grid(grids, "t", d):
        for n in _grid(grids, "n", d):
            out.append(ident.rational_triplet_check(t, n))
    return out


@register("wz-certificates", "all difference certificates on their grids", ())
@_simple({})
def _run_wz(grids, order):
    return [
        ident.wz_master_check(0, 6),
        ident.wz_master_check(1, 6),
        ident.wz_master_check(Fraction(1, 2), 6),
        ident.wz_cor32_check(Fraction(1, 2), 6),
        ident.wz_cor32_check(2, 6),
        ident.wz_cor32_check(Fraction(7, 3), 6),
        ident.wz_lemma51_check(1, 4, order),
        ident.wz_cor52_check(0, 3, order),
        ident.wz_cor52_check(1, 3, order),
        ident.wz_cor53_check(0, 3, order),
        ident.wz_cor53_check(1, 3, order),
        ident.qbin_difference_check(5, order),
    ]


def _closed_form_runner(which):
    def run(grids, order):
        return [mac.closed_form_check(which, order)]

    run.defaults = {}
    return run


for _which, _id in (
    ("V2_ode", "closed-form-V2"),
    ("V3_ode", "closed-form-V3-ode"),
    ("V3_sigma", "closed-form-V3"),
    ("U3mV3_sigma", "closed-form-U3-minus-V3"),
    ("U4_sigma", "closed-form-U4"),
    ("MO251", "sigma1-convolution"),
    ("excess_V2U2", "excess-V2-U2"),
    ("V1_E2", "V1-eisenstein"),
):
    REGISTRY[_id] = IdentitySpec(
        _id, _closed_form_runner(_which), f"closed form {_which}", (), {}
    )


@register("conjugate-M-form", "smallest-part weighted conjugate sum equals the multisum", ("t",))
@_simple({"t": (1, 2, 3)})
def _run_conjugate(grids, order):
    out = []
    for t in _grid(grids, "t", _run_conjugate.defaults):
        lhs = mac.m_conjugate_form(t, order)
        rhs = mac.weak_multisum(t, order)
        out.append(series_report("conjugate-M-form", {"t": t}, order, lhs, rhs))
    return out


@register("conjugate-chain", "alternating-inequality chain vs both multisum families", ("t",))
@_simple({"t": (1, 2, 3)})
def _run_chain(grids, order):
    return [
        mac.conjugate_chain_check(t, order) for t in _grid(grids, "t", _run_chain.defaults)
    ]


@register("jacobi-specialization", "product = theta sum = signed weak sums", ("c",))
@_simple({"c": (4, 2, 1)})
def _run_jacobi(grids, order):
    return [
        mac.jacobi_specialization_check(c, order) for c in _grid(grids, "c", _run_jacobi.defaults)
    ]


@register("U-agreement", "five formula routes for the strict family agree", ("t",))
@_simple({"t": (1, 2, 3)})
def _run_uagree(grids, order):
    out = []
    for t in _grid(grids, "t", _run_uagree.defaults):
        base = mac.strict_multisum(t, order)
        for name in ("andrews-rose", "umbral", "recurrence", "symmetric"):
            other = mac.MO_FORMULAS[name](t, order)
            out.append(
                series_report("U-agreement", {"t": t, "formula": name}, order, base, other)
            )
    return out


@register("V-agreement", "four formula routes for the weak family agree", ("t",))
@_simple({"t": (1, 2, 3)})
def _run_vagree(grids, order):
    out = []
    for t in _grid(grids, "t", _run_vagree.defaults):
        base = mac.weak_multisum(t, order)
        for name in ("single-sum", "conjugate", "recurrence"):
            other = mac.M_FORMULAS[name](t, order)
            out.append(
                series_report("V-agreement", {"t": t, "formula": name}, order, base, other)
            )
    return out


@register("symmetric-relation", "alternating strict/weak convolution vanishes", ("t",))
@_simple({"t": (1, 2, 3, 4)})
def _run_symmetric(grids, order):
    return [
        mac.symmetric_relation_check(t, order)
        for t in _grid(grids, "t", _run_symmetric.defaults)
    ]


@register("stirling-lambert", "binomial Lambert series as a Stirling combination", ("t",))
@_simple({"t": (1, 2, 3, 4)})
def _run_stirling_lambert(grids, order):
    from math import factorial

    out = []
    for t in _grid(grids, "t", _run_stirling_lambert.defaults):
        lhs = binomial_lambert(t, order) * factorial(2 * t - 1)
        rhs = Series.zero(order)
        for k in range(t):
            term = lambert_series(2 * t - 1 - 2 * k, order) * central_u(t, k)
            rhs = rhs + term if k % 2 == 0 else rhs - term
        out.append(series_report("stirling-lambert", {"t": t}, order, lhs, rhs))
    return out


@register("umbral-square-product", "binomial Lambert series as one umbral product", ("t",))
@_simple({"t": (1, 2, 3, 4)})
def _run_umbral_square(grids, order):
    from math import factorial

    out = []
    for t in _grid(grids, "t", _run_umbral_square.defaults):
        lhs = binomial_lambert(t, order) * factorial(2 * t - 1)
        rhs = umbral_eval(square_product(t), LAMBERT_FAMILY, order)
        out.append(series_report("umbral-square-product", {"t": t}, order, lhs, rhs))
    return out


@register("T-inversion", "central factorial inversion back to a plain Lambert series", ("t",))
@_simple({"t": (1, 2, 3, 4)})
def _run_t_inversion(grids, order):
    from math import factorial

    out = []
    for t in _grid(grids, "t", _run_t_inversion.defaults):
        lhs = Series.zero(order)
        for k in range(1, t + 1):
            lhs = lhs + binomial_lambert(k, order) * (central_T(t, k) * factorial(2 * k - 1))
        rhs = lambert_series(2 * t - 1, order)
        out.append(series_report("T-inversion", {"t": t}, order, lhs, rhs))
    return out


@register("umbral-compact", "t-th power Lambert sum as an umbral falling product", ("t",))
@_simple({"t": (1, 2, 3, 4)})
def _run_umbral_compact(grids, order):
    from math import factorial

    out = []
    for t in _grid(grids, "t", _run_umbral_compact.defaults):
        lhs = power_lambert(t, order) * factorial(t - 1)
        rhs = umbral_eval(lower_factorial(t), LAMBERT_FAMILY, order)
        out.append(series_report("umbral-compact", {"t": t}, order, lhs, rhs))
    return out


@register("umbral-tail", "alternating theta quotient as an umbral rising product", ("t",))
@_simple({"t": (1, 2, 3, 4)})
def _run_umbral_tail(grids, order):
    from math import factorial

    out = []
    for t in _grid(grids, "t", _run_umbral_tail.defaults):
        lhs = alternating_tail_quotient(t, order) * factorial(t)
        rhs = umbral_eval(raising_factorial(t), TAIL_FAMILY, order)
        out.append(series_report("umbral-tail", {"t": t}, order, lhs, rhs))
    return out


@register("eisenstein-ramanujan", "the three modular derivative identities", ())
@_simple({})
def _run_ramanujan(grids, order):
    e2 = eisenstein("E2", order)
    e4 = eisenstein("E4", order)
    e6 = eisenstein("E6", order)
    return [
        series_report("eisenstein-ramanujan", {"which": "E2"}, order, 12 * q_derivative(e2), e2 * e2 - e4),
        series_report("eisenstein-ramanujan", {"which": "E4"}, order, 3 * q_derivative(e4), e2 * e4 - e6),
        series_report("eisenstein-ramanujan", {"which": "E6"}, order, 2 * q_derivative(e6), e2 * e6 - e4 * e4),
    ]


def known_ids():
    return sorted(REGISTRY)


def run_identity(ident_id: str, grids: dict, order: int) -> list[IdentityReport]:
    if ident_id not in REGISTRY:
        raise KeyError(ident_id)
    spec = REGISTRY[ident_id]
    return spec.runner(grids, order)

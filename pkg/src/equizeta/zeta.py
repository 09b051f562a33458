"""The closed-form engine for equivariant zeta functions.

Given resolution data, each declared stratum orbit contributes

    (u-1)^e  *  beta  *  prod_i  T^N_i / (u^nu_i - T^N_i)

where e is the size of the representative subset for the naive variant and
one less for the signed variants (which read the cover values instead of
beta).  Negative powers of u never appear: every u^-nu T^N / (1 - u^-nu T^N)
is stored cleared as T^N / (u^nu - T^N).  The sum is put over one common
denominator -- the least common multiple of the coefficient denominators
times each distinct (nu, N) factor at its maximal multiplicity -- without any
bivariate gcd reduction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidResolution
from .gspace import beta_value
from .ratpoly import BiPoly, RatFunc, ZetaRational, pdivexact, pgcd, pmul
from .resolution import ResolutionData, StratumEntry, validate

VARIANTS = ("naive", "plus", "minus")


def _check_variant(variant: str):
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def _stratum_expr(st: StratumEntry, variant: str):
    if variant == "naive":
        return st.beta
    if variant == "plus":
        return st.beta_plus
    return st.beta_minus


def _stratum_terms(res: ResolutionData, variant: str):
    """Per-stratum (coefficient, factor multiset) pairs, declared order."""
    dmap = res.divisor_map()
    u_minus_1 = RatFunc.poly((-1, 1))
    terms = []
    for st in res.strata:
        expr = _stratum_expr(st, variant)
        if expr is None:
            continue
        coeff = beta_value(expr)
        if coeff.is_zero():
            continue
        exponent = len(st.divisors) - (0 if variant == "naive" else 1)
        for _ in range(exponent):
            coeff = coeff * u_minus_1
        factors = sorted((dmap[i].nu, dmap[i].N) for i in st.divisors)
        terms.append((coeff, factors))
    return terms


def _lcm_fold(polys):
    """LCM of u-polynomials, order-insensitive (inputs sorted first)."""
    out = (1,)
    for p in sorted(polys):
        g = pgcd(out, p)
        out = pdivexact(pmul(out, p), g)
    return out


def denef_loeser(res: ResolutionData, variant: str = "naive") -> ZetaRational:
    """Closed-form zeta function of validated resolution data."""
    _check_variant(variant)
    diags = validate(res)
    if diags:
        raise InvalidResolution(diags)
    terms = _stratum_terms(res, variant)
    if not terms:
        return ZetaRational.zero()

    den_u = _lcm_fold([coeff.den for coeff, _ in terms])
    factor_max = Counter()
    for _, factors in terms:
        for key, count in Counter(factors).items():
            factor_max[key] = max(factor_max[key], count)

    den = BiPoly.from_upoly(den_u)
    for (nu, N), count in sorted(factor_max.items()):
        piece = BiPoly({(nu, 0): 1, (0, N): -1})
        for _ in range(count):
            den = den * piece

    num = BiPoly()
    for coeff, factors in terms:
        scaled = pmul(coeff.num, pdivexact(den_u, coeff.den))
        t_total = sum(N for _, N in factors)
        part = BiPoly.from_upoly(scaled) * BiPoly.monomial(0, t_total)
        missing = factor_max - Counter(factors)
        for (nu, N), count in sorted(missing.items()):
            piece = BiPoly({(nu, 0): 1, (0, N): -1})
            for _ in range(count):
                part = part * piece
        num = num + part
    if num.is_zero():
        return ZetaRational.zero()
    return ZetaRational(num, den)


def display(res: ResolutionData, variant: str = "naive") -> str:
    """Per-stratum sum in the u^-nu T^N notation, for eyeballing."""
    _check_variant(variant)
    terms = _stratum_terms(res, variant)
    if not terms:
        return "0"
    parts = []
    for coeff, factors in terms:
        text = str(coeff)
        if " " in text or "/" in text:
            text = f"({text})"
        pieces = [text]
        for nu, N in factors:
            pieces.append(f"[u^-{nu} T^{N} / (1 - u^-{nu} T^{N})]")
        parts.append(" * ".join(pieces))
    return " + ".join(parts)


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of comparing one zeta variant of two resolutions.

    ``first_differing_T_order`` is the smallest series order that separates
    them, when one exists within the searched window; the two coefficients at
    that order come along as the witness.
    """

    equal: bool
    variant: str
    first_differing_T_order: Optional[int] = None
    lhs_coeff: Optional[RatFunc] = None
    rhs_coeff: Optional[RatFunc] = None

    def to_json(self) -> dict:
        return {
            "equal": self.equal,
            "variant": self.variant,
            "first_differing_T_order": self.first_differing_T_order,
            "lhs_coeff": None if self.lhs_coeff is None else self.lhs_coeff.to_json(),
            "rhs_coeff": None if self.rhs_coeff is None else self.rhs_coeff.to_json(),
        }


def distinguish(
    a: ResolutionData, b: ResolutionData, variant: str = "naive", order: int = 16
) -> ComparisonReport:
    """Compare a zeta variant of two germs' resolution data.

    Equality is exact (cross-multiplied).  When unequal, the series are
    expanded through T^order looking for the smallest separating coefficient;
    if none exists in that window the report carries no witness order.
    """
    za = denef_loeser(a, variant)
    zb = denef_loeser(b, variant)
    if za == zb:
        return ComparisonReport(equal=True, variant=variant)
    sa = za.t_series(order)
    sb = zb.t_series(order)
    for n in range(order + 1):
        if sa[n] != sb[n]:
            return ComparisonReport(
                equal=False,
                variant=variant,
                first_differing_T_order=n,
                lhs_coeff=sa[n],
                rhs_coeff=sb[n],
            )
    return ComparisonReport(equal=False, variant=variant)


def zeta_json(res: ResolutionData, variant: str, expand_order: Optional[int] = None) -> dict:
    """Machine-readable bundle: cleared fraction, optional series, display."""
    z = denef_loeser(res, variant)
    out = {
        "variant": variant,
        "rational": z.to_json(),
        "series": None if expand_order is None else z.t_series(expand_order).to_json(),
        "display": display(res, variant),
    }
    return out

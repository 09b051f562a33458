"""Shared test helpers: hand-encoded closed forms and independent oracles."""

from fractions import Fraction

from equizeta.ratpoly import BiPoly, RatFunc, ZetaRational


def term(coef_terms, factors):
    """coef * prod_i T^N_i / (u^nu_i - T^N_i) as a cleared fraction.

    ``coef_terms`` is a BiPoly term dict for the coefficient polynomial (in u
    only); ``factors`` is a list of (nu, N) pairs.
    """
    num = BiPoly(coef_terms)
    den = BiPoly({(0, 0): 1})
    for nu, N in factors:
        num = num * BiPoly({(0, N): 1})
        den = den * BiPoly({(nu, 0): 1, (0, N): -1})
    return ZetaRational(num, den)


def zsum(*parts):
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    return total


# -- the worked examples' closed forms, term by term ----------------------------

def displayed_y4_x2():
    return zsum(
        term({(2, 0): 1}, [(2, 2)]),
        term({(2, 0): 1, (1, 0): -1, (0, 0): 1}, [(3, 4)]),
        term({(2, 0): 1, (1, 0): -1}, [(2, 2), (3, 4)]),
        term({(2, 0): 1, (1, 0): -2, (0, 0): 1}, [(3, 4), (1, 1)]),
    )


def displayed_x4_y2():
    return zsum(
        term({(2, 0): 1}, [(2, 2)]),
        term({(2, 0): 1, (1, 0): -2}, [(3, 4)]),
        term({(2, 0): 1, (1, 0): -1}, [(2, 2), (3, 4)]),
        term({(2, 0): 2, (1, 0): -2}, [(3, 4), (1, 1)]),
    )


def displayed_x2k(k, variant):
    if variant == "naive":
        return ZetaRational(
            BiPoly({(1, 2 * k): 1}), BiPoly({(1, 0): 1, (0, 2 * k): -1})
        )
    if variant == "plus":
        return ZetaRational(
            BiPoly({(0, 2 * k): 1}), BiPoly({(1, 0): 1, (0, 2 * k): -1})
        )
    return ZetaRational.zero()


def displayed_x2_plus_y2(variant):
    if variant == "naive":
        return term({(2, 0): 1, (1, 0): 1}, [(2, 2)])
    if variant == "plus":
        base = term({(2, 0): 1, (1, 0): 1}, [(2, 2)])
        return ZetaRational(base.num, base.den * BiPoly({(1, 0): 1, (0, 0): -1}))
    return ZetaRational.zero()


def displayed_minus_x2_minus_y4(variant):
    if variant == "naive":
        return zsum(
            term({(2, 0): 1}, [(2, 2)]),
            term({(2, 0): 1}, [(3, 4)]),
            term({(2, 0): 1, (1, 0): -1}, [(2, 2), (3, 4)]),
        )
    if variant == "minus":
        return zsum(
            term({(1, 0): 1}, [(2, 2)]),
            term({(1, 0): 1}, [(3, 4)]),
            term({(1, 0): 2}, [(2, 2), (3, 4)]),
        )
    return ZetaRational.zero()


def displayed_gk_mixed(k):
    """Mixed-sign family: x^(2k) and y^2 with opposite signs, k >= 3."""
    parts = [term({(2, 0): 1}, [(2, 2)])]
    for j in range(2, k):
        parts.append(term({(2, 0): 1, (1, 0): -1}, [(j + 1, 2 * j)]))
    for j in range(1, k):
        parts.append(
            term({(2, 0): 1, (1, 0): -1}, [(j + 1, 2 * j), (j + 2, 2 * j + 2)])
        )
    if k % 2 == 1:
        parts.append(term({(2, 0): 1, (1, 0): -1, (0, 0): 1}, [(k + 1, 2 * k)]))
        parts.append(
            term({(2, 0): 1, (1, 0): -2, (0, 0): 1}, [(k + 1, 2 * k), (1, 1)])
        )
    else:
        parts.append(term({(2, 0): 1, (1, 0): -2}, [(k + 1, 2 * k)]))
        parts.append(term({(2, 0): 2, (1, 0): -2}, [(k + 1, 2 * k), (1, 1)]))
    return zsum(*parts)


def displayed_a_boundary():
    return zsum(
        term({(2, 0): 1}, [(2, 3)]),
        term({(2, 0): 1}, [(3, 4)]),
        term({(2, 0): 1}, [(5, 8)]),
        term({(2, 0): 1, (1, 0): -1}, [(7, 12)]),
        term({(2, 0): 1, (1, 0): -1}, [(3, 4), (5, 8)]),
        term({(2, 0): 1, (1, 0): -1}, [(7, 12), (5, 8)]),
        term({(2, 0): 1, (1, 0): -1}, [(7, 12), (2, 3)]),
        term({(2, 0): 1, (1, 0): -1}, [(7, 12), (1, 1)]),
    )


# -- independent numeric oracle for T-series ---------------------------------

def numeric_t_series(z: ZetaRational, u0: int, order: int):
    """Coefficients of the T-expansion of z at u = u0, by plain long division
    over Fraction -- no RatFunc machinery involved."""
    def poly_in_t(bp):
        out = [Fraction(0)] * (order + 1)
        for (ue, te), c in bp.terms.items():
            if te <= order:
                out[te] += Fraction(c) * u0**ue
        return out

    num = poly_in_t(z.num)
    den = poly_in_t(z.den)
    assert den[0] != 0
    coeffs = []
    for n in range(order + 1):
        acc = num[n]
        for j in range(1, n + 1):
            acc -= den[j] * coeffs[n - j]
        coeffs.append(acc / den[0])
    return coeffs


def series_values_match(z: ZetaRational, series, u_points=(2, 3, 5)) -> bool:
    """Whether a symbolic TSeries equals the numeric expansion pointwise."""
    for u0 in u_points:
        numeric = numeric_t_series(z, u0, series.order)
        for n in range(series.order + 1):
            if series[n].eval_fraction(u0) != numeric[n]:
                return False
    return True

from fractions import Fraction

import pytest

from hltorus.densities import (
    DensityProduct,
    ct_integrate,
    gustafson_rhs,
    koornwinder_density,
    selberg_density,
)
from hltorus.errors import ConfigurationError, DomainError, ResourceLimitError
from hltorus.laurent import LaurentPoly
from hltorus.series import SeriesRing

D = 12


def test_selberg_structure():
    d1 = selberg_density(1)
    assert d1.num_factors == () and d1.geo_factors == ()
    d2 = selberg_density(2)
    assert sorted(e for _, e in d2.num_factors) == [(-1, 1), (1, -1)]
    assert sorted(m for _, _, m in d2.geo_factors) == [(-1, 1), (1, -1)]
    assert all(c == (2, 0, 0) for c, _, _ in d2.geo_factors)


def test_selberg_normalization_value():
    r = SeriesRing(D)
    z = ct_integrate(selberg_density(2), None, D)
    # independent closed form: 2/(1+t)
    assert z == r.const(2) * (r.one() + r.t()).unit_inverse()
    assert z * (r.one() + r.t()) == r.const(2)


def test_koornwinder_structures():
    # (sqrt t, -sqrt t, 0, 0): numerator survives, four geometric factors
    d = koornwinder_density(1, ((1, 1), (-1, 1), 0, 0))
    assert sorted(d.num_factors) == [(1, (-2,)), (1, (2,))]
    assert sorted(d.geo_factors) == [
        ((1, 0, 0), -1, (-1,)),
        ((1, 0, 0), -1, (1,)),
        ((1, 0, 0), 1, (-1,)),
        ((1, 0, 0), 1, (1,)),
    ]
    assert d.prefactor == Fraction(1, 2)
    # (+-1, +-sqrt t): the +-1 parameters cancel the numerator entirely
    d = koornwinder_density(1, (1, -1, (1, 1), (-1, 1)))
    assert d.num_factors == ()
    # (t, -1, +-sqrt t): only the -1 parameter cancels, leaving (1-x)(1-1/x)
    d = koornwinder_density(1, ((1, 2), -1, (1, 1), (-1, 1)))
    assert sorted(d.num_factors) == [(1, (-1,)), (1, (1,))]


def test_koornwinder_cancellation_reproduces_full_product():
    # multiplying the cancelled numerator by the +-1 denominator factors
    # must reproduce (1 - x^{+-2}) * (1 - x^{+-1} x^{+-1}) exactly
    for params in ((1, -1, (1, 1), (-1, 1)), ((1, 2), -1, (1, 1), (-1, 1)),
                   (1, (-1, 2), (1, 1), (-1, 1))):
        for n in (1, 2):
            dens = koornwinder_density(n, params)
            got = dens.numerator(D)
            for p in params:
                if p in (1, -1):
                    vals = [SeriesRing(D).const(p)]
                    for i in range(n):
                        for power in (1, -1):
                            e = [0] * n
                            e[i] = power
                            binom = LaurentPoly(
                                dens.vars,
                                {(0,) * n: SeriesRing(D).one(),
                                 tuple(e): -vals[0]},
                                D,
                            )
                            got = got * binom
            full = koornwinder_density(n, ((1, 1), (-1, 1), (1, 2), (-1, 2)))
            assert got == full.numerator(D), (params, n)


def test_koornwinder_rejections():
    with pytest.raises(DomainError):
        koornwinder_density(1, (2, 0, 0, 0))
    with pytest.raises(DomainError):
        koornwinder_density(1, ((1, 0), 0, 0, 0))
    with pytest.raises(DomainError):
        koornwinder_density(1, (1, 1, 0, 0))


def test_expandability_certificate():
    with pytest.raises(DomainError):
        DensityProduct(("x1",), (), (((0, 0, 0), 1, (1,)),))


def test_single_geometric_factor_integral():
    r = SeriesRing(D)
    dens = DensityProduct(("x1", "x2"), (), (((2, 0, 0), 1, (1, 1)),))
    mult = LaurentPoly.monomial(("x1", "x2"), (-1, -1), 1, D)
    assert ct_integrate(dens, mult, D) == r.t()


def test_gustafson_normalizations_match():
    for item, nmax in (("i", 3), ("ii", 2), ("iii", 2), ("iv", 2), ("v", 2), ("vi", 2)):
        for n in range(1, nmax + 1):
            if item == "i":
                dens = koornwinder_density(n, ((1, 1), (-1, 1), 0, 0))
            elif item == "ii":
                dens = koornwinder_density(n, (1, (1, 1), 0, 0))
            elif item == "iii":
                dens = koornwinder_density(n, (1, -1, (1, 1), (-1, 1)))
            elif item == "iv":
                dens = koornwinder_density(n - 1, ((1, 2), (-1, 2), (1, 1), (-1, 1)))
            elif item == "v":
                dens = koornwinder_density(n, ((1, 2), -1, (1, 1), (-1, 1)))
            else:
                dens = koornwinder_density(n, (1, (-1, 2), (1, 1), (-1, 1)))
            assert ct_integrate(dens, None, D) == gustafson_rhs(item, n, D), (item, n)


def test_known_series_coefficients():
    # (1-t)/(t^2;t^2)_1 = (1-t)/(1-t^2) = 1 - s^2 + s^4 - ...
    r = SeriesRing(8)
    val = gustafson_rhs("i", 1, 8)
    expected = r.from_coeffs({(0, 0, 0): 1, (2, 0, 0): -1, (4, 0, 0): 1,
                              (6, 0, 0): -1, (8, 0, 0): 1})
    assert val == expected
    # (1-t)/(s;s)_2 = (1-s^2)/(1-s^2)(1-s)(1-s^2)... spot-check low degrees
    val2 = gustafson_rhs("ii", 1, 6)
    assert val2.coefficient((0, 0, 0)) == 1
    assert val2.coefficient((1, 0, 0)) == 1


def _ct_bruteforce(dens, multiplier, order):
    """Expand everything as LaurentPoly products, no pruning; then project."""
    ring = SeriesRing(order)
    acc = dens.numerator(order)
    for ckey, sign, exps in dens.geo_factors:
        cdeg = sum(ckey)
        terms = {}
        k = 0
        while k * cdeg <= order:
            coeff = ring.monomial(
                es=k * ckey[0], ea=k * ckey[1], eb=k * ckey[2],
                coeff=(-1) ** k if sign < 0 else 1,
            )
            terms[tuple(k * e for e in exps)] = coeff
            k += 1
        acc = acc * LaurentPoly(dens.vars, terms, order)
    if multiplier is not None:
        acc = acc * multiplier
    return acc.constant_term(dens.vars).scalar() * dens.prefactor


def test_ct_matches_bruteforce_oracle():
    order = 8
    from hltorus.hall_littlewood import hl_full, pm_args, var_arg

    dens = koornwinder_density(2, (1, -1, (1, 1), (-1, 1)))
    p = hl_full((2, 1, 1, 0), pm_args(2), dens.vars, order)
    assert ct_integrate(dens, p, order) == _ct_bruteforce(dens, p, order)

    dens = selberg_density(2)
    names = dens.vars
    p = hl_full((2, 0), (var_arg(2, 0), var_arg(2, 1)), names, order)
    q = hl_full((2, 0), (var_arg(2, 0, -1), var_arg(2, 1, -1)), names, order)
    assert ct_integrate(dens, p * q, order) == _ct_bruteforce(dens, p * q, order)
    assert ct_integrate(dens, None, order) == _ct_bruteforce(dens, None, order)


def test_ct_requires_matching_variables_and_order():
    dens = selberg_density(2)
    with pytest.raises(ConfigurationError):
        ct_integrate(dens, LaurentPoly.unit(("y1",), D), D)
    with pytest.raises(ConfigurationError):
        ct_integrate(dens, LaurentPoly.unit(dens.vars, D + 1), D)


def test_term_ceiling_trips(monkeypatch):
    monkeypatch.setenv("HLTORUS_MAX_TERMS", "1")
    from hltorus import densities as dmod

    dmod.clear_caches()
    with pytest.raises(ResourceLimitError):
        ct_integrate(selberg_density(2), None, D)
    monkeypatch.delenv("HLTORUS_MAX_TERMS")
    dmod.clear_caches()

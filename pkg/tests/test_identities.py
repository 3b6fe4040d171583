import pytest

from hltorus.densities import ct_integrate, selberg_density
from hltorus.errors import DomainError
from hltorus.hall_littlewood import hl_full, var_arg
from hltorus.identities import (
    REGISTRY,
    component_integral,
    pfaffian_bridge,
    rhs_ab,
    rhs_ab_sum,
    rhs_alpha_minus_one,
    rhs_kawanaka,
    rhs_orthogonal_alpha,
    rhs_orthogonality,
    rhs_symplectic,
    sweep_weights,
    t_multinomial_of,
    verify,
)
from hltorus.partitions import Partition, bounded_partitions, partitions_up_to
from hltorus.series import SeriesRing
from hltorus.tcomb import TComb

D = 10


def ok(report):
    return report.status in ("match", "vanished-as-predicted")


def test_registry_catalog():
    assert len(REGISTRY) >= 18
    for name in ("orthogonality", "normalization_iv", "o_plus_even",
                 "ab_ominus_odd", "symplectic", "kawanaka", "unm_vanishing",
                 "u2n_vanishing", "double_cover", "t2_branching"):
        assert name in REGISTRY
        assert REGISTRY[name].description
        assert REGISTRY[name].weight_shape


def test_verify_report_fields():
    rep = verify("orthogonality", n=2, weight=(1, 0), mu=(1, 0), order=10)
    assert rep.status == "match"
    assert rep.achieved_order == 10
    assert rep.first_discrepancy_degree is None
    assert rep.weight == "1,0" and rep.mu == "1,0"
    obj = rep.to_json_obj()
    assert obj["wall_time_ms"] is None
    assert obj["status"] == "match"
    assert rep.to_json_obj(include_timing=True)["wall_time_ms"] is not None


def test_orthogonality_value_is_n_factorial_over_v():
    # frozen value: n=2, lambda=mu=(1,0) gives exactly 2
    r = SeriesRing(D)
    names = ("x1", "x2")
    p = hl_full((1, 0), (var_arg(2, 0), var_arg(2, 1)), names, D)
    pinv = hl_full((1, 0), (var_arg(2, 0, -1), var_arg(2, 1, -1)), names, D)
    val = ct_integrate(selberg_density(2), p * pinv, D)
    assert val == r.const(2)
    num, den = rhs_orthogonality(Partition((2, 1, 0)), Partition((2, 1, 0)), 3, D)
    assert num == SeriesRing(D).const(6) and den == SeriesRing(D).one()


def test_unknown_identity_and_bad_weights():
    with pytest.raises(KeyError):
        verify("nope", n=1)
    with pytest.raises(DomainError):
        verify("o_plus_even", n=1, weight=(1, -1), order=6)
    with pytest.raises(DomainError):
        verify("orthogonality", n=1, weight=(1, 1), mu=(1,), order=6)


def test_alpha_rhs_closed_forms():
    r = SeriesRing(D)
    val = rhs_orthogonal_alpha("plus_even", Partition((0, 0)), D)
    assert val == r.one() + r.alpha(2)
    val = rhs_orthogonal_alpha("plus_odd", Partition((0,)), D)
    assert val == r.one() - r.alpha()
    val = rhs_orthogonal_alpha("minus_even", Partition((0, 0)), D)
    assert val == r.one() - r.alpha(2)


def test_ab_rhs_frozen_zero_weight():
    # the two bracket summands at lambda = (0,0):
    # H_2(ab) = 1 + (1+t) ab + a^2 b^2 and its shifted partner
    # a^2 + (1+t) ab + b^2
    r = SeriesRing(D)
    one_plus_t = r.one() + r.t()
    h2 = r.one() + one_plus_t * r.monomial(ea=1, eb=1) + r.monomial(ea=2, eb=2)
    g2 = r.alpha(2) + one_plus_t * r.monomial(ea=1, eb=1) + r.beta(2)
    assert rhs_ab("plus_even", Partition((0, 0)), D) == h2 + g2
    assert rhs_ab("minus_even", Partition((0, 0)), D) == h2 - g2


def test_rhs_dispatchers():
    from hltorus.identities import rhs_section8, rhs_special
    from hltorus.partitions import DominantWeight

    r = SeriesRing(D)
    assert rhs_special("symplectic", Partition((1, 1)), 1, D) == r.one()
    assert rhs_special("kawanaka", Partition(()), 2, D) == r.one()
    num, den = rhs_section8("unm", DominantWeight((1, -1)), 1, 1, D)
    assert num == (r.one() - r.t()) * den  # value 1 - t at m = n = 1
    num, den = rhs_section8("u2n", DominantWeight((1, -1)), 1, order=D)
    assert num == (r.one() + r.t()) * den
    num, den = rhs_section8("double_cover", DominantWeight((1, -1)), 1, order=D)
    # the verified value is t^{-1}(1+t): numerator (1-t^2), denominator t(1-t)
    assert num * r.t(0) == (r.one() + r.t()) * (r.one() - r.t()) and den == r.t() * (r.one() - r.t())
    num, den = rhs_section8("t2_branching", DominantWeight((2, 0)), 2, order=D)
    assert num.is_zero() and den == r.one()
    with pytest.raises(DomainError):
        rhs_special("nope", Partition(()), 1, D)
    with pytest.raises(DomainError):
        rhs_section8("nope", DominantWeight(()), 1, order=D)


def test_special_values_frozen():
    r = SeriesRing(D)
    # symplectic: lambda = (1,1) at n=1 has value exactly 1
    assert rhs_symplectic(Partition((1, 1)), 1, D) == r.one()
    assert rhs_symplectic(Partition((1, 0)), 1, D).is_zero()
    # Kawanaka at the zero weight is 1 for every rank
    assert rhs_kawanaka(Partition(()), 1, D) == r.one()
    assert rhs_kawanaka(Partition(()), 2, D) == r.one()
    # cross-block value at mu = (1), n = 1 is 1 + t
    from hltorus.identities import _c_ratio_pair

    num, den = _c_ratio_pair(Partition((1,)), ((1, 2), (-1, 2)), D)
    assert num == (r.one() + r.t()) * den


def test_ab_rhs_reduces_to_alpha_at_beta_zero():
    for rank in (2, 3, 4):
        comps = ("plus_even", "minus_even") if rank % 2 == 0 else ("plus_odd", "minus_odd")
        for lam in bounded_partitions(rank, 3):
            for comp in comps:
                full = rhs_ab(comp, lam, D)
                assert full.drop_param(2) == rhs_orthogonal_alpha(comp, lam, D), (comp, lam)


def test_alpha_rhs_vanishing_at_alpha_zero():
    for rank in (2, 3, 4):
        comp = "plus_even" if rank % 2 == 0 else "plus_odd"
        for lam in bounded_partitions(rank, 3):
            odd, even = lam.parity_counts()
            at_zero = rhs_orthogonal_alpha(comp, lam, D).drop_param(1)
            if odd == 0 or even == 0:
                assert not at_zero.is_zero(), lam
            else:
                assert at_zero.is_zero(), lam


def test_minus_odd_is_signed_plus_odd():
    # the odd minus-component closed form equals (-1)^|lambda| times the
    # plus-component value at negated parameters
    for lam in bounded_partitions(3, 3):
        plus = rhs_ab("plus_odd", lam, D)
        minus = rhs_ab("minus_odd", lam, D)
        flipped = plus.negate_param(1).negate_param(2)
        if lam.weight() % 2:
            flipped = -flipped
        assert minus == flipped, lam


def _eval_alpha_minus_one(series):
    out = {}
    for (es, ea, eb), c in series.coeffs.items():
        key = (es, 0, eb)
        out[key] = out.get(key, 0) + (-c if ea % 2 else c)
    return SeriesRing(series.trunc).from_coeffs(out)


def test_alpha_minus_one_consistent_with_ab():
    # substituting alpha = -1 into the two-parameter closed form must merge
    # the two bracket summands into twice the single Rogers-Szego product;
    # the alpha-degree never exceeds the rank, so the folded series is
    # accurate through D minus the rank
    for lam in bounded_partitions(4, 2):
        cut = D - 4
        merged = _eval_alpha_minus_one(rhs_ab("plus_even", lam, D)).truncated(cut)
        assert merged == rhs_alpha_minus_one(lam, D).truncated(cut), lam


def test_sum_identity_components():
    # the even sum value is twice the first bracket summand
    lam = Partition((1, 1, 0, 0))
    r = SeriesRing(D)
    i1, z1 = component_integral("plus_even", 2, lam, D, [r.alpha(), r.beta()])
    i2, z2 = component_integral("minus_even", 2, lam, D, [r.alpha(), r.beta()])
    pref = (r.one() - r.alpha(2)) * (r.one() - r.beta(2))
    lhs = i1 * z2 + pref * i2 * z1
    assert lhs == rhs_ab_sum(lam, D) * z1 * z2


def test_component_lhs_symmetry_minus_odd():
    # LHS-level check that the odd minus component is the signed reflection
    # of the plus component under alpha -> -alpha, beta -> -beta
    r = SeriesRing(D)
    lam = Partition((2, 1, 0))
    ip, zp = component_integral("plus_odd", 1, lam, D, [r.alpha(), r.beta()])
    im, zm = component_integral("minus_odd", 1, lam, D, [r.alpha(), r.beta()])
    assert zp == zm
    flipped = ip.negate_param(1).negate_param(2)
    if lam.weight() % 2:
        flipped = -flipped
    assert im == flipped


def test_pfaffian_bridge_small_ranks():
    for n in (1, 2):
        for lam in bounded_partitions(2 * n, 2):
            lhs, rhs = pfaffian_bridge(n, lam, 8)
            assert lhs == rhs, (n, lam)


def test_bordered_pfaffian_bridges():
    from hltorus.identities import pfaffian_bridge_minus, pfaffian_bridge_plus_odd

    for n in (1, 2):
        for lam in bounded_partitions(2 * n, 2):
            lhs, rhs = pfaffian_bridge_minus(n, lam, 8)
            assert lhs == rhs, ("minus", n, lam)
    for n in (0, 1):
        for lam in bounded_partitions(2 * n + 1, 2):
            lhs, rhs = pfaffian_bridge_plus_odd(n, lam, 8)
            assert lhs == rhs, ("plus_odd", n, lam)


def test_symplectic_c_symbol_equivalence():
    # multinomial form times C-(t^2) equals C0(t^{2n}) for lambda = mu^2
    r = SeriesRing(D)
    tc4 = TComb(r, base=4)
    for n in (1, 2):
        for mu in partitions_up_to(3, n):
            lam = Partition(tuple(x for p in mu.padded(n).parts for x in (p, p)))
            val = rhs_symplectic(lam, n, D)
            num = tc4.c_symbol("0", mu.parts, ((1, 4 * n),))
            den = tc4.c_symbol("-", mu.parts)
            assert val * den == num, (n, mu)


def test_kawanaka_c_symbol_equivalence():
    r = SeriesRing(D)
    tc1 = TComb(r, base=1)
    for n in (1, 2):
        for lam in partitions_up_to(3, 2 * n):
            val = rhs_kawanaka(lam, n, D)
            num = tc1.c_symbol("0", lam.parts, ((1, 2 * n),))
            den = tc1.c_symbol("-", lam.parts)
            assert val * den == num, (n, lam)


def test_unm_length_predicate():
    # palindromic weight whose positive part is too long for the x block
    rep = verify("unm_vanishing", n=3, m=1, weight=(1, 1, -1, -1), order=8)
    assert rep.status == "vanished-as-predicted"


def test_double_cover_displayed_form_differs_by_t_power():
    # executable record: the honest normalized integral equals t^{-|mu|}
    # times the C-symbol ratio, so the unshifted ratio itself does NOT match
    # once |mu| > 0.  Kept as a permanent regression of that analysis.
    rep = verify("double_cover", n=2, weight=(1, 0, 0, -1), order=10)
    assert rep.status == "match"
    assert any("t^|mu|" in note for note in rep.notes)

    from hltorus.identities import _build_double_cover, _Instance
    from hltorus.partitions import DominantWeight

    inst = _Instance(2, None, DominantWeight((1, 0, 0, -1)), None, 10)
    lhs, rhs, _ = _build_double_cover(inst)
    assert lhs == rhs
    # dropping the t^{|mu|} correction (here |mu| = 1) breaks the equality:
    # rhs * t is what the unshifted displayed form would demand of lhs
    ring = SeriesRing(lhs.trunc)
    assert lhs != rhs * ring.t(1)


def test_double_cover_padding_note():
    rep = verify("double_cover", n=2, weight=(0, 0, 0, 0), order=8)
    assert rep.status == "match"
    assert any("padding" in note for note in rep.notes)


def test_t2_branching_original_statement():
    # the stated integrand multiplies by P_{m^n}(x^{-1};t), which is the
    # inverse monomial; check the equivalent dominant-weight reading
    r = SeriesRing(D)
    names = ("x1", "x2")
    pm = hl_full((1, 1), (var_arg(2, 0, -1), var_arg(2, 1, -1)), names, D)
    from hltorus.laurent import LaurentPoly

    assert pm == LaurentPoly.monomial(names, (-1, -1), 1, D)
    rep = verify("t2_branching", n=2, weight=(2, 0) , order=D)
    assert rep.status == "vanished-as-predicted" or rep.status == "match"
    # (2,0) is not palindromic; shifting by -1 gives (1,-1) which is
    shifted = verify("t2_branching", n=2, weight=(1, -1), order=D)
    assert shifted.status == "match"


def test_vanishing_completeness_small_grids():
    for name, n, m in (("symplectic", 1, None), ("u2n_vanishing", 1, None),
                       ("t2_branching", 2, None), ("unm_vanishing", 1, 1)):
        for w in sweep_weights(name, n, m, max_weight=2):
            rep = verify(name, n=n, m=m, weight=w.parts, order=8)
            assert ok(rep), (name, w, rep.status)


def test_deep_order_spot_checks():
    # a deeper truncation order on a few families, to rule out agreements
    # that only hold through the default order
    for name, kw in (
        ("o_plus_even", dict(n=1, weight=(3, 1), order=16)),
        ("kawanaka", dict(n=2, weight=(2, 1, 1, 0), order=16)),
        ("symplectic", dict(n=2, weight=(2, 2, 0, 0), order=16)),
        ("ab_ominus_odd", dict(n=1, weight=(2, 1, 1), order=14)),
        ("u2n_vanishing", dict(n=2, weight=(2, 1, -1, -2), order=16)),
        ("double_cover", dict(n=2, weight=(2, 1, -1, -2), order=16)),
    ):
        rep = verify(name, **kw)
        assert ok(rep), rep.text_line()


def test_resource_limit_reported(monkeypatch):
    monkeypatch.setenv("HLTORUS_MAX_TERMS", "1")
    from hltorus import densities as dmod

    dmod.clear_caches()
    rep = verify("orthogonality", n=2, weight=(1, 0), mu=(1, 0), order=8)
    assert rep.status == "resource-limit"
    assert rep.achieved_order == 0
    monkeypatch.delenv("HLTORUS_MAX_TERMS")
    dmod.clear_caches()


def test_resource_ladder_produces_partial_report():
    from hltorus.errors import ResourceLimitError
    from hltorus.identities import IdentityDef

    ring = SeriesRing(4)

    def flaky_build(inst):
        if inst.order > 4:
            raise ResourceLimitError("too big")
        r = SeriesRing(inst.order)
        return r.one(), r.one(), ()

    fake = IdentityDef(
        name="_ladder_probe",
        description="test-only",
        weight_shape="none",
        build=flaky_build,
        needs_weight=False,
    )
    REGISTRY[fake.name] = fake
    try:
        rep = verify("_ladder_probe", n=1, order=10)
        assert rep.status == "match"
        assert rep.achieved_order == 4
        assert any("resource ceiling" in note for note in rep.notes)
    finally:
        del REGISTRY[fake.name]

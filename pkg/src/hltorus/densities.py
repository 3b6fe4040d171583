"""Torus densities as numerator factors times expandable geometric factors.

A density is stored in factored form: binomial numerator factors (1 - c x^m
with c = +-1) and geometric denominator factors 1/(1 - c x^m) whose
coefficient c carries positive parameter degree.  That degree requirement is
the expandability certificate: every such factor expands as a finite
geometric sum at the working truncation order, so the constant-term
integrator never meets an on-contour pole.

Integration is the extraction of the torus-degree-zero coefficient.  The
density is expanded once into a table of torus exponents (pruned to the
window the multiplier can reach), then convolved with the multiplier.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import factorial

from .errors import ConfigurationError, DomainError, ResourceLimitError
from .laurent import LaurentPoly
from .series import ParamSeries, SeriesRing

def _max_terms():
    return int(os.environ.get("HLTORUS_MAX_TERMS", "4000000"))


def _unit_exps(n, i, power=1):
    e = [0] * n
    e[i] = power
    return tuple(e)


class DensityProduct:
    """Numerator factors, geometric factors and an exact rational prefactor.

    ``num_factors`` is a tuple of (sign, exps) pairs, each meaning the
    binomial (1 - sign * x^exps).  ``geo_factors`` is a tuple of
    ((e_s, e_alpha, e_beta), sign, exps) triples, each meaning the factor
    1/(1 - sign * s^e_s a^e_a b^e_b * x^exps).
    """

    __slots__ = ("vars", "num_factors", "geo_factors", "prefactor", "label")

    def __init__(self, vars, num_factors, geo_factors, prefactor=Fraction(1), label=""):
        self.vars = tuple(vars)
        self.num_factors = tuple((s, tuple(e)) for s, e in num_factors)
        geo = []
        for ckey, sign, exps in geo_factors:
            ckey = tuple(ckey)
            if sum(ckey) < 1:
                raise DomainError(
                    "geometric factor with parameter-free coefficient is not expandable"
                )
            geo.append((ckey, sign, tuple(exps)))
        self.geo_factors = tuple(geo)
        self.prefactor = Fraction(prefactor)
        self.label = label

    def key(self):
        return (
            self.vars,
            tuple(sorted(self.num_factors)),
            tuple(sorted(self.geo_factors)),
            self.prefactor,
        )

    def numerator(self, order) -> LaurentPoly:
        """The numerator product, expanded (mostly useful in tests)."""
        acc = LaurentPoly.unit(self.vars, order)
        one = SeriesRing(order).one()
        for sign, exps in self.num_factors:
            binom = LaurentPoly(
                self.vars,
                {(0,) * len(self.vars): one, exps: SeriesRing(order).const(-sign)},
                order,
            )
            acc = acc * binom
        return acc

    def __repr__(self):
        return "DensityProduct(%s: %d numerator, %d geometric, prefactor %s)" % (
            ",".join(self.vars),
            len(self.num_factors),
            len(self.geo_factors),
            self.prefactor,
        )


def selberg_density(n, tpow=2, prefix="x", prefactor=Fraction(1)) -> DensityProduct:
    """The q=0 Selberg density prod_{i != j} (1-x_i/x_j)/(1-t x_i/x_j).

    ``tpow`` is the s-exponent of the deformation parameter (2 for t,
    4 for t^2).
    """
    if n < 1:
        raise DomainError("need at least one variable")
    vars = tuple("%s%d" % (prefix, i + 1) for i in range(n))
    num = []
    geo = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            exps = tuple(
                (1 if k == i else 0) - (1 if k == j else 0) for k in range(n)
            )
            num.append((1, exps))
            geo.append(((tpow, 0, 0), 1, exps))
    return DensityProduct(vars, num, geo, prefactor, label="selberg(%d)" % n)


def koornwinder_density(n, params, prefix="x") -> DensityProduct:
    """The symmetric q=0 Koornwinder density with parameters (a,b,c,d).

    Each parameter is 0, +1, -1 or a signed s-monomial (sign, s-exponent)
    of positive degree.  Parameters equal to +-1 are cancelled symbolically
    against a matching numerator factor; any other parameter of modulus >= 1
    is rejected since there is no cancellation recipe for it.
    """
    if n < 0:
        raise DomainError("negative variable count")
    norm = []
    for p in params:
        if p == 0 or p is None:
            continue
        if isinstance(p, int):
            if p in (1, -1):
                norm.append((p, 0))
                continue
            raise DomainError("parameter %r has modulus >= 1" % (p,))
        sign, spow = p
        if sign not in (1, -1) or spow < 0:
            raise DomainError("parameter %r is not a signed s-monomial" % (p,))
        if spow == 0:
            raise DomainError("parameter %r has modulus >= 1" % (p,))
        norm.append((sign, spow))
    if sum(1 for s, k in norm if k == 0 and s == 1) > 1:
        raise DomainError("parameter +1 may appear at most once")
    if sum(1 for s, k in norm if k == 0 and s == -1) > 1:
        raise DomainError("parameter -1 may appear at most once")
    vars = tuple("%s%d" % (prefix, i + 1) for i in range(n))
    has_plus = any(k == 0 and s == 1 for s, k in norm)
    has_minus = any(k == 0 and s == -1 for s, k in norm)
    num = []
    geo = []
    for i in range(n):
        ei = _unit_exps(n, i)
        ei_inv = _unit_exps(n, i, -1)
        if has_plus and has_minus:
            pass  # (1-x^2)(1-x^-2) fully cancelled
        elif has_plus:
            num.append((-1, ei))
            num.append((-1, ei_inv))
        elif has_minus:
            num.append((1, ei))
            num.append((1, ei_inv))
        else:
            num.append((1, _unit_exps(n, i, 2)))
            num.append((1, _unit_exps(n, i, -2)))
        for sign, spow in norm:
            if spow >= 1:
                geo.append(((spow, 0, 0), sign, ei))
                geo.append(((spow, 0, 0), sign, ei_inv))
    for i in range(n):
        for j in range(i + 1, n):
            for pi in (1, -1):
                for pj in (1, -1):
                    exps = tuple(
                        (pi if k == i else 0) + (pj if k == j else 0)
                        for k in range(n)
                    )
                    num.append((1, exps))
                    geo.append(((2, 0, 0), 1, exps))
    pref = Fraction(1, (2 ** n) * factorial(n))
    label = "koornwinder(%d;%s)" % (n, ",".join(repr(p) for p in params))
    return DensityProduct(vars, num, geo, pref, label=label)


# ---------------------------------------------------------------------------
# expansion and constant-term extraction
# ---------------------------------------------------------------------------

_EXPANSION_CACHE = {}


def clear_caches():
    _EXPANSION_CACHE.clear()


def _factor_sequence(dens):
    """All factors, ordered so complementary monomials sit together."""
    factors = [("num", sign, exps, None) for sign, exps in dens.num_factors]
    factors += [("geo", sign, exps, ckey) for ckey, sign, exps in dens.geo_factors]
    factors.sort(key=lambda f: (tuple(abs(e) for e in f[2]), f[2], f[0]))
    return factors


def _movement(factors, order, nv):
    """Suffix movement capacity per variable (up, down), loose but sound."""
    ups = [(0,) * nv]
    downs = [(0,) * nv]
    up = [0] * nv
    down = [0] * nv
    for kind, sign, exps, ckey in reversed(factors):
        reps = 1 if kind == "num" else max(0, order // sum(ckey))
        for v, e in enumerate(exps):
            if e > 0:
                up[v] += e * reps
            elif e < 0:
                down[v] -= e * reps
        ups.append(tuple(up))
        downs.append(tuple(down))
    ups.reverse()
    downs.reverse()
    return ups, downs


def _p3_add_into(dst, src, cap, sign=1, shift=(0, 0, 0)):
    ss, sa, sb = shift
    for (es, ea, eb), c in src.items():
        es += ss
        ea += sa
        eb += sb
        if es + ea + eb > cap:
            continue
        k = (es, ea, eb)
        v = dst.get(k, 0) + (c if sign > 0 else -c)
        if v:
            dst[k] = v
        elif k in dst:
            del dst[k]


def _expansion(dens, order, bounds):
    """Expand the density into {torus exponent: coefficient dict}.

    The table is exact for every exponent within the requested per-variable
    window; terms that cannot re-enter the window given the remaining
    factors' movement capacity are pruned.  Cached per density and order,
    and reused whenever a cached window covers the request.
    """
    cache_key = (dens.key(), order)
    cached = _EXPANSION_CACHE.get(cache_key)
    if cached is not None:
        cached_bounds, table = cached
        if all(b <= cb for b, cb in zip(bounds, cached_bounds)):
            return table
        bounds = tuple(max(b, cb) for b, cb in zip(bounds, cached_bounds))
    factors = _factor_sequence(dens)
    nv = len(dens.vars)
    ups, downs = _movement(factors, order, nv)
    zero = (0,) * nv
    acc = {zero: {(0, 0, 0): 1}}

    def prune(exps, pos):
        up = ups[pos]
        down = downs[pos]
        for v in range(nv):
            e = exps[v]
            if e - down[v] > bounds[v] or e + up[v] < -bounds[v]:
                return True
        return False

    for pos, (kind, sign, exps, ckey) in enumerate(factors):
        new = {}
        if kind == "num":
            for e, cd in acc.items():
                if not prune(e, pos + 1):
                    cur = new.setdefault(e, {})
                    _p3_add_into(cur, cd, order)
                    if not cur:
                        del new[e]
                e2 = tuple(a + b for a, b in zip(e, exps))
                if not prune(e2, pos + 1):
                    cur = new.setdefault(e2, {})
                    _p3_add_into(cur, cd, order, sign=-sign)
                    if not cur:
                        del new[e2]
        else:
            cdeg = sum(ckey)
            for e, cd in acc.items():
                k = 0
                cur_cd = cd
                cur_e = e
                while True:
                    if not prune(cur_e, pos + 1):
                        cur = new.setdefault(cur_e, {})
                        _p3_add_into(cur, cur_cd, order)
                        if not cur:
                            del new[cur_e]
                    k += 1
                    if k * cdeg > order:
                        break
                    nxt = {}
                    _p3_add_into(nxt, cur_cd, order, sign=sign, shift=ckey)
                    if not nxt:
                        break
                    cur_cd = nxt
                    cur_e = tuple(a + b for a, b in zip(cur_e, exps))
        acc = new
        limit = _max_terms()
        if len(acc) > limit:
            raise ResourceLimitError(
                "density expansion exceeded %d terms" % limit,
                factor_count=len(factors),
            )
    _EXPANSION_CACHE[cache_key] = (tuple(bounds), acc)
    return acc


def ct_integrate(dens: DensityProduct, multiplier, order) -> ParamSeries:
    """Torus integral (constant term) of multiplier times the density.

    Exact through the given order.  ``multiplier`` may be None for the bare
    normalization integral.
    """
    if multiplier is None:
        multiplier = LaurentPoly.unit(dens.vars, order)
    if multiplier.vars != dens.vars:
        raise ConfigurationError(
            "multiplier variables %r do not match density variables %r"
            % (multiplier.vars, dens.vars)
        )
    if multiplier.trunc != order:
        raise ConfigurationError("multiplier truncation differs from the order")
    table = _expansion(dens, order, multiplier.var_bounds())
    out = {}
    for e, coeff in multiplier.terms.items():
        dcoef = table.get(tuple(-x for x in e))
        if not dcoef:
            continue
        for (s1, a1, b1), c1 in coeff.coeffs.items():
            room = order - s1 - a1 - b1
            for (s2, a2, b2), c2 in dcoef.items():
                if s2 + a2 + b2 > room:
                    continue
                k = (s1 + s2, a1 + a2, b1 + b2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
    result = ParamSeries(out, order, clean=False)
    if dens.prefactor != 1:
        result = result * dens.prefactor
    return result


# ---------------------------------------------------------------------------
# closed-form normalizations
# ---------------------------------------------------------------------------


def gustafson_rhs(item, n, order) -> ParamSeries:
    """The closed-form value of the six normalization integrals.

    ``item`` is one of "i".."vi"; the products are expanded as exact
    truncated series (every denominator factor is a unit with positive
    s-degree, so geometric expansion is exact).
    """
    ring = SeriesRing(order)
    one_minus_t = ring.one() - ring.t()

    def geom_t_pow(k):
        return ring.geometric(es=k)

    if item == "i":
        acc = one_minus_t ** n
        for j in range(1, n + 1):
            acc = acc * geom_t_pow(4 * j)
        return acc
    if item == "ii":
        acc = one_minus_t ** n
        for j in range(1, 2 * n + 1):
            acc = acc * geom_t_pow(j)
        return acc
    if item == "iii":
        acc = one_minus_t ** n * Fraction(1, 2)
        for j in range(1, 2 * n + 1):
            acc = acc * geom_t_pow(2 * j)
        return acc
    if item == "iv":
        acc = one_minus_t ** (n - 1)
        for j in range(2 * n - 2):
            acc = acc * geom_t_pow(2 * (3 + j))
        return acc
    if item in ("v", "vi"):
        acc = one_minus_t ** (n + 1)
        for j in range(1, 2 * n + 2):
            acc = acc * geom_t_pow(2 * j)
        return acc
    raise DomainError("unknown normalization item %r" % (item,))

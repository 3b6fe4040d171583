"""Multivariate Laurent polynomials in the torus variables.

Exponents may be negative; coefficients live in the truncated parameter
ring (:class:`~hltorus.series.ParamSeries`).  The representation is sparse
in the torus variables and dense in the parameters, matching how the
integrands in this package actually look.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConfigurationError, DomainError
from .series import ParamSeries, SeriesRing

_ZERO3 = (0, 0, 0)


class LaurentPoly:
    """Sparse Laurent polynomial with ParamSeries coefficients."""

    __slots__ = ("vars", "terms", "trunc")

    def __init__(self, vars, terms, trunc, clean=True):
        self.vars = tuple(vars)
        if clean:
            terms = {tuple(e): c for e, c in terms.items() if not c.is_zero()}
        self.terms = terms
        self.trunc = trunc

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars, trunc):
        return cls(vars, {}, trunc, clean=False)

    @classmethod
    def unit(cls, vars, trunc):
        one = SeriesRing(trunc).one()
        return cls(vars, {(0,) * len(tuple(vars)): one}, trunc, clean=False)

    @classmethod
    def monomial(cls, vars, exps, coeff, trunc):
        if isinstance(coeff, (int, Fraction)):
            coeff = SeriesRing(trunc).const(coeff)
        return cls(vars, {tuple(exps): coeff}, trunc)

    # -- queries -------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def coefficient(self, exps):
        c = self.terms.get(tuple(exps))
        if c is None:
            return SeriesRing(self.trunc).zero()
        return c

    def scalar(self):
        """The value of a polynomial with no torus dependence."""
        for e in self.terms:
            if any(e):
                raise DomainError("polynomial still depends on torus variables")
        return self.coefficient((0,) * len(self.vars))

    def var_bounds(self):
        """Per-variable maximum absolute exponent over the support."""
        bounds = [0] * len(self.vars)
        for e in self.terms:
            for i, v in enumerate(e):
                a = v if v >= 0 else -v
                if a > bounds[i]:
                    bounds[i] = a
        return tuple(bounds)

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other):
        if self.vars != other.vars:
            raise ConfigurationError(
                "variable lists differ: %r vs %r" % (self.vars, other.vars)
            )
        if self.trunc != other.trunc:
            raise ConfigurationError("truncation orders differ")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(self.vars, out, self.trunc, clean=False)

    def __neg__(self):
        return LaurentPoly(
            self.vars, {e: -c for e, c in self.terms.items()}, self.trunc, clean=False
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamSeries)):
            if isinstance(other, ParamSeries) and other.trunc != self.trunc:
                raise ConfigurationError("truncation orders differ")
            out = {}
            for e, c in self.terms.items():
                p = c * other
                if not p.is_zero():
                    out[e] = p
            return LaurentPoly(self.vars, out, self.trunc, clean=False)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        bitems = list(b.items())
        out = {}
        for ea_, ca in a.items():
            for eb_, cb in bitems:
                p = ca * cb
                if p.is_zero():
                    continue
                key = tuple(x + y for x, y in zip(ea_, eb_))
                cur = out.get(key)
                s = p if cur is None else cur + p
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return LaurentPoly(self.vars, out, self.trunc, clean=False)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise DomainError("powers must be nonnegative integers")
        result = LaurentPoly.unit(self.vars, self.trunc)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    __hash__ = None

    # -- torus operations -------------------------------------------------------

    def constant_term(self, in_vars):
        """Sum of terms with exponent zero on every variable in ``in_vars``.

        The result is a Laurent polynomial in the remaining variables; this
        is the torus integral over the dropped variables.
        """
        in_vars = tuple(in_vars)
        idx = []
        for v in in_vars:
            if v not in self.vars:
                raise ConfigurationError("unknown variable %r" % (v,))
            idx.append(self.vars.index(v))
        drop = set(idx)
        keep = [i for i in range(len(self.vars)) if i not in drop]
        out_vars = tuple(self.vars[i] for i in keep)
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                continue
            key = tuple(e[i] for i in keep)
            cur = out.get(key)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return LaurentPoly(out_vars, out, self.trunc, clean=False)

    def specialize(self, assignment):
        """Substitute variables by +-1 or by a signed (inverse) variable.

        ``assignment`` maps a variable name to either an integer +-1 or a
        triple (sign, name, power) with sign in {1, -1} and power in
        {1, -1}.  Anything else is rejected: substitutions must keep the
        result a Laurent polynomial over the same parameter ring.
        """
        plan = {}
        for v, target in assignment.items():
            if v not in self.vars:
                raise ConfigurationError("unknown variable %r" % (v,))
            if isinstance(target, int):
                if target not in (1, -1):
                    raise DomainError("constant substitution must be +-1")
                plan[self.vars.index(v)] = (target, None, 0)
            else:
                try:
                    sign, name, power = target
                except (TypeError, ValueError):
                    raise DomainError("substitution target %r not allowed" % (target,))
                if sign not in (1, -1) or power not in (1, -1) or name not in self.vars:
                    raise DomainError("substitution target %r not allowed" % (target,))
                plan[self.vars.index(v)] = (sign, self.vars.index(name), power)
        out = {}
        nv = len(self.vars)
        for e, c in self.terms.items():
            newe = list(e)
            sign = 1
            for i, (sgn, j, power) in plan.items():
                k = e[i]
                if k == 0:
                    continue
                newe[i] = 0
                if sgn < 0 and (k & 1):
                    sign = -sign
                if j is not None:
                    newe[j] += power * k
            key = tuple(newe)
            add = c if sign > 0 else -c
            cur = out.get(key)
            s = add if cur is None else cur + add
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return LaurentPoly(self.vars, out, self.trunc, clean=False)

    def rename_vars(self, new_vars):
        new_vars = tuple(new_vars)
        if len(new_vars) != len(self.vars):
            raise ConfigurationError("variable count mismatch")
        return LaurentPoly(new_vars, dict(self.terms), self.trunc, clean=False)

    def permute_vars(self, perm):
        """Relabel variable slots: slot i takes the old slot perm[i]."""
        out = {}
        for e, c in self.terms.items():
            out[tuple(e[perm[i]] for i in range(len(e)))] = c
        return LaurentPoly(self.vars, out, self.trunc, clean=False)

    # -- display ------------------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                "%s^%d" % (v, k) if k != 1 else v
                for v, k in zip(self.vars, e)
                if k
            )
            coeff = repr(c)
            if " " in coeff or "+" in coeff:
                coeff = "(%s)" % coeff
            bits.append("%s*%s" % (coeff, mono) if mono else coeff)
        return " + ".join(bits)

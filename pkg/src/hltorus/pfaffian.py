"""Antisymmetric matrices over the parameter ring and their Pfaffians.

Includes the two bordered matrix constructors whose Pfaffians enumerate the
orthogonal-component term integrals, together with their closed-form
evaluations.  The closed forms involve division by (1 - alpha) or
(1 - alpha^2); those quotients are expanded explicitly as polynomials (the
brackets are always divisible), never by series division.
"""

from __future__ import annotations

from .errors import DomainError
from .series import ParamSeries, SeriesRing


class AntisymMatrix:
    """Square antisymmetric matrix; only the upper triangle is stored."""

    __slots__ = ("size", "upper", "trunc")

    def __init__(self, size, upper, trunc):
        self.size = size
        self.trunc = trunc
        self.upper = {}
        for (j, k), val in upper.items():
            if not 0 <= j < k < size:
                raise DomainError("upper entries need 0 <= j < k < size")
            if not val.is_zero():
                self.upper[(j, k)] = val

    def entry(self, j, k):
        if j == k:
            return SeriesRing(self.trunc).zero()
        if j < k:
            val = self.upper.get((j, k))
            return val if val is not None else SeriesRing(self.trunc).zero()
        val = self.upper.get((k, j))
        return -val if val is not None else SeriesRing(self.trunc).zero()

    def dense(self):
        return [[self.entry(j, k) for k in range(self.size)] for j in range(self.size)]


def pfaffian(a: AntisymMatrix) -> ParamSeries:
    """Pfaffian by recursive expansion along the first active row."""
    if a.size % 2:
        raise DomainError("Pfaffian needs even size")
    ring = SeriesRing(a.trunc)
    memo = {}

    def rec(idx):
        if not idx:
            return ring.one()
        hit = memo.get(idx)
        if hit is not None:
            return hit
        first = idx[0]
        rest = idx[1:]
        total = ring.zero()
        for pos, k in enumerate(rest):
            e = a.entry(first, k)
            if e.is_zero():
                continue
            sub = rest[:pos] + rest[pos + 1:]
            term = e * rec(sub)
            total = total + (term if pos % 2 == 0 else -term)
        memo[idx] = total
        return total

    return rec(tuple(range(a.size)))


def determinant(rows, trunc) -> ParamSeries:
    """Determinant of a square matrix of series, via memoized cofactors."""
    n = len(rows)
    ring = SeriesRing(trunc)
    memo = {}

    def rec(r, cols):
        if r == n:
            return ring.one()
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = ring.zero()
        for pos, c in enumerate(cols):
            e = rows[r][c]
            if e.is_zero():
                continue
            term = e * rec(r + 1, cols[:pos] + cols[pos + 1:])
            total = total + (term if pos % 2 == 0 else -term)
        memo[cols] = total
        return total

    return rec(0, tuple(range(n)))


# ---------------------------------------------------------------------------
# the term-integral matrices for the orthogonal components
# ---------------------------------------------------------------------------


def build_a_matrix(lam, trunc) -> AntisymMatrix:
    """Entries depend only on the parities of lambda_j - j.

    a[j][k] is 1 + alpha^2 when (lambda_j - j) - (lambda_k - k) is odd and
    -2 alpha when it is even, for an even number of parts.
    """
    lam = tuple(lam)
    if len(lam) % 2:
        raise DomainError("the a-matrix needs an even number of parts")
    ring = SeriesRing(trunc)
    odd_entry = ring.one() + ring.alpha(2)
    even_entry = ring.alpha() * (-2)
    upper = {}
    for j in range(len(lam)):
        for k in range(j + 1, len(lam)):
            diff = (lam[j] - (j + 1)) - (lam[k] - (k + 1))
            upper[(j, k)] = odd_entry if diff % 2 else even_entry
    return AntisymMatrix(len(lam), upper, trunc)


def build_m_minus(lam, trunc) -> AntisymMatrix:
    """The bordered matrix for the minus component in even rank.

    Size 2n+2 for 2n parts: row one holds (-1)^(lambda_k - k), row two holds
    ones, and the inner block is the a-matrix.
    """
    lam = tuple(lam)
    if len(lam) % 2:
        raise DomainError("expected an even number of parts")
    ring = SeriesRing(trunc)
    inner = build_a_matrix(lam, trunc)
    size = len(lam) + 2
    upper = {}
    for k in range(2, size):
        sign = -1 if (lam[k - 2] - (k - 2 + 1)) % 2 else 1
        # exponent lambda_{k-2} - (k-2) with 1-based indexing of parts
        upper[(0, k)] = ring.const(sign)
        upper[(1, k)] = ring.one()
    for j in range(2, size):
        for k in range(j + 1, size):
            upper[(j, k)] = inner.entry(j - 2, k - 2)
    return AntisymMatrix(size, upper, trunc)


def build_m_plus(lam, trunc) -> AntisymMatrix:
    """The bordered matrix for odd rank: a row of ones over the a-block."""
    lam = tuple(lam)
    if len(lam) % 2 == 0:
        raise DomainError("expected an odd number of parts")
    ring = SeriesRing(trunc)
    size = len(lam) + 1
    upper = {}
    odd_entry = ring.one() + ring.alpha(2)
    even_entry = ring.alpha() * (-2)
    for k in range(1, size):
        upper[(0, k)] = ring.one()
    for j in range(1, size):
        for k in range(j + 1, size):
            diff = (lam[j - 1] - j) - (lam[k - 1] - k)
            upper[(j, k)] = odd_entry if diff % 2 else even_entry
    return AntisymMatrix(size, upper, trunc)


def _power_of_minus_alpha(ring, e):
    return ring.monomial(ea=e, coeff=-1 if e % 2 else 1)


def pf_closed_form(kind, lam, trunc) -> ParamSeries:
    """Closed-form Pfaffian values for the three matrix families.

    For "a": 2^(n-1) [(-alpha)^odd + (-alpha)^even].  For "m_minus" and
    "m_plus" the bracketed combination divided by (1 - alpha^2) resp.
    (1 - alpha) is always a polynomial; it is written out directly.
    """
    lam = tuple(lam)
    ring = SeriesRing(trunc)
    odd = sum(1 for p in lam if p % 2)
    even = len(lam) - odd
    if kind == "a":
        if len(lam) % 2:
            raise DomainError("even length required")
        n = len(lam) // 2
        bracket = _power_of_minus_alpha(ring, odd) + _power_of_minus_alpha(ring, even)
        return ring.const(2 ** (n - 1)) * bracket
    if kind == "m_minus":
        if len(lam) % 2:
            raise DomainError("even length required")
        n = len(lam) // 2
        # ((-a)^odd - (-a)^even) / (1 - a^2); exponents share parity
        if odd == even:
            return ring.zero()
        p, q = (odd, even) if odd < even else (even, odd)
        quotient = ring.zero()
        for j in range((q - p) // 2):
            quotient = quotient + ring.alpha(p + 2 * j) * (
                (-1) ** (p % 2)
            )
        if odd > even:
            quotient = -quotient
        return ring.const(2 ** n) * quotient
    if kind == "m_plus":
        if len(lam) % 2 == 0:
            raise DomainError("odd length required")
        n = len(lam) // 2
        # ((-a)^odd + (-a)^even) / (1 - a): opposite parities, so this is
        # (a^e - a^o)/(1 - a) with e the even exponent and o the odd one
        e = odd if odd % 2 == 0 else even
        o = even if odd % 2 == 0 else odd
        quotient = ring.zero()
        if e < o:
            for j in range(e, o):
                quotient = quotient + ring.alpha(j)
        else:
            for j in range(o, e):
                quotient = quotient - ring.alpha(j)
        return ring.const(2 ** n) * quotient
    raise DomainError("unknown closed form %r" % (kind,))

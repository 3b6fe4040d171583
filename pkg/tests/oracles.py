"""Independent brute-force oracles used across the test suite.

These deliberately avoid the library's evaluation paths: the Pfaffian is a
signed sum over perfect matchings, the inversion generating function is a
direct enumeration, and series arithmetic goes through the public ring.
They stay in the tree permanently as ground truth.
"""

from itertools import permutations

from hltorus.series import SeriesRing


def pfaffian_by_matchings(matrix):
    """Signed sum over all perfect matchings of {0, ..., size-1}."""
    ring = SeriesRing(matrix.trunc)

    def rec(idx):
        if not idx:
            return ring.one()
        first = idx[0]
        total = ring.zero()
        for pos in range(1, len(idx)):
            j = idx[pos]
            rest = tuple(x for x in idx[1:] if x != j)
            term = matrix.entry(first, j) * rec(rest)
            total = total + (term if pos % 2 else -term)
        return total

    if matrix.size % 2:
        raise ValueError("odd size")
    return rec(tuple(range(matrix.size)))


def multiset_inversion_sum(zeros, ones, order):
    """Sum of t^inversions over permutations of {0^zeros, 1^ones}.

    An inversion is a pair (i < j) with word[i] > word[j]; enumerated
    directly over distinct rearrangements.
    """
    ring = SeriesRing(order)
    word = (0,) * zeros + (1,) * ones
    total = ring.zero()
    for w in sorted(set(permutations(word))):
        inv = sum(
            1
            for i in range(len(w))
            for j in range(i + 1, len(w))
            if w[i] > w[j]
        )
        total = total + ring.t(inv)
    return total

"""Brute-force combinatorial oracle for the central gamma coefficients.

A doubloon of order ``2n+1`` is a 2 x (n+1) arrangement of ``0..2n+1``::

    a_0 a_1 ... a_n
    b_0 b_1 ... b_n

rooted here at ``a_0 = 0`` (without rooting, order 3 has 8 interlaced
arrangements, which cannot match the central coefficient count 2; rooting
gives exactly 2 with generating function ``q + q^2``).  The statistic is

    cmaj'(d) = maj(w) - (n+1) des(w) + n^2

on the boustrophedon word ``w = a_0 ... a_n b_n ... b_0``, and a doubloon is
interlaced when every consecutive column quadruple ``(a_{k-1}, a_k, b_{k-1},
b_k)``, or one of its three cyclic rotations, is strictly monotonic.

The generating function of interlaced doubloons by cmaj' equals the central
type-A gamma coefficient ``a[2n+1, n+1](q)``, which this module recomputes
by raw enumeration of all ``(2n+1)!`` cell fillings.
"""

from __future__ import annotations

import dataclasses
from itertools import permutations
from typing import Sequence

from .qring import QPoly

DEFAULT_ORDER_LIMIT = 4


@dataclasses.dataclass(frozen=True)
class Doubloon:
    """Rows of a 2 x (n+1) matrix holding a permutation of ``0..2n+1``."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        if len(self.top) != len(self.bottom):
            raise ValueError("rows must have equal length")
        m = 2 * len(self.top)
        if sorted(self.top + self.bottom) != list(range(m)):
            raise ValueError(f"entries must be a permutation of 0..{m - 1}")

    @property
    def order(self) -> int:
        """The order 2n+1, where the matrix is 2 x (n+1)."""
        return 2 * len(self.top) - 1

    def reading_word(self) -> tuple[int, ...]:
        """Boustrophedon word: top row left-to-right, bottom right-to-left."""
        return self.top + tuple(reversed(self.bottom))


def word_des(w: Sequence[int]) -> int:
    """Number of descents of a word (positions i with w_i > w_{i+1})."""
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def word_maj(w: Sequence[int]) -> int:
    """Major index: sum of the (1-based) descent positions.

    >>> word_maj((0, 1, 3, 2)), word_des((0, 1, 3, 2))
    (3, 1)
    >>> word_maj((0, 3, 1, 2)), word_des((0, 3, 1, 2))
    (2, 1)
    """
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def cmaj_prime(d: Doubloon) -> int:
    """``maj(w) - (n+1) des(w) + n^2`` on the boustrophedon word.

    >>> cmaj_prime(Doubloon((0, 1), (2, 3)))
    2
    >>> cmaj_prime(Doubloon((0, 3), (2, 1)))
    1
    """
    n = len(d.top) - 1
    w = d.reading_word()
    return word_maj(w) - (n + 1) * word_des(w) + n * n


def _monotone(t: tuple[int, int, int, int]) -> bool:
    return (t[0] < t[1] < t[2] < t[3]) or (t[0] > t[1] > t[2] > t[3])


def is_interlaced(d: Doubloon) -> bool:
    """True iff every column quadruple ``(a_{k-1}, a_k, b_{k-1}, b_k)`` has a
    cyclic rotation that is strictly monotonic.  Only the four rotations are
    tested (not reversals).

    >>> is_interlaced(Doubloon((0, 1), (2, 3)))
    True
    >>> is_interlaced(Doubloon((0, 2), (1, 3)))
    False
    """
    a, b = d.top, d.bottom
    for k in range(1, len(a)):
        quad = (a[k - 1], a[k], b[k - 1], b[k])
        if not (
            _monotone(quad)
            or _monotone((quad[1], quad[2], quad[3], quad[0]))
            or _monotone((quad[2], quad[3], quad[0], quad[1]))
            or _monotone((quad[3], quad[0], quad[1], quad[2]))
        ):
            return False
    return True


def iter_doubloons(n: int, rooted: bool = True):
    """All doubloons of order 2n+1 (with ``a_0 = 0`` when rooted), filling
    the cells ``a_1..a_n`` then ``b_0..b_n`` in row-major order."""
    cells = n + 1
    if rooted:
        for perm in permutations(range(1, 2 * n + 2)):
            yield Doubloon((0,) + perm[: cells - 1], perm[cells - 1 :])
    else:
        for perm in permutations(range(2 * n + 2)):
            yield Doubloon(perm[:cells], perm[cells:])


def interlaced_gf(n: int, limit: int = DEFAULT_ORDER_LIMIT) -> QPoly:
    """Generating function ``sum q^cmaj'(d)`` over interlaced rooted
    doubloons of order 2n+1; equals the central coefficient
    ``a[2n+1, n+1](q)``.  Enumerates ``(2n+1)!`` candidates, so ``n`` is
    guarded by ``limit`` (raise it explicitly for bigger runs).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > limit:
        raise ValueError(
            f"n={n} enumerates {2 * n + 1}! candidates; raise limit= to allow"
        )
    counts: dict[int, int] = {}
    for d in iter_doubloons(n):
        if is_interlaced(d):
            stat = cmaj_prime(d)
            counts[stat] = counts.get(stat, 0) + 1
    if not counts:
        return QPoly.zero()
    if min(counts) < 0:
        raise ArithmeticError(f"negative cmaj' value {min(counts)} encountered")
    out = [0] * (max(counts) + 1)
    for stat, c in counts.items():
        out[stat] = c
    return QPoly(out)

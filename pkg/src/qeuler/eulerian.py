"""The four q-Eulerian coefficient triangles and their generating polynomials.

Families, with their per-row column ranges:

* ``A`` -- Carlitz q-Eulerian coefficients ``A[n,k]``, ``1 <= k <= n``,
  built by ``A[n,k] = [k] A[n-1,k] + q^(k-1) [n+1-k] A[n-1,k-1]``.
* ``a`` -- the gamma coefficients of the type-A expansion,
  ``1 <= k <= (n+1)//2``, by
  ``a[n,k] = [k] a[n-1,k] + (1+q^(k-1)) q^(k-1) [n+2-2k] a[n-1,k-1]``.
* ``B`` -- Chow-Gessel type-B q-Eulerian coefficients ``B[n,k]``,
  ``0 <= k <= n``, by
  ``B[n,k] = [2k+1] B[n-1,k] + q^(2k-1) [2n-2k+1] B[n-1,k-1]``.
* ``b`` -- the type-B gamma coefficients, ``0 <= k <= n//2``, by
  ``b[n,k] = [2k+1] b[n-1,k] + (1+q)(1+q^(2k-1)) q^(2k-1) [n+1-2k]_{q^2} b[n-1,k-1]``.

``A_n(t,q) = sum_k A[n,k] t^(k-1)`` and ``B_n(t,q) = sum_k B[n,k] t^k`` are
also definable through their generating series

    sum_{k>=0} [k+1]^n t^k = A_n(t,q) / (t;q)_{n+1}
    sum_{k>=0} [2k+1]^n t^k = B_n(t,q) / (t;q^2)_{n+1}

which the ``*_series_oracle`` functions implement as independent
cross-checks of the recurrence route.

Rows are built once and cached; triangles are immutable views.
"""

from __future__ import annotations

import dataclasses
from functools import lru_cache

from .qring import (
    QLaurent,
    QPoly,
    TQPoly,
    poch_t,
    q_int,
    subst_q_power,
    q_binom,
)

FAMILY_RANGES = {
    "A": lambda n: range(1, n + 1),
    "a": lambda n: range(1, (n + 1) // 2 + 1),
    "B": lambda n: range(0, n + 1),
    "b": lambda n: range(0, n // 2 + 1),
}

FAMILY_FIRST_ROW = {"A": 1, "a": 1, "B": 0, "b": 1}


@dataclasses.dataclass(frozen=True)
class Triangle:
    """Doubly indexed family of polynomials with explicit per-row bounds.
    Entries outside the stated column range are identically zero."""

    family: str
    first_n: int
    rows: tuple[tuple[QPoly, ...], ...]

    def krange(self, n: int) -> range:
        return FAMILY_RANGES[self.family](n)

    @property
    def max_n(self) -> int:
        return self.first_n + len(self.rows) - 1

    def row(self, n: int) -> tuple[QPoly, ...]:
        if not self.first_n <= n <= self.max_n:
            raise IndexError(f"row {n} not materialized (have {self.first_n}..{self.max_n})")
        return self.rows[n - self.first_n]

    def entry(self, n: int, k: int) -> QPoly:
        """``P[n,k]``, zero outside the stated range."""
        kr = self.krange(n)
        if self.first_n <= n <= self.max_n and k in kr:
            return self.row(n)[k - kr.start]
        return QPoly.zero()


# ---------------------------------------------------------------------------
# Cached row builders
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _carlitz_row(n: int) -> tuple[QPoly, ...]:
    if n < 1:
        raise ValueError(f"family A rows start at n=1, got {n}")
    if n == 1:
        return (QPoly.one(),)
    prev = _carlitz_row(n - 1)

    def at(k: int) -> QPoly:
        return prev[k - 1] if 1 <= k <= n - 1 else QPoly.zero()

    return tuple(
        q_int(k) * at(k) + QPoly.monomial(k - 1) * q_int(n + 1 - k) * at(k - 1)
        for k in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def _gamma_a_row(n: int) -> tuple[QPoly, ...]:
    if n < 1:
        raise ValueError(f"family a rows start at n=1, got {n}")
    if n == 1:
        return (QPoly.one(),)
    prev = _gamma_a_row(n - 1)

    def at(k: int) -> QPoly:
        return prev[k - 1] if 1 <= k <= n // 2 else QPoly.zero()

    row = []
    for k in range(1, (n + 1) // 2 + 1):
        gamma = (QPoly.one() + QPoly.monomial(k - 1)) * QPoly.monomial(k - 1)
        row.append(q_int(k) * at(k) + gamma * q_int(n + 2 - 2 * k) * at(k - 1))
    return tuple(row)


@lru_cache(maxsize=None)
def _typeB_row(n: int) -> tuple[QPoly, ...]:
    if n < 0:
        raise ValueError(f"family B rows start at n=0, got {n}")
    if n == 0:
        return (QPoly.one(),)
    prev = _typeB_row(n - 1)

    def at(k: int) -> QPoly:
        return prev[k] if 0 <= k <= n - 1 else QPoly.zero()

    row = []
    for k in range(0, n + 1):
        term = q_int(2 * k + 1) * at(k)
        if k >= 1:
            term = term + QPoly.monomial(2 * k - 1) * q_int(2 * n - 2 * k + 1) * at(k - 1)
        row.append(term)
    return tuple(row)


@lru_cache(maxsize=None)
def _gamma_b_row(n: int) -> tuple[QPoly, ...]:
    # Row 0 is the natural seed (B_0(t,q) = 1 forces b[0,0] = 1); the public
    # triangle starts at n=1 with the stated b[1,0] = 1.
    if n < 0:
        raise ValueError(f"family b rows start at n=0, got {n}")
    if n == 0:
        return (QPoly.one(),)
    prev = _gamma_b_row(n - 1)

    def at(k: int) -> QPoly:
        return prev[k] if 0 <= k <= (n - 1) // 2 else QPoly.zero()

    row = []
    for k in range(0, n // 2 + 1):
        term = q_int(2 * k + 1) * at(k)
        if k >= 1:
            gamma = (
                QPoly([1, 1])
                * (QPoly.one() + QPoly.monomial(2 * k - 1))
                * QPoly.monomial(2 * k - 1)
            )
            term = term + gamma * q_int(n + 1 - 2 * k, step=2) * at(k - 1)
        row.append(term)
    return tuple(row)


def _build(family: str, row_fn, N: int) -> Triangle:
    first = FAMILY_FIRST_ROW[family]
    if N < first:
        raise ValueError(f"family {family} needs N >= {first}, got {N}")
    return Triangle(family, first, tuple(row_fn(n) for n in range(first, N + 1)))


def carlitz_triangle(N: int) -> Triangle:
    """Rows 1..N of the Carlitz coefficients ``A[n,k](q)``."""
    return _build("A", _carlitz_row, N)


def gamma_a_triangle(N: int) -> Triangle:
    """Rows 1..N of the type-A gamma coefficients ``a[n,k](q)``."""
    return _build("a", _gamma_a_row, N)


def typeB_triangle(N: int) -> Triangle:
    """Rows 0..N of the Chow-Gessel coefficients ``B[n,k](q)``."""
    return _build("B", _typeB_row, N)


def gamma_b_triangle(N: int) -> Triangle:
    """Rows 1..N of the type-B gamma coefficients ``b[n,k](q)``."""
    return _build("b", _gamma_b_row, N)


def carlitz_entry(n: int, k: int) -> QPoly:
    return _carlitz_row(n)[k - 1] if 1 <= k <= n else QPoly.zero()


def gamma_a_entry(n: int, k: int) -> QPoly:
    return _gamma_a_row(n)[k - 1] if 1 <= k <= (n + 1) // 2 else QPoly.zero()


def typeB_entry(n: int, k: int) -> QPoly:
    return _typeB_row(n)[k] if 0 <= k <= n else QPoly.zero()


def gamma_b_entry(n: int, k: int) -> QPoly:
    return _gamma_b_row(n)[k] if 0 <= k <= n // 2 else QPoly.zero()


# ---------------------------------------------------------------------------
# Generating polynomials and series oracles
# ---------------------------------------------------------------------------


def carlitz_poly(n: int) -> TQPoly:
    """``A_n(t,q) = sum_{k=1}^n A[n,k](q) t^(k-1)``."""
    return TQPoly(_carlitz_row(n))


def typeB_poly(n: int) -> TQPoly:
    """``B_n(t,q) = sum_{k=0}^n B[n,k](q) t^k``."""
    return TQPoly(_typeB_row(n))


def carlitz_series_oracle(n: int, tdeg_window: int | None = None) -> TQPoly:
    """Recover ``A_n(t,q)`` from its defining series: truncate
    ``(t;q)_{n+1} * sum_{k=0}^{W} [k+1]^n t^k`` and demand that every
    t-coefficient from degree n through the window vanishes.

    A nonzero tail signals an arithmetic bug, not a user error.
    """
    if n < 1:
        raise ValueError(f"series oracle needs n >= 1, got {n}")
    W = 2 * n if tdeg_window is None else tdeg_window
    if W < n:
        raise ValueError(f"tdeg_window must be >= {n}, got {W}")
    series = TQPoly([q_int(k + 1) ** n for k in range(W + 1)])
    prod = poch_t(0, n + 1, sign=+1) * series
    for j in range(n, W + 1):
        if not prod.coeff(j).is_zero():
            raise ArithmeticError(f"series tail nonzero at t^{j} (n={n})")
    return TQPoly(prod.terms[:n])


def typeB_series_oracle(n: int, tdeg_window: int | None = None) -> TQPoly:
    """Type-B analogue of :func:`carlitz_series_oracle`, with base ``q^2``
    Pochhammer and series ``sum [2k+1]^n t^k``; tail must vanish above
    t-degree n."""
    if n < 0:
        raise ValueError(f"series oracle needs n >= 0, got {n}")
    W = max(2 * n, n + 1) if tdeg_window is None else tdeg_window
    if W < n + 1:
        raise ValueError(f"tdeg_window must be >= {n + 1}, got {W}")
    series = TQPoly([q_int(2 * k + 1) ** n for k in range(W + 1)])
    prod = poch_t(0, n + 1, sign=+1, step=2) * series
    for j in range(n + 1, W + 1):
        if not prod.coeff(j).is_zero():
            raise ArithmeticError(f"series tail nonzero at t^{j} (n={n})")
    return TQPoly(prod.terms[: n + 1])


# ---------------------------------------------------------------------------
# Gamma-basis assembly and change of basis
# ---------------------------------------------------------------------------


def gamma_expand_A(n: int) -> TQPoly:
    """Assemble ``sum_k a[n,k](q) t^(k-1) (-t q^k; q)_{n+1-2k}``; equals
    ``carlitz_poly(n)`` exactly."""
    if n < 1:
        raise ValueError(f"gamma expansion needs n >= 1, got {n}")
    acc = TQPoly.zero()
    for k in range(1, (n + 1) // 2 + 1):
        factor = poch_t(k, n + 1 - 2 * k, sign=-1)
        acc = acc + (gamma_a_entry(n, k) * factor).t_shift(k - 1)
    return acc


def gamma_expand_B(n: int) -> TQPoly:
    """Assemble ``sum_k b[n,k](q) t^k (-t q^(2k+1); q^2)_{n-2k}``; equals
    ``typeB_poly(n)`` exactly."""
    if n < 1:
        raise ValueError(f"gamma expansion needs n >= 1, got {n}")
    acc = TQPoly.zero()
    for k in range(0, n // 2 + 1):
        factor = poch_t(2 * k + 1, n - 2 * k, sign=-1, step=2)
        acc = acc + (gamma_b_entry(n, k) * factor).t_shift(k)
    return acc


def basis_change_A(n: int, k: int) -> QPoly:
    """``A[n,k](q)`` computed from the gamma row:
    ``sum_s [n+1-2s choose k-s]_q q^((k-s)s + C(k-s,2)) a[n,s](q)``."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    acc = QPoly.zero()
    for s in range(1, (n + 1) // 2 + 1):
        if s > k:
            break
        d = k - s
        exp = d * s + d * (d - 1) // 2
        acc = acc + q_binom(n + 1 - 2 * s, d) * QPoly.monomial(exp) * gamma_a_entry(n, s)
    return acc


def basis_change_B(n: int, k: int) -> QPoly:
    """``B[n,k](q)`` from the gamma row, with the Gaussian binomial taken in
    the variable ``q^2``:
    ``sum_s [n-2s choose k-s]_{q^2} q^(k^2 - s^2) b[n,s](q)``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    acc = QPoly.zero()
    for s in range(0, n // 2 + 1):
        if s > k:
            break
        acc = acc + (
            subst_q_power(q_binom(n - 2 * s, k - s), 2)
            * QPoly.monomial(k * k - s * s)
            * gamma_b_entry(n, s)
        )
    return acc


# ---------------------------------------------------------------------------
# Classical (q = 1) integer triangles
# ---------------------------------------------------------------------------


def classical_gamma_a(N: int) -> list[list[int]]:
    """Integer rows 1..N by ``a[n,k] = k a[n-1,k] + 2(n+2-2k) a[n-1,k-1]``."""
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    rows = [[1]]
    for n in range(2, N + 1):
        prev = rows[-1]

        def at(k: int) -> int:
            return prev[k - 1] if 1 <= k <= n // 2 else 0

        rows.append(
            [k * at(k) + 2 * (n + 2 - 2 * k) * at(k - 1) for k in range(1, (n + 1) // 2 + 1)]
        )
    return rows[:N]


def classical_gamma_b(N: int) -> list[list[int]]:
    """Integer rows 1..N by ``b[n,k] = (2k+1) b[n-1,k] + 4(n+1-2k) b[n-1,k-1]``."""
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    rows = [[1]]
    for n in range(2, N + 1):
        prev = rows[-1]

        def at(k: int) -> int:
            return prev[k] if 0 <= k <= (n - 1) // 2 else 0

        rows.append(
            [(2 * k + 1) * at(k) + 4 * (n + 1 - 2 * k) * at(k - 1) for k in range(0, n // 2 + 1)]
        )
    return rows[:N]


# ---------------------------------------------------------------------------
# Proof-lemma bracket identities
# ---------------------------------------------------------------------------


def q_int_ext(m: int, step: int = 1) -> QLaurent:
    """The q-integer ``(1 - q^(step*m)) / (1 - q^step)`` extended to all
    integers ``m``; for ``m < 0`` this is ``-q^(step*m) [\\,-m\\,]``."""
    if m >= 0:
        return QLaurent(q_int(m, step=step))
    return QLaurent(q_int(-m, step=step), step * m) * -1


def bracket_identity_A(n: int, k: int, s: int) -> bool:
    """Exact identity behind the type-A gamma recurrence:
    ``[n+1-2s][s] + [n-k-s+1](1+q^s)[k-s] = [k][n-k-s+1] + [n+1-k][k-s]``.
    Brackets with negative arguments take the Laurent extension, so the
    check covers every triple ``1 <= s <= k <= n``."""
    lhs = q_int_ext(n + 1 - 2 * s) * q_int_ext(s) + q_int_ext(n - k - s + 1) * (
        QLaurent.one() + QLaurent.q_power(s)
    ) * q_int_ext(k - s)
    rhs = q_int_ext(k) * q_int_ext(n - k - s + 1) + q_int_ext(n + 1 - k) * q_int_ext(k - s)
    return lhs == rhs


def bracket_identity_B(n: int, k: int, s: int) -> bool:
    """Type-B analogue:
    ``[n-2s]_{q^2}[2s+1] + [n-k-s]_{q^2}(1+q)(1+q^(2s+1))[k-s]_{q^2}
      = [2k+1][n-k-s]_{q^2} + [2n+1-2k][k-s]_{q^2}``."""
    gamma = QLaurent(QPoly([1, 1])) * (QLaurent.one() + QLaurent.q_power(2 * s + 1))
    lhs = q_int_ext(n - 2 * s, step=2) * q_int_ext(2 * s + 1) + q_int_ext(
        n - k - s, step=2
    ) * gamma * q_int_ext(k - s, step=2)
    rhs = q_int_ext(2 * k + 1) * q_int_ext(n - k - s, step=2) + q_int_ext(
        2 * n + 1 - 2 * k
    ) * q_int_ext(k - s, step=2)
    return lhs == rhs

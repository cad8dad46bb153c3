"""Gaussian binomial coefficients in base q and base q^2, plus (q;q)_m.

The main entry point qbinom(n, k, base) is backed by memoized Pascal
tables (one per base), filled row by row with

    [n k] = [n-1 k] + q^{base*(n-k)} [n-1 k-1],

and exploiting the symmetry [n k] = [n n-k] to store only k <= n//2.
Out-of-range arguments (n < 0, k < 0 or k > n) denote the zero polynomial
rather than an error: the alternating sums in the families module run j
over all integers and rely on silent vanishing.

qbinom_via_product computes the same value through the Pochhammer
quotient (q;q)_n / ((q;q)_k (q;q)_{n-k}) with exact polynomial division;
it is deliberately kept as an independent oracle for the tests and is not
used by qbinom itself.

The memo tables are the only mutable state in the package. Under CPython
the row-append fill is effectively atomic per lookup and returned values
are immutable; for free-threaded use, confine the module to one execution
context or wrap calls in a lock.
"""

from __future__ import annotations

from .qpoly import ONE, Q, ZERO, QPoly

_rows: dict[int, list[list[QPoly]]] = {1: [[ONE]], 2: [[ONE]]}
_poch: list[QPoly] = [ONE]


def qpochhammer(m: int) -> QPoly:
    """(q;q)_m = (1-q)(1-q^2)...(1-q^m); (q;q)_0 = 1."""
    if m < 0:
        raise ValueError("qpochhammer needs m >= 0")
    while len(_poch) <= m:
        i = len(_poch)
        _poch.append(_poch[i - 1] * QPoly({0: 1, i: -1}))
    return _poch[m]


def _row_entry(rows: list, n: int, k: int) -> QPoly:
    # Lookup within filled rows, applying symmetry and vanishing.
    if k < 0 or k > n:
        return ZERO
    if 2 * k > n:
        k = n - k
    return rows[n][k]


def _ensure_rows(n: int, base: int) -> None:
    rows = _rows[base]
    while len(rows) <= n:
        m = len(rows)
        row = [
            _row_entry(rows, m - 1, k)
            + _row_entry(rows, m - 1, k - 1).monomial_mul(1, base * (m - k))
            for k in range(m // 2 + 1)
        ]
        rows.append(row)


def qbinom(n: int, k: int, base: int = 1) -> QPoly:
    """Gaussian binomial [n k] in q^base (base 1 or 2).

    Zero for n < 0, k < 0, or k > n; [n 0] = 1 for n >= 0.
    """
    if base not in (1, 2):
        raise ValueError(f"base must be 1 or 2, got {base}")
    if n < 0 or k < 0 or k > n:
        return ZERO
    if 2 * k > n:
        k = n - k
    rows = _rows[base]
    if n >= len(rows):
        _ensure_rows(n, base)
    return rows[n][k]


def qbinom_via_product(n: int, k: int, base: int = 1) -> QPoly:
    """Product-formula oracle: (q;q)_n / ((q;q)_k (q;q)_{n-k}).

    Independent of the Pascal tables. Base 2 substitutes q <- q^2 into
    the base-1 quotient. Raises ArithmeticError if the division is not
    exact (which would mean an implementation bug, not a user error).
    """
    if base not in (1, 2):
        raise ValueError(f"base must be 1 or 2, got {base}")
    if n < 0 or k < 0 or k > n:
        return ZERO
    quotient = qpochhammer(n).divexact(qpochhammer(k) * qpochhammer(n - k))
    return quotient if base == 1 else quotient.subs_q_power(2)


def contiguous_residual(n: int, k: int) -> QPoly:
    """Residual of the four-term contiguous relation

        [n k] - (1+q-q^n)[n-1 k] - q^{2n-2k}[n-1 k-1] + q(1-q^{n-1})[n-2 k]

    for n >= 2. Zero for every k; the middle term is skipped for k > n,
    where its binomial vanishes and q^{2n-2k} would have a negative
    exponent.
    """
    if n < 2:
        raise ValueError("contiguous relation needs n >= 2")
    r = qbinom(n, k) - (ONE + Q - QPoly.monomial(1, n)) * qbinom(n - 1, k)
    if k <= n:
        r = r - qbinom(n - 1, k - 1).monomial_mul(1, 2 * n - 2 * k)
    return r + (Q - QPoly.monomial(1, n)) * qbinom(n - 2, k)


def clear_cache() -> None:
    """Reset the memo tables (mainly for memory-sensitive callers)."""
    _rows[1] = [[ONE]]
    _rows[2] = [[ONE]]
    del _poch[1:]

"""The polynomial families and kernels, from their defining summations.

Sum-side families pair with alternating-side partners that they provably
equal (the equalities are re-verified, not assumed, by the test suite and
the CLI):

    A_n     = sum_k q^{k^2} [n k]
    B_n     = sum_j (-1)^j q^{j(5j-1)/2} [2n n-2j]
    C_n     = sum_k q^{k^2+k} [n k]
    D_n     = sum_j (-1)^j q^{j(5j-3)/2} [2n+1 n+1-2j]
    S_n     = sum_{2k<=n} q^{2k^2} [n 2k]
    S_ALT_n = sum_j q^{4j^2-j} [n floor((n+1)/2)-2j]_{q^2}
    T_n     = sum_{2k+1<=n} q^{2k^2+2k} [n 2k+1]
    T_ALT_n = sum_j q^{4j^2-3j} [n floor((n+2)/2)-2j]_{q^2}
    U_n     = sum_k q^{k^2} [n+k 2k]
    U_ALT_n = sum_j q^{15j^2-j} [2n n-5j] - sum_j q^{15j^2-11j+2} [2n n+2-5j]

All j-sums run over the finite window where the binomial argument is in
range; every quadratic exponent above is nonnegative on that window (this
is checked at construction, since QPoly rejects negative exponents).

The kernels are the inner weighted-binomial-product sums that reduce the
alternating sides to sum-side shape (ce = ceil(n/2), fl = floor(n/2)):

    f(n,k) = sum_j (-1)^j q^{j(3j-1)/2} [n k-j][n k+j]
    g(n,k) = sum_j q^{2j^2-j} [ce k+j]_{q^2} [fl k-j]_{q^2}
    h(n,k) = sum_j q^{2j^2-j} [fl k+j]_{q^2} [ce k+1-j]_{q^2}

They satisfy f(n,k) = [n k], g(n,k) = [n 2k], h(n,k) = [n 2k+1]; the
kernels are computed from the defining sums (never through that shortcut)
precisely so those equalities stay meaningful checks.
"""

from __future__ import annotations

from enum import Enum

from .qbinom import qbinom
from .qpoly import ZERO, QPoly


class Family(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    S = "S"
    S_ALT = "S_ALT"
    T = "T"
    T_ALT = "T_ALT"
    U = "U"
    U_ALT = "U_ALT"


class Kernel(Enum):
    F = "F"
    G = "G"
    H = "H"


class CvInstance(Enum):
    CV_B = "CV_B"
    CV_D = "CV_D"
    CV_S = "CV_S"
    CV_T = "CV_T"


#: Each family's proven-equal partner (sum side <-> alternating side).
PARTNER = {
    Family.A: Family.B,
    Family.B: Family.A,
    Family.C: Family.D,
    Family.D: Family.C,
    Family.S: Family.S_ALT,
    Family.S_ALT: Family.S,
    Family.T: Family.T_ALT,
    Family.T_ALT: Family.T,
    Family.U: Family.U_ALT,
    Family.U_ALT: Family.U,
}

_family_cache: dict = {}
_kernel_cache: dict = {}


def _j_window(offset: int, step: int, upper: int) -> range:
    # All j with 0 <= offset - step*j <= upper.
    jlo = -((upper - offset) // step)
    jhi = offset // step
    return range(jlo, jhi + 1)


def _alternating_sum(n2: int, offset: int, step: int, expo, signed: bool) -> QPoly:
    total = ZERO
    for j in _j_window(offset, step, n2):
        b = qbinom(n2, offset - step * j)
        if not b:
            continue
        sign = -1 if (signed and j % 2) else 1
        total = total + b.monomial_mul(sign, expo(j))
    return total


def family_poly(fam: Family, n: int) -> QPoly:
    """The family member at index n (exact), cached per (family, n)."""
    if n < 0:
        raise ValueError("family index must be nonnegative")
    key = (fam, n)
    hit = _family_cache.get(key)
    if hit is not None:
        return hit
    if fam is Family.A:
        p = ZERO
        for k in range(n + 1):
            p = p + qbinom(n, k).monomial_mul(1, k * k)
    elif fam is Family.B:
        p = _alternating_sum(2 * n, n, 2, lambda j: j * (5 * j - 1) // 2, True)
    elif fam is Family.C:
        p = ZERO
        for k in range(n + 1):
            p = p + qbinom(n, k).monomial_mul(1, k * k + k)
    elif fam is Family.D:
        p = _alternating_sum(2 * n + 1, n + 1, 2, lambda j: j * (5 * j - 3) // 2, True)
    elif fam is Family.S:
        p = ZERO
        for k in range(n // 2 + 1):
            p = p + qbinom(n, 2 * k).monomial_mul(1, 2 * k * k)
    elif fam is Family.S_ALT:
        p = ZERO
        for j in _j_window((n + 1) // 2, 2, n):
            b = qbinom(n, (n + 1) // 2 - 2 * j, base=2)
            if b:
                p = p + b.monomial_mul(1, 4 * j * j - j)
    elif fam is Family.T:
        p = ZERO
        for k in range((n + 1) // 2):
            p = p + qbinom(n, 2 * k + 1).monomial_mul(1, 2 * k * k + 2 * k)
    elif fam is Family.T_ALT:
        p = ZERO
        for j in _j_window((n + 2) // 2, 2, n):
            b = qbinom(n, (n + 2) // 2 - 2 * j, base=2)
            if b:
                p = p + b.monomial_mul(1, 4 * j * j - 3 * j)
    elif fam is Family.U:
        p = ZERO
        for k in range(n + 1):
            p = p + qbinom(n + k, 2 * k).monomial_mul(1, k * k)
    elif fam is Family.U_ALT:
        p = _alternating_sum(2 * n, n, 5, lambda j: 15 * j * j - j, False)
        second = _alternating_sum(2 * n, n + 2, 5, lambda j: 15 * j * j - 11 * j + 2, False)
        p = p - second
    else:
        raise ValueError(f"unknown family {fam!r}")
    _family_cache[key] = p
    return p


def kernel(kid: Kernel, n: int, k: int) -> QPoly:
    """Kernel value from its defining summation, cached per (kernel, n, k)."""
    if n < 0:
        raise ValueError("kernel index n must be nonnegative")
    key = (kid, n, k)
    hit = _kernel_cache.get(key)
    if hit is not None:
        return hit
    if kid is Kernel.F:
        if k < 0 or k > n:
            return ZERO
        center = qbinom(n, k)
        p = center * center
        # +/-j give the same binomial product; fold them into one pass
        # with the paired weights q^{j(3j-1)/2} and q^{j(3j+1)/2}.
        for j in range(1, min(k, n - k) + 1):
            prod = qbinom(n, k - j) * qbinom(n, k + j)
            sign = -1 if j % 2 else 1
            w = QPoly({j * (3 * j - 1) // 2: sign, j * (3 * j + 1) // 2: sign})
            p = p + w * prod
    elif kid is Kernel.G:
        ce, fl = (n + 1) // 2, n // 2
        p = ZERO
        for j in range(max(-k, k - fl), min(ce - k, k) + 1):
            prod = qbinom(ce, k + j, base=2) * qbinom(fl, k - j, base=2)
            p = p + prod.monomial_mul(1, 2 * j * j - j)
    elif kid is Kernel.H:
        ce, fl = (n + 1) // 2, n // 2
        p = ZERO
        for j in range(max(-k, k + 1 - ce), min(fl - k, k + 1) + 1):
            prod = qbinom(fl, k + j, base=2) * qbinom(ce, k + 1 - j, base=2)
            p = p + prod.monomial_mul(1, 2 * j * j - j)
    else:
        raise ValueError(f"unknown kernel {kid!r}")
    _kernel_cache[key] = p
    return p


def cv_residual(cid: CvInstance, n: int, j: int) -> QPoly:
    """LHS - RHS of the selected convolution expansion; zero for every
    in-range (n, j), and trivially zero when both sides vanish."""
    if n < 0:
        raise ValueError("index n must be nonnegative")
    ce, fl = (n + 1) // 2, n // 2
    if cid is CvInstance.CV_B:
        lhs = qbinom(2 * n, n - 2 * j)
        rhs = ZERO
        for k in range(abs(j), n - abs(j) + 1):
            prod = qbinom(n, k - j) * qbinom(n, k + j)
            rhs = rhs + prod.monomial_mul(1, (k - j) * (k + j))
    elif cid is CvInstance.CV_D:
        # The expanded binomial is [2n+1, n+1-2j] (the one D_n sums over);
        # the n-2j variant satisfies this expansion only at j = 0.
        lhs = qbinom(2 * n + 1, n + 1 - 2 * j)
        rhs = ZERO
        for k in range(max(j - 1, -j), min(n + j, n - j) + 1):
            prod = qbinom(n + 1, k + 1 - j) * qbinom(n, k + j)
            rhs = rhs + prod.monomial_mul(1, (k + j) * (k - j + 1))
    elif cid is CvInstance.CV_S:
        lhs = qbinom(n, (n + 1) // 2 - 2 * j, base=2)
        rhs = ZERO
        for k in range(abs(j), min(ce - j, fl + j) + 1):
            prod = qbinom(ce, k + j, base=2) * qbinom(fl, k - j, base=2)
            rhs = rhs + prod.monomial_mul(1, 2 * k * k - 2 * j * j)
    elif cid is CvInstance.CV_T:
        lhs = qbinom(n, (n + 2) // 2 - 2 * j, base=2)
        rhs = ZERO
        for k in range(max(-j, j - 1), min(fl - j, ce + j - 1) + 1):
            prod = qbinom(fl, k + j, base=2) * qbinom(ce, k + 1 - j, base=2)
            rhs = rhs + prod.monomial_mul(1, 2 * k * k + 2 * k - 2 * j * j + 2 * j)
    else:
        raise ValueError(f"unknown convolution instance {cid!r}")
    return lhs - rhs


_KERNEL_SUMS = {
    Family.B: (Kernel.F, lambda k: k * k),
    Family.D: (Kernel.F, lambda k: k * k + k),
    Family.S_ALT: (Kernel.G, lambda k: 2 * k * k),
    Family.T_ALT: (Kernel.H, lambda k: 2 * k * k + 2 * k),
}


def kernel_sum_identity(fam: Family, n: int) -> QPoly:
    """family_poly(fam, n) minus its weighted kernel sum; zero on contract.

    Defined for B, D (f kernel), S_ALT (g), T_ALT (h).
    """
    if fam not in _KERNEL_SUMS:
        raise ValueError(f"no kernel sum form for family {fam!r}")
    kid, expo = _KERNEL_SUMS[fam]
    total = ZERO
    for k in range(n + 1):
        kv = kernel(kid, n, k)
        if kv:
            total = total + kv.monomial_mul(1, expo(k))
    return family_poly(fam, n) - total


def clear_cache() -> None:
    """Reset the family and kernel caches."""
    _family_cache.clear()
    _kernel_cache.clear()

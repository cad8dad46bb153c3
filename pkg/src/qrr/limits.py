"""Truncated-product checks of the two classic partition product sides.

rr_product(1, M) expands prod 1/((1-q^{5i+1})(1-q^{5i+4})) mod q^M, whose
q^m coefficient counts partitions of m into parts congruent to +-1 mod 5;
rr_product(2, M) is the +-2 mod 5 analogue. limit_check compares a family
member against the matching product side at truncation modulus n+1.

Why modulus n+1 is safe: the k-th summand q^{k^2} [n k] of the sum side
differs from its n -> infinity limit q^{k^2} / (q;q)_k only in terms of
order >= k^2 + (n-k+1) >= n+1 (the lowest missing part has size at least
n-k+1), so the finite polynomial and the infinite series agree below q^{n+1}.
The module hard-codes that margin.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import Family, family_poly
from .qpoly import ONE, QPoly
from .recurrence import VerificationReport

_SIDES = {1: (1, 4), 2: (2, 3)}

#: Which product side each family converges to.
FAMILY_SIDE = {Family.A: 1, Family.B: 1, Family.C: 2, Family.D: 2}


@dataclass(frozen=True)
class TruncatedSeries:
    """A polynomial known exactly below q^modulus."""

    modulus: int
    poly: QPoly

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if self.poly != self.poly.truncate(self.modulus):
            raise ValueError("poly has terms at or beyond the modulus")


def rr_product(side: int, modulus: int) -> TruncatedSeries:
    """Truncated expansion of the selected product side (side 1 or 2)."""
    residues = _SIDES.get(side)
    if residues is None:
        raise ValueError(f"side must be 1 or 2, got {side}")
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    poly = ONE
    for i in range(1, modulus):
        if i % 5 in residues:
            geometric = QPoly({e: 1 for e in range(0, modulus, i)})
            poly = (poly * geometric).truncate(modulus)
    return TruncatedSeries(modulus, poly)


def limit_check(fam: Family, n: int) -> VerificationReport:
    """Compare family_poly(fam, n) mod q^{n+1} with its product side."""
    side = FAMILY_SIDE.get(fam)
    if side is None:
        raise ValueError(f"limit check is defined for A/B/C/D, not {fam!r}")
    if n < 0:
        raise ValueError("index must be nonnegative")
    subject = f"limit:{fam.value}"
    diff = family_poly(fam, n).truncate(n + 1) - rr_product(side, n + 1).poly
    if diff:
        return VerificationReport(subject, (n, n), "fail", (n, diff))
    return VerificationReport(subject, (n, n), "pass")

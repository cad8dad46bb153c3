"""Truncated product sides vs a brute-force partition-counting oracle."""

from functools import lru_cache

import pytest

from qrr.families import Family, family_poly
from qrr.limits import FAMILY_SIDE, TruncatedSeries, limit_check, rr_product
from qrr.qpoly import ONE, QPoly


def allowed_parts(side: int, upper: int) -> tuple:
    residues = (1, 4) if side == 1 else (2, 3)
    return tuple(i for i in range(1, upper + 1) if i % 5 in residues)


def count_partitions(m: int, parts: tuple) -> int:
    # independent oracle: count partitions of m into parts from the list
    @lru_cache(maxsize=None)
    def rec(rem, idx):
        if rem == 0:
            return 1
        if idx >= len(parts) or parts[idx] > rem:
            return 0
        return rec(rem - parts[idx], idx) + rec(rem, idx + 1)

    return rec(m, 0)


def test_rr_product_frozen_values():
    assert rr_product(1, 5).poly == QPoly({0: 1, 1: 1, 2: 1, 3: 1, 4: 2})
    assert rr_product(2, 5).poly == QPoly({0: 1, 2: 1, 3: 1, 4: 1})
    assert rr_product(1, 1).poly == ONE


def test_rr_product_matches_partition_oracle():
    for side in (1, 2):
        series = rr_product(side, 31)
        parts = allowed_parts(side, 30)
        for m in range(31):
            assert series.poly.coeff(m) == count_partitions(m, parts), (side, m)


def test_rr_product_coefficients_nonnegative_and_growing():
    for side in (1, 2):
        series = rr_product(side, 40)
        coeffs = [series.poly.coeff(m) for m in range(40)]
        assert all(c >= 0 for c in coeffs)
        assert all(coeffs[m + 1] >= coeffs[m] for m in range(2, 39))


def test_rr_product_validation():
    with pytest.raises(ValueError):
        rr_product(3, 5)
    with pytest.raises(ValueError):
        rr_product(1, 0)


def test_truncated_series_invariant():
    TruncatedSeries(3, QPoly({0: 1, 2: 1}))
    with pytest.raises(ValueError):
        TruncatedSeries(3, QPoly({3: 1}))
    with pytest.raises(ValueError):
        TruncatedSeries(0, ONE)


def test_limit_check_examples():
    assert limit_check(Family.A, 4).passed
    assert family_poly(Family.A, 4).truncate(5) == QPoly({0: 1, 1: 1, 2: 1, 3: 1, 4: 2})
    assert limit_check(Family.C, 3).passed
    assert family_poly(Family.C, 3).truncate(4) == QPoly({0: 1, 2: 1, 3: 1})
    assert limit_check(Family.A, 0).passed


def test_limit_check_all_families():
    for fam in FAMILY_SIDE:
        for n in range(21):
            assert limit_check(fam, n).passed, (fam, n)


def test_limit_check_validation():
    with pytest.raises(ValueError):
        limit_check(Family.S, 3)
    with pytest.raises(ValueError):
        limit_check(Family.A, -1)


def test_stabilization():
    for fam in (Family.A, Family.C):
        for n in range(31):
            low = family_poly(fam, n).truncate(n + 1)
            assert low == family_poly(fam, n + 1).truncate(n + 1), (fam, n)

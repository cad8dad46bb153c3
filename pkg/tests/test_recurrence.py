"""Recurrence representation, verification, and the guess pipeline."""

import pytest

from qrr.families import Family, family_poly
from qrr.qpoly import BiPoly, ONE, ZERO, QPoly
from qrr.recurrence import (
    RECURRENCE_FAMILIES,
    Recurrence,
    VerificationReport,
    _nullspace,
    chapman_residuals,
    guess,
    known_recurrence,
    residual,
    verify,
)


def test_known_recurrence_coefficients():
    rec = known_recurrence("bressoud1")
    assert rec.order == 2
    assert rec.coeffs[0] == BiPoly({(1, 0): 1, (2, 1): -1})
    assert rec.coeffs[1].eval_at(1) == QPoly({0: -1, 1: -1, 3: 1, 5: -1})
    assert known_recurrence("santos").coeffs[0].eval_at(0) == QPoly({1: 1, 2: -1})
    for n in (0, 3, 11):
        assert known_recurrence("u").coeffs[2].eval_at(n) == ONE
    assert known_recurrence("bressoud2").coeffs[1] == BiPoly(
        {(0, 0): -1, (1, 0): -1, (2, 1): 1, (4, 2): -1}
    )


def test_unknown_key():
    with pytest.raises(ValueError):
        known_recurrence("nope")


def test_normalization():
    rec = known_recurrence("bressoud1")
    scaled = Recurrence([c.scaled(6) for c in rec.coeffs])
    assert scaled == rec
    flipped = Recurrence([c.scaled(-2) for c in rec.coeffs])
    assert flipped == rec
    # idempotence: re-normalizing a normalized recurrence changes nothing
    assert Recurrence(rec.coeffs) == rec
    g = 0
    for c in rec.coeffs:
        from math import gcd

        g = gcd(g, c.content())
    assert g == 1
    assert rec.coeffs[-1].leading_sign() > 0


def test_recurrence_validation():
    with pytest.raises(ValueError):
        Recurrence([BiPoly({(0, 0): 1})])  # order 0
    with pytest.raises(ValueError):
        Recurrence([BiPoly({(0, 0): 1}), BiPoly()])  # zero leading coefficient


def test_residual_examples():
    b_values = [family_poly(Family.B, n) for n in range(6)]
    rec = known_recurrence("bressoud1")
    assert residual(rec, b_values, 0) == ZERO
    assert residual(rec, b_values, 3) == ZERO
    t_values = [family_poly(Family.T, n) for n in range(6)]
    assert residual(known_recurrence("santos"), t_values, 0) == ZERO
    corrupted = list(b_values)
    corrupted[2] = corrupted[2] + ONE
    assert residual(rec, corrupted, 0) == ONE


def test_residual_index_errors():
    rec = known_recurrence("u")
    values = [ONE, ONE, ONE]
    with pytest.raises(IndexError):
        residual(rec, values, 1)
    with pytest.raises(IndexError):
        residual(rec, values, -1)


def test_verify_documented_pairings():
    for key, fams in RECURRENCE_FAMILIES.items():
        rec = known_recurrence(key)
        for fam in fams:
            report = verify(rec, fam, 20)
            assert report.passed, report.to_line()
            assert report.range == (0, 18)


def test_verify_u_alternating_form():
    assert verify(known_recurrence("u"), Family.U_ALT, 20).passed


def test_verify_detects_wrong_recurrence():
    report = verify(known_recurrence("u"), Family.A, 10)
    assert not report.passed
    n, res = report.witness
    assert n == 0
    assert res == QPoly({3: -1})


def test_report_invariant():
    with pytest.raises(ValueError):
        VerificationReport("x", (0, 1), "fail", None)
    with pytest.raises(ValueError):
        VerificationReport("x", (0, 1), "pass", (0, ONE))


def test_report_json_round_trip():
    rep = verify(known_recurrence("u"), Family.A, 8)
    back = VerificationReport.from_json_obj(rep.to_json_obj())
    assert back == rep
    rep = verify(known_recurrence("u"), Family.U, 8)
    assert VerificationReport.from_json_obj(rep.to_json_obj()) == rep


def test_chapman_residuals():
    for n in (1, 5, 10):
        assert chapman_residuals(n) == (ZERO, ZERO)
    for n in range(1, 21):
        first, second = chapman_residuals(n)
        assert not first and not second, n
    with pytest.raises(ValueError):
        chapman_residuals(0)


def test_nullspace_small():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = _nullspace(rows, 3)
    assert len(basis) == 2
    for vec in basis:
        assert all(sum(r * v for r, v in zip(row, vec)) == 0 for row in rows)
    # full-rank system: empty nullspace
    assert _nullspace([[1, 0], [0, 1], [1, 1]], 2) == []


def test_guess_constant_sequence():
    values = [ONE] * 12
    found = guess(values, 1, 0, 0, (0, 6), (7, 9))
    assert len(found) == 1
    rec = found[0]
    assert rec.coeffs == (BiPoly({(0, 0): -1}), BiPoly({(0, 0): 1}))
    assert rec.to_text() == "(-1)*P[n+0] + P[n+1] = 0"


def test_guess_recovers_named_recurrences():
    cases = [
        (Family.B, "bressoud1", 2, 3),
        (Family.S, "santos", 2, 2),
        (Family.T, "santos", 2, 2),
        (Family.U, "u", 2, 3),
    ]
    for fam, key, deg_t, deg_q in cases:
        values = [family_poly(fam, n) for n in range(19)]
        found = guess(values, 2, deg_t, deg_q, (0, 12), (13, 16))
        assert found == [known_recurrence(key)], (fam, [r.to_text() for r in found])


def test_guess_is_sound():
    values = [family_poly(Family.C, n) for n in range(19)]
    found = guess(values, 2, 2, 4, (0, 12), (13, 16))
    assert found
    for rec in found:
        for n in range(0, 17 - rec.order):
            assert residual(rec, values, n) == ZERO, (rec, n)


def test_guess_scale_invariance():
    values = [family_poly(Family.B, n) for n in range(19)]
    scale = QPoly({0: 3, 2: 1})
    scaled = [scale * v for v in values]
    plain = guess(values, 2, 2, 3, (0, 12), (13, 16))
    assert guess(scaled, 2, 2, 3, (0, 12), (13, 16)) == plain


def test_guess_returns_all_candidates():
    # geometric values: the deg_t-1 ansatz admits both the order-1 relation
    # and its t-multiple; both must come back, ordered by t-degree
    values = [QPoly({n: 1}) for n in range(13)]
    found = guess(values, 1, 1, 1, (0, 8), (9, 11))
    assert len(found) == 2
    assert found[0].coeffs == (BiPoly({(1, 0): -1}), BiPoly({(0, 0): 1}))
    assert found[1].coeffs == (BiPoly({(1, 1): -1}), BiPoly({(0, 1): 1}))


def test_guess_order_reduction():
    # constant sequence under an order-2 ansatz: one basis vector reduces
    # to the order-1 recurrence, the other stays order 2; both are valid
    values = [ONE] * 14
    found = guess(values, 2, 0, 0, (0, 8), (9, 11))
    assert [rec.order for rec in found] == [1, 2]
    assert found[0].coeffs == (BiPoly({(0, 0): -1}), BiPoly({(0, 0): 1}))
    for rec in found:
        for n in range(12 - rec.order):
            assert residual(rec, values, n) == ZERO


def test_vector_shift_normalization():
    # a relation with vanishing lowest coefficient reindexes: dropping it
    # substitutes t <- t/q and clears with q^(t-degree)
    from qrr.recurrence import _vector_to_recurrence

    vec = [0] * 12
    vec[5] = 1   # c_1 = q
    vec[10] = 1  # c_2 = t
    rec = _vector_to_recurrence(vec, 2, 1, 1)
    assert rec is not None and rec.order == 1
    assert rec.coeffs == (BiPoly({(2, 0): 1}), BiPoly({(0, 1): 1}))
    # degenerate single-term relation collapses to nothing
    vec = [0] * 12
    vec[7] = 1  # only c_1 = q*t
    assert _vector_to_recurrence(vec, 2, 1, 1) is None


def test_guess_no_result_within_ansatz():
    values = [family_poly(Family.B, n) for n in range(19)]
    # order 1 with tiny degrees cannot annihilate this sequence
    assert guess(values, 1, 0, 0, (0, 12), (13, 16)) == []


def test_guess_errors():
    values = [family_poly(Family.B, n) for n in range(19)]
    with pytest.raises(ValueError, match="disjoint"):
        guess(values, 2, 2, 3, (0, 12), (12, 14))
    with pytest.raises(ValueError, match="degenerate"):
        guess([ZERO] * 19, 2, 2, 3, (0, 12), (13, 16))
    with pytest.raises(ValueError, match="order"):
        guess(values, 0, 2, 3, (0, 12), (13, 16))
    with pytest.raises(ValueError, match="need values"):
        guess(values, 2, 2, 3, (0, 20), (21, 24))
    with pytest.raises(ValueError, match="equations"):
        guess(values, 2, 2, 3, (0, 0), (13, 16))
    with pytest.raises(ValueError, match="nonempty"):
        guess(values, 2, 2, 3, (5, 2), (13, 16))


def test_recurrence_text_and_json():
    rec = known_recurrence("bressoud1")
    assert rec.to_text() == (
        "(q - q^2*t)*P[n+0] + (-1 - q + q^2*t - q^3*t^2)*P[n+1] + P[n+2] = 0"
    )
    back = Recurrence.from_json_obj(rec.to_json_obj())
    assert back == rec and back.name == "bressoud1"

"""One-variable q-holonomic recurrences: represent, verify, discover.

A Recurrence of order r states

    sum_{i=0..r} c_i(q, t) * P_{n+i} = 0   with   t = q^n,

where n is the LOWEST index of the window. Under that shift convention
the four named recurrences of this package are polynomial in t with no
negative q-powers:

    bressoud1:  c = [q - q^2*t,  -(1 + q - q^2*t + q^3*t^2),  1]   (A and B)
    bressoud2:  c = [q - q^2*t,  -(1 + q - q^2*t + q^4*t^2),  1]   (C and D)
    santos:     c = [q - q^2*t^2,  -(1 + q),  1]                   (S, S_ALT, T, T_ALT)
    u:          c = [q,  -(1 + q + q^3*t^2),  1]                   (U, U_ALT)

Construction normalizes: the integer content (gcd of all coefficients
across all c_i) becomes 1 and the lexicographically leading term of c_r
(ordered by t-degree then q-degree) gets a positive sign.

guess() finds such recurrences from data: it sets up the exact homogeneous
linear system over the unknown integer coefficients of all c_i (one
equation per (n, power of q) pair across the fit window), computes an
exact nullspace basis by fraction-free elimination over the integers, and
keeps only candidates whose residual also vanishes on a disjoint confirm
window. No floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .families import PARTNER, Family, family_poly
from .qpoly import ZERO, BiPoly, QPoly


class Recurrence:
    """Order-r recurrence with BiPoly coefficients, t = q^(lowest index)."""

    __slots__ = ("order", "coeffs", "name")

    def __init__(self, coeffs: Sequence[BiPoly], name: Optional[str] = None):
        coeffs = tuple(coeffs)
        if len(coeffs) < 2:
            raise ValueError("a recurrence needs order >= 1 (two coefficients)")
        if not coeffs[-1]:
            raise ValueError("leading coefficient must be nonzero")
        g = 0
        for c in coeffs:
            g = gcd(g, c.content())
        if g > 1:
            coeffs = tuple(BiPoly._from_canonical({k: v // g for k, v in c._terms.items()}) for c in coeffs)
        if coeffs[-1].leading_sign() < 0:
            coeffs = tuple(-c for c in coeffs)
        self.order = len(coeffs) - 1
        self.coeffs = coeffs
        self.name = name

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Recurrence):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(tuple(sorted(c._terms.items())) for c in self.coeffs))

    def degrees(self) -> tuple[int, int]:
        """(max t-degree, max q-degree) over all coefficients."""
        tdeg = max((c.t_degree or 0) for c in self.coeffs if c)
        qdeg = max((c.q_degree or 0) for c in self.coeffs if c)
        return tdeg, qdeg

    def to_text(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            txt = c.to_text()
            parts.append(f"P[n+{i}]" if txt == "1" else f"({txt})*P[n+{i}]")
        return " + ".join(parts) + " = 0"

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "coeffs": [c.to_json_obj() for c in self.coeffs],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "Recurrence":
        return cls([BiPoly.from_json_obj(c) for c in obj["coeffs"]], name=obj.get("name"))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Recurrence{label} {self.to_text()}>"


@dataclass
class VerificationReport:
    """Outcome of a check over a range of lowest indices.

    witness is (n, residual) for the first failure; status is "fail"
    iff a witness is present.
    """

    subject: str
    range: tuple[int, int]
    status: str
    witness: Optional[tuple[int, QPoly]] = None

    def __post_init__(self):
        if (self.status == "fail") != (self.witness is not None):
            raise ValueError("status must be 'fail' exactly when a witness is present")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self) -> dict:
        w = None
        if self.witness is not None:
            w = {"n": self.witness[0], "residual": self.witness[1].to_json_obj()}
        return {
            "subject": self.subject,
            "range": list(self.range),
            "status": self.status,
            "witness": w,
        }

    @classmethod
    def from_json_obj(cls, obj) -> "VerificationReport":
        w = obj.get("witness")
        witness = None if w is None else (int(w["n"]), QPoly.from_json_obj(w["residual"]))
        return cls(
            subject=obj["subject"],
            range=(int(obj["range"][0]), int(obj["range"][1])),
            status=obj["status"],
            witness=witness,
        )

    def to_line(self) -> str:
        lo, hi = self.range
        if self.passed:
            return f"pass {self.subject} range=[{lo},{hi}]"
        n, res = self.witness
        return f"FAIL {self.subject} range=[{lo},{hi}] witness: n={n} residual={res.to_text()}"


_KNOWN = {
    "bressoud1": (
        {(1, 0): 1, (2, 1): -1},
        {(0, 0): -1, (1, 0): -1, (2, 1): 1, (3, 2): -1},
        {(0, 0): 1},
    ),
    "bressoud2": (
        {(1, 0): 1, (2, 1): -1},
        {(0, 0): -1, (1, 0): -1, (2, 1): 1, (4, 2): -1},
        {(0, 0): 1},
    ),
    "santos": (
        {(1, 0): 1, (2, 2): -1},
        {(0, 0): -1, (1, 0): -1},
        {(0, 0): 1},
    ),
    "u": (
        {(1, 0): 1},
        {(0, 0): -1, (1, 0): -1, (3, 2): -1},
        {(0, 0): 1},
    ),
}

#: Families documented to satisfy each named recurrence.
RECURRENCE_FAMILIES = {
    "bressoud1": (Family.A, Family.B),
    "bressoud2": (Family.C, Family.D),
    "santos": (Family.S, Family.S_ALT, Family.T, Family.T_ALT),
    "u": (Family.U, Family.U_ALT),
}


def known_recurrence(key: str) -> Recurrence:
    """One of the named recurrences: bressoud1, bressoud2, santos, u."""
    try:
        coeffs = _KNOWN[key]
    except KeyError:
        raise ValueError(
            f"unknown recurrence {key!r}; valid keys: {sorted(_KNOWN)}"
        ) from None
    return Recurrence([BiPoly(c) for c in coeffs], name=key)


def residual(rec: Recurrence, values: Sequence[QPoly], n: int) -> QPoly:
    """sum_i coeffs[i](q, q^n) * values[n+i], exact."""
    if n < 0 or n + rec.order >= len(values):
        raise IndexError(
            f"need values at indices {n}..{n + rec.order}, have 0..{len(values) - 1}"
        )
    total = ZERO
    for i, c in enumerate(rec.coeffs):
        v = values[n + i]
        if c and v:
            total = total + c.eval_at(n) * v
    return total


def verify(rec: Recurrence, fam: Family, n_max: int) -> VerificationReport:
    """Check the recurrence against a family over lowest indices 0..n_max-r.

    Additionally compares the first r values against the family's partner
    (the "same recursion + same initial values" proof shape); an initial-
    value mismatch fails the report with the difference as residual.
    """
    r = rec.order
    subject = f"{rec.name or 'recurrence'}:{fam.value}"
    values = [family_poly(fam, i) for i in range(n_max + 1)]
    hi = max(n_max - r, 0)
    for n in range(n_max - r + 1):
        res = residual(rec, values, n)
        if res:
            return VerificationReport(subject, (0, hi), "fail", (n, res))
    partner = PARTNER.get(fam)
    if partner is not None:
        for n in range(min(r, n_max + 1)):
            diff = values[n] - family_poly(partner, n)
            if diff:
                return VerificationReport(subject, (0, hi), "fail", (n, diff))
    return VerificationReport(subject, (0, hi), "pass")


def chapman_residuals(n: int) -> tuple[QPoly, QPoly]:
    """Residuals of the coupled pair linking B and D at index n >= 1:

        B_n - B_{n-1} - q^n D_{n-1}
        D_n - q^n B_n - (1 - q^n) D_{n-1}

    Both are zero on contract.
    """
    if n < 1:
        raise ValueError("coupled residuals need n >= 1")
    bn = family_poly(Family.B, n)
    bp = family_poly(Family.B, n - 1)
    dn = family_poly(Family.D, n)
    dp = family_poly(Family.D, n - 1)
    first = bn - bp - dp.monomial_mul(1, n)
    second = dn - bn.monomial_mul(1, n) - dp + dp.monomial_mul(1, n)
    return first, second


def _nullspace(rows: list, ncols: int) -> list:
    """Exact right-nullspace basis of an integer matrix given as rows.

    Incremental fraction-free elimination: each incoming row is reduced
    against the current echelon rows (integer cross-multiplication, then
    content stripping), so entries stay near minor size. Back-substitution
    runs over Fractions and is cleared to primitive integer vectors.
    """
    pivots: dict[int, list] = {}
    for row in rows:
        row = list(row)
        while True:
            lead = next((i for i, x in enumerate(row) if x), None)
            if lead is None:
                break
            p = pivots.get(lead)
            if p is None:
                g = 0
                for x in row:
                    g = gcd(g, x)
                if g > 1:
                    row = [x // g for x in row]
                if row[lead] < 0:
                    row = [-x for x in row]
                pivots[lead] = row
                break
            a, b = p[lead], row[lead]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            row = [ma * x - mb * y for x, y in zip(row, p)]
    pivot_cols = sorted(pivots)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        x: list = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for pc in reversed(pivot_cols):
            row = pivots[pc]
            s = sum((Fraction(row[c]) * x[c] for c in range(pc + 1, ncols) if row[c]), Fraction(0))
            x[pc] = -s / row[pc]
        denom = 1
        for v in x:
            denom = denom * v.denominator // gcd(denom, v.denominator)
        vec = [int(v * denom) for v in x]
        g = 0
        for v in vec:
            g = gcd(g, v)
        if g > 1:
            vec = [v // g for v in vec]
        basis.append(vec)
    return basis


def _shift_down(coeffs: list) -> list:
    # Reindex a relation whose c_0 vanished: drop the first coefficient,
    # substitute t <- t/q, and clear with q^(max t-degree) so exponents
    # stay nonnegative.
    big_t = max((c.t_degree or 0) for c in coeffs if c)
    out = []
    for c in coeffs:
        out.append(
            BiPoly._from_canonical(
                {(qe - te + big_t, te): v for (qe, te), v in c._terms.items()}
            )
        )
    return out


def _vector_to_recurrence(vec: list, order: int, deg_t: int, deg_q: int) -> Optional[Recurrence]:
    per = (deg_t + 1) * (deg_q + 1)
    coeffs = []
    for i in range(order + 1):
        terms = {}
        for dt in range(deg_t + 1):
            for dq in range(deg_q + 1):
                v = vec[i * per + dt * (deg_q + 1) + dq]
                if v:
                    terms[(dq, dt)] = v
        coeffs.append(BiPoly(terms))
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    while coeffs and not coeffs[0]:
        coeffs = _shift_down(coeffs[1:])
    if len(coeffs) < 2:
        return None
    return Recurrence(coeffs)


def guess(
    values: Sequence[QPoly],
    order: int,
    deg_t: int,
    deg_q: int,
    fit_range: tuple[int, int],
    confirm_range: tuple[int, int],
) -> list[Recurrence]:
    """Find recurrences annihilating `values` within the given ansatz.

    Coefficients c_i range over q-degree <= deg_q and t-degree <= deg_t.
    A homogeneous linear system is assembled over the fit window (one
    equation per (n, q-power)); its exact nullspace basis is filtered on
    the confirm window and returned normalized, ordered by (order,
    t-degree, q-degree). An empty result means "no recurrence within the
    ansatz". The fit window must supply at least (#unknowns + 2) equations.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if deg_t < 0 or deg_q < 0:
        raise ValueError("degree bounds must be nonnegative")
    flo, fhi = fit_range
    clo, chi = confirm_range
    if flo > fhi or clo > chi:
        raise ValueError("ranges must be nonempty (lo <= hi)")
    if flo < 0 or clo < 0:
        raise ValueError("ranges must start at a nonnegative index")
    if not (fhi < clo or chi < flo):
        raise ValueError("fit and confirm ranges must be disjoint")
    need = max(fhi, chi) + order
    if need >= len(values):
        raise ValueError(f"need values up to index {need}, have {len(values) - 1}")
    if all(not values[n] for n in range(flo, fhi + order + 1)):
        raise ValueError("degenerate input: all values in the fit window are zero")

    per = (deg_t + 1) * (deg_q + 1)
    ncols = (order + 1) * per
    rows = []
    for n in range(flo, fhi + 1):
        by_exp: dict[int, list] = {}
        for i in range(order + 1):
            v = values[n + i]
            if not v:
                continue
            for dt in range(deg_t + 1):
                shift_t = n * dt
                for dq in range(deg_q + 1):
                    col = i * per + dt * (deg_q + 1) + dq
                    shift = shift_t + dq
                    for e, c in v._terms.items():
                        row = by_exp.get(e + shift)
                        if row is None:
                            row = by_exp[e + shift] = [0] * ncols
                        row[col] += c
        rows.extend(by_exp.values())
    if len(rows) < ncols + 2:
        raise ValueError(
            f"fit window supplies {len(rows)} equations for {ncols} unknowns; "
            f"need at least {ncols + 2} to avoid a vacuous fit"
        )

    candidates = []
    seen = set()
    for vec in _nullspace(rows, ncols):
        rec = _vector_to_recurrence(vec, order, deg_t, deg_q)
        if rec is None or rec in seen:
            continue
        seen.add(rec)
        if all(not residual(rec, values, n) for n in range(clo, chi + 1)):
            candidates.append(rec)
    candidates.sort(key=lambda r: (r.order, *r.degrees()))
    return candidates

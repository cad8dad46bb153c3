"""Exact sparse polynomials in q, and bivariate polynomials in (q, t).

QPoly is the universal value type of this package: a finite map from
nonnegative exponents to arbitrary-precision integer coefficients, kept in
canonical form (no zero coefficient is ever stored). Values are immutable
after construction and all operations are pure, so they are safe to share
and to use concurrently. Equality is exact equality of term maps; the zero
polynomial has degree None (not -1).

BiPoly is the two-variable analogue over (q, t), with t standing for q^n:
recurrence coefficients live here, and eval_at(n) substitutes t <- q^n.

Text grammar (rendering and parsing):

    poly   := "0" | term (("+" | "-") term)*
    term   := int | int "*" qpow | qpow          (QPoly)
    qpow   := "q" | "q^" int
    bipoly terms extend this with an optional "*t" / "*t^" int factor.

Terms render in ascending exponent order, "q^0" as the bare integer,
"q^1" as "q", unit coefficients dropped ("q^2", not "1*q^2"), negatives
joined as " - 3*q^2". Parsing accepts the same grammar with arbitrary
whitespace. JSON form: {"terms": [[e, "c"], ...]} with exponents ascending
and coefficients as decimal strings (BiPoly uses [qe, te, "c"] triples).
"""

from __future__ import annotations

import re
from math import gcd
from typing import Iterable, Iterator, Mapping, Union

from ._backend import add_terms, mul_terms, scale_shift_terms

TermsLike = Union[Mapping[int, int], Iterable[tuple[int, int]], None]


def _validate_terms(terms: TermsLike) -> dict:
    out: dict = {}
    if terms is None:
        return out
    items = terms.items() if isinstance(terms, Mapping) else terms
    for e, c in items:
        if not isinstance(e, int) or not isinstance(c, int):
            raise TypeError(f"term ({e!r}, {c!r}) is not a pair of integers")
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        if c:
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


class QPoly:
    """Sparse univariate polynomial in q over the integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsLike = None):
        self._terms = _validate_terms(terms)

    @classmethod
    def _from_canonical(cls, terms: dict) -> "QPoly":
        # Trusted constructor: `terms` must already be canonical.
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def monomial(cls, c: int, e: int) -> "QPoly":
        """The monomial c*q^e."""
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        return cls._from_canonical({e: c} if c else {})

    @property
    def degree(self) -> int | None:
        """Largest exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def coeff(self, e: int) -> int:
        """Coefficient of q^e (0 if absent)."""
        return self._terms.get(e, 0)

    def terms(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __add__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        return QPoly._from_canonical(add_terms(self._terms, other._terms))

    def __neg__(self) -> "QPoly":
        return QPoly._from_canonical({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        return QPoly._from_canonical(mul_terms(self._terms, other._terms))

    def monomial_mul(self, c: int, e: int) -> "QPoly":
        """c * q^e * self."""
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        return QPoly._from_canonical(scale_shift_terms(self._terms, c, e))

    def truncate(self, m: int) -> "QPoly":
        """Drop all terms with exponent >= m (reduce mod q^m)."""
        return QPoly._from_canonical(
            {e: c for e, c in self._terms.items() if e < m}
        )

    def eval_one(self) -> int:
        """Value at q = 1: the sum of all coefficients."""
        return sum(self._terms.values())

    def subs_q_power(self, m: int) -> "QPoly":
        """Substitute q <- q^m for m >= 1 (multiplies every exponent by m)."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        return QPoly._from_canonical({e * m: c for e, c in self._terms.items()})

    def divexact(self, d: "QPoly") -> "QPoly":
        """Exact quotient self / d.

        Raises ArithmeticError if the division leaves a remainder; inside
        this package that signals an implementation bug, never bad user
        input (it backs the product-formula route for q-binomials, whose
        divisions are exact by construction).
        """
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return QPoly._from_canonical({})
        dn, dd = self.degree, d.degree
        assert dn is not None and dd is not None
        if dn < dd:
            raise ArithmeticError("inexact polynomial division (degree too small)")
        num = [0] * (dn + 1)
        for e, c in self._terms.items():
            num[e] = c
        den = [0] * (dd + 1)
        for e, c in d._terms.items():
            den[e] = c
        lead = den[dd]
        quot = [0] * (dn - dd + 1)
        for i in range(dn - dd, -1, -1):
            c = num[i + dd]
            if not c:
                continue
            qc, r = divmod(c, lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[i] = qc
            for j, dc in enumerate(den):
                if dc:
                    num[i + j] -= qc * dc
        if any(num):
            raise ArithmeticError("inexact polynomial division (nonzero remainder)")
        return QPoly._from_canonical({e: c for e, c in enumerate(quot) if c})

    def to_text(self) -> str:
        """Render in the package text grammar (see module docstring)."""
        return _render([((e,), c) for e, c in self.terms()], ("q",))

    @classmethod
    def from_text(cls, s: str) -> "QPoly":
        """Parse the text grammar; inverse of to_text."""
        terms = {}
        for c, exps in _parse(s, ("q",)):
            e = exps[0]
            terms[e] = terms.get(e, 0) + c
        return cls(terms)

    def to_json_obj(self) -> dict:
        """JSON-ready form: {"terms": [[e, "c"], ...]}, exponents ascending."""
        return {"terms": [[e, str(c)] for e, c in self.terms()]}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "QPoly":
        return cls((int(e), int(c)) for e, c in obj["terms"])

    def __repr__(self) -> str:
        return f"QPoly({self.to_text()!r})"


ZERO = QPoly()
ONE = QPoly({0: 1})
Q = QPoly({1: 1})


class BiPoly:
    """Sparse bivariate polynomial in (q, t) over the integers.

    Keys are (q-exponent, t-exponent) pairs, both nonnegative. Substituting
    t <- q^n with eval_at(n) yields a QPoly; this is how recurrence
    coefficients such as "q - q^2*t" are evaluated at a concrete index.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        out: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                qe, te = key
                if not isinstance(qe, int) or not isinstance(te, int) or not isinstance(c, int):
                    raise TypeError(f"term ({key!r}, {c!r}) is not integral")
                if qe < 0 or te < 0:
                    raise ValueError(f"negative exponent in {key!r}")
                if c:
                    s = out.get((qe, te), 0) + c
                    if s:
                        out[(qe, te)] = s
                    else:
                        del out[(qe, te)]
        self._terms = out

    @classmethod
    def _from_canonical(cls, terms: dict) -> "BiPoly":
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def monomial(cls, c: int, qe: int, te: int) -> "BiPoly":
        if qe < 0 or te < 0:
            raise ValueError("negative exponent")
        return cls._from_canonical({(qe, te): c} if c else {})

    def terms(self) -> Iterator[tuple[tuple[int, int], int]]:
        """((qe, te), coefficient) pairs, ascending by (te, qe)."""
        return iter(sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0])))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        return NotImplemented

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return BiPoly._from_canonical(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly._from_canonical({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def scaled(self, k: int) -> "BiPoly":
        """Integer multiple k * self."""
        if not k:
            return BiPoly._from_canonical({})
        return BiPoly._from_canonical({key: k * c for key, c in self._terms.items()})

    @property
    def q_degree(self) -> int | None:
        return max(qe for qe, _ in self._terms) if self._terms else None

    @property
    def t_degree(self) -> int | None:
        return max(te for _, te in self._terms) if self._terms else None

    def content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def leading_sign(self) -> int:
        """Sign of the lexicographically leading term, ordered by
        t-degree then q-degree. 0 for the zero polynomial."""
        if not self._terms:
            return 0
        key = max(self._terms, key=lambda k: (k[1], k[0]))
        return 1 if self._terms[key] > 0 else -1

    def eval_at(self, n: int) -> QPoly:
        """Substitute t <- q^n (n >= 0), collapsing to a QPoly."""
        if n < 0:
            raise ValueError("index n must be nonnegative")
        out: dict = {}
        for (qe, te), c in self._terms.items():
            e = qe + te * n
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return QPoly._from_canonical(out)

    def to_text(self) -> str:
        return _render([((qe, te), c) for (qe, te), c in self.terms()], ("q", "t"))

    @classmethod
    def from_text(cls, s: str) -> "BiPoly":
        terms = {}
        for c, exps in _parse(s, ("q", "t")):
            key = (exps[0], exps[1])
            terms[key] = terms.get(key, 0) + c
        return cls(terms)

    def to_json_obj(self) -> dict:
        return {"terms": [[qe, te, str(c)] for (qe, te), c in self.terms()]}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "BiPoly":
        return cls(((int(qe), int(te)), int(c)) for qe, te, c in obj["terms"])

    def __repr__(self) -> str:
        return f"BiPoly({self.to_text()!r})"


BI_ZERO = BiPoly()
BI_ONE = BiPoly({(0, 0): 1})


def _render(terms: list, variables: tuple) -> str:
    if not terms:
        return "0"
    parts = []
    for exps, c in terms:
        mag = abs(c)
        pieces = []
        for v, e in zip(variables, exps):
            if e == 1:
                pieces.append(v)
            elif e > 1:
                pieces.append(f"{v}^{e}")
        if mag != 1 or not pieces:
            pieces.insert(0, str(mag))
        body = "*".join(pieces)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def _term_regex(variables: tuple) -> re.Pattern:
    var_part = "".join(
        rf"(?:\*?{v}(?:\^(\d+))?)?" for v in variables
    )
    return re.compile(rf"^([+-]?)(\d+)?{var_part}$")


_TERM_RE = {("q",): _term_regex(("q",)), ("q", "t"): _term_regex(("q", "t"))}


def _parse(s: str, variables: tuple) -> list:
    compact = re.sub(r"\s+", "", s)
    if compact in ("", "0", "+0", "-0"):
        return []
    chunks = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(chunks) != compact:
        raise ValueError(f"cannot parse polynomial text {s!r}")
    rx = _TERM_RE[variables]
    out = []
    for chunk in chunks:
        m = rx.match(chunk)
        if not m:
            raise ValueError(f"cannot parse term {chunk!r} in {s!r}")
        sign_s, coeff_s, *exp_groups = m.groups()
        if coeff_s is None and f"{variables[0]}" not in chunk and (
            len(variables) < 2 or f"{variables[1]}" not in chunk
        ):
            raise ValueError(f"cannot parse term {chunk!r} in {s!r}")
        coeff = int(coeff_s) if coeff_s is not None else 1
        if sign_s == "-":
            coeff = -coeff
        exps = []
        for v, g in zip(variables, exp_groups):
            if v in chunk:
                exps.append(int(g) if g is not None else 1)
            else:
                exps.append(0)
        out.append((coeff, tuple(exps)))
    return out

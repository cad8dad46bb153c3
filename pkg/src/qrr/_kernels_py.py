"""Pure-Python term-map kernels.

A term map is a dict {exponent: coefficient} with int keys >= 0, int values,
and no zero coefficients stored. These three functions are the hot inner
loops of the whole package; `qrr._kernels_c` is a compiled twin with the
same signatures, and `qrr._backend` picks whichever is available.

Multiplication is schoolbook convolution. When both operands are dense
segments (the usual case here: Gaussian binomials have every coefficient
in their degree range nonzero) the convolution runs over plain lists,
which is markedly faster than dict accumulation; genuinely sparse inputs
take the dict path.
"""

from __future__ import annotations


def add_terms(a: dict, b: dict) -> dict:
    """Termwise sum of two canonical term maps, in canonical form."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    if len(b) > len(a):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s += c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def scale_shift_terms(a: dict, c: int, e: int) -> dict:
    """c * q^e * a. Returns {} when c == 0."""
    if not c or not a:
        return {}
    if c == 1:
        return {ea + e: ca for ea, ca in a.items()}
    return {ea + e: c * ca for ea, ca in a.items()}


def _use_dense(a: dict, b: dict, lo: int, hi: int) -> bool:
    # Dense arrays win unless the output span dwarfs the work a sparse
    # loop would do (e.g. a couple of far-apart monomials).
    return hi - lo + 1 <= 4 * len(a) * len(b) + 64


def mul_terms(a: dict, b: dict) -> dict:
    """Exact product of two canonical term maps, in canonical form."""
    if not a or not b:
        return {}
    if len(a) == 1:
        ((ea, ca),) = a.items()
        return scale_shift_terms(b, ca, ea)
    if len(b) == 1:
        ((eb, cb),) = b.items()
        return scale_shift_terms(a, cb, eb)
    amin = min(a)
    amax = max(a)
    bmin = min(b)
    bmax = max(b)
    lo = amin + bmin
    hi = amax + bmax
    if _use_dense(a, b, lo, hi):
        span = hi - lo + 1
        acc = [0] * span
        bitems = [(eb - bmin, cb) for eb, cb in b.items()]
        for ea, ca in a.items():
            base = ea - amin
            for off, cb in bitems:
                acc[base + off] += ca * cb
        return {lo + i: c for i, c in enumerate(acc) if c}
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e)
            if s is None:
                out[e] = ca * cb
            else:
                s += ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out

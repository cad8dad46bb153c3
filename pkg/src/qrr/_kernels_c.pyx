# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of qrr._kernels_py.

Same contract: canonical term maps {exponent: coefficient} in, canonical
term maps out, arbitrary-precision coefficients, no silent overflow.

mul_terms has three internal paths, chosen per call:

  * dense int128  -- both operands' coefficients fit in int64 and the
    a-priori accumulator bound max|a| * max|b| * min(len a, len b) stays
    below 2^126 (checked in Python big-int arithmetic, so the check itself
    cannot overflow);
  * dense object  -- dense exponent span, PyObject coefficient arithmetic;
  * sparse object -- dict accumulation, for operands whose exponent span
    dwarfs their term count.

All three are exact; the fast path only changes speed, never values.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

cdef extern from *:
    ctypedef long long i128 "__int128"
    ctypedef unsigned long long u128 "unsigned __int128"

cdef extern from "Python.h":
    long long PyLong_AsLongLongAndOverflow(object, int*) except? -1

cdef extern from "limits.h":
    cdef long long LLONG_MAX
    cdef long long LLONG_MIN

cdef extern from "string.h":
    void *memset(void*, int, size_t)

_I128_BOUND = 1 << 126


def add_terms(dict a, dict b):
    """Termwise sum of two canonical term maps, in canonical form."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    if len(b) > len(a):
        a, b = b, a
    cdef dict out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def scale_shift_terms(dict a, c, e):
    """c * q^e * a. Returns {} when c == 0."""
    if not c or not a:
        return {}
    cdef dict out = {}
    if c == 1:
        for ea, ca in a.items():
            out[ea + e] = ca
    else:
        for ea, ca in a.items():
            out[ea + e] = c * ca
    return out


cdef object _i128_to_int(i128 v):
    if LLONG_MIN <= v and v <= LLONG_MAX:
        return <long long> v
    cdef bint neg = v < 0
    cdef u128 u = <u128> (-v) if neg else <u128> v
    cdef unsigned long long lo = <unsigned long long> (u & <u128> 0xFFFFFFFFFFFFFFFFULL)
    cdef unsigned long long hi = <unsigned long long> (u >> 64)
    res = ((<object> hi) << 64) | (<object> lo)
    return -res if neg else res


cdef long long _scan_max_abs(dict d, bint *fits) except? -1:
    # Largest |coefficient|, or fits[0] = False when any coefficient
    # falls outside int64.
    cdef long long best = 0, v
    cdef int overflow
    for c in d.values():
        v = PyLong_AsLongLongAndOverflow(c, &overflow)
        if overflow or v == LLONG_MIN:
            fits[0] = False
            return 0
        if v < 0:
            v = -v
        if v > best:
            best = v
    fits[0] = True
    return best


cdef dict _mul_sparse(dict a, dict b):
    cdef dict out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e)
            if s is None:
                out[e] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


cdef dict _mul_dense_i128(dict a, dict b, Py_ssize_t amin, Py_ssize_t bmin,
                          Py_ssize_t span_a, Py_ssize_t span_b):
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t span = span_a + span_b - 1
    cdef i128 *av = NULL
    cdef i128 *acc = NULL
    cdef long long *bval = NULL
    cdef Py_ssize_t *boff = NULL
    cdef Py_ssize_t i, t, base
    cdef i128 ca, v
    cdef int overflow
    cdef dict out = {}
    try:
        av = <i128*> PyMem_Malloc(span_a * sizeof(i128))
        acc = <i128*> PyMem_Malloc(span * sizeof(i128))
        bval = <long long*> PyMem_Malloc(nb * sizeof(long long))
        boff = <Py_ssize_t*> PyMem_Malloc(nb * sizeof(Py_ssize_t))
        if av == NULL or acc == NULL or bval == NULL or boff == NULL:
            raise MemoryError()
        memset(av, 0, span_a * sizeof(i128))
        memset(acc, 0, span * sizeof(i128))
        for e, c in a.items():
            av[<Py_ssize_t> e - amin] = PyLong_AsLongLongAndOverflow(c, &overflow)
        t = 0
        for e, c in b.items():
            boff[t] = <Py_ssize_t> e - bmin
            bval[t] = PyLong_AsLongLongAndOverflow(c, &overflow)
            t += 1
        for i in range(span_a):
            ca = av[i]
            if ca == 0:
                continue
            for t in range(nb):
                acc[i + boff[t]] += ca * bval[t]
        base = amin + bmin
        for i in range(span):
            v = acc[i]
            if v != 0:
                out[base + i] = _i128_to_int(v)
        return out
    finally:
        PyMem_Free(av)
        PyMem_Free(acc)
        PyMem_Free(bval)
        PyMem_Free(boff)


cdef dict _mul_dense_obj(dict a, dict b, Py_ssize_t amin, Py_ssize_t bmin,
                         Py_ssize_t span_a, Py_ssize_t span_b):
    cdef Py_ssize_t span = span_a + span_b - 1
    cdef list acc = [0] * span
    cdef list bpairs = []
    cdef Py_ssize_t i, base, pos
    cdef dict out = {}
    for e, c in b.items():
        bpairs.append((<Py_ssize_t> e - bmin, c))
    for e, ca in a.items():
        base = <Py_ssize_t> e - amin
        for off, cb in bpairs:
            pos = base + <Py_ssize_t> off
            acc[pos] = acc[pos] + ca * cb
    base = amin + bmin
    for i in range(span):
        v = acc[i]
        if v:
            out[base + i] = v
    return out


def mul_terms(dict a, dict b):
    """Exact product of two canonical term maps, in canonical form."""
    if not a or not b:
        return {}
    if len(a) == 1:
        ((ea, ca),) = a.items()
        return scale_shift_terms(b, ca, ea)
    if len(b) == 1:
        ((eb, cb),) = b.items()
        return scale_shift_terms(a, cb, eb)
    amin_o = min(a)
    amax_o = max(a)
    bmin_o = min(b)
    bmax_o = max(b)
    span_o = (amax_o - amin_o) + (bmax_o - bmin_o) + 1
    if span_o > 4 * len(a) * len(b) + 64:
        return _mul_sparse(a, b)
    cdef Py_ssize_t amin, bmin, span_a, span_b
    try:
        amin = amin_o
        bmin = bmin_o
        span_a = amax_o - amin_o + 1
        span_b = bmax_o - bmin_o + 1
    except OverflowError:
        return _mul_sparse(a, b)
    cdef bint fits_a, fits_b
    cdef long long maxa = _scan_max_abs(a, &fits_a)
    cdef long long maxb = _scan_max_abs(b, &fits_b)
    if fits_a and fits_b:
        if maxa == 0 or maxb == 0:
            return {}
        na = len(a) if len(a) < len(b) else len(b)
        if (<object> maxa) * (<object> maxb) * na < _I128_BOUND:
            return _mul_dense_i128(a, b, amin, bmin, span_a, span_b)
    return _mul_dense_obj(a, b, amin, bmin, span_a, span_b)

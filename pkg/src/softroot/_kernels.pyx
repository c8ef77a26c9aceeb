# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; must agree bit for bit with ``_kernels_py``."""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef object _shift_int64(list re, list im, long long cr, long long ci):
    cdef Py_ssize_t n = len(re)
    cdef Py_ssize_t i, j
    cdef long long *a = <long long *> PyMem_Malloc(2 * n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef long long *b = a + n
    cdef long long ar, ai
    try:
        for i in range(n):
            a[i] = re[i]
            b[i] = im[i]
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                ar = a[j + 1]
                ai = b[j + 1]
                a[j] += ar * cr - ai * ci
                b[j] += ar * ci + ai * cr
        return [a[i] for i in range(n)], [b[i] for i in range(n)]
    finally:
        PyMem_Free(a)


def taylor_shift(re, im, object cre, object cim):
    cdef list a = list(re)
    cdef list b = list(im)
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j
    cdef object ar, ai
    if n == 0:
        return a, b
    # every intermediate is at most max|coeff| * (1 + |c|)^n in size; take the
    # machine-word loop when that provably fits in 62 bits
    cbits = max(abs(cre).bit_length(), abs(cim).bit_length()) + 1
    abits = max(max(abs(x).bit_length() for x in a), max(abs(x).bit_length() for x in b))
    if abits + n * (cbits + 1) + cbits + 2 <= 62:
        return _shift_int64(a, b, cre, cim)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            ar = a[j + 1]
            ai = b[j + 1]
            a[j] = a[j] + (ar * cre - ai * cim)
            b[j] = b[j] + (ar * cim + ai * cre)
    return a, b


def exp_series(object t, long s, long w):
    if t < 0 or t > ((<object>1) << s):
        raise ValueError("exp_series argument outside [0, 1]")
    cdef long g = 8
    cdef object one = (<object>1) << (w + g)
    cdef object lo_t = one
    cdef object hi_t = one
    cdef object lo_sum = one
    cdef object hi_sum = one
    cdef long i = 0
    while True:
        i += 1
        lo_t = (lo_t * t >> s) // i
        hi_t = -((-(hi_t * t) >> s) // i)
        lo_sum += lo_t
        hi_sum += hi_t
        if hi_t <= 1 and i >= 2:
            break
    hi_sum += 2 * hi_t
    return lo_sum >> g, -((-hi_sum) >> g)


def sincos_series(object x, long s, long w):
    cdef bint neg = x < 0
    cdef object u = -x if neg else x
    cdef object ui = u >> s
    cdef object g = 8 + (ui * 3 >> 1) + (ui + 2).bit_length()
    cdef object one = (<object>1) << (w + g)
    cdef object lo_t = one
    cdef object hi_t = one
    cdef object s_lo = 0
    cdef object s_hi = 0
    cdef object c_lo = one
    cdef object c_hi = one
    cdef long i = 0
    cdef int r
    while True:
        i += 1
        lo_t = (lo_t * u >> s) // i
        hi_t = -((-(hi_t * u) >> s) // i)
        r = i & 3
        if r == 1:
            s_lo += lo_t
            s_hi += hi_t
        elif r == 2:
            c_lo -= hi_t
            c_hi -= lo_t
        elif r == 3:
            s_lo -= hi_t
            s_hi -= lo_t
        else:
            c_lo += lo_t
            c_hi += hi_t
        if i > ui + 1 and hi_t <= 1:
            break
    s_lo -= hi_t
    s_hi += hi_t
    c_lo -= hi_t
    c_hi += hi_t
    if neg:
        s_lo, s_hi = -s_hi, -s_lo
    return s_lo >> g, -((-s_hi) >> g), c_lo >> g, -((-c_hi) >> g)

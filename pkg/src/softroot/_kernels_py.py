"""Pure-Python integer kernels.

Reference implementation of the routines in ``_kernels.pyx``.  Both modules
expose the same functions with the same results, bit for bit; the compiled
one is preferred at import time by :mod:`softroot.kernels`.

All routines work on Python integers in fixed point: a value ``v`` at scale
``w`` is the integer ``round(v * 2**w)`` with an explicit rounding direction.
"""


def taylor_shift(re, im, cre, cim):
    """Coefficients of ``f(z + c)`` for a Gaussian-integer polynomial ``f``.

    ``re[i] + 1j*im[i]`` is the coefficient of ``z**i``; ``c = cre + 1j*cim``.
    Exact, O(d**2) synthetic division.
    """
    a = list(re)
    b = list(im)
    n = len(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            ar = a[j + 1]
            ai = b[j + 1]
            a[j] += ar * cre - ai * cim
            b[j] += ar * cim + ai * cre
    return a, b


def exp_series(t, s, w):
    """Bracket ``exp(t / 2**s)`` for ``0 <= t <= 2**s``.

    Returns integers ``(lo, hi)`` with ``lo <= exp(t/2**s) * 2**w <= hi``.
    """
    if t < 0 or t > (1 << s):
        raise ValueError("exp_series argument outside [0, 1]")
    g = 8
    W = w + g
    one = 1 << W
    lo_t = one
    hi_t = one
    lo_sum = one
    hi_sum = one
    i = 0
    while True:
        i += 1
        lo_t = (lo_t * t >> s) // i
        hi_t = -((-(hi_t * t) >> s) // i)
        lo_sum += lo_t
        hi_sum += hi_t
        if hi_t <= 1 and i >= 2:
            break
    # remaining terms are bounded by a geometric series of ratio <= 1/2
    hi_sum += 2 * hi_t
    return lo_sum >> g, -((-hi_sum) >> g)


def sincos_series(x, s, w):
    """Bracket ``sin`` and ``cos`` of ``x / 2**s``.

    Returns ``(sin_lo, sin_hi, cos_lo, cos_hi)`` scaled by ``2**w``.
    """
    neg = x < 0
    u = -x if neg else x
    ui = u >> s
    # cancellation in the alternating sums costs about u*log2(e) bits
    g = 8 + (ui * 3 >> 1) + (ui + 2).bit_length()
    W = w + g
    one = 1 << W
    lo_t = one
    hi_t = one
    s_lo = 0
    s_hi = 0
    c_lo = one
    c_hi = one
    i = 0
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
    # terms decrease from here on; alternating tails are bounded by the last term
    s_lo -= hi_t
    s_hi += hi_t
    c_lo -= hi_t
    c_hi += hi_t
    if neg:
        s_lo, s_hi = -s_hi, -s_lo
    return s_lo >> g, -((-s_hi) >> g), c_lo >> g, -((-c_hi) >> g)

# cython: language_level=3
"""Compiled twin of ``_kernel.apply_generator`` (same signature and output).

Coefficients are carried as ``gmpy2.mpq`` when gmpy2 is importable; callers
convert with ``to_scalar`` / ``from_scalar`` at the boundary.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:
    _mpq = None

BACKEND = "cython+gmpy2" if _mpq is not None else "cython"


def to_scalar(x):
    if _mpq is None:
        return x
    return _mpq(x)


def from_scalar(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(int(x.numerator), int(x.denominator))


cdef void _geometric(dict out, tuple base, long h0, Py_ssize_t idx, long delta,
                     Py_ssize_t idx2, long m, long step_h, object coeff, dict qcache,
                     object sqrt_q) except *:
    cdef long n, stop, h
    cdef list y
    cdef object sign, v, key, qv
    if m == 0:
        return
    if m > 0:
        n = -m
        stop = 0
        sign = -coeff
    else:
        n = 0
        stop = -m
        sign = coeff
    while n < stop:
        y = list(base)
        y[idx] = y[idx] + n * delta
        if idx2 >= 0:
            y[idx2] = y[idx2] - n * delta
        key = tuple(y)
        h = h0 + n * step_h
        if h:
            qv = qcache.get(h)
            if qv is None:
                qv = sqrt_q ** h
                qcache[h] = qv
            v = out.get(key, 0) + sign * qv
        else:
            v = out.get(key, 0) + sign
        if v:
            out[key] = v
        else:
            del out[key]
        n += 1


def apply_generator(dict terms, int j, int r, long D, kp, up, sqrt_q, torus=None):
    cdef dict out = {}
    cdef dict qcache = {}
    cdef long a, two_d = 2 * D, delta, zh
    cdef Py_ssize_t idx
    cdef tuple Y, sY, zYt
    cdef list zY
    cdef object c, refl, v
    ck = kp - 1 / kp
    cu = up - 1 / up
    for Y, c in terms.items():
        if j == 0:
            a = -2 * <long>Y[0]
        elif j == r:
            a = 2 * <long>Y[r - 1]
        else:
            a = <long>Y[j - 1] - <long>Y[j]

        # Python-style floor division and modulo on C longs
        if a % D == 0:
            if (a // D) % 2 == 0:
                refl = c * kp
            else:
                refl = c * up
        else:
            refl = c
        if j == 0:
            refl = refl * torus(Y)
            sY = (-Y[0],) + Y[1:]
        elif j == r:
            sY = Y[:-1] + (-Y[-1],)
        else:
            sY = Y[:j - 1] + (Y[j], Y[j - 1]) + Y[j + 1:]
        v = out.get(sY, 0) + refl
        if v:
            out[sY] = v
        else:
            out.pop(sY, None)

        if 0 < j < r:
            if ck:
                _geometric(out, Y, 0, j - 1, D, j, a // D, 0, ck * c, qcache, sqrt_q)
            continue
        if j == 0:
            idx = 0
            delta = -D
            zh = 1
        else:
            idx = r - 1
            delta = D
            zh = 0
        if ck:
            _geometric(out, Y, 0, idx, 2 * delta, -1, a // two_d, 2 * zh, ck * c, qcache, sqrt_q)
        if cu:
            zY = list(Y)
            zY[idx] = zY[idx] + delta
            zYt = tuple(zY)
            _geometric(out, zYt, zh, idx, 2 * delta, -1, (a + D) // two_d, 2 * zh, cu * c,
                       qcache, sqrt_q)
    return out

"""Pure-Python kernel: one truncated Demazure-Lusztig generator on a sparse map.

Exponents are integer tuples ``Y = D * y`` over a fixed common denominator
``D`` of the orbit.  ``_ckernel.pyx`` is a compiled twin with the same
signature; :mod:`quasikoorn.operators` picks whichever imports.
"""

BACKEND = "python"


def to_scalar(x):
    return x


def from_scalar(x):
    return x


def _geometric(out, base, h0, idx, delta, idx2, m, step_h, coeff, qpow):
    # Adds coeff * x^base * q^(h0/2) * (1 - w^-m) / (1 - w) where
    # w = q^(step_h/2) x^(delta at idx, -delta at idx2).
    if m == 0:
        return
    if m > 0:
        n, stop, sign = -m, 0, -coeff
    else:
        n, stop, sign = 0, -m, coeff
    get = out.get
    while n < stop:
        y = list(base)
        y[idx] += n * delta
        if idx2 >= 0:
            y[idx2] -= n * delta
        y = tuple(y)
        h = h0 + n * step_h
        v = get(y, 0) + (sign * qpow(h) if h else sign)
        if v:
            out[y] = v
        else:
            del out[y]
        n += 1


def apply_generator(terms, j, r, D, kp, up, sqrt_q, torus=None):
    """Apply ``T_j`` to ``{Y: coeff}``; ``kp``/``up`` are ``(k_j, u_j)``.

    ``torus(Y)`` supplies the factor ``(g_y t)^(e_1)`` and is required for
    ``j == 0``.
    """
    out = {}
    cache = {}

    def qpow(h):
        v = cache.get(h)
        if v is None:
            v = cache[h] = sqrt_q ** h
        return v

    ck = kp - 1 / kp
    cu = up - 1 / up
    two_d = 2 * D
    for Y, c in terms.items():
        if j == 0:
            a = -2 * Y[0]
        elif j == r:
            a = 2 * Y[r - 1]
        else:
            a = Y[j - 1] - Y[j]

        if a % D == 0:
            refl = c * (kp if (a // D) % 2 == 0 else up)
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
                _geometric(out, Y, 0, j - 1, D, j, a // D, 0, ck * c, qpow)
            continue
        if j == 0:
            idx, delta, zh = 0, -D, 1
        else:
            idx, delta, zh = r - 1, D, 0
        if ck:
            _geometric(out, Y, 0, idx, 2 * delta, -1, a // two_d, 2 * zh, ck * c, qpow)
        if cu:
            zY = list(Y)
            zY[idx] += delta
            _geometric(out, tuple(zY), zh, idx, 2 * delta, -1, (a + D) // two_d,
                       2 * zh, cu * c, qpow)
    return out

"""Minimal multivariate Laurent polynomials ``{exponent tuple: Fraction}``.

Used only by the closed-form reference paths (classical Demazure-Lusztig
operators on ``F[x^(+-1)]``), so it deliberately shares nothing with the
truncated-operator kernel.  Division by a binomial ``1 - a x^v`` is done by
the recurrence ``h = f + a x^v h`` along each coset of ``Z v`` and then
checked by multiplying back.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Dict, Sequence, Tuple

Laurent = Dict[Tuple[int, ...], Fraction]


def add(f: Laurent, g: Laurent, scale=1) -> Laurent:
    out = dict(f)
    for e, c in g.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def mul(f: Laurent, g: Laurent) -> Laurent:
    out: Laurent = {}
    for a, c in f.items():
        for b, d in g.items():
            e = tuple(x + y for x, y in zip(a, b))
            out[e] = out.get(e, 0) + c * d
    return {e: c for e, c in out.items() if c}


def monomial(e: Sequence[int], c=1) -> Laurent:
    return {tuple(int(v) for v in e): Fraction(c)} if c else {}


def divide_binomial(f: Laurent, a: Fraction, v: Sequence[int]) -> Laurent:
    """Exact quotient ``f / (1 - a x^v)``; raises if it is not a Laurent polynomial."""
    v = tuple(v)
    if not any(v):
        raise ValueError("binomial direction must be nonzero")
    if not f:
        return {}
    pivot = next(n for n, x in enumerate(v) if x)
    if v[pivot] < 0:
        # 1 - a x^v = -a x^v (1 - a^-1 x^-v)
        neg = tuple(-x for x in v)
        return divide_binomial(mul(f, {neg: -1 / Fraction(a)}), 1 / Fraction(a), neg)
    step = v[pivot]
    cosets = defaultdict(dict)
    for e, c in f.items():
        # coset representative: shift e along v until e[pivot] lies in [0, step)
        k = e[pivot] // step
        base = tuple(x - k * y for x, y in zip(e, v))
        cosets[base][k] = c
    h: Laurent = {}
    for base, coeffs in cosets.items():
        lo, hi = min(coeffs), max(coeffs)
        prev = 0
        for k in range(lo, hi):
            cur = coeffs.get(k, 0) + a * prev
            if cur:
                h[tuple(x + k * y for x, y in zip(base, v))] = cur
            prev = cur
    if add(h, mul(h, {v: Fraction(a)}), -1) != {e: c for e, c in f.items() if c}:
        raise ArithmeticError("division by the binomial is not exact")
    return h


def reflect(f: Laurent, perm_sign) -> Laurent:
    return {perm_sign(e): c for e, c in f.items()}

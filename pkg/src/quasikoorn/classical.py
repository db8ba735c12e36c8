"""Classical Demazure-Lusztig operators of the C^vee C_r polynomial representation.

These act on honest Laurent polynomials (``laurent.Laurent`` dicts) using
exact binomial division, in both the divided-difference form and the
factored form ``k x^mu + k^-1 (1 - a x)(1 - b x)/(1 - x^2) (s x^mu - x^mu)``.
They serve as the independent reference for the integral orbit.
"""

from __future__ import annotations

from fractions import Fraction

from . import laurent
from .scalars import ParamSpec


def _unit(r: int, i: int, v: int = 1) -> tuple:
    e = [0] * r
    e[i] = v
    return tuple(e)


def _reflect(j: int, r: int, mu: tuple) -> tuple:
    if j == 0:
        return (-mu[0],) + mu[1:]
    if j == r:
        return mu[:-1] + (-mu[-1],)
    return mu[:j - 1] + (mu[j], mu[j - 1]) + mu[j + 1:]


def _s(j: int, params: ParamSpec, mu: tuple) -> laurent.Laurent:
    """``s_j(x^mu)`` as a function: ``s_0(x^mu) = q^(mu_1) x^(s_e1 mu)``."""
    if j == 0:
        return laurent.monomial(_reflect(0, params.rank, mu), params.q ** mu[0])
    return laurent.monomial(_reflect(j, params.rank, mu))


def _binomial(j: int, params: ParamSpec):
    """Denominator ``1 - a x^v`` of the divided difference, as ``(a, v)``."""
    r = params.rank
    if j == 0:
        return params.q, _unit(r, 0, -2)
    if j == r:
        return Fraction(1), _unit(r, r - 1, 2)
    v = [0] * r
    v[j - 1], v[j] = 1, -1
    return Fraction(1), tuple(v)


def demazure_lusztig(j: int, params: ParamSpec, f: laurent.Laurent) -> laurent.Laurent:
    """Divided-difference form of ``T_j`` on ``F[x^(+-1)]``."""
    r = params.rank
    a, v = _binomial(j, params)
    out: laurent.Laurent = {}
    for mu, c in f.items():
        s_mu = _s(j, params, mu)
        diff = laurent.divide_binomial(laurent.add(laurent.monomial(mu), s_mu, -1), a, v)
        if j == 0:
            kk, uu = params.k0, params.u0
            pre = {(0,) * r: kk - 1 / kk, _unit(r, 0, -1): (uu - 1 / uu) * params.sqrt_q}
        elif j == r:
            kk, uu = params.kr, params.ur
            pre = {(0,) * r: kk - 1 / kk, _unit(r, r - 1): uu - 1 / uu}
        else:
            kk = params.k
            pre = {(0,) * r: kk - 1 / kk}
        term = laurent.add(laurent.mul({(0,) * r: kk}, s_mu), laurent.mul(pre, diff))
        out = laurent.add(out, term, c)
    return out


def demazure_lusztig_factored(j: int, params: ParamSpec, f: laurent.Laurent) -> laurent.Laurent:
    """Factored form ``k x^mu + k^-1 N / (1 - a x^v) (s_j x^mu - x^mu)``."""
    r = params.rank
    a, v = _binomial(j, params)
    zero = (0,) * r
    if j == 0:
        kk, uu = params.k0, params.u0
        c1, c2 = params.sqrt_q * kk * uu, -params.sqrt_q * kk / uu
        e = _unit(r, 0, -1)
        numer = laurent.mul({zero: Fraction(1), e: -c1}, {zero: Fraction(1), e: -c2})
    elif j == r:
        kk, uu = params.kr, params.ur
        c1, c2 = kk * uu, -kk / uu
        e = _unit(r, r - 1)
        numer = laurent.mul({zero: Fraction(1), e: -c1}, {zero: Fraction(1), e: -c2})
    else:
        kk = params.k
        numer = {zero: Fraction(1), v: -kk * kk}
    out: laurent.Laurent = {}
    for mu, c in f.items():
        diff = laurent.add(_s(j, params, mu), laurent.monomial(mu), -1)
        quotient = laurent.divide_binomial(laurent.mul(numer, diff), a, v)
        term = laurent.add(laurent.monomial(mu, kk), quotient, 1 / kk)
        out = laurent.add(out, term, c)
    return out

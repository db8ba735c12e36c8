"""Truncated Demazure-Lusztig operators and the Y-operators on ``F[O]``.

The generators ``T_0, ..., T_r`` act on quasi-polynomials whose exponents lie
in one W-orbit ``O``.  Internally every exponent ``y`` of the orbit is stored
as the integer tuple ``D * y`` for the common denominator ``D`` of ``O``, and
the per-generator work is done by the kernel in ``_ckernel`` (compiled) or
``_kernel`` (pure Python), whichever is importable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence

from . import weyl
from .quasipoly import QuasiPolynomial
from .scalars import (
    ParamSpec,
    TorusPoint,
    chi_even,
    chi_odd,
    floor_even,
    floor_odd,
    q_power,
    rational_floor,
)

if os.environ.get("QUASIKOORN_PURE_PYTHON"):
    from . import _kernel as _backend
else:
    try:
        from . import _ckernel as _backend
    except ImportError:  # extension not built
        from . import _kernel as _backend

KERNEL_BACKEND = _backend.BACKEND

__all__ = [
    "OrbitMismatch",
    "InvalidTorusPoint",
    "RepContext",
    "KERNEL_BACKEND",
    "multiplicity",
    "validate_torus_point",
    "torus_constraints",
    "default_torus_point",
    "torus_act",
    "torus_eval",
    "nabla_mid",
    "nabla_r_even",
    "nabla_r_odd",
    "nabla_0_even",
    "nabla_0_odd",
    "T",
    "T_finite",
    "T_affine",
    "T_inverse",
    "T_word",
    "Y_op",
    "s_frak",
    "gamma",
    "eigenvalues",
    "kappa",
]


class OrbitMismatch(ValueError):
    """An exponent lies outside the orbit of the representation."""


class InvalidTorusPoint(ValueError):
    """The torus parameter violates a facet constraint of the orbit."""


# -- multiplicity function -------------------------------------------------

def multiplicity(a: weyl.AffineRoot, half: bool, params: ParamSpec) -> Fraction:
    """``k_a`` (or ``k_{a/2}`` when ``half``) for an affine root of type C_r.

    Short roots carry ``k`` and ``k_{a/2} := k_a``.  Long roots carry
    ``(kr, ur)`` at even level and ``(k0, u0)`` at odd level.
    """
    if not isinstance(a, weyl.AffineRoot):
        raise TypeError("expected an AffineRoot")
    if len(a.gradient) != params.rank:
        raise ValueError("root rank does not match the parameters")
    if not a.is_long:
        return params.k
    if a.level % 2 == 0:
        return params.ur if half else params.kr
    return params.u0 if half else params.k0


# -- torus ------------------------------------------------------------------

def torus_constraints(orbit: weyl.Orbit) -> list:
    """Facet constraints ``t^(a_j^vee) = 1`` as ``(kind, data)`` pairs."""
    r = orbit.rank
    out = []
    for j in sorted(orbit.facet):
        if j == 0:
            out.append(("t1=sqrt_q", 0))
        elif j == r:
            out.append(("tr=1", r - 1))
        else:
            out.append(("ti=ti+1", j - 1))
    return out


def describe_torus_constraints(orbit: weyl.Orbit) -> str:
    r = orbit.rank
    if not orbit.facet:
        return "T_O = T (no constraints)"
    forced = _forced_torus_values(orbit)
    if forced is not None and all(v == "1" for v in forced):
        return "t = 1"
    parts = []
    for j in sorted(orbit.facet):
        if j == 0:
            parts.append("t_1 = q^(1/2)")
        elif j == r:
            parts.append(f"t_{r} = 1")
        else:
            parts.append(f"t_{j} = t_{j + 1}")
    return ", ".join(parts)


def _forced_torus_values(orbit: weyl.Orbit) -> Optional[list]:
    # Symbolic forced values ("1" or "sqrt_q") per coordinate, or None if free.
    r = orbit.rank
    values: list = [None] * r
    if r in orbit.facet:
        values[r - 1] = "1"
    if 0 in orbit.facet:
        values[0] = "sqrt_q"
    changed = True
    while changed:
        changed = False
        for j in orbit.facet:
            if 1 <= j < r:
                a, b = values[j - 1], values[j]
                if a is None and b is not None:
                    values[j - 1] = b
                    changed = True
                elif b is None and a is not None:
                    values[j] = a
                    changed = True
    if any(v is None for v in values):
        return None
    return values


def default_torus_point(params: ParamSpec, orbit: weyl.Orbit) -> Optional[TorusPoint]:
    """The unique point of ``T_O`` when the facet pins every coordinate."""
    forced = _forced_torus_values(orbit)
    if forced is None:
        return None
    return TorusPoint(tuple(params.sqrt_q if v == "sqrt_q" else Fraction(1) for v in forced))


def validate_torus_point(params: ParamSpec, orbit: weyl.Orbit, t: TorusPoint) -> None:
    """Raise :class:`InvalidTorusPoint` unless ``t`` lies in ``T_O``."""
    r = orbit.rank
    if t.rank != r:
        raise InvalidTorusPoint(f"torus point has rank {t.rank}, expected {r}")
    for j in sorted(orbit.facet):
        if j == 0:
            ok = params.sqrt_q / t[0] == 1
            what = "q^(1/2) t_1^(-1) = 1"
        elif j == r:
            ok = t[r - 1] == 1
            what = f"t_{r} = 1"
        else:
            ok = t[j - 1] == t[j]
            what = f"t_{j} = t_{j + 1}"
        if not ok:
            raise InvalidTorusPoint(f"facet index {j} requires {what}; got t = {t.to_json()}")


def torus_eval(s: TorusPoint, mu: Sequence[int]) -> Fraction:
    return s.evaluate(mu)


def torus_act_point(params: ParamSpec, g: weyl.AffineWeylElement, t: TorusPoint) -> TorusPoint:
    """``(g t)^(e_i) = q^(lam_i) t^(w^-1 e_i)`` for ``g = tau(lam) w``."""
    r = g.rank
    winv = g.finite.inverse()
    coords = []
    for i in range(r):
        e = [0] * r
        e[i] = 1
        value = t.evaluate(winv.act(e))
        if g.translation[i]:
            value *= q_power(params, 2 * g.translation[i])
        coords.append(value)
    return TorusPoint(tuple(coords))


def torus_act(ctx: "RepContext", g: weyl.AffineWeylElement) -> TorusPoint:
    return torus_act_point(ctx.params, g, ctx.t)


# -- representation context --------------------------------------------------

@dataclass
class RepContext:
    """Parameters, orbit and torus point defining ``T_0^O, ..., T_r^O``."""

    params: ParamSpec
    orbit: weyl.Orbit
    t: Optional[TorusPoint] = None
    _torus_cache: Dict = field(default_factory=dict, repr=False, compare=False)
    _y_cache: Dict = field(default_factory=dict, repr=False, compare=False)
    _gamma_cache: Dict = field(default_factory=dict, repr=False, compare=False)
    _lower_cache: Dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.orbit.rank != self.params.rank:
            raise ValueError("orbit rank does not match the parameters")
        if self.t is None:
            self.t = default_torus_point(self.params, self.orbit)
            if self.t is None:
                raise InvalidTorusPoint(
                    "the facet does not determine t; pass an explicit torus point")
        elif not isinstance(self.t, TorusPoint):
            self.t = TorusPoint(tuple(self.t))
        validate_torus_point(self.params, self.orbit, self.t)
        self.D = self.orbit.denominator
        conv = _backend.to_scalar
        p = self.params
        self._kernel_params = {
            j: (conv(p.hecke_parameter(j)),
                conv(p.u0 if j == 0 else p.ur if j == p.rank else p.k))
            for j in range(p.rank + 1)
        }
        self._sqrt_q = conv(p.sqrt_q)

    to_scalar = staticmethod(_backend.to_scalar)
    from_scalar = staticmethod(_backend.from_scalar)

    @classmethod
    def for_point(cls, params: ParamSpec, y: Sequence, t=None) -> "RepContext":
        return cls(params, weyl.orbit_of(y), t)

    @property
    def rank(self) -> int:
        return self.params.rank

    # conversions between Fraction exponents and scaled integer exponents
    def scale(self, y: Sequence[Fraction]) -> tuple:
        D = self.D
        out = []
        for v in y:
            n = v * D
            if n.denominator != 1:
                raise OrbitMismatch(f"exponent {tuple(map(str, y))} is not in the orbit")
            out.append(n.numerator)
        return tuple(out)

    def unscale(self, Y: Sequence[int]) -> tuple:
        D = self.D
        return tuple(Fraction(v, D) for v in Y)

    def to_scaled(self, p: QuasiPolynomial, check: bool = True) -> dict:
        out = {}
        for y, c in p.items():
            if check and not self.orbit.contains(y):
                raise OrbitMismatch(f"exponent ({', '.join(map(str, y))}) is not in the orbit "
                                    f"of ({', '.join(map(str, self.orbit.basepoint))})")
            out[self.scale(y)] = self.to_scalar(c)
        return out

    def from_scaled(self, terms: dict) -> QuasiPolynomial:
        conv = self.from_scalar
        return QuasiPolynomial({self.unscale(Y): conv(c) for Y, c in terms.items() if c},
                               _trusted=True)

    def torus_factor(self, Y: tuple) -> Fraction:
        """``(g_y t)^(e_1)`` for the scaled exponent ``Y``."""
        v = self._torus_cache.get(Y)
        if v is None:
            g, _ = weyl.min_alcove_rep(self.unscale(Y))
            v = self.to_scalar(torus_act(self, g)[0])
            self._torus_cache[Y] = v
        return v

    def scaled_lower_set(self, Y: tuple) -> frozenset:
        """``lower_set`` of the scaled exponent ``Y``, in scaled coordinates."""
        low = self._lower_cache.get(Y)
        if low is None:
            low = frozenset(self.scale(z) for z in weyl.lower_set(self.unscale(Y)))
            self._lower_cache[Y] = low
        return low

    def scaled_eigenvalues(self, Y: tuple) -> tuple:
        """``eigenvalues`` of the scaled exponent ``Y`` as kernel scalars."""
        lam = self._gamma_cache.get(Y)
        if lam is None:
            conv = self.to_scalar
            lam = self._gamma_cache[Y] = tuple(conv(v) for v in eigenvalues(self, self.unscale(Y)))
        return lam

    # scaled-space operator application
    def apply(self, j: int, terms: dict) -> dict:
        r = self.params.rank
        if not 0 <= j <= r:
            raise IndexError(f"generator index {j} out of range 0..{r}")
        kp, up = self._kernel_params[j]
        return _backend.apply_generator(terms, j, r, self.D, kp, up, self._sqrt_q,
                                        self.torus_factor if j == 0 else None)

    def apply_inverse(self, j: int, terms: dict) -> dict:
        kappa_j = self._kernel_params[j][0]
        shift = kappa_j - 1 / kappa_j
        out = self.apply(j, terms)
        if shift:
            for Y, c in terms.items():
                v = out.get(Y, 0) - shift * c
                if v:
                    out[Y] = v
                else:
                    out.pop(Y, None)
        return out

    def y_sequence(self, i: int) -> list:
        """Generators of ``Y_i`` in application order; negative means inverse."""
        r = self.rank
        if not 1 <= i <= r:
            raise IndexError(f"Y-operator index {i} out of range 1..{r}")
        seq = list(range(i, r + 1)) + list(range(r - 1, 0, -1)) + [0]
        seq += [-(j) for j in range(1, i)]
        return seq

    def apply_y(self, i: int, terms: dict) -> dict:
        for j in self.y_sequence(i):
            terms = self.apply(j, terms) if j >= 0 else self.apply_inverse(-j, terms)
        return terms

    def y_column(self, i: int, Y: tuple) -> dict:
        """Cached ``Y_i(x^y)`` for one scaled exponent."""
        key = (i, Y)
        col = self._y_cache.get(key)
        if col is None:
            col = self._y_cache[key] = self.apply_y(i, {Y: self.to_scalar(Fraction(1))})
        return col


# -- truncated divided differences (reference formulas on Fraction exponents) --

def _geometric_sum(y, coeff, step, step_q, m, params, prefix=None, prefix_q=0):
    # coeff * x^prefix * (1 - w^-m)/(1 - w) * x^y with w = q^(step_q/2) x^step
    out = {}
    base = tuple(y)
    if prefix is not None:
        base = tuple(a + b for a, b in zip(base, prefix))
    if m > 0:
        powers, sign = range(-m, 0), -1
    else:
        powers, sign = range(0, -m), 1
    for n in powers:
        e = tuple(a + n * b for a, b in zip(base, step))
        h = prefix_q + n * step_q
        c = sign * coeff * (q_power(params, h) if h else 1)
        out[e] = out.get(e, 0) + c
    return QuasiPolynomial(out)


def _unit(r, i, scale=1):
    v = [Fraction(0)] * r
    v[i] = Fraction(scale)
    return tuple(v)


def _linear(p: QuasiPolynomial, per_monomial) -> QuasiPolynomial:
    out = QuasiPolynomial.zero()
    for y, c in p.items():
        out = out + per_monomial(y, c)
    return out


def nabla_mid(i: int, p: QuasiPolynomial) -> QuasiPolynomial:
    """``(1 - (x_{i+1}/x_i)^m) / (1 - x_i/x_{i+1}) x^y`` with ``m = floor(y_i - y_{i+1})``."""
    def one(y, c):
        r = len(y)
        if not 1 <= i < r:
            raise IndexError(f"nabla index {i} out of range 1..{r - 1}")
        step = tuple(a - b for a, b in zip(_unit(r, i - 1), _unit(r, i)))
        return _geometric_sum(y, c, step, 0, rational_floor(y[i - 1] - y[i]), None)
    return _linear(p, one)


def nabla_r_even(p: QuasiPolynomial) -> QuasiPolynomial:
    def one(y, c):
        r = len(y)
        return _geometric_sum(y, c, _unit(r, r - 1, 2), 0, floor_even(2 * y[-1]) // 2, None)
    return _linear(p, one)


def nabla_r_odd(p: QuasiPolynomial) -> QuasiPolynomial:
    def one(y, c):
        r = len(y)
        return _geometric_sum(y, c, _unit(r, r - 1, 2), 0, (floor_odd(2 * y[-1]) + 1) // 2,
                              None, prefix=_unit(r, r - 1))
    return _linear(p, one)


def nabla_0_even(ctx: RepContext, p: QuasiPolynomial) -> QuasiPolynomial:
    def one(y, c):
        r = len(y)
        return _geometric_sum(y, c, _unit(r, 0, -2), 2, floor_even(-2 * y[0]) // 2, ctx.params)
    return _linear(p, one)


def nabla_0_odd(ctx: RepContext, p: QuasiPolynomial) -> QuasiPolynomial:
    def one(y, c):
        r = len(y)
        return _geometric_sum(y, c, _unit(r, 0, -2), 2, (floor_odd(-2 * y[0]) + 1) // 2,
                              ctx.params, prefix=_unit(r, 0, -1), prefix_q=1)
    return _linear(p, one)


# -- public operators --------------------------------------------------------

def T(j: int, ctx: RepContext, p: QuasiPolynomial) -> QuasiPolynomial:
    """``T_j^O`` for ``0 <= j <= r``."""
    return ctx.from_scaled(ctx.apply(j, ctx.to_scaled(p)))


def T_finite(i: int, ctx: RepContext, p: QuasiPolynomial) -> QuasiPolynomial:
    if not 1 <= i <= ctx.rank:
        raise IndexError(f"finite generator index {i} out of range 1..{ctx.rank}")
    return T(i, ctx, p)


def T_affine(ctx: RepContext, p: QuasiPolynomial) -> QuasiPolynomial:
    return T(0, ctx, p)


def T_inverse(j: int, ctx: RepContext, p: QuasiPolynomial) -> QuasiPolynomial:
    return ctx.from_scaled(ctx.apply_inverse(j, ctx.to_scaled(p)))


def T_word(word: Sequence[int], ctx: RepContext, p: QuasiPolynomial) -> QuasiPolynomial:
    """``T_{j_1} ... T_{j_m} p`` (rightmost letter applied first)."""
    terms = ctx.to_scaled(p)
    for j in reversed(tuple(word)):
        terms = ctx.apply(j, terms)
    return ctx.from_scaled(terms)


def Y_op(i: int, ctx: RepContext, p: QuasiPolynomial) -> QuasiPolynomial:
    """``Y_i = T_{i-1}^-1 ... T_1^-1 T_0 T_1 ... T_{r-1} T_r T_{r-1} ... T_i``."""
    return ctx.from_scaled(ctx.apply_y(i, ctx.to_scaled(p)))


# -- eigenvalue data ---------------------------------------------------------

def _eta(x: Fraction) -> int:
    if x.denominator != 1:
        return 0
    return 1 if x > 0 else -1


def s_frak(ctx: RepContext) -> TorusPoint:
    """The torus point ``s^O`` built from the basepoint of the orbit."""
    p = ctx.params
    c = ctx.orbit.basepoint
    r = len(c)
    coords = []
    for i in range(r):
        n = sum(_eta(c[i] - c[j]) + _eta(c[i] + c[j]) for j in range(i + 1, r))
        n += sum(_eta(c[j] + c[i]) - _eta(c[j] - c[i]) for j in range(i))
        two_c = 2 * c[i]
        value = (p.k0 * p.kr) ** (-chi_even(two_c)) * (p.u0 * p.ur) ** chi_odd(two_c)
        coords.append(value * p.k ** n)
    return TorusPoint(tuple(coords))


def eigenvalues(ctx: RepContext, y: Sequence) -> tuple:
    """``(gamma_1(y), ..., gamma_r(y))``."""
    g, c = weyl.min_alcove_rep(y)
    if c != ctx.orbit.basepoint:
        raise OrbitMismatch(f"{tuple(map(str, y))} is not in the orbit")
    base = ctx._gamma_cache.get("base")
    if base is None:
        base = ctx._gamma_cache["base"] = s_frak(ctx) * ctx.t
    st = torus_act_point(ctx.params, g, base)
    return tuple(1 / v for v in st.coords)


def gamma(ctx: RepContext, i: int, y: Sequence) -> Fraction:
    if not 1 <= i <= ctx.rank:
        raise IndexError(f"index {i} out of range 1..{ctx.rank}")
    return eigenvalues(ctx, y)[i - 1]


def kappa(ctx: RepContext, w: weyl.SignedPermutation) -> Fraction:
    """Normalization ``kappa_w^O`` over the inversion set of ``w``."""
    c = ctx.orbit.basepoint
    value = Fraction(1)
    for alpha in weyl.finite_positive_roots(ctx.rank):
        if weyl._finite_root_positive(w.act(alpha)):
            continue
        root = weyl.AffineRoot(alpha, 0)
        a_c = sum((g * v for g, v in zip(alpha, c)), Fraction(0))
        if chi_even(a_c):
            value *= multiplicity(root, False, ctx.params)
        elif chi_odd(a_c):
            value /= multiplicity(root, True, ctx.params)
    return value

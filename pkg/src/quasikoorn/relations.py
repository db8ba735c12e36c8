"""Randomized exact checks of the algebraic identities satisfied by ``T_j`` and ``Y_i``.

Each check takes a :class:`RepContext` and a quasi-monomial and returns
``True`` when the identity holds exactly on it.  :func:`run_suite` drives
them over random orbits, torus points and exponents; it backs both the
``verify`` CLI command and the acceptance tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from . import classical, laurent, weyl
from .operators import (
    RepContext,
    T,
    T_word,
    Y_op,
    default_torus_point,
    gamma,
    kappa,
    torus_act,
)
from .quasipoly import QuasiPolynomial, degree_and_leading, mono
from .scalars import ParamSpec, TorusPoint, q_power, rational_floor

# -- random data -------------------------------------------------------------


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    """Nonzero rational ``a/b`` with ``|a|, b <= bound`` and ``a/b != +-1``."""
    while True:
        v = Fraction(rng.randint(1, bound), rng.randint(1, bound))
        if v != 1:
            return v if rng.random() < 0.8 else -v


def random_params(rank: int, rng: random.Random, collapse: bool = False) -> ParamSpec:
    values = [random_rational(rng) for _ in range(6)]
    if collapse:
        values[1] = values[2] = values[4] = values[5]
    return ParamSpec(rank, *values)


def random_basepoint(rank: int, rng: random.Random, kind: str = "any",
                     max_den: int = 8) -> tuple:
    """A closed-alcove point with denominators ``<= max_den``.

    ``kind`` is ``"any"``, ``"regular"`` (empty facet) or ``"affine_wall"``
    (``0`` in the facet).
    """
    for _ in range(10_000):
        dens = [rng.randint(1, max_den) for _ in range(rank)]
        vals = sorted((Fraction(rng.randint(0, d // 2), d) for d in dens), reverse=True)
        if kind == "affine_wall":
            vals[0] = Fraction(1, 2)
        c = tuple(vals)
        facet = weyl.Orbit.from_basepoint(c).facet
        if kind == "regular" and facet:
            continue
        return c
    raise RuntimeError(f"could not sample a {kind} basepoint at rank {rank}")


def random_torus_point(params: ParamSpec, orbit: weyl.Orbit, rng: random.Random) -> TorusPoint:
    """Random point of ``T_O``: free coordinates random, constrained ones forced."""
    r = orbit.rank
    comp = list(range(r))
    for j in orbit.facet:
        if 1 <= j < r:
            a, b = comp[j - 1], comp[j]
            comp = [a if x == b else x for x in comp]
    values: Dict[int, Fraction] = {}
    if r in orbit.facet:
        values[comp[r - 1]] = Fraction(1)
    if 0 in orbit.facet:
        values[comp[0]] = params.sqrt_q
    coords = []
    for i in range(r):
        if comp[i] not in values:
            values[comp[i]] = random_rational(rng)
        coords.append(values[comp[i]])
    return TorusPoint(tuple(coords))


def random_context(params: ParamSpec, rng: random.Random, kind: str = "any") -> RepContext:
    orbit = weyl.Orbit.from_basepoint(random_basepoint(params.rank, rng, kind))
    return RepContext(params, orbit, random_torus_point(params, orbit, rng))


def integral_context(params: ParamSpec) -> RepContext:
    orbit = weyl.Orbit.from_basepoint((Fraction(0),) * params.rank)
    return RepContext(params, orbit, default_torus_point(params, orbit))


def random_exponent(orbit: weyl.Orbit, rng: random.Random, max_word: int = 8) -> tuple:
    r = orbit.rank
    g = weyl.from_word([rng.randint(0, r) for _ in range(rng.randint(0, max_word))], r)
    return g.act(orbit.basepoint)


# -- relations ---------------------------------------------------------------

def hecke(j: int) -> Callable:
    def check(ctx: RepContext, v: QuasiPolynomial) -> bool:
        kk = ctx.params.hecke_parameter(j)
        once = T(j, ctx, v)
        return T(j, ctx, once) + once.scale(1 / kk - kk) - v == 0
    return check


def braid(i: int, j: int, m: int) -> Callable:
    """``T_i T_j T_i ... = T_j T_i T_j ...`` with ``m`` factors per side."""
    left = [i if n % 2 == 0 else j for n in range(m)]
    right = [j if n % 2 == 0 else i for n in range(m)]

    def check(ctx: RepContext, v: QuasiPolynomial) -> bool:
        return T_word(left, ctx, v) == T_word(right, ctx, v)
    return check


def y_commute(ctx: RepContext, v: QuasiPolynomial) -> bool:
    r = ctx.rank
    images = [Y_op(i, ctx, v) for i in range(1, r + 1)]
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            if Y_op(i, ctx, images[j - 1]) != Y_op(j, ctx, images[i - 1]):
                return False
    return True


def y_triangular(ctx: RepContext, v: QuasiPolynomial) -> bool:
    """``Y_i(x^y)`` has degree ``y``, leading coefficient ``gamma_i(y)``, support in the lower set."""
    (y,) = v.support()
    below = weyl.lower_set(y)
    for i in range(1, ctx.rank + 1):
        image = Y_op(i, ctx, v)
        if not image.support() <= below:
            return False
        deg, lead = degree_and_leading(image)
        if deg != y or lead != gamma(ctx, i, y) * v.coefficient(y):
            return False
    return True


def _to_laurent(p: QuasiPolynomial) -> laurent.Laurent:
    out = {}
    for y, c in p.items():
        if any(v.denominator != 1 for v in y):
            raise ValueError("not a Laurent polynomial")
        out[tuple(int(v) for v in y)] = c
    return out


def polynomial_reduction(ctx: RepContext, v: QuasiPolynomial) -> bool:
    """On the integral orbit each ``T_j`` agrees with both classical closed forms."""
    f = _to_laurent(v)
    for j in range(ctx.rank + 1):
        got = _to_laurent(T(j, ctx, v))
        if got != classical.demazure_lusztig(j, ctx.params, f):
            return False
        if got != classical.demazure_lusztig_factored(j, ctx.params, f):
            return False
    return True


def _single_nabla(j: int, ctx: RepContext, y: tuple, coeff: Fraction) -> QuasiPolynomial:
    # (1 - x^(-floor(a_j(y)) a_j^vee)) / (1 - x^(a_j^vee)) x^y, a_j^vee as (vector, q half-steps)
    r = len(y)
    vec = [Fraction(0)] * r
    if j == 0:
        vec[0], qh, a = Fraction(-1), 1, -2 * y[0]
    elif j == r:
        vec[r - 1], qh, a = Fraction(1), 0, 2 * y[r - 1]
    else:
        vec[j - 1], vec[j], qh, a = Fraction(1), Fraction(-1), 0, y[j - 1] - y[j]
    m = rational_floor(a)
    terms: Dict[tuple, Fraction] = {}
    # (1 - z^-m)/(1 - z) = sum_{n=0}^{-m-1} z^n  (m < 0)  or  -sum_{n=1}^{m} z^-n  (m > 0)
    powers = range(0, -m) if m < 0 else range(-m, 0)
    sign = 1 if m < 0 else -1
    for n in powers:
        e = tuple(a_ + n * b_ for a_, b_ in zip(y, vec))
        terms[e] = terms.get(e, 0) + sign * coeff * q_power(ctx.params, n * qh)
    return QuasiPolynomial(terms)


def parameter_collapse(ctx: RepContext, v: QuasiPolynomial) -> bool:
    """With ``k0 = u0 = kr = ur`` each ``T_j`` takes the single-nabla form."""
    p = ctx.params
    if not (p.k0 == p.u0 == p.kr == p.ur):
        raise ValueError("parameter_collapse needs k0 = u0 = kr = ur")
    for j in range(ctx.rank + 1):
        kk = p.hecke_parameter(j)
        expected = QuasiPolynomial.zero()
        for y, c in v.items():
            r = len(y)
            if j == 0:
                a = -2 * y[0]
                g, _ = weyl.min_alcove_rep(y)
                refl = mono((-y[0],) + y[1:], c * torus_act(ctx, g)[0])
            elif j == r:
                a = 2 * y[r - 1]
                refl = mono(y[:-1] + (-y[-1],), c)
            else:
                a = y[j - 1] - y[j]
                refl = mono(weyl.reflect_point(j, y), c)
            if a.denominator == 1:
                refl = refl.scale(kk)
            expected = expected + refl + _single_nabla(j, ctx, y, c * (kk - 1 / kk))
        if T(j, ctx, v) != expected:
            return False
    return True


def cyclic_vector(ctx: RepContext, w: weyl.SignedPermutation) -> bool:
    """``T_w x^c = kappa_w x^(w c)`` for a finite Weyl group element ``w``."""
    word = weyl.reduced_word(weyl.AffineWeylElement((0,) * ctx.rank, w))
    c = ctx.orbit.basepoint
    got = T_word(word, ctx, mono(c))
    return got == mono(w.act(c), kappa(ctx, w))


# -- suite -------------------------------------------------------------------

@dataclass
class RelationResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(detail)
        elif not ok:
            self.failures.append("")


def relation_checks(rank: int) -> Dict[str, Callable]:
    """Operator identities applicable at ``rank`` (finite and affine)."""
    r = rank
    checks: Dict[str, Callable] = {f"hecke T{j}": hecke(j) for j in range(r + 1)}
    for i in range(1, r - 1):
        checks[f"braid T{i} T{i + 1}"] = braid(i, i + 1, 3)
    if r >= 2:
        checks[f"braid T{r - 1} T{r}"] = braid(r - 1, r, 4)
        checks["affine braid T0 T1"] = braid(0, 1, 4)
        for i in range(2, r + 1):
            checks[f"commute T0 T{i}"] = braid(0, i, 2)
    for i in range(1, r + 1):
        for j in range(i + 2, r + 1):
            checks[f"commute T{i} T{j}"] = braid(i, j, 2)
    return checks


FINITE = lambda name: not name.startswith(("affine", "commute T0", "hecke T0"))  # noqa: E731


def _fmt(ctx: RepContext, v: QuasiPolynomial) -> str:
    (y,) = v.support()
    return (f"y=({', '.join(map(str, y))}) c=({', '.join(map(str, ctx.orbit.basepoint))}) "
            f"t={ctx.t.to_json()}")


def run_suite(params: ParamSpec, trials: int, seed: int = 0,
              only: Optional[Sequence[str]] = None) -> List[RelationResult]:
    """Run every relation over ``trials`` random quasi-monomials.

    Relation groups: Hecke and braid relations (finite and affine),
    Y-commutativity, Y-triangularity, polynomial reduction on ``Z^r``,
    parameter collapse, and the cyclic-vector identity over ``W_0``.
    """
    rng = random.Random(seed)
    r = params.rank
    results: Dict[str, RelationResult] = {}

    def want(name: str) -> bool:
        return only is None or any(name.startswith(o) for o in only)

    def result(name: str) -> RelationResult:
        return results.setdefault(name, RelationResult(name))

    checks = relation_checks(r)
    for _ in range(trials):
        ctx = random_context(params, rng)
        v = mono(random_exponent(ctx.orbit, rng))
        for name, check in checks.items():
            if want(name):
                result(name).record(check(ctx, v), _fmt(ctx, v))
        if want("Y commute") and r >= 2:
            result("Y commute").record(y_commute(ctx, v), _fmt(ctx, v))
        if want("Y triangular"):
            result("Y triangular").record(y_triangular(ctx, v), _fmt(ctx, v))

    if want("polynomial reduction"):
        ctx = integral_context(params)
        for _ in range(trials):
            v = mono(random_exponent(ctx.orbit, rng))
            result("polynomial reduction").record(polynomial_reduction(ctx, v), _fmt(ctx, v))

    if want("parameter collapse"):
        long = params.k0
        collapsed = params.replace(u0=long, kr=long, ur=long)
        for _ in range(trials):
            ctx = random_context(collapsed, rng)
            v = mono(random_exponent(ctx.orbit, rng))
            result("parameter collapse").record(parameter_collapse(ctx, v), _fmt(ctx, v))

    if want("cyclic vector"):
        contexts = [integral_context(params), random_context(params, rng, "regular"),
                    random_context(params, rng)]
        for ctx in contexts:
            for w in weyl.finite_weyl_group(r):
                result("cyclic vector").record(
                    cyclic_vector(ctx, w), f"w={w} c={ctx.orbit.basepoint}")

    return list(results.values())

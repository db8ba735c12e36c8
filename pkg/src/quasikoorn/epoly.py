"""Quasi-polynomial extensions ``E_y`` of the nonsymmetric Koornwinder polynomials.

``compute_E`` restricts the commuting operators ``Y_1, ..., Y_r`` to the span
of ``{x^z : z <= y}``, checks that they are triangular there with diagonal
``gamma_i(z)``, and back-substitutes for the monic joint eigenvector of
degree ``y``.  ``koornwinder_oracle`` solves the same problem at rank one
through the classical polynomial representation on Laurent polynomials and
a nullspace computation, sharing no code with the quasi-polynomial path.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import sympy

from . import classical, laurent, weyl
from .operators import OrbitMismatch, RepContext
from .quasipoly import QuasiPolynomial
from .scalars import ParamSpec, as_rational, format_rational

log = logging.getLogger(__name__)

__all__ = [
    "EPolynomial",
    "NonGenericParameters",
    "TriangularityViolation",
    "BatchResult",
    "compute_E",
    "batch_E",
    "koornwinder_oracle",
    "orbit_points",
]


class NonGenericParameters(ArithmeticError):
    """Two exponents below the degree share a full eigenvalue tuple."""


class TriangularityViolation(RuntimeError):
    """A Y-operator left the lower set or has the wrong diagonal entry."""


@dataclass(frozen=True)
class EPolynomial:
    degree: tuple
    orbit: weyl.Orbit
    eigenvalues: tuple
    poly: QuasiPolynomial

    def to_json(self) -> dict:
        return {
            "degree": [format_rational(v) for v in self.degree],
            "orbit_basepoint": [format_rational(v) for v in self.orbit.basepoint],
            "facet": sorted(self.orbit.facet),
            "eigenvalues": [format_rational(v) for v in self.eigenvalues],
            "terms": self.poly.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "EPolynomial":
        orbit = weyl.Orbit.from_basepoint([as_rational(v) for v in data["orbit_basepoint"]])
        if sorted(orbit.facet) != sorted(data["facet"]):
            raise ValueError("facet does not match the orbit basepoint")
        return cls(
            tuple(as_rational(v) for v in data["degree"]),
            orbit,
            tuple(as_rational(v) for v in data["eigenvalues"]),
            QuasiPolynomial.from_json(data["terms"]),
        )


def _default_order(y):
    return weyl.order_key(y)


def compute_E(ctx: RepContext, y: Sequence, order: Optional[Callable] = None) -> EPolynomial:
    """Monic joint eigenfunction of ``Y_1..Y_r`` of degree ``y``.

    ``order`` is a sort key on points whose ascending order must be a linear
    extension of ``<=``; the default is length of ``g_z`` then lexicographic.
    """
    y = tuple(as_rational(v) for v in y)
    if len(y) != ctx.rank or not ctx.orbit.contains(y):
        raise OrbitMismatch(f"({', '.join(map(str, y))}) is not in the orbit of the context")
    r = ctx.rank
    # everything below runs on scaled integer exponents and kernel scalars
    Y0 = ctx.scale(y)
    lower = ctx.scaled_lower_set(Y0)
    gammas = {Z: ctx.scaled_eigenvalues(Z) for Z in lower}

    seen: Dict[tuple, tuple] = {}
    for Z, g in gammas.items():
        if g in seen:
            raise NonGenericParameters(
                f"exponents {_fmt(ctx.unscale(seen[g]))} and {_fmt(ctx.unscale(Z))} share "
                f"eigenvalues ({', '.join(format_rational(ctx.from_scalar(v)) for v in g)})")
        seen[g] = Z

    # columns[i][W] = Y_{i+1}(x^W), checked to be triangular with diagonal gamma
    columns: List[Dict[tuple, dict]] = []
    for i in range(r):
        cols = {}
        for W in lower:
            col = ctx.y_column(i + 1, W)
            below = ctx.scaled_lower_set(W)
            for Z in col:
                if Z not in below:
                    raise TriangularityViolation(
                        f"Y_{i + 1}(x^{_fmt(ctx.unscale(W))}) has exponent "
                        f"{_fmt(ctx.unscale(Z))} outside its lower set")
            if col.get(W) != gammas[W][i]:
                raise TriangularityViolation(
                    f"diagonal of Y_{i + 1} at {_fmt(ctx.unscale(W))} is {col.get(W)}, "
                    f"expected {gammas[W][i]}")
            cols[W] = col
        columns.append(cols)

    key = order or _default_order
    sequence = sorted(lower, key=lambda Z: key(ctx.unscale(Z)), reverse=True)
    if sequence[0] != Y0:
        raise ValueError("order is not a linear extension of the Bruhat order")
    target = gammas[Y0]
    v: Dict[tuple, object] = {Y0: ctx.to_scalar(Fraction(1))}
    for Z in sequence[1:]:
        gz = gammas[Z]
        for i in range(r):
            if gz[i] != target[i]:
                break
        else:  # pragma: no cover - excluded by the distinctness check above
            raise NonGenericParameters(f"no separating eigenvalue at {_fmt(ctx.unscale(Z))}")
        acc = 0
        cols = columns[i]
        for W, vw in v.items():
            m = cols[W].get(Z)
            if m and W != Z:
                acc += m * vw
        if acc:
            v[Z] = acc / (target[i] - gz[i])

    poly = ctx.from_scaled(v)
    eig = tuple(ctx.from_scalar(c) for c in target)
    _verify_eigen(ctx, poly, eig)
    return EPolynomial(y, ctx.orbit, eig, poly)


def _verify_eigen(ctx: RepContext, poly: QuasiPolynomial, target: tuple) -> None:
    terms = ctx.to_scaled(poly, check=False)
    for i in range(1, ctx.rank + 1):
        image = ctx.apply_y(i, terms)
        lam = ctx.to_scalar(target[i - 1])
        residual = {Y: c - lam * terms.get(Y, 0) for Y, c in image.items()}
        residual.update({Y: -lam * c for Y, c in terms.items() if Y not in image})
        if any(residual.values()):
            raise TriangularityViolation(f"result is not an eigenfunction of Y_{i}")


def _fmt(y) -> str:
    return "(" + ", ".join(format_rational(v) for v in y) + ")"


def orbit_points(orbit: weyl.Orbit, max_len: int) -> list:
    """Points ``y`` of the orbit with ``l(g_y) <= max_len`` in deterministic order."""
    r = orbit.rank
    level = {orbit.basepoint}
    found = set(level)
    for n in range(1, max_len + 1):
        nxt = set()
        for p in level:
            for j in range(r + 1):
                z = weyl.reflect_point(j, p)
                if z not in found and len(weyl.min_alcove_word(z)) == n:
                    nxt.add(z)
        found |= nxt
        level = nxt
    return sorted(found, key=weyl.order_key)


class BatchResult(list):
    """List of computed :class:`EPolynomial` plus ``failures`` as ``(y, error)``."""

    def __init__(self, items=(), failures=()):
        super().__init__(items)
        self.failures = list(failures)


def batch_E(ctx: RepContext, max_len: int, order: Optional[Callable] = None) -> BatchResult:
    out = BatchResult()
    for y in orbit_points(ctx.orbit, max_len):
        try:
            out.append(compute_E(ctx, y, order=order))
        except (NonGenericParameters, TriangularityViolation) as exc:
            log.warning("E_%s failed: %s", _fmt(y), exc)
            out.failures.append((y, exc))
    return out


# -- rank-one oracle through the polynomial representation -------------------

def _rank_one_length(z: int) -> int:
    # l(g_z) on the orbit Z at rank one: 1 -> s0, -1 -> s1 s0, 2 -> s0 s1 s0, ...
    return 2 * z - 1 if z > 0 else -2 * z


def koornwinder_oracle(params: ParamSpec, mu: int, bound: int) -> QuasiPolynomial:
    """Monic nonsymmetric Koornwinder polynomial ``E_mu`` at rank one.

    Builds ``Y = T_0 T_1`` from the Laurent-polynomial Demazure-Lusztig
    operators on the basis ``{x^z : l(g_z) <= l(g_mu)}`` and takes the
    eigenvector of ``Y`` for its diagonal entry at ``mu``.
    """
    if params.rank != 1:
        raise ValueError("the oracle is defined at rank one only")
    mu = int(mu)
    if abs(mu) > bound:
        raise ValueError(f"|mu| = {abs(mu)} exceeds bound {bound}")
    top = _rank_one_length(mu)
    basis = sorted((z for z in range(-bound, bound + 1) if _rank_one_length(z) <= top),
                   key=_rank_one_length)
    index = {z: n for n, z in enumerate(basis)}
    size = len(basis)
    matrix = sympy.zeros(size, size)
    for z in basis:
        image = classical.demazure_lusztig(
            0, params, classical.demazure_lusztig(1, params, laurent.monomial((z,))))
        for (w,), c in image.items():
            if w not in index:
                raise ArithmeticError(f"Y(x^{z}) leaves the basis at x^{w}")
            matrix[index[w], index[z]] = sympy.Rational(c.numerator, c.denominator)
    diag = [matrix[n, n] for n in range(size)]
    if len(set(diag)) != size:
        raise NonGenericParameters("repeated eigenvalue of Y on the oracle basis")
    lam = matrix[index[mu], index[mu]]
    null = (matrix - lam * sympy.eye(size)).nullspace()
    if len(null) != 1:
        raise NonGenericParameters(f"eigenspace has dimension {len(null)}")
    vec = null[0] / null[0][index[mu]]
    out = {}
    for z in basis:
        v = vec[index[z]]
        if v != 0:
            out[(Fraction(z),)] = Fraction(int(v.p), int(v.q))
    return QuasiPolynomial(out)

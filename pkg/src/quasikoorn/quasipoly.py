"""Sparse quasi-polynomials: finite sums of ``c * x^y`` with rational ``y``."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from . import weyl
from .scalars import ParamSpec, as_rational, format_rational, q_power

__all__ = [
    "QuasiPolynomial",
    "MixedOrbits",
    "NoUniqueMaximum",
    "mono",
    "degree_and_leading",
]

Exponent = Tuple[Fraction, ...]


class MixedOrbits(ValueError):
    """Support of a quasi-polynomial meets more than one W-orbit."""


class NoUniqueMaximum(ValueError):
    """Support has several incomparable maximal exponents."""


class QuasiPolynomial:
    """Immutable sparse map ``exponent -> nonzero coefficient``.

    Exponents are tuples of Fractions.  Zero coefficients are never stored,
    so two quasi-polynomials are equal iff their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping = (), _trusted: bool = False):
        if _trusted:
            self._terms = terms
        else:
            clean: Dict[Exponent, Fraction] = {}
            for y, c in dict(terms).items():
                c = as_rational(c)
                if c:
                    clean[tuple(as_rational(v) for v in y)] = c
            self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls) -> "QuasiPolynomial":
        return cls({}, _trusted=True)

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coefficient(self, y: Sequence) -> Fraction:
        return self._terms.get(tuple(as_rational(v) for v in y), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuasiPolynomial):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "QuasiPolynomial") -> "QuasiPolynomial":
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for y, c in other._terms.items():
            v = out.get(y, 0) + c
            if v:
                out[y] = v
            else:
                out.pop(y, None)
        return QuasiPolynomial(out, _trusted=True)

    def __neg__(self) -> "QuasiPolynomial":
        return QuasiPolynomial({y: -c for y, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other: "QuasiPolynomial") -> "QuasiPolynomial":
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "QuasiPolynomial":
        c = as_rational(c)
        if not c:
            return QuasiPolynomial.zero()
        return QuasiPolynomial({y: c * v for y, v in self._terms.items()}, _trusted=True)

    def __rmul__(self, c) -> "QuasiPolynomial":
        return self.scale(c)

    def shift(self, mu: Sequence[int], q_half_steps: int = 0,
              params: ParamSpec = None) -> "QuasiPolynomial":
        """Multiply by ``q^(q_half_steps/2) x^mu``."""
        factor = Fraction(1)
        if q_half_steps:
            if params is None:
                raise ValueError("a q-shift needs the parameter specialization")
            factor = q_power(params, q_half_steps)
        mu = tuple(as_rational(m) for m in mu)
        return QuasiPolynomial(
            {tuple(a + b for a, b in zip(y, mu)): factor * c for y, c in self._terms.items()},
            _trusted=True,
        )

    def sorted_terms(self) -> list:
        """Terms in the deterministic linear extension of the orbit order."""
        return sorted(self._terms.items(), key=lambda t: weyl.order_key(t[0]))

    def to_json(self) -> list:
        return [
            {"exponent": [format_rational(v) for v in y], "coeff": format_rational(c)}
            for y, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable) -> "QuasiPolynomial":
        out: Dict[Exponent, Fraction] = {}
        for term in data:
            y = tuple(as_rational(v) for v in term["exponent"])
            if y in out:
                raise ValueError(f"duplicate exponent {term['exponent']}")
            out[y] = as_rational(term["coeff"])
        return cls(out)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __repr__(self) -> str:
        if not self._terms:
            return "QuasiPolynomial(0)"
        parts = []
        for y, c in self.sorted_terms():
            parts.append(f"{format_rational(c)}*x^({','.join(format_rational(v) for v in y)})")
        return "QuasiPolynomial(" + " + ".join(parts) + ")"


def mono(y: Sequence, coeff=1) -> QuasiPolynomial:
    return QuasiPolynomial({tuple(as_rational(v) for v in y): as_rational(coeff)})


def degree_and_leading(p: QuasiPolynomial):
    """Return ``(y, d)`` with ``p - d x^y`` supported strictly below ``y``."""
    if not p:
        raise ValueError("the zero quasi-polynomial has no degree")
    reps = {y: weyl.min_alcove_rep(y) for y in p.support()}
    bases = {c for _, c in reps.values()}
    if len(bases) > 1:
        raise MixedOrbits(f"exponents lie in {len(bases)} different orbits")
    ordered = sorted(reps, key=lambda y: -weyl.length(reps[y][0]))
    top = ordered[0]
    top_len = weyl.length(reps[top][0])
    candidates = [y for y in ordered if weyl.length(reps[y][0]) == top_len]
    if len(candidates) > 1:
        raise NoUniqueMaximum(f"incomparable maximal exponents {candidates[:2]}")
    g_top = reps[top][0]
    for y in ordered[1:]:
        if not weyl.bruhat_leq(reps[y][0], g_top):
            raise NoUniqueMaximum(f"exponents {top} and {y} are incomparable")
    return top, p.coefficient(top)

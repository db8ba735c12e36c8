"""Exact rational scalars, floor variants and the parameter specialization.

All arithmetic in the package runs over :class:`fractions.Fraction`.  The
Hecke parameters and the dilation parameter are fixed to nonzero rationals
when a :class:`ParamSpec` is built, so every identity checked downstream is
an exact equality in ``Q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

__all__ = [
    "Rational",
    "ParamSpec",
    "TorusPoint",
    "as_rational",
    "format_rational",
    "rational_floor",
    "floor_even",
    "floor_odd",
    "chi_int",
    "chi_even",
    "chi_odd",
    "q_power",
]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip().replace("−", "-"))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is one."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_floor(x: RationalLike) -> int:
    x = as_rational(x)
    return x.numerator // x.denominator


def floor_even(x: RationalLike) -> int:
    """Largest even integer ``<= x``."""
    return 2 * rational_floor(as_rational(x) / 2)


def floor_odd(x: RationalLike) -> int:
    """Largest odd integer ``<= x``."""
    return floor_even(as_rational(x) + 1) - 1


def chi_int(x: Fraction) -> int:
    return 1 if x.denominator == 1 else 0


def chi_even(x: Fraction) -> int:
    return 1 if x.denominator == 1 and x.numerator % 2 == 0 else 0


def chi_odd(x: Fraction) -> int:
    return 1 if x.denominator == 1 and x.numerator % 2 == 1 else 0


@dataclass(frozen=True)
class ParamSpec:
    """Specialized parameters ``q^(1/2), k0, u0, k, kr, ur`` at rank ``r``.

    ``k`` is carried but unused when ``rank == 1``.
    """

    rank: int
    sqrt_q: Fraction
    k0: Fraction
    u0: Fraction
    k: Fraction
    kr: Fraction
    ur: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        for name in ("sqrt_q", "k0", "u0", "k", "kr", "ur"):
            value = as_rational(getattr(self, name))
            if value == 0:
                raise ValueError(f"parameter {name} must be nonzero")
            object.__setattr__(self, name, value)

    @classmethod
    def create(cls, rank: int, sqrt_q: RationalLike, k0: RationalLike,
               u0: RationalLike, k: RationalLike, kr: RationalLike,
               ur: RationalLike) -> "ParamSpec":
        return cls(rank, *(as_rational(v) for v in (sqrt_q, k0, u0, k, kr, ur)))

    @property
    def q(self) -> Fraction:
        return self.sqrt_q * self.sqrt_q

    def hecke_parameter(self, j: int) -> Fraction:
        """The quadratic-relation parameter of generator ``T_j``."""
        if j == 0:
            return self.k0
        if j == self.rank:
            return self.kr
        if 0 < j < self.rank:
            return self.k
        raise IndexError(f"generator index {j} out of range 0..{self.rank}")

    def replace(self, **changes: RationalLike) -> "ParamSpec":
        fields = {name: getattr(self, name)
                  for name in ("rank", "sqrt_q", "k0", "u0", "k", "kr", "ur")}
        fields.update(changes)
        return ParamSpec.create(**fields)

    def to_json(self) -> dict:
        out: dict = {"rank": self.rank}
        for name in ("sqrt_q", "k0", "u0", "k", "kr", "ur"):
            out[name] = format_rational(getattr(self, name))
        return out


@dataclass(frozen=True)
class TorusPoint:
    """A point ``t`` of the torus, stored as the values ``t^(eps_i)``."""

    coords: tuple

    def __post_init__(self) -> None:
        coords = tuple(as_rational(c) for c in self.coords)
        if any(c == 0 for c in coords):
            raise ValueError("torus coordinates must be nonzero")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def identity(cls, rank: int) -> "TorusPoint":
        return cls((Fraction(1),) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __mul__(self, other: "TorusPoint") -> "TorusPoint":
        if len(other.coords) != len(self.coords):
            raise ValueError("torus points of different rank")
        return TorusPoint(tuple(a * b for a, b in zip(self.coords, other.coords)))

    def evaluate(self, mu: Sequence[int]) -> Fraction:
        """The character value ``t^mu`` for an integral ``mu``."""
        if len(mu) != len(self.coords):
            raise ValueError("dimension mismatch")
        value = Fraction(1)
        for c, m in zip(self.coords, mu):
            if m:
                value *= c ** int(m)
        return value

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coords]


def parse_vector(text: Union[str, Iterable[RationalLike]]) -> tuple:
    """Parse ``"3/4,0"`` (or an iterable of rational-likes) into a tuple."""
    if isinstance(text, str):
        parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
        return tuple(as_rational(p) for p in parts)
    return tuple(as_rational(p) for p in text)


@lru_cache(maxsize=4096)
def _power(base: Fraction, n: int) -> Fraction:
    return base ** n


def q_power(params: ParamSpec, half_steps: int) -> Fraction:
    """``q^(half_steps/2)``, i.e. ``sqrt_q`` raised to ``half_steps``."""
    return _power(params.sqrt_q, int(half_steps))

"""The affine Weyl group ``W = (S_r x| (+-1)^r) x| Z^r`` of type C_r.

Elements are kept in the normal form ``tau(lam) w`` (translation on the
left), acting on points by ``y -> w y + lam``.  Affine roots are pairs
``(gradient, level)`` read as the functional ``y -> <gradient, y> + level``.

Simple affine roots, with ``e_i`` the standard basis::

    a_0 = (-2 e_1, 1)      a_i = (e_i - e_{i+1}, 0)      a_r = (2 e_r, 0)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "SignedPermutation",
    "AffineWeylElement",
    "AffineRoot",
    "Orbit",
    "identity",
    "simple_reflection",
    "simple_root",
    "alpha_value",
    "reflect_point",
    "act_on_point",
    "act_on_root",
    "length",
    "reduced_word",
    "from_word",
    "is_left_descent",
    "min_alcove_rep",
    "bruhat_leq",
    "orbit_of",
    "lower_set",
    "order_key",
    "finite_weyl_group",
    "finite_positive_roots",
    "finite_roots",
    "in_closed_alcove",
]


@dataclass(frozen=True)
class SignedPermutation:
    """``w`` acting by ``(w y)[perm[i]] = signs[i] * y[i]`` (0-indexed)."""

    perm: tuple
    signs: tuple

    @classmethod
    def identity(cls, rank: int) -> "SignedPermutation":
        return cls(tuple(range(rank)), (1,) * rank)

    @property
    def rank(self) -> int:
        return len(self.perm)

    def act(self, y: Sequence) -> tuple:
        out = [None] * len(self.perm)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = y[i] if s == 1 else -y[i]
        return tuple(out)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        perm = tuple(self.perm[p] for p in other.perm)
        signs = tuple(self.signs[p] * s for p, s in zip(other.perm, other.signs))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        return SignedPermutation(tuple(perm), tuple(signs))

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm)) and all(s == 1 for s in self.signs)


@dataclass(frozen=True)
class AffineWeylElement:
    """``g = tau(translation) * finite``; ``g y = finite.act(y) + translation``."""

    translation: tuple
    finite: SignedPermutation

    @property
    def rank(self) -> int:
        return len(self.translation)

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        shifted = self.finite.act(other.translation)
        lam = tuple(a + b for a, b in zip(self.translation, shifted))
        return AffineWeylElement(lam, self.finite * other.finite)

    def inverse(self) -> "AffineWeylElement":
        winv = self.finite.inverse()
        lam = tuple(-v for v in winv.act(self.translation))
        return AffineWeylElement(lam, winv)

    def act(self, y: Sequence) -> tuple:
        wy = self.finite.act(y)
        return tuple(a + b for a, b in zip(wy, self.translation))

    def act_root(self, a: "AffineRoot") -> "AffineRoot":
        grad = self.finite.act(a.gradient)
        shift = sum(g * l for g, l in zip(grad, self.translation))
        return AffineRoot(grad, a.level - shift)

    def is_identity(self) -> bool:
        return not any(self.translation) and self.finite.is_identity()


@dataclass(frozen=True)
class AffineRoot:
    """Affine root ``y -> <gradient, y> + level`` with integer data."""

    gradient: tuple
    level: int

    def __post_init__(self) -> None:
        if not _is_finite_root(self.gradient):
            raise ValueError(f"{self.gradient} is not a root of type C_{len(self.gradient)}")

    def __call__(self, y: Sequence) -> Fraction:
        return sum((g * v for g, v in zip(self.gradient, y) if g), Fraction(0)) + self.level

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(tuple(-g for g in self.gradient), -self.level)

    @property
    def is_long(self) -> bool:
        return sum(1 for g in self.gradient if g) == 1

    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return _finite_root_positive(self.gradient)


def _is_finite_root(grad: Sequence[int]) -> bool:
    nonzero = [g for g in grad if g]
    if len(nonzero) == 1:
        return abs(nonzero[0]) == 2
    if len(nonzero) == 2:
        return all(abs(g) == 1 for g in nonzero)
    return False


def _finite_root_positive(grad: Sequence[int]) -> bool:
    for g in grad:
        if g:
            return g > 0
    raise ValueError("zero vector is not a root")


def finite_positive_roots(rank: int) -> list:
    """``{e_i - e_j, e_i + e_j : i < j} u {2 e_i}`` as integer tuples."""
    roots = []
    for i in range(rank):
        for j in range(i + 1, rank):
            for sign in (-1, 1):
                v = [0] * rank
                v[i], v[j] = 1, sign
                roots.append(tuple(v))
        v = [0] * rank
        v[i] = 2
        roots.append(tuple(v))
    return roots


def finite_roots(rank: int) -> list:
    pos = finite_positive_roots(rank)
    return pos + [tuple(-g for g in a) for a in pos]


def identity(rank: int) -> AffineWeylElement:
    return AffineWeylElement((0,) * rank, SignedPermutation.identity(rank))


@lru_cache(maxsize=None)
def simple_reflection(j: int, rank: int) -> AffineWeylElement:
    """``s_j``; ``s_0 = tau(e_1) s_{e_1}`` acts by ``y_1 -> 1 - y_1``."""
    if not 0 <= j <= rank:
        raise IndexError(f"simple reflection index {j} out of range 0..{rank}")
    perm = list(range(rank))
    signs = [1] * rank
    lam = [0] * rank
    if j == 0:
        signs[0] = -1
        lam[0] = 1
    elif j == rank:
        signs[rank - 1] = -1
    else:
        perm[j - 1], perm[j] = j, j - 1
    return AffineWeylElement(tuple(lam), SignedPermutation(tuple(perm), tuple(signs)))


@lru_cache(maxsize=None)
def simple_root(j: int, rank: int) -> AffineRoot:
    if not 0 <= j <= rank:
        raise IndexError(f"simple root index {j} out of range 0..{rank}")
    grad = [0] * rank
    if j == 0:
        grad[0] = -2
        return AffineRoot(tuple(grad), 1)
    if j == rank:
        grad[rank - 1] = 2
    else:
        grad[j - 1], grad[j] = 1, -1
    return AffineRoot(tuple(grad), 0)


def alpha_value(j: int, y: Sequence) -> Fraction:
    """Value of the simple affine root ``a_j`` at ``y``."""
    r = len(y)
    if j == 0:
        return 1 - 2 * y[0]
    if j == r:
        return 2 * y[r - 1]
    return y[j - 1] - y[j]


def reflect_point(j: int, y: tuple) -> tuple:
    """``s_j y`` without building a group element."""
    r = len(y)
    if j == 0:
        return (1 - y[0],) + y[1:]
    if j == r:
        return y[:-1] + (-y[-1],)
    return y[:j - 1] + (y[j], y[j - 1]) + y[j + 1:]


def _as_point(y: Iterable) -> tuple:
    return tuple(v if isinstance(v, Fraction) else Fraction(v) for v in y)


def act_on_point(g: AffineWeylElement, y: Sequence) -> tuple:
    if len(y) != g.rank:
        raise ValueError(f"point has dimension {len(y)}, expected {g.rank}")
    return g.act(_as_point(y))


def act_on_root(g: AffineWeylElement, a: AffineRoot) -> AffineRoot:
    if len(a.gradient) != g.rank:
        raise ValueError("dimension mismatch")
    return g.act_root(a)


def is_left_descent(g: AffineWeylElement, j: int) -> bool:
    """Whether ``l(s_j g) < l(g)``, i.e. ``g^-1 a_j`` is negative."""
    return not g.inverse().act_root(simple_root(j, g.rank)).is_positive()


def _first_left_descent(g: AffineWeylElement):
    ginv = g.inverse()
    r = g.rank
    for j in range(r + 1):
        if not ginv.act_root(simple_root(j, r)).is_positive():
            return j
    return None


@lru_cache(maxsize=200_000)
def reduced_word(g: AffineWeylElement) -> tuple:
    """Reduced word ``(j_1, ..., j_m)`` with ``g = s_{j_1} ... s_{j_m}``."""
    word = []
    r = g.rank
    while True:
        j = _first_left_descent(g)
        if j is None:
            break
        word.append(j)
        g = simple_reflection(j, r) * g
    if not g.is_identity():  # pragma: no cover - descent walk always ends at e
        raise RuntimeError("descent walk stopped away from the identity")
    return tuple(word)


def length(g: AffineWeylElement) -> int:
    return len(reduced_word(g))


def from_word(word: Iterable[int], rank: int) -> AffineWeylElement:
    g = identity(rank)
    for j in word:
        g = g * simple_reflection(j, rank)
    return g


def in_closed_alcove(y: Sequence) -> bool:
    return all(alpha_value(j, y) >= 0 for j in range(len(y) + 1))


@lru_cache(maxsize=200_000)
def _min_alcove_rep(y: tuple):
    r = len(y)
    g = identity(r)
    word = []
    current = y
    while True:
        for j in range(r + 1):
            if alpha_value(j, current) < 0:
                break
        else:
            return g, current, tuple(word)
        current = reflect_point(j, current)
        g = g * simple_reflection(j, r)
        word.append(j)


def min_alcove_rep(y: Sequence):
    """Return ``(g_y, c)`` with ``g_y`` minimal such that ``c = g_y^-1 y`` is in the closed alcove."""
    g, c, _ = _min_alcove_rep(_as_point(y))
    return g, c


def min_alcove_word(y: Sequence) -> tuple:
    """Reduced word of ``g_y`` as produced by the greedy wall-crossing walk."""
    return _min_alcove_rep(_as_point(y))[2]


@lru_cache(maxsize=1_000_000)
def bruhat_leq(u: AffineWeylElement, v: AffineWeylElement) -> bool:
    """Bruhat order via the lifting property on a left descent of ``v``."""
    if u == v:
        return True
    lu, lv = length(u), length(v)
    if lu >= lv:
        return False
    if lu == 0:
        return True
    j = _first_left_descent(v)
    s = simple_reflection(j, v.rank)
    if is_left_descent(u, j):
        return bruhat_leq(s * u, s * v)
    return bruhat_leq(u, s * v)


@dataclass(frozen=True)
class Orbit:
    """A W-orbit, recorded by its closed-alcove point and facet ``J``."""

    basepoint: tuple
    facet: frozenset

    @property
    def rank(self) -> int:
        return len(self.basepoint)

    @property
    def finite_facet(self) -> frozenset:
        """``J`` intersected with ``{1, ..., r}``."""
        return frozenset(j for j in self.facet if j >= 1)

    @property
    def is_regular(self) -> bool:
        return not self.facet

    @property
    def denominator(self) -> int:
        """Common denominator of all points of the orbit."""
        d = 1
        for c in self.basepoint:
            d = d * c.denominator // _gcd(d, c.denominator)
        return d

    def contains(self, y: Sequence) -> bool:
        return len(y) == self.rank and min_alcove_rep(y)[1] == self.basepoint

    @classmethod
    def from_basepoint(cls, c: Sequence) -> "Orbit":
        c = _as_point(c)
        if not in_closed_alcove(c):
            raise ValueError(f"{c} is not in the closed fundamental alcove")
        return cls(c, frozenset(j for j in range(len(c) + 1) if alpha_value(j, c) == 0))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def orbit_of(y: Sequence) -> Orbit:
    return Orbit.from_basepoint(min_alcove_rep(y)[1])


@lru_cache(maxsize=50_000)
def _lower_set(y: tuple) -> frozenset:
    _, c, word = _min_alcove_rep(y)
    points = {c}
    for j in reversed(word):
        points |= {reflect_point(j, p) for p in points}
    return frozenset(points)


def lower_set(y: Sequence) -> frozenset:
    """All ``y'`` with ``y' <= y``: subword images of the basepoint."""
    return _lower_set(_as_point(y))


def order_key(y: Sequence):
    """Deterministic linear extension of ``<=``: length of ``g_y``, then lexicographic."""
    y = _as_point(y)
    return (len(_min_alcove_rep(y)[2]), y)


def finite_weyl_group(rank: int) -> Iterator[SignedPermutation]:
    """All ``2^r r!`` signed permutations."""
    from itertools import permutations, product

    for perm in permutations(range(rank)):
        for signs in product((1, -1), repeat=rank):
            yield SignedPermutation(tuple(perm), tuple(signs))


def point_leq(a: Sequence, b: Sequence) -> bool:
    """The partial order ``a <= b`` on points (same orbit, Bruhat on ``g``)."""
    ga, ca = min_alcove_rep(a)
    gb, cb = min_alcove_rep(b)
    return ca == cb and bruhat_leq(ga, gb)

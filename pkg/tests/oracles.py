"""Brute-force reference implementations used only by the tests."""

from itertools import combinations

from quasikoorn import weyl


def affine_roots(rank: int, max_level: int):
    for grad in weyl.finite_roots(rank):
        for n in range(-max_level, max_level + 1):
            yield weyl.AffineRoot(grad, n)


def inversion_count(g: weyl.AffineWeylElement) -> int:
    """#{a > 0 : g^-1 a < 0}, enumerating roots up to a level that cannot matter."""
    bound = 2 * sum(abs(v) for v in g.translation) + 2
    ginv = g.inverse()
    return sum(1 for a in affine_roots(g.rank, bound)
               if a.is_positive() and not ginv.act_root(a).is_positive())


def elements_up_to(rank: int, max_len: int) -> list:
    """All affine Weyl group elements of length <= max_len (breadth first)."""
    seen = {weyl.identity(rank)}
    frontier = list(seen)
    for _ in range(max_len):
        nxt = []
        for g in frontier:
            for j in range(rank + 1):
                h = g * weyl.simple_reflection(j, rank)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return [g for g in seen if weyl.length(g) <= max_len]


def subword_lower_interval(g: weyl.AffineWeylElement) -> set:
    """{u : u is a product of a subword of a reduced word of g}."""
    word = weyl.reduced_word(g)
    out = set()
    for n in range(len(word) + 1):
        for idx in combinations(range(len(word)), n):
            out.add(weyl.from_word([word[i] for i in idx], g.rank))
    return out

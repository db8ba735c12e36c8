import json
from fractions import Fraction as F

import pytest

from quasikoorn import weyl
from quasikoorn.epoly import (
    EPolynomial,
    NonGenericParameters,
    batch_E,
    compute_E,
    koornwinder_oracle,
    orbit_points,
)
from quasikoorn.operators import OrbitMismatch, RepContext, Y_op
from quasikoorn.quasipoly import mono
from quasikoorn.scalars import ParamSpec, TorusPoint
from conftest import spec


def integral(p):
    return RepContext(p, weyl.orbit_of((F(0),) * p.rank))


def test_basepoint_gives_monomial(p2):
    c = (F(3, 8), F(1, 8))
    ctx = RepContext(p2, weyl.orbit_of(c), TorusPoint((F(2, 3), F(5, 2))))
    e = compute_E(ctx, c)
    assert e.poly == mono(c)


def test_zero_on_integral_orbit(p2):
    e = compute_E(integral(p2), (0, 0))
    assert e.poly == mono((0, 0))
    assert e.eigenvalues == (p2.k0 * p2.kr * p2.k ** 2, p2.k0 * p2.kr)


def test_eigenfunction_and_monic(p2):
    ctx = RepContext(p2, weyl.orbit_of((F(1, 2), F(1, 4))), TorusPoint((p2.sqrt_q, F(7, 2))))
    y = weyl.from_word([1, 2, 0, 1], 2).act(ctx.orbit.basepoint)
    e = compute_E(ctx, y)
    assert e.poly.coefficient(y) == 1
    assert e.poly.support() <= weyl.lower_set(y)
    for i in (1, 2):
        assert Y_op(i, ctx, e.poly) == e.poly.scale(e.eigenvalues[i - 1])


def test_orders_agree(p2):
    ctx = RepContext(p2, weyl.orbit_of((F(3, 8), F(1, 8))), TorusPoint((F(7, 11), F(13, 3))))
    y = weyl.from_word([0, 1, 2, 1, 0], 2).act(ctx.orbit.basepoint)
    other = lambda z: (weyl.order_key(z)[0], tuple(-v for v in z))
    assert compute_E(ctx, y).poly == compute_E(ctx, y, order=other).poly


def test_bad_order_rejected(p2):
    ctx = integral(p2)
    with pytest.raises(ValueError):
        compute_E(ctx, (1, 0), order=lambda z: -weyl.order_key(z)[0])


def test_orbit_mismatch(p2):
    with pytest.raises(OrbitMismatch):
        compute_E(integral(p2), (F(1, 2), F(0)))


def test_non_generic_parameters():
    p = ParamSpec.create(1, 1, 1, 1, 1, 1, 1)
    with pytest.raises(NonGenericParameters):
        compute_E(integral(p), (1,))


def test_json_round_trip(p2):
    e = compute_E(integral(p2), (1, -1))
    back = EPolynomial.from_json(json.loads(json.dumps(e.to_json())))
    assert back == e


@pytest.mark.parametrize("n", [0, 1, 2])
def test_oracle_small_cases(n):
    p = spec(1, n)
    assert koornwinder_oracle(p, 0, 2) == mono((0,))
    e = koornwinder_oracle(p, -1, 2)
    assert e.coefficient((-1,)) == 1
    assert e.support() <= {(F(-1),), (F(0),), (F(1),)} & weyl.lower_set((F(-1),))
    assert koornwinder_oracle(p, 1, 2) == compute_E(integral(p), (1,)).poly


def test_oracle_rank_guard(p2):
    with pytest.raises(ValueError):
        koornwinder_oracle(p2, 0, 1)


def test_batch_small(p1):
    ctx = integral(p1)
    assert [e.poly for e in batch_E(ctx, 0)] == [mono((0,))]
    got = batch_E(ctx, 2)
    assert [e.degree for e in got] == [(0,), (1,), (-1,)]
    assert not got.failures


def test_batch_degrees_distinct(p2):
    ctx = RepContext(p2, weyl.orbit_of((F(3, 8), F(1, 8))), TorusPoint((F(2, 3), F(5, 2))))
    got = batch_E(ctx, 3)
    assert len({e.degree for e in got}) == len(got) == len(orbit_points(ctx.orbit, 3))


def test_genericity_failure_rates():
    # Observed, not asserted: how often random rational data hits an eigenvalue collision.
    import random
    from conftest import GENERICITY_LINES
    from quasikoorn import relations as R

    rng = random.Random(2026)
    for kind in ("regular", "affine_wall", "any"):
        hits = total = 0
        for _ in range(15):
            params = R.random_params(2, rng)
            ctx = R.random_context(params, rng, kind)
            got = batch_E(ctx, 4)
            hits += len(got.failures)
            total += len(got) + len(got.failures)
        GENERICITY_LINES.append(
            f"r = 2, {kind:<11} orbits, l(g_y) <= 4: {hits}/{total} E_y hit a collision "
            f"({100 * hits / total:.1f}%)")
        assert total

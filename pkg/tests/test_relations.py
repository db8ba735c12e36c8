import random

import pytest
from hypothesis import given, strategies as st

from quasikoorn import relations as R, weyl
from quasikoorn.operators import RepContext, validate_torus_point
from quasikoorn.quasipoly import mono
from conftest import points, spec


def test_random_data_is_valid():
    rng = random.Random(0)
    for rank in (1, 2, 3):
        p = R.random_params(rank, rng)
        assert 1 not in (p.sqrt_q, p.k0, p.u0, p.k, p.kr, p.ur)
        for kind in ("any", "regular", "affine_wall"):
            c = R.random_basepoint(rank, rng, kind)
            orbit = weyl.Orbit.from_basepoint(c)
            assert weyl.in_closed_alcove(c) and all(v.denominator <= 8 for v in c)
            if kind == "regular":
                assert not orbit.facet
            if kind == "affine_wall":
                assert 0 in orbit.facet
            validate_torus_point(p, orbit, R.random_torus_point(p, orbit, rng))
            assert orbit.contains(R.random_exponent(orbit, rng))
        c = R.random_params(rank, rng, collapse=True)
        assert c.k0 == c.u0 == c.kr == c.ur


def test_rank_one_has_no_braid_relations():
    names = R.relation_checks(1)
    assert sorted(names) == ["hecke T0", "hecke T1"]
    assert "affine braid T0 T1" in R.relation_checks(2)
    assert "braid T1 T2" in R.relation_checks(3)


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_suite_passes(rank):
    results = R.run_suite(spec(rank, 1), 15, seed=rank)
    assert results and all(r.passed for r in results), [r.failures for r in results]


def test_suite_detects_corrupted_gamma(monkeypatch):
    real = R.gamma
    monkeypatch.setattr(R, "gamma", lambda ctx, i, y: 2 * real(ctx, i, y))
    (res,) = R.run_suite(spec(2), 5, only=["Y triangular"])
    assert not res.passed and res.failures


def test_collapse_requires_equal_parameters():
    ctx = R.integral_context(spec(2))
    with pytest.raises(ValueError):
        R.parameter_collapse(ctx, mono((0, 0)))


def test_individual_checks_on_integral_orbit():
    ctx = R.integral_context(spec(3, 2))
    for mu in [(0, 0, 0), (2, -1, 1), (-3, 0, 2)]:
        v = mono(mu)
        assert R.polynomial_reduction(ctx, v)
        assert R.y_commute(ctx, v) and R.y_triangular(ctx, v)
    assert all(R.cyclic_vector(ctx, w) for w in weyl.finite_weyl_group(3))


@given(points(2), st.integers(0, 10**6), st.integers(0, 2))
def test_hecke_on_arbitrary_points(y, seed, j):
    params = spec(2, 2)
    orbit = weyl.orbit_of(y)
    ctx = RepContext(params, orbit, R.random_torus_point(params, orbit, random.Random(seed)))
    assert R.hecke(j)(ctx, mono(y))

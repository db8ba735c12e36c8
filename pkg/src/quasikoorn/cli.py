"""``quasikoorn`` command-line interface.

Exit codes: 0 on success, 1 on a mathematical failure (a relation, an
oracle match or a genericity check), 2 on a usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from . import weyl
from .epoly import NonGenericParameters, TriangularityViolation, compute_E, koornwinder_oracle
from .operators import (
    InvalidTorusPoint,
    OrbitMismatch,
    RepContext,
    default_torus_point,
    describe_torus_constraints,
)
from .relations import run_suite
from .scalars import ParamSpec, TorusPoint, as_rational, format_rational, parse_vector

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2

DEFAULT_CONFIG = {
    "rank": 2, "sqrt_q": "3/2", "k0": "2/5", "u0": "7/3",
    "k": "5/4", "kr": "3/7", "ur": "11/4", "seed": 0,
}


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    params: ParamSpec
    t: Optional[TorusPoint] = None
    seed: int = 0

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        known = {"rank", "sqrt_q", "k0", "u0", "k", "kr", "ur", "t", "seed"}
        extra = set(data) - known
        if extra:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(extra))}")
        try:
            rank = data["rank"]
            if not isinstance(rank, int) or isinstance(rank, bool):
                raise ConfigError("rank must be an integer")
            params = ParamSpec.create(rank, *(data[n] for n in ("sqrt_q", "k0", "u0", "k", "kr", "ur")))
            t = None
            if data.get("t") is not None:
                t = TorusPoint(tuple(as_rational(v) for v in data["t"]))
                if t.rank != rank:
                    raise ConfigError(f"t has {t.rank} coordinates, rank is {rank}")
            seed = data.get("seed", 0)
            if not isinstance(seed, int):
                raise ConfigError("seed must be an integer")
        except KeyError as exc:
            raise ConfigError(f"missing config key {exc}") from None
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(str(exc)) from None
        return cls(params, t, seed)

    @classmethod
    def load(cls, path: Optional[str]) -> "Config":
        if path is None:
            return cls.from_dict(DEFAULT_CONFIG)
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path} is not valid JSON: {exc}") from None
        return cls.from_dict(data)

    def context(self, point) -> RepContext:
        orbit = weyl.orbit_of(point)
        t = self.t
        if t is None:
            t = default_torus_point(self.params, orbit)
            if t is None:
                raise ConfigError(
                    "this orbit has free torus coordinates; give t explicitly in the config "
                    f"(constraints: {describe_torus_constraints(orbit)})")
        try:
            return RepContext(self.params, orbit, t)
        except InvalidTorusPoint as exc:
            raise ConfigError(str(exc)) from None


def _point(text: str, rank: int) -> tuple:
    try:
        y = parse_vector(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse point {text!r}: {exc}") from None
    if len(y) != rank:
        raise ConfigError(f"point has {len(y)} coordinates, rank is {rank}")
    return y


def _vec(y) -> List[str]:
    return [format_rational(v) for v in y]


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2, ensure_ascii=False)
    else:
        out = text
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _poly_text(poly) -> str:
    lines = []
    for y, c in poly.sorted_terms():
        lines.append(f"  {format_rational(c)} * x^({', '.join(_vec(y))})")
    return "\n".join(lines)


# -- commands ------------------------------------------------------------------

def cmd_verify(args, cfg: Config) -> int:
    seed = cfg.seed if args.seed is None else args.seed
    results = run_suite(cfg.params, args.trials, seed)
    ok = all(r.passed for r in results)
    payload = {
        "rank": cfg.params.rank,
        "trials": args.trials,
        "seed": seed,
        "relations": [
            {"name": r.name, "checked": r.checked, "passed": r.passed,
             "failures": len(r.failures), "examples": [f for f in r.failures if f]}
            for r in results
        ],
        "all_passed": ok,
    }
    lines = []
    for r in results:
        status = "PASS" if r.passed else f"FAIL ({len(r.failures)} of {r.checked})"
        lines.append(f"{r.name:<24} {r.checked:>5}  {status}")
        lines.extend(f"    {f}" for f in r.failures if f)
    lines.append("all relations pass" if ok else "some relations FAILED")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_MATH


def cmd_orbit(args, cfg: Config) -> int:
    y = _point(args.point, cfg.params.rank)
    orbit = weyl.orbit_of(y)
    r = orbit.rank
    word = weyl.min_alcove_word(y)
    payload = {
        "point": _vec(y),
        "basepoint": _vec(orbit.basepoint),
        "facet": sorted(orbit.facet),
        "finite_facet": sorted(j for j in orbit.facet if 1 <= j <= r),
        "g_word": list(word),
        "length": len(word),
        "lower_set_size": len(weyl.lower_set(y)),
        "torus_constraints": describe_torus_constraints(orbit),
    }
    text = "\n".join([
        f"basepoint       ({', '.join(payload['basepoint'])})",
        f"J(O)            {{{', '.join(map(str, payload['facet']))}}}",
        f"I(O)            {{{', '.join(map(str, payload['finite_facet']))}}}",
        f"g_y word        [{', '.join(map(str, word))}]",
        f"|lower set|     {payload['lower_set_size']}",
        f"T_O             {payload['torus_constraints']}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def _epoly_output(args, e, extra: Optional[dict] = None, extra_text: str = "") -> None:
    payload = e.to_json()
    if extra:
        payload.update(extra)
    text = (f"E_({', '.join(_vec(e.degree))}) on orbit of ({', '.join(_vec(e.orbit.basepoint))})\n"
            f"eigenvalues ({', '.join(_vec(e.eigenvalues))})\n{_poly_text(e.poly)}{extra_text}")
    _emit(args, payload, text)


def cmd_epoly(args, cfg: Config) -> int:
    y = _point(args.point, cfg.params.rank)
    e = compute_E(cfg.context(y), y)
    _epoly_output(args, e)
    return EXIT_OK


def cmd_koornwinder(args, cfg: Config) -> int:
    r = cfg.params.rank
    mu = _point(args.degree, r)
    if any(v.denominator != 1 for v in mu):
        raise ConfigError("degree must be an integer vector")
    if args.oracle and r != 1:
        raise ConfigError("--oracle is available at rank 1 only")
    orbit = weyl.orbit_of((Fraction(0),) * r)
    ctx = RepContext(cfg.params, orbit, default_torus_point(cfg.params, orbit))
    e = compute_E(ctx, mu)
    if not args.oracle:
        _epoly_output(args, e)
        return EXIT_OK
    m = int(mu[0])
    expected = koornwinder_oracle(cfg.params, m, abs(m) + 1)
    match = expected == e.poly
    _epoly_output(args, e, {"match": match}, f"\nmatch: {'true' if match else 'false'}")
    return EXIT_OK if match else EXIT_MATH


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasikoorn",
        description="Quasi-polynomial representations of the C^vee C_r double affine Hecke algebra.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON parameter file (built-in rank-2 default if omitted)")
    common.add_argument("--format", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run the randomized relation suite")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=None, help="overrides the config seed")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", parents=[common], help="describe the orbit of a point")
    p.add_argument("--point", required=True, help='comma-separated rationals, e.g. "3/4,0"')
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("epoly", parents=[common], help="compute E_y")
    p.add_argument("--point", required=True)
    p.add_argument("--out", help="write the output to this file")
    p.set_defaults(func=cmd_epoly)

    p = sub.add_parser("koornwinder", parents=[common], help="E_mu on the integral orbit with t = 1")
    p.add_argument("--degree", required=True, help='integer vector, e.g. "-2"')
    p.add_argument("--oracle", action="store_true", help="cross-check against the rank-1 oracle")
    p.add_argument("--out")
    p.set_defaults(func=cmd_koornwinder)
    return parser


def _attach_vector_values(argv: List[str]) -> List[str]:
    # "--point -3/8,1/8" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--point", "--degree") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = _attach_vector_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if getattr(args, "trials", 1) < 1:
            raise ConfigError("--trials must be positive")
        cfg = Config.load(args.config)
        return args.func(args, cfg)
    except (ConfigError, OrbitMismatch, InvalidTorusPoint) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonGenericParameters, TriangularityViolation) as exc:
        print(f"mathematical failure: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

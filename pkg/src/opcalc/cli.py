"""``opcalc`` command line interface.

Exit codes: 0 success, 1 mathematical failure (a check or validation failed),
2 input error (unreadable or malformed files, inconsistent degrees, or a
computation that is undefined for the input such as the Connes quotient in
small characteristic).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from . import mutation
from .algebra import (Algebra, chain_from_json, chain_to_json, cochain_from_json, cochain_to_json,
                      load_algebra, load_pair, validate_pair)
from .calculus import cap, cyclic_correction, lie
from .coefficients import parse_field
from .errors import CapacityError, InputError, PreconditionError, RefusedError
from .hochschild import HochschildInstance
from .homology import HomologyEngine
from .poisson import brylinski_homotopy_check, validate_poisson
from .report import Report
from .suites import SUITES, run_suite

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


def resolve(path: str) -> str:
    """A file path, or the name of a bundled data file (with or without ``.json``)."""
    if os.path.exists(path):
        return path
    name = os.path.basename(path)
    if not name.endswith(".json"):
        name += ".json"
    bundled = resources.files("opcalc") / "data" / name
    if bundled.is_file():
        return str(bundled)
    raise InputError(f"{path}: no such file (and no bundled data file of that name)")


def _read_json(path):
    path = resolve(path)
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


class Config:
    def __init__(self, args):
        manifest = {}
        if getattr(args, "manifest", None):
            manifest = _read_json(args.manifest)
            base = os.path.dirname(resolve(args.manifest))
            for key in ("algebra", "coefficients", "pi"):
                if key in manifest and not os.path.isabs(manifest[key]):
                    candidate = os.path.join(base, manifest[key])
                    manifest[key] = candidate if os.path.exists(candidate) else manifest[key]
        self.algebra_path = args.algebra or manifest.get("algebra")
        if not self.algebra_path:
            raise InputError("no algebra given (use --algebra or --manifest)")
        self.field = parse_field(args.field) if args.field else (
            parse_field(manifest["field"]) if "field" in manifest else None)
        self.coefficients = getattr(args, "coefficients", None) or manifest.get("coefficients")
        self.pi_path = getattr(args, "pi", None) or manifest.get("pi")
        self.max_degree = args.max_degree if args.max_degree is not None else manifest.get("max_degree", 4)
        self.max_arity = args.max_arity if args.max_arity is not None else manifest.get("max_arity", 2)
        if self.max_degree < 1 or self.max_arity < 1:
            raise InputError("--max-degree and --max-arity must be at least 1")
        self.trials = args.trials
        self.seed = args.seed
        self.cache_dir = args.cache_dir

    def algebra(self) -> Algebra:
        return load_algebra(resolve(self.algebra_path), self.field)

    def instance(self, A: Algebra, *, mu=None, extra_arity: int = 0) -> HochschildInstance:
        pair = load_pair(resolve(self.coefficients), A) if self.coefficients else None
        return HochschildInstance(A, pair, max_arity=3 * self.max_arity + 1 + extra_arity,
                                  max_degree=self.max_degree + 3, mu=mu)

    def pi(self, inst: HochschildInstance):
        if not self.pi_path:
            raise InputError("--pi is required")
        return cochain_from_json(_read_json(self.pi_path), inst.field, inst.operad.codim, inst.algebra.dim)

    def describe(self):
        return {"algebra": self.algebra_path, "coefficients": self.coefficients, "pi": self.pi_path,
                "max_degree": self.max_degree, "max_arity": self.max_arity, "trials": self.trials,
                "seed": self.seed}


def emit(args, payload, text=None):
    if isinstance(payload, str):
        out = payload
    else:
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    if text:
        sys.stderr.write(text + "\n")


def bundle(name, reports, config) -> dict:
    ok = all(r.ok for r in reports)
    return {"suite": name, "status": "pass" if ok else "fail", "config": config,
            "reports": [r.to_dict() for r in reports]}


# -- commands ---------------------------------------------------------------

def cmd_validate(args) -> int:
    cfg = Config(args)
    A = cfg.algebra()
    reports = [A.validate()]
    if cfg.coefficients and reports[0].ok:
        pair = load_pair(resolve(cfg.coefficients), A)
        reports.append(validate_pair(A, pair))
    if cfg.pi_path and all(r.ok for r in reports):
        inst = cfg.instance(A)
        reports.append(validate_poisson(inst, cfg.pi(inst)))
    payload = bundle("validate", reports, cfg.describe())
    emit(args, payload, "\n".join(str(r) for r in reports))
    return EXIT_OK if payload["status"] == "pass" else EXIT_MATH


def _instance_or_fail(cfg, A, mu=None):
    rep = A.validate()
    if not rep.ok:
        raise PreconditionError(str(rep))
    return cfg.instance(A, mu=mu)


def cmd_check(args) -> int:
    cfg = Config(args)
    A = cfg.algebra()
    inst = _instance_or_fail(cfg, A)
    reports = run_suite(inst, args.suite, max_degree=cfg.max_degree, max_arity=cfg.max_arity,
                        trials=cfg.trials, seed=cfg.seed)
    payload = bundle(args.suite, reports, cfg.describe())
    emit(args, payload, "\n".join(str(r) for r in reports))
    return EXIT_OK if payload["status"] == "pass" else EXIT_MATH


def _table(args, report, names=None):
    if args.format == "csv":
        emit(args, report.to_csv())
    else:
        emit(args, report.to_dict(names))


def cmd_compute(args) -> int:
    cfg = Config(args)
    A = cfg.algebra()
    inst = _instance_or_fail(cfg, A)
    engine = HomologyEngine(inst, cfg.cache_dir)
    names = list(A.basis_names)
    if args.what == "hh":
        _table(args, engine.homology(cfg.max_degree, normalized=args.normalized), names)
    elif args.what == "hcoh":
        _table(args, engine.cohomology(cfg.max_degree, normalized=args.normalized), names)
    elif args.what == "hc":
        _table(args, engine.connes_cyclic_homology(cfg.max_degree), names)
    else:
        emit(args, compute_op(inst, args))
    return EXIT_OK


def _load_cochain(inst, path, role):
    if not path:
        raise InputError(f"--{role} is required for this operation")
    return cochain_from_json(_read_json(path), inst.field, inst.operad.codim, inst.algebra.dim)


def _load_chain(inst, path):
    if not path:
        raise InputError("--chain is required for this operation")
    return chain_from_json(_read_json(path), inst.field, inst.algebra.dim)


def compute_op(inst, args) -> dict:
    O, M, F = inst.operad, inst.module, inst.field
    op = args.op
    if op is None:
        raise InputError("compute op needs an operation: cup|cap|lie|bracket|delta|b|B|t|S")
    if op in ("cup", "bracket", "delta"):
        phi = _load_cochain(inst, args.phi, "phi")
        if op == "delta":
            return cochain_to_json(O.delta(phi), F)
        psi = _load_cochain(inst, args.psi, "psi")
        res = O.cup(phi, psi) if op == "cup" else O.bracket(phi, psi)
        return cochain_to_json(res, F)
    x = _load_chain(inst, args.chain)
    if x.degree > M.max_degree - 1:
        raise InputError(f"chain degree {x.degree} exceeds the configured range")
    if op == "b":
        return chain_to_json(M.b(x), F)
    if op == "t":
        return chain_to_json(M.t(x), F)
    if op == "B":
        if not M.is_normalized(x):
            raise InputError("B acts on normalized chains; the chain has a unit in positions 1..n")
        return chain_to_json(M.B(x), F)
    phi = _load_cochain(inst, args.phi, "phi")
    if op == "cap":
        return chain_to_json(cap(M, phi, x), F)
    if op == "lie":
        return chain_to_json(lie(M, phi, x), F)
    if op == "S":
        return chain_to_json(M.normalize(cyclic_correction(M, phi, x)), F)
    raise InputError(f"unknown operation {op!r}")


def cmd_poisson(args) -> int:
    cfg = Config(args)
    A = cfg.algebra()
    base = _instance_or_fail(cfg, A)
    pi = cfg.pi(base)
    rep = validate_poisson(base, pi)
    if args.action == "validate":
        payload = bundle("poisson validate", [rep], cfg.describe())
        emit(args, payload, str(rep))
        return EXIT_OK if rep.ok else EXIT_MATH
    if not rep.ok:
        emit(args, bundle("poisson validate", [rep], cfg.describe()), str(rep))
        return EXIT_MATH
    inst = cfg.instance(A, mu=pi)
    engine = HomologyEngine(inst, cfg.cache_dir)
    if args.action == "hh":
        _table(args, engine.homology(cfg.max_degree), list(A.basis_names))
        return EXIT_OK
    if args.action == "hcoh":
        _table(args, engine.cohomology(cfg.max_degree), list(A.basis_names))
        return EXIT_OK
    chains = [x for n in range(cfg.max_degree + 1) for x in inst.module.basis(n)]
    reports = [rep, brylinski_homotopy_check(inst, pi, chains)]
    reports += run_suite(inst, "calculus", max_degree=cfg.max_degree, max_arity=cfg.max_arity,
                         trials=cfg.trials, seed=cfg.seed)
    payload = bundle("poisson check", reports, cfg.describe())
    emit(args, payload, "\n".join(str(r) for r in reports))
    return EXIT_OK if payload["status"] == "pass" else EXIT_MATH


# -- parser -------------------------------------------------------------------

def _common(p, *, pi=False):
    p.add_argument("--algebra", help="algebra JSON file or bundled name (dual_numbers, group_algebra_z2, M2, rationals)")
    p.add_argument("--coefficients", help="coefficient pair JSON: {\"V\": algebra, \"gamma\": [...]}")
    if pi:
        p.add_argument("--pi", help="2-cochain JSON file")
    p.add_argument("--field", help="Q or Fp:<p>; overrides the field of the algebra file")
    p.add_argument("--max-degree", "--max", dest="max_degree", type=int, default=None)
    p.add_argument("--max-arity", type=int, default=None)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--cache-dir")
    p.add_argument("--out")
    p.add_argument("--manifest", help="JSON with algebra/coefficients/pi paths, field and caps")
    p.add_argument("--mutate", help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opcalc", description="Operadic calculus on Hochschild complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate algebra, coefficient pair and Poisson structure")
    _common(p, pi=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", help="run identity suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    _common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compute", help="homology tables or single operator evaluations")
    p.add_argument("what", choices=("hh", "hcoh", "hc", "op"))
    p.add_argument("op", nargs="?", choices=("cup", "cap", "lie", "bracket", "delta", "b", "B", "t", "S"))
    p.add_argument("--phi")
    p.add_argument("--psi")
    p.add_argument("--chain")
    p.add_argument("--normalized", action="store_true", help="use the normalized complex")
    _common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("poisson", help="noncommutative Poisson structures")
    p.add_argument("action", choices=("validate", "hh", "hcoh", "check"))
    _common(p, pi=True)
    p.set_defaults(func=cmd_poisson)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.mutate:
            try:
                mutation.set_global(*mutation.parse(args.mutate))
            except ValueError as exc:
                raise InputError(str(exc)) from exc
        return args.func(args)
    except (InputError, CapacityError, FileNotFoundError, IsADirectoryError) as exc:
        sys.stderr.write(f"opcalc: input error: {exc}\n")
        return EXIT_INPUT
    except RefusedError as exc:
        sys.stderr.write(f"opcalc: refused: {exc}\n")
        return EXIT_INPUT
    except PreconditionError as exc:
        sys.stderr.write(f"opcalc: {exc}\n")
        return EXIT_MATH
    finally:
        mutation.set_global(None)


if __name__ == "__main__":
    sys.exit(main())

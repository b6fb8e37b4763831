"""Command-line entry point: ``weylgk <command> [flags] [expressions]``.

Exit status: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import Algebra, format_fraction
from .center import casimir, center_scan, is_central
from .lie import LieAlgebraSpec, check_jacobi, make_a, make_gl, make_s
from .maps import (chain_map, phi, psi, psi_prime, sigma1, theta, verify_hom,
                   weyl_variable_count, xi)
from .modules import (FinDimModule, TModule, character_module, hom_dim_lie, hom_dim_T,
                      standard_module, trivial_module, two_dim_s1, verify_module)
from .ore import localized
from .parsing import ParseError, parse_element
from .tensor import tensor
from .uea import uea
from .weyl import weyl


class UsageError(Exception):
    pass


def lie_algebra(name: str) -> LieAlgebraSpec:
    m = re.fullmatch(r"(gl|s|a)(\d+)", name)
    if not m:
        raise UsageError(f"unknown Lie algebra {name!r} (expected glN, sN or aN)")
    kind, k = m.group(1), int(m.group(2))
    if k < 1:
        raise UsageError("rank must be positive")
    return {"gl": make_gl, "s": make_s, "a": lambda k: make_a(k + 1)}[kind](k)


def algebra(name: str) -> Algebra:
    """``glN``, ``sN``, ``aN`` (enveloping algebras), ``sN-loc``, ``DN`` and ``A@B`` tensors."""
    if "@" in name:
        return tensor(*(algebra(part) for part in name.split("@")))
    m = re.fullmatch(r"s(\d+)-loc", name)
    if m:
        return localized(int(m.group(1)))
    m = re.fullmatch(r"D(\d+)", name)
    if m:
        return weyl(int(m.group(1)))
    return uea(lie_algebra(name))


def parse_lambda(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed --lambda {text!r}") from None


def load_module(spec: str) -> FinDimModule:
    """A module file path, or one of ``trivial[:m]``, ``char:c``, ``two-dim``, ``standard[:m]``."""
    if Path(spec).is_file():
        return FinDimModule.from_json(Path(spec).read_text(), Path(spec).stem)
    name, _, arg = spec.partition(":")
    if name == "trivial":
        return trivial_module(int(arg or 1))
    if name == "char":
        return character_module(1, Fraction(arg or "0"))
    if name == "two-dim":
        return two_dim_s1()
    if name == "standard":
        return standard_module(int(arg or 1))
    raise UsageError(f"no module file or builtin named {spec!r}")


def _emit(args, text: str, data: dict) -> None:
    if args.format == "structured":
        print(json.dumps({"command": args.command, **data}, sort_keys=True))
    else:
        print(text)


def _elements(args, A):
    if not args.expr:
        raise UsageError("expected an expression")
    return [parse_element(e, A) for e in args.expr]


# --- command handlers ---------------------------------------------------------

def cmd_normalize(args):
    A = algebra(args.algebra)
    outs = [str(u) for u in _elements(args, A)]
    _emit(args, "\n".join(outs), {"algebra": args.algebra, "results": outs})
    return 0


def cmd_multiply(args):
    A = algebra(args.algebra)
    prod = A.one()
    for u in _elements(args, A):
        prod = prod * u
    _emit(args, str(prod), {"algebra": args.algebra, "result": str(prod)})
    return 0


def _apply_map(args, gmap):
    outs = [str(gmap(u)) for u in _elements(args, gmap.domain)]
    _emit(args, "\n".join(outs), {"map": gmap.name, "codomain": str(gmap.codomain), "results": outs})
    return 0


def cmd_psi(args):
    return _apply_map(args, psi(args.n))


def cmd_psi_inv(args):
    return _apply_map(args, psi_prime(args.n))


def cmd_theta(args):
    return _apply_map(args, theta(args.n))


def cmd_chain(args):
    gmap = chain_map(args.n)
    outs = [str(gmap(u)) for u in _elements(args, gmap.domain)]
    count = weyl_variable_count(args.n)
    _emit(args, "\n".join(outs),
          {"map": gmap.name, "codomain": str(gmap.codomain), "weyl_variables": count, "results": outs})
    return 0


def cmd_verify_hom(args):
    n = args.n
    maps = {
        "phi": lambda: (phi(n), make_gl(n), False),
        "psi": lambda: (psi(n), make_s(n), False),
        "theta": lambda: (theta(n), make_s(n), False),
        "chain": lambda: (chain_map(n), make_s(n), False),
        "xi": lambda: (xi(n), make_s(n - 1), True),
        "sigma1": lambda: (sigma1(), make_s(1), False),
    }
    if args.map not in maps:
        raise UsageError(f"--map must be one of {', '.join(maps)}")
    gmap, spec, lie = maps[args.map]()
    report = verify_hom(gmap, spec, lie=lie)
    _emit(args, report.summary(), {"map": gmap.name, **report.to_dict()})
    return 0 if report.ok else 1


def _module_args(args, count=1):
    mods = [load_module(m) for m in (args.module or [])]
    if len(mods) != count:
        raise UsageError(f"expected {count} --module argument(s), got {len(mods)}")
    n = args.n if args.n is not None else int(mods[0].spec.name[1:]) + 1
    if args.lambda_ is None:
        raise UsageError("--lambda is required")
    lam = parse_lambda(args.lambda_)
    if len(lam) != n:
        raise UsageError(f"--lambda needs {n} components")
    return n, lam, mods


def cmd_act(args):
    n, lam, (V,) = _module_args(args)
    T = TModule(n, lam, V)
    alpha = tuple(int(t) for t in args.alpha.split(",")) if args.alpha else (0,) * n
    vec = T.vector(alpha, args.component - 1)
    outs = []
    for u in _elements(args, T.loc):
        outs.append(str(T.act(u, vec)))
    _emit(args, "\n".join(outs), {"lambda": [format_fraction(c) for c in lam], "results": outs})
    return 0


def cmd_verify_module(args):
    n, lam, (V,) = _module_args(args)
    report = verify_module(n, lam, V, args.radius)
    _emit(args, report.summary(), {"ok": report.ok, "checked": report.checked})
    return 0 if report.ok else 1


def cmd_hom_dim(args):
    n, lam, (V, W) = _module_args(args, 2)
    res = hom_dim_T(n, lam, V, W, args.radius)
    lie_dim = hom_dim_lie(V, W)
    ok = res.stable and res.dim == lie_dim
    text = f"{res.summary()}; Hom over s{n - 1}: {lie_dim}"
    _emit(args, text, {"hom_dim_T": res.dim, "hom_dim_T_previous": res.dim_previous,
                       "stable": res.stable, "hom_dim_lie": lie_dim, "ok": ok})
    return 0 if ok else 1


def cmd_casimir(args):
    c = casimir(args.n, args.k)
    _emit(args, str(c), {"n": args.n, "k": args.k, "result": str(c)})
    return 0


def cmd_central(args):
    spec = lie_algebra(args.algebra)
    results = [is_central(spec, u) for u in _elements(args, uea(spec))]
    _emit(args, "\n".join("central" if r else "not central" for r in results), {"results": results})
    return 0 if all(results) else 1


def cmd_center_scan(args):
    spec = lie_algebra(args.algebra)
    basis = [str(u) for u in center_scan(spec, args.degree)]
    _emit(args, "span{" + ", ".join(basis) + "}", {"algebra": args.algebra, "degree": args.degree,
                                                    "dimension": len(basis), "basis": basis})
    return 0


def cmd_verify_jacobi(args):
    if args.spec:
        spec = LieAlgebraSpec.from_json(Path(args.spec).read_text())
    elif args.algebra:
        spec = lie_algebra(args.algebra)
    else:
        raise UsageError("give --algebra or --spec")
    ok = check_jacobi(spec)
    _emit(args, f"Jacobi identity {'holds' if ok else 'fails'} for {spec.name}", {"ok": ok, "name": spec.name})
    return 0 if ok else 1


# --- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default="text")

    p = argparse.ArgumentParser(prog="weylgk", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, expr=True, n=False, algebra=False, module=False):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if n:
            sp.add_argument("--n", type=int, required=n == "required", default=None)
        if algebra:
            sp.add_argument("--algebra", required=algebra == "required")
        if module:
            sp.add_argument("--module", action="append", help="module file or builtin name")
            sp.add_argument("--lambda", dest="lambda_")
            sp.add_argument("--radius", type=int, default=3)
        if expr:
            sp.add_argument("expr", nargs="*")
        sp.set_defaults(func=func)
        return sp

    add("normalize", cmd_normalize, "print the normal form", algebra="required")
    add("multiply", cmd_multiply, "multiply expressions left to right", algebra="required")
    add("psi", cmd_psi, "image under psi", n="required")
    add("psi-inv", cmd_psi_inv, "image under the inverse of psi", n="required")
    add("theta", cmd_theta, "image under theta", n="required")
    add("chain", cmd_chain, "image under the full theta chain", n="required")
    sp = add("verify-hom", cmd_verify_hom, "check a map on all generator pairs", expr=False, n="required")
    sp.add_argument("--map", required=True)
    sp = add("act", cmd_act, "act on a basis vector of T(lambda, V)", n=True, module=True)
    sp.add_argument("--alpha", help="integer shift a,b,...")
    sp.add_argument("--component", type=int, default=1)
    add("verify-module", cmd_verify_module, "check the module axioms of T(lambda, V)",
        expr=False, n=True, module=True)
    add("hom-dim", cmd_hom_dim, "compare Hom(T(lambda,V), T(lambda,W)) with Hom(V, W)",
        expr=False, n=True, module=True)
    sp = add("casimir", cmd_casimir, "Casimir element c_k of U(gl_n)", expr=False, n="required")
    sp.add_argument("--k", type=int, required=True)
    add("central", cmd_central, "test centrality", algebra="required")
    sp = add("center-scan", cmd_center_scan, "central elements up to a degree", expr=False, algebra="required")
    sp.add_argument("--degree", type=int, required=True)
    sp = add("verify-jacobi", cmd_verify_jacobi, "check the Jacobi identity", expr=False, algebra=True)
    sp.add_argument("--spec", help="Lie algebra JSON file")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

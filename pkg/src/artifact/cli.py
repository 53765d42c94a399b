"""Command line front end.

    artifact gw --shape 2,4 --lambda 2,1 --mu 2,1
    artifact verify --suite ring --shape 2,4
    artifact bethe --shape 2,4 --q 1 --seed 0

Exit codes: 0 ok, 1 a verification failed, 2 usage error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .grbasis import BoxShape, ShapeError, parse_partition, partitions
from .lattice import CapExceeded, guard
from .polyring import to_string

SUITES = ("ybe", "operators", "ring", "bethe", "all")


class UsageError(ValueError):
    pass


def _shape(text):
    try:
        n, N = (int(s) for s in text.split(","))
        return BoxShape.from_nN(n, N)
    except (ValueError, ShapeError) as exc:
        raise UsageError(f"bad --shape {text!r}: expected n,N with 0 <= n <= N") from exc


def _part(text, shape, flag):
    try:
        lam = parse_partition(text, shape)
    except (ValueError, ShapeError) as exc:
        raise UsageError(f"bad {flag} {text!r}") from exc
    return lam


def _key(nu, d):
    return f"({nu.label()},{d})"


def _emit(obj, args):
    if args.format == "text" and isinstance(obj, dict):
        text = "\n".join(f"{k}: {v}" for k, v in obj.items())
    else:
        text = json.dumps(obj, sort_keys=True, indent=None if args.format == "jsonl" else 1)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _expansion(prod):
    return {_key(nu, d): to_string(c) for (nu, d), c in prod.items() if c}


# commands

def cmd_gw(args):
    from .qhring import gw, product
    shape = _shape(args.shape)
    guard(shape.N)
    lam = _part(args.lam, shape, "--lambda")
    mu = _part(args.mu, shape, "--mu")
    if args.nu is None:
        out = _expansion(product(lam, mu))
    else:
        nu = _part(args.nu, shape, "--nu")
        ds = [args.d] if args.d is not None else range(shape.n + 1)
        out = {}
        for d in ds:
            c = gw(lam, mu, nu, d, route=args.route)
            if c:
                out[_key(nu, d)] = to_string(c)
    _emit(out, args)
    return 0


def cmd_product(args):
    from .qhring import product
    shape = _shape(args.shape)
    guard(shape.N)
    lam = _part(args.lam, shape, "--lambda")
    mu = _part(args.mu, shape, "--mu")
    _emit(_expansion(product(lam, mu, args.route)), args)
    return 0


def cmd_zfun(args):
    from .walkers import partition_function
    shape = _shape(args.shape)
    guard(shape.N)
    lam = _part(args.lam, shape, "--lambda")
    mu = _part(args.mu, shape, "--mu")
    z = partition_function(lam, mu, args.model, reversed_=not args.plain)
    _emit({"Z": to_string(z)}, args)
    return 0


def cmd_pieri(args):
    from .transfer import pieri_chevalley
    shape = _shape(args.shape)
    guard(shape.N)
    lam = _part(args.lam, shape, "--lambda")
    _emit(_expansion(pieri_chevalley(lam)), args)
    return 0


def cmd_kostka(args):
    from .qhring import kostka
    shape = _shape(args.shape)
    guard(shape.N)
    mu = _part(args.mu, shape, "--mu")
    try:
        alpha = tuple(int(s) for s in args.alpha.split(",") if s.strip())
    except ValueError as exc:
        raise UsageError(f"bad --alpha {args.alpha!r}") from exc
    _emit(_expansion(kostka(alpha, mu, args.route)), args)
    return 0


def cmd_table(args):
    from .qhring import GWTable
    shape = _shape(args.shape)
    guard(shape.N)
    routes = ("operator", "det-cramer") if args.cross_check else ("operator",)
    _emit(GWTable.build(shape, routes).to_json(), args)
    return 0


def cmd_bethe(args):
    from .bethe import full_report
    shape = _shape(args.shape)
    guard(shape.N)
    rep = full_report(shape, complex(args.q), args.seed)
    if args.tol is not None:
        rep["failed"] = sorted(k for k, v in rep["residuals"].items() if v >= args.tol)
        rep["passed"] = not rep["failed"]
    _emit(rep, args)
    return 0 if rep["passed"] else 1


# verification suites

def _shapes_upto(N):
    for M in range(1, N + 1):
        for n in range(0, M + 1):
            yield BoxShape.from_nN(n, M)


def suite_ybe(args):
    from .lattice import YBE_IDS, verify_yang_baxter
    return [verify_yang_baxter(i, mutate=args.mutate) for i in YBE_IDS]


def suite_operators(args):
    from . import identities
    from .facschur import braid_fac_schur_check, cauchy_check
    from .nilhecke import verify_hecke_relations
    from .transfer import route_identity
    N = args.N
    reps = []
    for shape in _shapes_upto(N):
        reps.append(route_identity(shape))
        if shape.N >= 2:
            for id_ in sorted(identities.CATALOG):
                reps.append(identities.run(id_, shape))
    for M in range(2, N + 1):
        reps.append(identities.run("S-action-M", N=M))
        for variant in ("rho_t", "rho_T_vee", "rho_t_prime", "pi_bar", "upsilon",
                        "nil_coxeter", "nil_coxeter_vee", "bold_s"):
            reps.append(verify_hecke_relations(variant, M))
        for n in range(1, M):
            reps.append(braid_fac_schur_check(M, n))
            reps.append(cauchy_check(n, M - n))
    return reps


def suite_ring(args):
    from .qhring import (GWTable, associativity_check, chern_leibniz_check, classical_table_check,
                         dualities, gkm_table_check, golden_check, leibniz_check, ROUTES, three_route_check)
    shape = _shape(args.shape)
    guard(shape.N)
    reps = []
    if (shape.n, shape.N) == (2, 4):
        reps.extend(golden_check(r) for r in ROUTES)
    reps.append(three_route_check(shape, seed=args.seed))
    if shape.n and shape.k:
        reps.append(dualities(GWTable.build(shape), GWTable.build(shape.dual())))
    reps.append(classical_table_check(shape))
    reps.append(gkm_table_check(shape))
    reps.append(associativity_check(shape))
    for mu in partitions(shape):
        for j in range(1, shape.N + 1):
            checks = [chern_leibniz_check(mu, j)] + [leibniz_check(lam, mu, j) for lam in partitions(shape)]
            reps.extend(r for r in checks if (r.counterexample or {}).get("precondition") != "not met")
    return reps


def suite_bethe(args):
    from .bethe import full_report
    from .lattice import IdentityReport
    reps = []
    for shape in _shapes_upto(min(args.N, 5)):
        rep = full_report(shape, complex(args.q), args.seed)
        reps.append(IdentityReport("bethe", {"n": shape.n, "N": shape.N, "seed": args.seed},
                                   rep["passed"], None if rep["passed"] else {"failed": rep["failed"]}))
    return reps


def cmd_verify(args):
    suites = ("ybe", "operators", "ring", "bethe") if args.suite == "all" else (args.suite,)
    fns = {"ybe": suite_ybe, "operators": suite_operators, "ring": suite_ring, "bethe": suite_bethe}
    ok = True
    for s in suites:
        for rep in fns[s](args):
            print(rep.to_json(), flush=True)
            ok = ok and rep.passed
    return 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="artifact", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "jsonl", "text"), default="json")
    sub = p.add_subparsers(dest="cmd", required=True)

    def shaped(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--shape", required=True, help="n,N")
        sp.set_defaults(fn=fn)
        sp.add_argument("--out")
        return sp

    sp = shaped("gw", cmd_gw, "structure constants C^{nu,d}_{lam mu}")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--nu")
    sp.add_argument("--d", type=int)
    sp.add_argument("--route", choices=("operator", "det-cramer"), default="operator")

    sp = shaped("product", cmd_product, "expansion of lam (*) mu")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--route", choices=("jacobi-trudi", "naegelsbach-kostka", "facs-expansion"),
                    default="jacobi-trudi")

    sp = shaped("zfun", cmd_zfun, "walker partition function")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--model", choices=("vicious", "osculating"), default="vicious")
    sp.add_argument("--plain", action="store_true", help="Z instead of the reversed Z~")

    sp = shaped("pieri", cmd_pieri, "Pieri-Chevalley rule Ht_1|lam>")
    sp.add_argument("--lambda", dest="lam", required=True)

    sp = shaped("kostka", cmd_kostka, "equivariant quantum Kostka numbers")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--mu", default="0")
    sp.add_argument("--route", choices=("H", "E"), default="H")

    sp = shaped("table", cmd_table, "full GW table as JSON")
    sp.add_argument("--cross-check", action="store_true")

    sp = shaped("bethe", cmd_bethe, "numerical Bethe ansatz report")
    sp.add_argument("--q", type=complex, default=1.0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float)

    sp = sub.add_parser("verify", help="run an identity catalog")
    sp.add_argument("--suite", choices=SUITES, default="all")
    sp.add_argument("--shape", default="2,4")
    sp.add_argument("--N", type=int, default=4)
    sp.add_argument("--q", type=complex, default=1.0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mutate", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except RuntimeError as exc:
        # root collisions along the Bethe homotopy: caller should perturb t (new seed)
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

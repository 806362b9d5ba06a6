"""Command-line interface.

Commands
    gens      emit the five generator matrices (exact or mod 41)
    verify    run the full verification suite and print a PASS/FAIL table
    orbit     enumerate a vector or projective orbit
    order     certify a permutation-group order via the stabilizer chain
    cubic     emit the 45-term cubic form, optionally with invariance checks
    eval      evaluate a group word against bound matrix files
    reduce41  reduce an exact matrix file modulo 41
    basis     run the basis-recovery pipeline (self-test or on external data)

Exit codes: 0 success, 1 a verification check failed, 2 usage or file
format errors.  All output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import basisfinder
from . import cubicform
from . import exactlinalg as la
from . import generators
from . import orbits
from . import wordlang


class _UsageError(Exception):
    pass


def _gen_subset(selector: str):
    g = generators.build_all()
    byname = g.as_dict()
    if selector == "all":
        names = list(generators.NAMES)
    else:
        names = [n.strip() for n in selector.split(",") if n.strip()]
        unknown = [n for n in names if n not in byname]
        if unknown:
            raise _UsageError(f"unknown generator name(s): {', '.join(unknown)}")
        if not names:
            raise _UsageError("empty generator list")
    return names, [byname[n] for n in names]


def _cmd_gens(args):
    g = generators.build_all()
    mats = {}
    for name, m in g.as_dict().items():
        mats[name] = la.reduce_matrix_mod41(m) if args.gf41 else m
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for name, m in mats.items():
            la.save_matrix(m, os.path.join(args.out, f"{name}.mat"))
        print(f"wrote {len(mats)} matrices to {args.out}")
    else:
        for name, m in mats.items():
            print(f"# {name}")
            sys.stdout.write(la.format_matrix(m))
    return 0


def _seed_point(name: str):
    if name == "fixed":
        return orbits.seed_fixed_vector()
    if name == "proj1755":
        return orbits.seed_proj_1755()
    raise _UsageError(f"unknown seed {name!r} (use fixed or proj1755)")


def _cmd_orbit(args):
    names, gens = _gen_subset(args.gens)
    seed = _seed_point(args.seed)
    orbit = orbits.enumerate_orbit(seed, gens, cap=args.cap)
    print(f"orbit size: {len(orbit)}")
    if args.perms:
        pset = orbits.perm_images(orbit, gens)
        for name, perm in zip(names, pset.perms):
            print(f"{name} " + " ".join(str(x) for x in perm))
    return 0


def _cmd_order(args):
    _, subset = _gen_subset(args.gens)
    g = generators.build_all()
    orbit = orbits.enumerate_orbit(orbits.seed_fixed_vector(), list(g.in_order()),
                                   cap=args.cap)
    pset = orbits.perm_images(orbit, subset)
    chain = orbits.build_stab_chain(pset)
    print(chain.order())
    return 0


def _cmd_cubic(args):
    form = cubicform.dickson_form()
    for t in form:
        u, v, w = t.sorted_coords
        print(f"{'+' if t.sign > 0 else '-'} {u} {v} {w}")
    if args.check:
        g = generators.build_all()
        failed = False
        for name, m in g.as_dict().items():
            ok, flip_safe = cubicform.invariance_report(form, m)
            line = f"invariant under {name}: {'PASS' if ok else 'FAIL'}"
            if name == "eprime":
                flips_ok = not flip_safe
                line += f"; all 45 single flips break invariance: {'PASS' if flips_ok else 'FAIL'}"
                failed = failed or not flips_ok
            print(line)
            failed = failed or not ok
        return 1 if failed else 0
    return 0


def _cmd_eval(args):
    env = {}
    for binding in args.bind or []:
        if "=" not in binding:
            raise _UsageError(f"bad binding {binding!r}, expected name=file")
        name, path = binding.split("=", 1)
        env[name] = la.load_matrix(path)
    expr = wordlang.parse_word(args.word, names=env.keys() if env else None)
    result = wordlang.eval_word(expr, env)
    sys.stdout.write(la.format_matrix(result))
    return 0


def _cmd_reduce41(args):
    m = la.load_matrix(args.infile)
    sys.stdout.write(la.format_matrix(la.reduce_matrix_mod41(m)))
    return 0


def _cmd_basis(args):
    if args.selftest:
        seeds = [args.seed + k for k in range(5)]
        failed = False
        for seed in seeds:
            rep = basisfinder.scramble_roundtrip(seed)
            print(f"scramble seed {seed}: {'PASS' if rep.ok else 'FAIL'}")
            for name, ok in rep.checks:
                print(f"    {'PASS' if ok else 'FAIL'} {name}")
            failed = failed or not rep.ok
        return 1 if failed else 0
    if not args.indir:
        raise _UsageError("basis requires --selftest or --in DIR")
    a = la.load_matrix(os.path.join(args.indir, "a.mat"))
    b = la.load_matrix(os.path.join(args.indir, "b.mat"))
    env = {"a": a, "b": b}
    for name, text in wordlang.STANDARD_WORDS:
        expr = wordlang.parse_word(text, names=env.keys())
        env[name] = wordlang.eval_word(expr, env)
    ac = la.mat_mul(env["a"], env["c"])
    balanced, common = basisfinder.run_pipeline(
        env["f1"], env["f2"], env["d"], ac, env["eprime"])
    print(f"common interaction multiple: {common.value}")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for name, m in zip(("f1", "f2", "d", "ac", "eprime"), balanced):
            la.save_matrix(m, os.path.join(args.out, f"{name}.mat"))
        print(f"wrote 5 rebased matrices to {args.out}")
    return 0


def _verify_checks(fast: bool, seed: int):
    """Yield (name, ok) pairs for the whole verification suite."""
    g = generators.build_all()
    rep = generators.verify_relations(g)
    yield from rep.checks

    ep = g.eprime
    yield ("eprime symmetric", la.transpose(ep) == ep)
    yield ("eprime row norms all 1",
           all(generators.row_norm(ep, i) == generators.cyclo.ONE for i in range(27)))
    row0 = [e for e in ep.data[0] if not e.is_zero()]
    from .cyclo import CycNum
    counts = {}
    for e in row0:
        counts[e] = counts.get(e, 0) + 1
    expected = {CycNum.rational(2, 5): 2, CycNum.rational(1, 5): 9,
                CycNum.rational(-1, 5): 8}
    yield ("eprime top row multiset {2/5 x2, 1/5 x9, -1/5 x8}",
           len(row0) == 19 and counts == expected)

    from . import gf41
    table = gf41.lift_table()
    yield ("mod-41 designated lifts reduce back",
           all(gf41.reduce_cyc(v) == k for k, v in table.items()))

    form = cubicform.dickson_form()
    yield ("cubic form has 45 terms", len(form) == 45)
    yield ("every term passes the eigenvalue test",
           all(cubicform.eigenvalue_check(t) for t in form))
    for name, m in g.as_dict().items():
        ok, flip_safe = cubicform.invariance_report(form, m)
        yield (f"cubic form invariant under {name}", ok)
        if name == "eprime":
            yield ("every single sign flip breaks eprime invariance", not flip_safe)
    jordan = cubicform.jordan_identity_check(
        form, {n: m for n, m in g.as_dict().items() if n != "d"})
    yield from jordan.checks

    if fast:
        return

    gens5 = list(g.in_order())
    orbit = orbits.enumerate_orbit(orbits.seed_fixed_vector(), gens5)
    yield ("orbit of (1,1,1;0^24) has 2304 points", len(orbit) == 2304)
    p5 = orbits.perm_images(orbit, gens5)
    chain = orbits.build_stab_chain(p5)
    yield ("certified order is 17971200", chain.order() == 17_971_200)
    yield ("degree-2304 action is transitive", orbits.transitivity_check(p5))
    psub = orbits.perm_images(orbit, [g.f1, g.f2, g.ac, g.eprime])
    sub_chain = orbits.build_stab_chain(psub)
    yield ("point stabilizer has order 7800", sub_chain.order() == 7800)
    yield ("index is 2304", chain.order() // sub_chain.order() == 2304)

    proj = orbits.enumerate_orbit(orbits.seed_proj_1755(), gens5)
    yield ("projective orbit has 1755 points", len(proj) == 1755)
    c = orbits.scalar_character(orbits.seed_proj_1755(), la.mat_pow(g.ac, 3))
    yield ("(ac)^3 scales the projective seed by a power of i",
           c ** 4 == generators.cyclo.ONE and c ** 2 != generators.cyclo.ONE)
    yield ("d fixes the projective seed",
           orbits.scalar_character(orbits.seed_proj_1755(), g.d) == generators.cyclo.ONE)
    yield ("1755-point stabilizer has order 10240",
           chain.order() // len(proj) == 10240)

    for k in range(5):
        rep = basisfinder.scramble_roundtrip(seed + k)
        yield (f"basis round-trip recovers balanced form (seed {seed + k})", rep.ok)


def _cmd_verify(args):
    failed = False
    for name, ok in _verify_checks(args.fast, args.seed):
        print(f"{name:<60s} {'PASS' if ok else 'FAIL'}")
        failed = failed or not ok
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tits27",
        description="Exact 27x27 generators for the Tits group in compact E6")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", help="emit the five generators")
    p.add_argument("--gf41", action="store_true", help="reduce entries mod 41")
    p.add_argument("--out", help="directory for one .mat file per generator")
    p.set_defaults(func=_cmd_gens)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--fast", action="store_true",
                   help="skip the orbit, order and basis checks")
    p.add_argument("--seed", type=int, default=12345,
                   help="base seed for the randomized basis round-trip")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("orbit", help="enumerate an orbit")
    p.add_argument("--seed", required=True, choices=("fixed", "proj1755"))
    p.add_argument("--gens", default="all", help="comma list or 'all'")
    p.add_argument("--cap", type=int, default=10000)
    p.add_argument("--perms", action="store_true",
                   help="also print the permutation images")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("order", help="certified order of the generated group")
    p.add_argument("--gens", default="all", help="comma list or 'all'")
    p.add_argument("--cap", type=int, default=10000)
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("cubic", help="emit the 45-term cubic form")
    p.add_argument("--check", action="store_true",
                   help="verify invariance under all five generators")
    p.set_defaults(func=_cmd_cubic)

    p = sub.add_parser("eval", help="evaluate a group word")
    p.add_argument("--word", required=True)
    p.add_argument("--bind", action="append", metavar="NAME=FILE",
                   help="bind a generator name to a matrix file")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("reduce41", help="reduce an exact matrix file mod 41")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_reduce41)

    p = sub.add_parser("basis", help="basis-recovery pipeline")
    p.add_argument("--selftest", action="store_true",
                   help="scramble/recover round-trip on 5 seeds")
    p.add_argument("--seed", type=int, default=1, help="base seed for --selftest")
    p.add_argument("--in", dest="indir", help="directory with a.mat and b.mat")
    p.add_argument("--out", help="directory for the rebased matrices")
    p.set_defaults(func=_cmd_basis)

    return parser


def run(argv) -> int:
    """Parse and execute; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

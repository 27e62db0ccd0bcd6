"""Command-line surface: gen | nu | tau | pierce | bounds | verify | bench.

Instances and reports are JSON documents; `-` means stdin/stdout, so
commands compose in pipes (`boxpierce gen gadget | boxpierce pierce
--algo twoline | boxpierce verify`). Exit codes are the machine
contract: 0 success, 1 I/O or parse failure, 2 precondition violated,
3 exact-oracle cap exceeded. Human-readable diagnostics go to stderr
and may change between versions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bench import run_bench
from .bounds import BoundRule, build_table, table_to_csv
from .generators import (
    EXTREMAL_TAG,
    GADGET_TAG,
    RandomSpec,
    gen_extremal_two_line,
    gen_gadget,
    gen_random,
    random_meta,
)
from .instances import (
    Instance,
    InstanceFormatError,
    _read_text,
    _write_text,
    dumps_canonical,
    load_instance,
    parse_points_document,
    report_to_json,
    verify_piercing,
    verify_to_obj,
    write_instance,
)
from .oracles import DEFAULT_CAP, CapExceeded, nu_exact, tau_exact
from .piercing import SplitPolicy, pierce_ddim, pierce_planar, pierce_two_lines

EXIT_OK = 0
EXIT_IO = 1
EXIT_PRECONDITION = 2
EXIT_CAP = 3

CAP_ENV_VAR = "BOXPIERCE_CAP"


class PreconditionError(ValueError):
    """Inputs are well-formed but incompatible with the requested command."""


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None


def _add_cap_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cap", type=int, default=None,
                        help=f"exact-oracle size cap (default {DEFAULT_CAP}, env {CAP_ENV_VAR})")


def _cap_of(args) -> int:
    return args.cap if args.cap is not None else _default_cap()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxpierce",
        description="Piercing sets for axis-parallel box families, with exact "
                    "oracles and certified size guarantees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate an instance file")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    g_gadget = gen_sub.add_parser("gadget", help="the 5-box two-line worst case")
    g_gadget.add_argument("--out", default="-")
    g_ext = gen_sub.add_parser("extremal", help="disjoint gadget copies with packing number N")
    g_ext.add_argument("n", type=int)
    g_ext.add_argument("--out", default="-")
    g_rand = gen_sub.add_parser("random", help="seeded random family")
    g_rand.add_argument("--boxes", type=int, required=True)
    g_rand.add_argument("--dim", type=int, default=2)
    g_rand.add_argument("--range", type=int, nargs=2, default=(0, 20), metavar=("LO", "HI"))
    g_rand.add_argument("--seed", type=int, default=0)
    g_rand.add_argument("--two-line", action="store_true",
                        help="clamp each box onto one of two horizontal lines")
    g_rand.add_argument("--lines", type=int, nargs=2, default=None, metavar=("C1", "C2"))
    g_rand.add_argument("--out", default="-")

    p_nu = sub.add_parser("nu", help="exact packing number with witness")
    p_nu.add_argument("instance", nargs="?", default="-")
    _add_cap_flag(p_nu)

    p_tau = sub.add_parser("tau", help="exact piercing number with witness")
    p_tau.add_argument("instance", nargs="?", default="-")
    _add_cap_flag(p_tau)

    p_pierce = sub.add_parser("pierce", help="run a piercing algorithm")
    p_pierce.add_argument("instance", nargs="?", default="-")
    p_pierce.add_argument("--algo", choices=("twoline", "planar", "ddim"), required=True)
    p_pierce.add_argument("--policy", choices=("balanced", "dp"), default="balanced")
    p_pierce.add_argument("--out", default="-")
    _add_cap_flag(p_pierce)

    p_bounds = sub.add_parser("bounds", help="emit a bound-rule table as CSV")
    p_bounds.add_argument("rule", choices=[r.value for r in BoundRule])
    p_bounds.add_argument("max_n", type=int)
    p_bounds.add_argument("max_d", type=int, nargs="?", default=2)
    p_bounds.add_argument("--out", default="-")

    p_verify = sub.add_parser("verify", help="check a piercing against its instance")
    p_verify.add_argument("points", nargs="?", default="-",
                          help="pierce report or bare points document")
    p_verify.add_argument("--instance", default=None,
                          help="instance file; defaults to the one embedded in the report")
    _add_cap_flag(p_verify)
    p_verify.add_argument("--oracles", action="store_true",
                          help="also report exact nu and tau (cap permitting)")

    p_bench = sub.add_parser("bench", help="seeded fuzz campaign (telemetry only)")
    p_bench.add_argument("--trials", type=int, default=100)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--boxes", type=int, default=10)
    p_bench.add_argument("--dim", type=int, default=2)
    p_bench.add_argument("--range", type=int, nargs=2, default=(0, 20), metavar=("LO", "HI"))
    p_bench.add_argument("--jobs", type=int, default=1)
    p_bench.add_argument("--out", default="-")
    _add_cap_flag(p_bench)

    return parser


def _cmd_gen(args) -> int:
    if args.kind == "gadget":
        inst = Instance(gen_gadget(), {"generator": GADGET_TAG,
                                       "description": "5-box two-line family, nu=2 tau=3"})
    elif args.kind == "extremal":
        if args.n < 1:
            raise PreconditionError(f"extremal family needs n >= 1, got {args.n}")
        inst = Instance(gen_extremal_two_line(args.n),
                        {"generator": EXTREMAL_TAG, "n": args.n,
                         "description": f"two-line family with nu={args.n}, tau=floor(3n/2)"})
    else:
        spec = RandomSpec(n_boxes=args.boxes, dim=args.dim,
                          coord_range=tuple(args.range), seed=args.seed,
                          two_line=args.two_line,
                          lines=tuple(args.lines) if args.lines else None)
        inst = Instance(gen_random(spec), random_meta(spec))
    write_instance(inst, args.out)
    return EXIT_OK


def _cmd_nu(args) -> int:
    family = load_instance(args.instance).family
    result = nu_exact(family, _cap_of(args))
    sys.stdout.write(dumps_canonical({"nu": result.nu, "witness": list(result.witness)}))
    return EXIT_OK


def _cmd_tau(args) -> int:
    family = load_instance(args.instance).family
    result = tau_exact(family, _cap_of(args))
    sys.stdout.write(dumps_canonical({
        "tau": result.tau,
        "witness": [list(p.coords) for p in result.witness],
    }))
    return EXIT_OK


def _cmd_pierce(args) -> int:
    inst = load_instance(args.instance)
    family = inst.family
    cap = _cap_of(args)
    policy = SplitPolicy.BALANCED if args.policy == "balanced" else SplitPolicy.DP_OPTIMAL
    if args.algo == "twoline":
        if family.dim != 2:
            raise PreconditionError(f"twoline needs a planar instance, got dimension {family.dim}")
        if family.lines is None:
            raise PreconditionError("twoline needs an instance with a lines certificate")
        report = pierce_two_lines(family, cap)
    elif args.algo == "planar":
        if family.dim != 2:
            raise PreconditionError(f"planar needs a 2-d instance, got dimension {family.dim}")
        report = pierce_planar(family, policy, cap)
    else:
        report = pierce_ddim(family, policy, cap)
    _write_text(args.out, report_to_json(report, args.algo, args.policy, inst))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    try:
        table = build_table(BoundRule(args.rule), args.max_n, args.max_d)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    _write_text(args.out, table_to_csv(table))
    return EXIT_OK


def _cmd_verify(args) -> int:
    points, embedded, guarantee = parse_points_document(_read_text(args.points))
    if args.instance is not None:
        inst = load_instance(args.instance)
    elif embedded is not None:
        inst = embedded
    else:
        raise PreconditionError("no instance: pass --instance or verify a pierce report")
    nu = tau = None
    if args.oracles:
        cap = _cap_of(args)
        nu = nu_exact(inst.family, cap).nu
        tau = tau_exact(inst.family, cap).tau
    vr = verify_piercing(inst.family, points, guarantee=guarantee, nu=nu, tau=tau)
    sys.stdout.write(dumps_canonical(verify_to_obj(vr)))
    return EXIT_OK if vr.hits_all else EXIT_PRECONDITION


def _cmd_bench(args) -> int:
    stats = run_bench(trials=args.trials, seed=args.seed, max_boxes=args.boxes,
                      dim=args.dim, coord_range=tuple(args.range),
                      cap=_cap_of(args), jobs=args.jobs)
    _write_text(args.out, dumps_canonical(stats))
    return EXIT_OK if stats["violations"] == 0 else EXIT_PRECONDITION


_HANDLERS = {
    "gen": _cmd_gen,
    "nu": _cmd_nu,
    "tau": _cmd_tau,
    "pierce": _cmd_pierce,
    "bounds": _cmd_bounds,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except CapExceeded as exc:
        print(f"boxpierce: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InstanceFormatError, OSError) as exc:
        print(f"boxpierce: {exc}", file=sys.stderr)
        return EXIT_IO
    except (PreconditionError, ValueError) as exc:
        print(f"boxpierce: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except json.JSONDecodeError as exc:
        print(f"boxpierce: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

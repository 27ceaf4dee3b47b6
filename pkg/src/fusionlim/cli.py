"""Command line interface: ``fusionlim limits | offenders | verify``.

Exit codes: 0 success, 1 invalid input, 2 a resource cap was hit,
3 a property that must hold failed (always a bug).
"""
from __future__ import annotations

import argparse
import json
import sys

from .descriptors import load
from .errors import CapExceeded, ConsistencyError, FusionlimError, ValidationError
from .fusion import FusionSystem, make_setup, offender_interval, overgroup_collection
from .offenders import best_offenders, offender_collections, solitary_subgroups, thompson_subgroup
from .orbitlim import DEFAULT_COCHAIN_CAP, higher_limit
from .permgroup import (DEFAULT_ORDER_CAP, Group, group_from_generators, is_prime,
                        parse_generator_list, sylow_subgroup)
from .suites import SUITES, run_suite

SCHEMA = 1
EXIT_OK, EXIT_VALIDATION, EXIT_CAP, EXIT_CONSISTENCY = 0, 1, 2, 3


def build_parser():
    parser = argparse.ArgumentParser(prog="fusionlim", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="group, setup or module descriptor (path or bundled name)")
    common.add_argument("--prime", type=int, help="the prime p (overrides the file's prime line)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; computation is single-threaded")
    common.add_argument("--cap-order", type=int, default=DEFAULT_ORDER_CAP,
                        help="largest group order that will be enumerated")
    common.add_argument("--cap-cochains", type=int, default=DEFAULT_COCHAIN_CAP,
                        help="largest number of cochains in any degree")
    sub = parser.add_subparsers(dest="command", required=True)

    lim = sub.add_parser("limits", parents=[common], help="higher limits L^k(F; R)")
    lim.add_argument("--collection", nargs="+", default=["centric"],
                     help="centric | overgroups-of [Y=<label or generators>] | "
                          "explicit <gens> [<gens> ...] | offender-interval")
    lim.add_argument("--k", type=int, default=1)

    sub.add_parser("offenders", parents=[common], help="best offenders of a module descriptor")

    ver = sub.add_parser("verify", parents=[common], help="run a named check suite")
    ver.add_argument("--suite", required=True, help="one of: " + ", ".join(SUITES))
    return parser


def _config(args):
    cfg = {k: v for k, v in vars(args).items() if v is not None}
    return dict(sorted(cfg.items()))


def _check_caps(args):
    for name in ("threads", "cap_order", "cap_cochains"):
        if getattr(args, name) < 1:
            raise ValidationError(f"--{name.replace('_', '-')} must be positive")
    if args.prime is not None and not is_prime(args.prime):
        raise ValidationError(f"{args.prime} is not prime")


def _descriptor(args, required=True):
    if args.group is None:
        if required:
            raise ValidationError("--group is required")
        return None
    desc = load(args.group, cap=args.cap_order)
    if args.prime is not None:
        desc.prime = args.prime
    return desc


def _prime(desc):
    if desc.prime is None:
        raise ValidationError("no prime: give --prime or a prime line")
    return desc.prime


def _resolve_y(desc, spec):
    if spec is None:
        if desc.Y is None:
            raise ValidationError("no Y: give Y=<label or generators> or a Y line")
        return desc.Y
    label = spec.split("=", 1)[1] if spec.startswith("Y=") else spec
    if desc.subgroups and label in desc.subgroups:
        return desc.subgroups[label]
    if desc.Y is not None and label == "Y":
        return desc.Y
    try:
        gens = parse_generator_list(label, desc.group.degree)
    except (ValueError, IndexError):
        raise ValidationError(f"cannot read Y from {spec!r}") from None
    return group_from_generators(desc.group.degree, gens)


def _collection(args, desc):
    p = _prime(desc)
    kind, *rest = args.collection
    if kind == "centric":
        F = FusionSystem.from_group(desc.group, p)
        return F, F.centric_collection()
    if kind == "overgroups-of":
        Y = _resolve_y(desc, rest[0] if rest else None)
        setup = make_setup(desc.group, p, Y)
        return setup.fusion, overgroup_collection(setup)
    if kind == "offender-interval":
        Y = _resolve_y(desc, rest[0] if rest else None)
        setup = make_setup(desc.group, p, Y)
        collection = offender_collections(setup.faithful).best
        return setup.fusion, offender_interval(setup, collection)
    if kind == "explicit":
        F = FusionSystem.from_group(desc.group, p)
        members = []
        for text in rest:
            H = group_from_generators(desc.group.degree, parse_generator_list(text, desc.group.degree))
            if not H <= F.S:
                raise ValidationError(f"explicit subgroup {text!r} is not contained in S")
            members.append(H)
        return F, F.f_closure(members) if members else []
    raise ValidationError(f"unknown collection selector {kind!r}")


def cmd_limits(args):
    desc = _descriptor(args)
    if args.k < 0:
        raise ValidationError("--k must be nonnegative")
    F, R = _collection(args, desc)
    result = higher_limit(F, R, args.k, max_degree=max(args.k, 1), cap=args.cap_cochains)
    report = {"k": args.k, "invariant_factors": result.invariant_factors, "order": result.order,
              "collection_size": len(R), "cochain_dims": result.cochain_dims}
    text = json.dumps(result.invariant_factors)
    return EXIT_OK, report, text


def cmd_offenders(args):
    desc = _descriptor(args)
    act = desc.action
    if act is None:
        raise ValidationError("the descriptor has no module (orders and mat lines)")
    if not act.is_faithful():
        raise ValidationError("the action is not faithful")
    reports = best_offenders(act)
    S = sylow_subgroup(act.group, act.prime)
    J = thompson_subgroup([r.subgroup for r in reports], S)
    tees = solitary_subgroups(act) if act.prime == 2 else []
    rows = []
    for r in reports:
        rows.append({"subgroup": [str(g) for g in r.subgroup.gens], "order": r.size,
                     "fixed": r.fixed_size, "defect": str(r.defect), **r.flags})
    report = {"group_order": act.group.order, "module_order": act.module.order,
              "best_offenders": rows, "thompson_subgroup_order": J.order,
              "solitary": [[str(g) for g in T.gens] for T in tees]}
    lines = [f"group order {act.group.order}, module order {act.module.order}",
             f"best offenders: {len(rows)}"]
    for row in rows:
        flags = ",".join(k for k in ("over", "minimal", "quadratic", "solitary", "semisolitary") if row[k])
        lines.append(f"  {' '.join(row['subgroup'])}  |A|={row['order']} |C_D(A)|={row['fixed']}"
                     + (f"  [{flags}]" if flags else ""))
    lines.append(f"thompson subgroup order: {J.order}")
    lines.append(f"solitary: {len(tees)}")
    return EXIT_OK, report, "\n".join(lines)


def cmd_verify(args):
    desc = _descriptor(args, required=False)
    result = run_suite(args.suite, descriptor=desc, cap=args.cap_cochains)
    lines = []
    for c in result.checks:
        status = {True: "pass", False: "FAIL", None: "skip"}[c.ok]
        line = f"{status}  {c.label}"
        if c.ok is False:
            line += f"  {json.dumps(c.to_json()['detail'])}"
        lines.append(line)
    lines.append(f"suite {result.name}: {'pass' if result.passed else 'FAIL'}")
    code = EXIT_OK if result.passed else EXIT_CONSISTENCY
    return code, result.to_json(), "\n".join(lines)


COMMANDS = {"limits": cmd_limits, "offenders": cmd_offenders, "verify": cmd_verify}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config(args)
    try:
        _check_caps(args)
        code, report, text = COMMANDS[args.command](args)
    except FusionlimError as exc:
        code = {ValidationError: EXIT_VALIDATION, CapExceeded: EXIT_CAP,
                ConsistencyError: EXIT_CONSISTENCY}.get(type(exc), EXIT_CONSISTENCY)
        kind = type(exc).__name__
        if args.format == "json":
            print(json.dumps({"schema": SCHEMA, "config": config, "error": kind, "message": str(exc)},
                             sort_keys=True))
        else:
            print(f"error ({kind}): {exc}", file=sys.stderr)
        return code
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "config": config, "command": args.command, **report},
                         sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

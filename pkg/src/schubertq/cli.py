"""Command line front end.

Exit codes: 0 success, 1 verification negative, 2 usage or parse error
(with a JSON error object on stderr).
"""

import argparse
import json
import os
import sys

from . import io
from .bottsamelson import bott_samelson_ideal, desingularize
from .bundles import pullback_sphere_bundle_ideal, sphere_bundle_ideal, universal_bundle_ideal
from .certify import (inversion_compactify, projectively_q_closed_certificate, puncture_lift,
                      replay_certificate, verify_q_jacobian_witness)
from .errors import PointNotOnVariety, SchubertQError
from .grassmann import grassmann_ideal
from .partitions import betti_numbers, homology_basis, parse_partition
from .schubert import schubert_ideal


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_seed():
    env = os.environ.get("SCHUBERTQ_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"SCHUBERTQ_SEED must be an integer, got {env!r}") from None


def _emit(args, payload, text):
    """Write JSON to --out (if given) and print text or JSON to stdout."""
    if getattr(args, "out", None):
        io.write_text(args.out, io.dumps(payload))
    print(io.dumps(payload) if args.json else text, end="" if args.json else "\n")


def _box(args):
    if args.m is None or args.n is None:
        raise UsageError("--m and --n are required")
    if args.m < 0 or args.n < 0:
        raise UsageError("--m and --n must be non-negative")
    return args.m, args.n


# -- commands ---------------------------------------------------------------------

def cmd_ideal(args):
    kind = args.construction
    if kind == "pullback":
        if not args.base or not args.map:
            raise UsageError("pullback needs --base and --map")
        W = io.ideal_from_json(io.load_json(args.base))
        mu = io.map_from_json(io.load_json(args.map), W.ambient)
        system = pullback_sphere_bundle_ideal(W, mu)
    else:
        m, n = _box(args)
        if kind == "grassmann":
            system = grassmann_ideal(m, n)
        elif kind == "vbundle":
            system = universal_bundle_ideal(m, n)
        elif kind == "sbundle":
            system = sphere_bundle_ideal(m, n)
        else:
            if args.partition is None:
                raise UsageError(f"{kind} needs --partition")
            lam = parse_partition(args.partition, m, n)
            system = schubert_ideal(lam) if kind == "schubert" else bott_samelson_ideal(lam).system
    text = io.dumps_ideal(io.ideal_to_json(system))
    if args.out:
        io.write_text(args.out, text)
        summary = {"construction": kind, "variables": system.nvars(),
                   "generators": len(system.generators), "out": args.out}
        print(io.dumps(summary) if args.json else
              f"{kind}: {summary['variables']} variables, {summary['generators']} generators -> {args.out}",
              end="" if args.json else "\n")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args):
    system = io.ideal_from_json(io.load_json(args.ideal))
    if args.replay:
        cert = io.certificate_from_json(io.load_json(args.replay))
        ok = replay_certificate(cert, system)
        report = {"kind": cert.kind, "replayed": ok}
        _emit(args, report, f"replay of {cert.kind}: {'reproduced' if ok else 'MISMATCH'}")
        return 0 if ok else 1
    if args.point is None:
        raise UsageError("verify needs a point file (or --replay)")
    point = io.point_from_json(io.load_json(args.point))
    if len(point) != system.nvars():
        raise UsageError(f"point has {len(point)} coordinates, ideal has {system.nvars()} variables")
    dim = args.expected_dim if args.expected_dim is not None else system.dimension
    if dim is None:
        raise UsageError("--expected-dim is required (the ideal records no dimension)")
    try:
        cert = verify_q_jacobian_witness(system, point, dim)
    except PointNotOnVariety:
        report = {"on_variety": False, "jacobian_rank": None, "witness": False}
        _emit(args, report, "point is not on the variety")
        return 1
    report = {"on_variety": True, "jacobian_rank": cert.evidence["rank"],
              "required_rank": cert.evidence["required_rank"],
              "witness": cert.kind == "QJacobianWitness"}
    _emit(args, report, f"on variety; Jacobian rank {report['jacobian_rank']} "
                        f"(need {report['required_rank']}); witness {str(report['witness']).lower()}")
    return 0 if report["witness"] else 1


def cmd_homology(args):
    m, n = _box(args)
    betti = betti_numbers(m, n)
    basis = {str(k): [list(lam.parts) for lam in homology_basis(m, n, k)] for k in range(m * n + 1)}
    payload = {"box": [m, n], "betti": betti, "basis": basis}
    lines = [f"G_{{{m},{n}}}  Z/2 Betti numbers: {','.join(map(str, betti))}"]
    for k in range(m * n + 1):
        parts = " ".join("(" + ",".join(map(str, p)) + ")" for p in basis[str(k)])
        lines.append(f"  H_{k}: {betti[k]}  {parts}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_resolve(args):
    m, n = _box(args)
    if args.partition is None:
        raise UsageError("resolve needs --partition")
    lam = parse_partition(args.partition, m, n)
    report = desingularize(lam, seed=args.seed)
    payload = report.to_json()
    trace = ", ".join(f"{t['move']} {t['amount']}" for t in payload["trace"]) or "none"
    if payload["point"]:
        text = f"{lam}: trace [{trace}] -> a single point (dim 0)"
    else:
        core = payload["core"]
        text = (f"{lam}: trace [{trace}] -> core {tuple(core['parts'])} in "
                f"{core['box'][0]}x{core['box'][1]}; dim {payload['dim']}; "
                f"rank {payload['rank_at_base']} (target {payload['rank_target']}); "
                f"{'ok' if payload['ok'] else 'FAILED'}")
    _emit(args, payload, text)
    return 0 if report.ok else 1


def cmd_compactify(args):
    system = io.ideal_from_json(io.load_json(args.ideal))
    out = inversion_compactify(system, args.e)
    text = io.dumps_ideal(io.ideal_to_json(out))
    if args.out:
        io.write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_puncture(args):
    system = io.ideal_from_json(io.load_json(args.ideal))
    out = puncture_lift(system, args.C)
    text = io.dumps_ideal(io.ideal_to_json(out))
    if args.out:
        io.write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_certify(args):
    system = io.ideal_from_json(io.load_json(args.ideal))
    if args.point is not None:
        point = io.point_from_json(io.load_json(args.point))
        dim = args.expected_dim if args.expected_dim is not None else system.dimension
        if dim is None:
            raise UsageError("--expected-dim is required (the ideal records no dimension)")
        cert = verify_q_jacobian_witness(system, point, dim)
    else:
        cert = projectively_q_closed_certificate(system)
    payload = cert.to_json()
    route = cert.evidence.get("route") or cert.evidence.get("rank")
    _emit(args, payload, f"{cert.kind} ({route})")
    return 0 if cert else 1


# -- parser ------------------------------------------------------------------------

def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="RNG seed (default 0 or $SCHUBERTQ_SEED)")
    common.add_argument("--out", help="write the JSON result to this file")

    p = _Parser(prog="schubertq", description="Exact Q-models of Grassmannians and Schubert varieties")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("ideal", parents=[common], help="generate an ideal file")
    s.add_argument("construction", choices=["grassmann", "schubert", "bott-samelson",
                                             "vbundle", "sbundle", "pullback"])
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--partition")
    s.add_argument("--base", help="pullback: ideal file of W")
    s.add_argument("--map", help="pullback: map file")
    s.set_defaults(func=cmd_ideal)

    s = sub.add_parser("verify", parents=[common], help="Jacobian witness at a point")
    s.add_argument("ideal")
    s.add_argument("point", nargs="?")
    s.add_argument("--expected-dim", type=int)
    s.add_argument("--replay", help="certificate file to replay instead")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("homology", parents=[common], help="Betti numbers and cell basis")
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("resolve", parents=[common], help="normalize and resolve a Schubert variety")
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--partition")
    s.set_defaults(func=cmd_resolve)

    s = sub.add_parser("compactify", parents=[common], help="inversion compactification")
    s.add_argument("ideal")
    s.add_argument("--e", type=int)
    s.set_defaults(func=cmd_compactify)

    s = sub.add_parser("puncture", parents=[common], help="lift y |x|^2 = C")
    s.add_argument("ideal")
    s.add_argument("--C", default="1")
    s.set_defaults(func=cmd_puncture)

    s = sub.add_parser("certify", parents=[common], help="projective Q-closure or Jacobian certificate")
    s.add_argument("ideal")
    s.add_argument("--point")
    s.add_argument("--expected-dim", type=int)
    s.set_defaults(func=cmd_certify)
    return p


def _fail(code, message):
    sys.stderr.write(json.dumps({"error": code, "message": message}, sort_keys=True) + "\n")
    return 2


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc))
    except SchubertQError as exc:
        return _fail(exc.code, str(exc))
    except TypeError as exc:
        return _fail("usage", str(exc))


if __name__ == "__main__":
    sys.exit(main())

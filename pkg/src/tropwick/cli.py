"""Command-line front end.

Exit status: 0 when the tested predicate holds (or the command succeeded),
1 when it fails, 2 on malformed input or when a scale limit is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import delta_matroid as dm
from . import formats, linear_spaces, realization, subdivision, wick
from .bitsets import format_subset, parse_subset
from .trop_core import SignedVector, fmt, in_tropical_hull

MAX_N = 6
MAX_SUBDIVISION_N = subdivision.MAX_N


class CliError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise CliError(f"{path}: {e.strerror}") from None


def _guard(n: int, limit: int = MAX_N):
    if n > limit:
        raise CliError(f"n = {n} exceeds the limit {limit}")


def _load_wick(path: str, limit: int = MAX_N) -> wick.TropicalWickVector:
    p = formats.parse_wick(_read(path))
    _guard(p.n, limit)
    return p


def _load_valid_wick(path: str) -> wick.TropicalWickVector:
    p = _load_wick(path)
    if not wick.check_wick_local(p):
        raise CliError(f"{path}: not a tropical Wick vector")
    return p


def _vec_json(x):
    coords = x.coords if isinstance(x, SignedVector) else x
    return [fmt(v) for v in coords]


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif text:
        print(text.rstrip("\n"))


# -- subcommands ------------------------------------------------------------------

def cmd_check_wick(args) -> int:
    p = _load_wick(args.file)
    if args.local:
        ok = wick.check_wick_local(p)
        why = ""
        if not ok:
            if not dm.is_even_delta_matroid(p.n, p.support):
                why = "support is not an even Delta-matroid"
            else:
                S, *abcd = wick.four_term_violation(p)
                letters = "".join(format_subset(x, p.n) for x in abcd)
                why = f"4-term relation fails at S={format_subset(S, p.n)}, abcd={letters}"
    else:
        bad = wick.wick_violation(p)
        ok = bad is None
        why = "" if ok else (f"relation fails at S={format_subset(bad[0], p.n)}, "
                             f"T={format_subset(bad[1], p.n)}")
    mode = "local" if args.local else "full"
    _emit(args, {"mode": mode, "wick": ok, "reason": why},
          f"tropical Wick vector ({mode} check): {'yes' if ok else 'no'}" + (f"\n{why}" if why else ""))
    return 0 if ok else 1


def cmd_check_plucker(args) -> int:
    p = formats.parse_plucker(_read(args.file))
    _guard(p.m, 2 * MAX_N)
    support_ok = dm.is_matroid(p.m, p.support)
    terms_ok = linear_spaces.three_term_relations_hold(p)
    ok = support_ok and terms_ok
    _emit(args, {"plucker": ok, "matroid_support": support_ok, "three_term": terms_ok, "rank": p.rank},
          f"support is a matroid: {'yes' if support_ok else 'no'}\n"
          f"3-term relations: {'yes' if terms_ok else 'no'}\n"
          f"tropical Plucker vector: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def _cmd_circuit_list(args, cocircuits: bool) -> int:
    p = _load_valid_wick(args.file)
    cs = wick.all_cocircuits(p) if cocircuits else wick.all_circuits(p)
    rows = sorted(cs, key=lambda c: c.support)
    _emit(args, {"kind": "cocircuits" if cocircuits else "circuits",
                 "items": [{"support": format_subset(c.support, p.n, True), "vector": _vec_json(c.vector)}
                           for c in rows]},
          "\n".join(f"{format_subset(c.support, p.n, True)}: {c.vector}" for c in rows))
    return 0


def _load_vectors(path: str, n: int) -> list:
    vs = formats.parse_signed_vectors(_read(path), n)
    if not vs:
        raise CliError(f"{path}: no vectors")
    return vs


def cmd_cocycle_test(args) -> int:
    p = _load_valid_wick(args.wick)
    xs = _load_vectors(args.vectors, p.n)
    res = [wick.is_cocycle(p, x) for x in xs]
    _emit(args, {"cocycle": res}, "\n".join(f"{x}: {'cocycle' if r else 'not a cocycle'}"
                                             for x, r in zip(xs, res)))
    return 0 if all(res) else 1


def cmd_decompose(args) -> int:
    p = _load_valid_wick(args.wick)
    xs = _load_vectors(args.vectors, p.n)
    out, lines, status = [], [], 0
    for x in xs:
        if x.support == 0 or not wick.is_cocycle(p, x):
            out.append(None)
            lines.append(f"{x}: not a cocycle with nonempty support")
            status = 1
            continue
        terms = wick.cocycle_decompose(p, x)
        out.append([{"lambda": fmt(l), "cocircuit": _vec_json(c.vector)} for l, c in terms])
        lines.append(f"{x} =")
        lines += [f"  {fmt(l)} + ({c.vector})" for l, c in terms]
    _emit(args, {"decompositions": out}, "\n".join(lines))
    return status


def cmd_subdivision(args) -> int:
    p = _load_wick(args.file, MAX_SUBDIVISION_N)
    if args.verify:
        ok = subdivision.is_even_dm_subdivision(p)
        _emit(args, {"even_dm_subdivision": ok}, f"even Delta-matroid subdivision: {'yes' if ok else 'no'}")
        return 0 if ok else 1
    cells = subdivision.maximal_cells(p)
    _emit(args, {"cells": [{"vertices": [format_subset(S, p.n) for S in c.sorted_vertices()],
                            "functional": [fmt(v) for v in c.functional]} for c in cells]},
          "\n".join(" ".join(format_subset(S, p.n) for S in c.sorted_vertices())
                    + " | v = (" + ", ".join(fmt(v) for v in c.functional) + ")" for c in cells))
    return 0


def _load_dm(path: str):
    n, bases = formats.parse_bases(_read(path))
    _guard(n)
    return n, bases


def _dm_valid(path: str) -> dm.EvenDeltaMatroid:
    n, bases = _load_dm(path)
    if not dm.is_even_delta_matroid(n, bases):
        raise CliError(f"{path}: not an even Delta-matroid")
    return dm.EvenDeltaMatroid(n, bases)


def _parse_plain_set(text: str, n: int) -> int:
    try:
        return parse_subset(text if text.strip() else "{}", n)
    except ValueError as e:
        raise CliError(str(e)) from None


def cmd_dm(args) -> int:
    if args.enumerate:
        if args.n is None:
            raise CliError("--enumerate needs -n")
        if args.n > dm.MAX_ENUM_N or args.n < 0:
            raise CliError(f"n = {args.n} exceeds the enumeration limit {dm.MAX_ENUM_N}")
        ms = dm.enumerate_even_delta_matroids(args.n, args.iso or args.cumulative, args.cumulative)
        if args.json:
            print(json.dumps({"count": len(ms), "matroids": [
                {"n": M.n, "bases": M.sorted_bases()} for M in ms]}, sort_keys=True))
        else:
            print(len(ms))
            if args.verbose:
                for M in ms:
                    print(f"n={M.n}: " + " ".join(format_subset(B, M.n) for B in M.sorted_bases()))
        return 0
    if args.file is None:
        raise CliError("this action needs an input file")
    if args.check:
        n, bases = _load_dm(args.file)
        ok = dm.is_even_delta_matroid(n, bases)
        delta = dm.is_delta_matroid(n, bases)
        _emit(args, {"even_delta_matroid": ok, "delta_matroid": delta},
              f"Delta-matroid: {'yes' if delta else 'no'}\neven Delta-matroid: {'yes' if ok else 'no'}")
        return 0 if ok else 1
    M = _dm_valid(args.file)
    if args.dual:
        D = dm.dual(M)
        _emit(args, {"n": D.n, "bases": D.sorted_bases()}, formats.format_delta_matroid(D))
    elif args.minor:
        if (args.contract is None) == (args.delete is None):
            raise CliError("--minor needs exactly one of --contract or --delete")
        S = _parse_plain_set(args.contract if args.contract is not None else args.delete, M.n)
        R = dm.contraction(M, S) if args.contract is not None else dm.deletion(M, S)
        _emit(args, {"n": R.n, "bases": R.sorted_bases()}, formats.format_delta_matroid(R))
    elif args.rank:
        if args.set is None:
            raise CliError("--rank needs --set")
        try:
            A = parse_subset(args.set if args.set.strip() else "{}", M.n, signed=True)
            r = dm.rank(M, A)
        except ValueError as e:
            raise CliError(str(e)) from None
        _emit(args, {"rank": r}, str(r))
    elif args.circuits:
        cs = dm.cocircuits(M) if args.co else dm.circuits(M)
        labels = sorted((format_subset(C, M.n, True) for C in cs), key=lambda s: (len(s), s))
        _emit(args, {"cocircuits" if args.co else "circuits": labels}, "\n".join(labels))
    return 0


def cmd_realize(args) -> int:
    rows = formats.parse_matrix(_read(args.file))
    if args.plucker:
        _guard(len(rows))
        q = realization.plucker_valuation_from_rowspace(rows)
        _emit(args, {"plucker": {format_subset(S, q.m // 2, True) if q.signed else format_subset(S, q.m): fmt(v)
                                 for S, v in q.wick.entries().items()}}, formats.format_plucker(q))
        return 0
    n = len(rows)
    _guard(n)
    J = None if args.chart is None else _parse_plain_set(args.chart, n)
    try:
        p = realization.wick_valuation_from_rowspace(rows, J)
    except ValueError as e:
        raise CliError(str(e)) from None
    _emit(args, {"n": p.n, "wick": {format_subset(S, p.n): fmt(v) for S, v in p.entries().items()}},
          formats.format_wick(p))
    return 0


def cmd_isotropical(args) -> int:
    text = _read(args.file)
    if formats.is_matrix_text(text):
        q = realization.plucker_valuation_from_rowspace(formats.parse_matrix(text), signed=True)
    else:
        q = formats.parse_plucker(text)
    if not q.signed:
        raise CliError("isotropicality needs a vector on J (header 'J <n>')")
    n = q.m // 2
    _guard(n)
    if q.rank != n:
        raise CliError(f"rank {q.rank} differs from n = {n}")
    bad = linear_spaces.isotropic_violation(q)
    ok = bad is None
    text_out = f"isotropical: {'yes' if ok else 'no'}"
    if not ok:
        text_out += f"\np at J\\T differs from p at T* for T = {format_subset(bad, n, True)}"
    payload = {"isotropical": ok}
    if args.samples:
        xs = linear_spaces.sample_linear_space(q, args.samples, args.seed)
        pairs = all(linear_spaces.isotropic_pairing(x, y) for x in xs for y in xs)
        payload["sampled_pairing"] = pairs
        text_out += f"\nsampled pairing condition ({args.samples} members, seed {args.seed}): " \
                    f"{'holds' if pairs else 'fails'}"
    _emit(args, payload, text_out)
    return 0 if ok else 1


def cmd_hull_test(args) -> int:
    points = formats.parse_signed_vectors(_read(args.point))
    gens = formats.parse_signed_vectors(_read(args.generators))
    if not points or not gens:
        raise CliError("need a point and at least one generator")
    try:
        ok, lams = in_tropical_hull(points[0], gens)
    except ValueError as e:
        raise CliError(str(e)) from None
    _emit(args, {"in_hull": ok, "lambdas": None if lams is None else [fmt(l) for l in lams]},
          f"in tropical hull: {'yes' if ok else 'no'}"
          + (f"\nlambda = ({', '.join(fmt(l) for l in lams)})" if ok else ""))
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="tropwick", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-wick", parents=[common], help="test the tropical Wick relations")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--local", action="store_true", help="support test plus 4-term relations")
    g.add_argument("--full", action="store_true", help="every relation (default)")
    s.set_defaults(func=cmd_check_wick)

    s = sub.add_parser("check-plucker", parents=[common], help="test a tropical Plucker vector")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_plucker)

    for name, co in (("circuits", False), ("cocircuits", True)):
        s = sub.add_parser(name, parents=[common], help=f"canonical {name} of a Wick vector")
        s.add_argument("file")
        s.set_defaults(func=lambda a, co=co: _cmd_circuit_list(a, co))

    s = sub.add_parser("cocycle-test", parents=[common], help="test vectors for membership in Q(p)")
    s.add_argument("wick")
    s.add_argument("vectors")
    s.set_defaults(func=cmd_cocycle_test)

    s = sub.add_parser("decompose", parents=[common], help="write cocycles as combinations of cocircuits")
    s.add_argument("wick")
    s.add_argument("vectors")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("subdivision", parents=[common], help="regular subdivision induced by p")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--cells", action="store_true")
    g.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_subdivision)

    s = sub.add_parser("dm", parents=[common], help="even Delta-matroid utilities")
    s.add_argument("file", nargs="?")
    g = s.add_mutually_exclusive_group(required=True)
    for flag in ("--check", "--dual", "--minor", "--rank", "--circuits", "--enumerate"):
        g.add_argument(flag, action="store_true")
    s.add_argument("--co", action="store_true", help="with --circuits: list cocircuits")
    s.add_argument("--contract", metavar="SET")
    s.add_argument("--delete", metavar="SET")
    s.add_argument("--set", metavar="SET", help="admissible subset of J for --rank, e.g. '1*23'")
    s.add_argument("-n", type=int)
    s.add_argument("--iso", action="store_true")
    s.add_argument("--cumulative", action="store_true")
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(func=cmd_dm)

    s = sub.add_parser("realize", parents=[common], help="valuations of a matrix's row space")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--wick", action="store_true")
    g.add_argument("--plucker", action="store_true")
    s.add_argument("--chart", metavar="SET", help="force the (j, j*) swaps, e.g. '3'")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("isotropical", parents=[common], help="decide isotropicality")
    s.add_argument("file", help="Plucker vector on J or an n x 2n matrix")
    s.add_argument("--samples", type=int, default=0, help="also check the pairing on sampled members")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_isotropical)

    s = sub.add_parser("hull-test", parents=[common], help="tropical convex hull membership")
    s.add_argument("point")
    s.add_argument("generators")
    s.set_defaults(func=cmd_hull_test)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except (CliError, formats.FormatError, dm.ScaleError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

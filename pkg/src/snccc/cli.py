"""
Command-line interface.

Exit status: 0 success (or verified), 1 verification failed, 2 usage or
validation error, 3 infeasible construction.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .codes import CodeFamily
from .correlation import APERIODIC, MODES, PERIODIC, correlation_profile
from .errors import InfeasibleError, SNCCCError
from .permutations import search_perm_family
from .recipe import Recipe, build
from .verification import (
    VerificationReport,
    measure_zccz,
    qccs_delta,
    verify_ccc,
    verify_snc,
    verify_zccs,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _perms(text: str):
    if text == "auto":
        return "auto"
    try:
        return [[int(v) for v in p.split(",")] for p in text.split(";") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected 'auto' or permutations like '1,2,3,4;2,1,4,3', got {text!r}"
        ) from None


def _pair(text: str) -> tuple[int, int]:
    try:
        j, k = text.split(":")
        return int(j), int(k)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected SET:CODE (0-based), got {text!r}") from None


def _modes(mode: str):
    return MODES if mode == "both" else (mode,)


def _emit(text: str, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def cmd_gen(args) -> int:
    if args.recipe:
        recipe = Recipe.from_dict(io.load_json(args.recipe))
    else:
        recipe = Recipe(
            seed=args.seed, P=args.P, n=args.n, partition=args.partition, strategy=args.strategy,
            mos=args.mos, perms=args.perms, search_seed=args.search_seed,
            require_14=args.require_14, strict_mu=args.strict_mu,
        )
    family = build(recipe)
    _emit(io.dumps_family(family), args.out)
    return EXIT_OK


def _summary(r: VerificationReport, label: str) -> str:
    status = "PASS" if r.verdict else f"FAIL ({len(r.violations)} violations)"
    extra = []
    if r.peak is not None:
        extra.append(f"peak={r.peak}")
    if r.epsilon is not None:
        extra.append(f"eps={r.epsilon}")
    for key in ("Z", "predicted", "classification"):
        if r.measured.get(key) is not None:
            extra.append(f"{key}={r.measured[key]}")
    return f"{label}: {r.property} {status} {' '.join(extra)}".rstrip()


def cmd_verify(args) -> int:
    family = io.load_family(args.file)
    checks = [c.strip() for c in args.check.split(",") if c.strip()]
    unknown = set(checks) - {"ccc", "snc", "zccz"}
    if unknown:
        raise SNCCCError(f"unknown checks {sorted(unknown)}; choose from ccc, snc, zccz")
    reports = []
    for j, cs in enumerate(family):
        label = f"set {j}"
        if "ccc" in checks:
            for mode in _modes(args.mode):
                if mode == APERIODIC:
                    r = verify_ccc(cs, subject=label)
                else:
                    r = verify_zccs(cs, cs.L, PERIODIC, subject=label)
                reports.append(r)
                print(_summary(r, label))
        if "snc" in checks:
            r = VerificationReport(label, "snc", verify_snc(cs))
            reports.append(r)
            print(_summary(r, label))
    if "zccz" in checks:
        if len(family) < 2:
            raise SNCCCError("zccz check needs a family of at least two sets")
        for mode in _modes(args.mode):
            _, r = measure_zccz(family, mode)
            reports.append(r)
            print(_summary(r, "family"))
    if args.report:
        io.write_report(reports, args.report)
    ok = all(r.verdict for r in reports)
    print("verdict:", "PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAILED


def _code(family: CodeFamily, ref):
    j, k = ref
    if not (0 <= j < len(family) and 0 <= k < family[j].K):
        raise SNCCCError(f"no code {j}:{k} in a family of {len(family)} sets x {family[0].K} codes")
    return family[j][k]


def cmd_profile(args) -> int:
    family = io.load_family(args.file)
    a = _code(family, args.a)
    b = _code(family, args.b if args.b is not None else args.a)
    prof = correlation_profile(a, b, args.mode)
    if args.out in (None, "-"):
        import tempfile
        from pathlib import Path

        with tempfile.TemporaryDirectory() as d:
            tmp = Path(d) / "profile.csv"
            io.export_profile_csv(prof, tmp, args.mode)
            sys.stdout.write(tmp.read_text())
    else:
        io.export_profile_csv(prof, args.out, args.mode)
    return EXIT_OK


def cmd_search(args) -> int:
    fam = search_perm_family(args.M, args.P, args.require_14, args.search_seed,
                             mu_inclusive=not args.strict_mu, count=args.count)
    for p in fam:
        print(",".join(map(str, p)))
    print(f"# disjoint={fam.satisfies_12} unique_alignment={fam.satisfies_14}", file=sys.stderr)
    return EXIT_OK


def cmd_measure(args) -> int:
    family = io.load_family(args.file)
    out = {"sets": len(family), "M": family.M, "length": family.L, "modes": {}}
    reports = []
    for mode in _modes(args.mode):
        entry = {}
        if len(family) >= 2:
            Z, r = measure_zccz(family, mode)
            reports.append(r)
            entry.update(Z=Z, predicted=r.measured["predicted"])
            if "wraparound_bound" in r.measured:
                entry["wraparound_bound"] = r.measured["wraparound_bound"]
        delta, delta_a, delta_c = qccs_delta(family.flatten(), mode)
        entry.update(delta=delta, delta_A=delta_a, delta_C=delta_c)
        out["modes"][mode] = entry
    print(json.dumps(out, indent=2))
    if args.report:
        io.write_report(reports, args.report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="snccc", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="build a code set or family from a recipe")
    g.add_argument("--recipe", help="recipe JSON document; overrides the flags below")
    g.add_argument("--seed", default="example1", help="example1 | hadamard:M | dft:M | A*B | <path>")
    g.add_argument("--P", type=int, default=2)
    g.add_argument("--n", type=int, default=None, help="total number of zero columns")
    g.add_argument("--partition", type=_int_list, default=None, help="explicit gaps, e.g. 0,3,0")
    g.add_argument("--strategy", default="front", choices=["front", "even", "distinct", "distinct-mod-L"])
    g.add_argument("--mos", default="hadamard", choices=["hadamard", "dft"])
    g.add_argument("--perms", type=_perms, default=None,
                   help="'auto' or explicit permutations '1,2,3,4;2,1,4,3'; omit for a single set")
    g.add_argument("--search-seed", type=int, default=0)
    g.add_argument("--require-14", action="store_true", help="require unique alignment when searching")
    g.add_argument("--strict-mu", action=argparse.BooleanOptionalAction, default=True,
                   help="disjointness over slots 1..P-1 only (default); --no-strict-mu adds slot P")
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="verify every set of a family file")
    v.add_argument("file")
    v.add_argument("--mode", default="both", choices=[*MODES, "both"])
    v.add_argument("--check", default="ccc", help="comma list of ccc, snc, zccz")
    v.add_argument("--report", default=None)
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("profile", help="export a correlation profile as CSV")
    p.add_argument("file")
    p.add_argument("--a", type=_pair, default=(0, 0), help="SET:CODE, 0-based")
    p.add_argument("--b", type=_pair, default=None, help="SET:CODE, defaults to --a")
    p.add_argument("--mode", default=APERIODIC, choices=list(MODES))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_profile)

    s = sub.add_parser("search-perms", help="search for a permutation family")
    s.add_argument("--M", type=int, required=True)
    s.add_argument("--P", type=int, required=True)
    s.add_argument("--count", type=int, default=None)
    s.add_argument("--require-14", action="store_true")
    s.add_argument("--search-seed", type=int, default=0)
    s.add_argument("--strict-mu", action=argparse.BooleanOptionalAction, default=True)
    s.set_defaults(func=cmd_search)

    m = sub.add_parser("measure", help="zone width and maximum correlation magnitudes")
    m.add_argument("file")
    m.add_argument("--mode", default="both", choices=[*MODES, "both"])
    m.add_argument("--report", default=None)
    m.set_defaults(func=cmd_measure)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleError as e:
        print(f"infeasible: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (SNCCCError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

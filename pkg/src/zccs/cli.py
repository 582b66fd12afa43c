"""Command-line front end.

Exit codes: 0 success, 1 parse/I-O/argument error, 2 structural error,
3 odd modulus, 4 property violation, 5 golden-file mismatch.
"""

from __future__ import annotations

import argparse
import csv
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from . import __version__
from .construct import ConstructionSpec, ModulusError, SpecError, build_zccs
from .correlation import (
    ZccsParams,
    bound_check,
    code_ccf_profile,
    first_violation,
    is_ccc,
    pairs_in_order,
    profile_is_zero,
    zcz_width,
)
from .enumeration import EnumParams, count_distinct, sample_spec
from .fileio import FormatError, codeset_from_json, codeset_to_json, read_codeset, read_spec, spec_to_json
from .quadgraph import ClassificationError

EXIT_OK, EXIT_PARSE, EXIT_STRUCTURE, EXIT_MODULUS, EXIT_PROPERTY, EXIT_GOLDEN = 0, 1, 2, 3, 4, 5


def example_spec() -> ConstructionSpec:
    """The Z_4, m = 5 example: path x2-x3-x1, x0 deleted, x4 isolated, f = Q + x0 + 3x1."""
    return ConstructionSpec(
        q=4,
        m=5,
        path=(2, 3, 1),
        deleted=(0,),
        isolated=(4,),
        gamma=1,
        a_weights=[[2], [2], [2]],
        e_weights=[[2]],
        linear=[1, 3, 0, 0, 0],
    )


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _write(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _params_line(p) -> str:
    return f"K={p.K} M={p.M} L={p.L} Z={p.Z} optimal={'true' if p.optimal else 'false'}"


def golden_text(name: str) -> str:
    return resources.files("zccs").joinpath("golden", name).read_text()


def cmd_construct(args) -> int:
    try:
        spec = read_spec(args.spec)
    except OSError as exc:
        _err(f"cannot read spec: {exc}")
        return EXIT_PARSE
    except FormatError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except ModulusError as exc:
        _err(str(exc))
        return EXIT_MODULUS
    except (ClassificationError, SpecError) as exc:
        _err(str(exc))
        return EXIT_STRUCTURE
    S, params = build_zccs(spec)
    try:
        _write(args.out, codeset_to_json(S, params))
    except OSError as exc:
        _err(f"cannot write output: {exc}")
        return EXIT_PARSE
    out = sys.stderr if args.out in (None, "-") else sys.stdout
    print(_params_line(params), file=out)
    bc = bound_check(params)
    print(f"bound: K={bc.lhs} <= M*floor(L/Z)={bc.rhs} ({'equality' if bc.optimal else 'strict'})", file=out)
    if spec.p == 0:
        print("complete complementary code set (Z = L)", file=out)
    if not params.canonical:
        print("non-canonical isolated labels: Z taken from the shift structure, verify with 'zccs verify'", file=out)
    return EXIT_OK


def _load_codes(path):
    try:
        return read_codeset(path)
    except OSError as exc:
        _err(f"cannot read code set: {exc}")
    except FormatError as exc:
        _err(str(exc))
    return None


def cmd_verify(args) -> int:
    loaded = _load_codes(args.codes)
    if loaded is None:
        return EXIT_PARSE
    S, declared = loaded
    if args.z is not None:
        if not 1 <= args.z <= S.L:
            _err(f"--z must lie in [1, {S.L}]")
            return EXIT_PARSE
        bad = first_violation(S, args.z)
        if bad is None:
            print(f"PASS: ({S.K}, {args.z})-ZCCS with M={S.M}, L={S.L}")
            return EXIT_OK
        mu1, mu2, tau = bad
        print(f"FAIL: Z={args.z} violated by codes ({mu1}, {mu2}) at tau={tau}")
        return EXIT_PROPERTY
    width = zcz_width(S)
    print(f"zcz_width={width}")
    print(f"is_ccc={'true' if is_ccc(S) else 'false'}")
    ok = width >= 1
    if ok:
        bc = bound_check(ZccsParams(S.K, S.M, S.L, width))
        print(f"bound: K={bc.lhs} <= M*floor(L/Z)={bc.rhs} optimal={'true' if bc.optimal else 'false'}")
        ok = bc.valid
    else:
        mu1, mu2, tau = first_violation(S, 1)
        print(f"FAIL: not a ZCCS for any Z; codes ({mu1}, {mu2}) at tau={tau}")
    if declared is not None and width < declared.Z:
        mu1, mu2, tau = first_violation(S, declared.Z)
        print(f"FAIL: declared Z={declared.Z} violated by codes ({mu1}, {mu2}) at tau={tau}")
        ok = False
    return EXIT_OK if ok else EXIT_PROPERTY


def _fmt(x: float) -> str:
    x = round(float(x), 9) + 0.0
    return repr(x)


def cmd_profile(args) -> int:
    loaded = _load_codes(args.codes)
    if loaded is None:
        return EXIT_PARSE
    S, _ = loaded
    q, L = S.q, S.L
    roots = np.exp(2j * np.pi * np.arange(q) / q)
    taus = np.arange(-(L - 1), L)
    try:
        fh = sys.stdout if args.out in (None, "-") else open(args.out, "w", newline="")
    except OSError as exc:
        _err(f"cannot write output: {exc}")
        return EXIT_PARSE
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["code_a", "code_b", "tau", "re", "im", "magnitude", "is_zero"])
        for a, b in pairs_in_order(S.K):
            counts = code_ccf_profile(S.codes[a], S.codes[b], q)
            zero = profile_is_zero(counts, q)
            vals = counts @ roots
            for tau, v, z in zip(taus, vals, zero):
                if z:
                    v = 0j
                w.writerow([a, b, int(tau), _fmt(v.real), _fmt(v.imag), _fmt(abs(v)), "true" if z else "false"])
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def _enum_params(args):
    return EnumParams(m=args.m, k=args.k, p=args.p, q=args.q)


def cmd_count(args) -> int:
    try:
        e = _enum_params(args)
    except ModulusError as exc:
        _err(str(exc))
        return EXIT_MODULUS
    except ValueError as exc:
        _err(str(exc))
        return EXIT_PARSE
    print(count_distinct(e))
    return EXIT_OK


def cmd_sample(args) -> int:
    try:
        e = _enum_params(args)
    except ModulusError as exc:
        _err(str(exc))
        return EXIT_MODULUS
    except ValueError as exc:
        _err(str(exc))
        return EXIT_PARSE
    try:
        _write(args.out, spec_to_json(sample_spec(e, args.seed)))
    except OSError as exc:
        _err(f"cannot write output: {exc}")
        return EXIT_PARSE
    return EXIT_OK


def cmd_example(args) -> int:
    S, params = build_zccs(example_spec())
    try:
        golden_src = Path(args.golden).read_text() if args.golden else golden_text("table1.json")
        G, gparams = codeset_from_json(golden_src)
    except (OSError, FormatError) as exc:
        _err(f"golden file unusable: {exc}")
        return EXIT_GOLDEN
    if G != S:
        diff = np.argwhere(G.codes != S.codes) if G.codes.shape == S.codes.shape else None
        where = f" first at code {diff[0][0]}, row {diff[0][1]}, entry {diff[0][2]}" if diff is not None and len(diff) else ""
        _err(f"regenerated example set differs from the golden file{where}")
        return EXIT_GOLDEN
    if gparams is not None and gparams != params:
        _err(f"golden params {gparams} differ from regenerated {params}")
        return EXIT_GOLDEN
    if first_violation(S, params.Z) is not None or zcz_width(S) != params.Z or not params.optimal:
        _err("example set does not have the expected zero-correlation zone")
        return EXIT_PROPERTY
    print("Z_4 example set regenerated: 8 codes x 4 rows x 32 entries match the golden file")
    print(_params_line(params))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="zccs", description="Construct and verify zero-correlation-zone complementary code sets.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    sp = sub.add_parser("construct", help="build a code set from a spec file")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--out", default="-")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check ZCZ width and optimality of a code set")
    sp.add_argument("--codes", required=True)
    sp.add_argument("--z", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("profile", help="write the correlation profile as CSV")
    sp.add_argument("--codes", required=True)
    sp.add_argument("--out", default="-")
    sp.set_defaults(func=cmd_profile)

    for name, func, helptext in (
        ("count", cmd_count, "number of constructible code sets"),
        ("sample", cmd_sample, "draw a random valid spec"),
    ):
        sp = sub.add_parser(name, help=helptext)
        for flag in ("--m", "--k", "--p", "--q"):
            sp.add_argument(flag, type=int, required=True)
        if name == "sample":
            sp.add_argument("--seed", type=int, required=True)
            sp.add_argument("--out", default="-")
        sp.set_defaults(func=func)

    sp = sub.add_parser("paper-example", help="regenerate the Z_4 example set and compare with the golden file")
    sp.add_argument("--golden", help="golden file to compare against (default: the packaged one)")
    sp.set_defaults(func=cmd_example)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())

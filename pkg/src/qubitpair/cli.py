"""Command-line front end.

Subcommands: ``invariants``, ``classify``, ``generate {dicke|oat|ising}``,
``sweep`` and ``selftest``.  Exit codes: 0 ok, 1 self-test/property
failure, 2 input validation, 3 domain precondition (e.g. non-symmetric
input to classify).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .errors import (
    I4Zero,
    InvalidDensityMatrix,
    InvalidDicke,
    NotSymmetricState,
    NotXForm,
    QubitPairError,
    StateFileError,
)
from .invariants import makhlin_all, symmetric_six, xform_invariants
from .models import dicke_pair, ising_pair, oat_pair
from .selftest import format_report, run_selftest
from .separability import classify, invariant_criteria, ppt_check
from .states import bloch_decompose, is_symmetric, xform_extract
from .stateio import read_state_file, state_payload, write_state_file
from .tolerances import SIGN_ZERO_BAND

CSV_HEADER = (
    "family,N,M,chi_t,i1,i2,i4,i10,i12,i14,i12_minus_i4sq,"
    "ppt_min_eig,verdict,criteria"
)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _invariants_payload(rho: np.ndarray, tol: float) -> dict:
    form = bloch_decompose(rho)
    inv = makhlin_all(form)
    payload: dict = {
        "invariants": {f"i{k}": getattr(inv, f"i{k}") for k in range(1, 19)},
        "symmetric": bool(is_symmetric(rho)),
        "symmetric_six": None,
        "xform": None,
        "xform_six": None,
        "classification": None,
    }
    if payload["symmetric"]:
        six = symmetric_six(form)
        payload["symmetric_six"] = {
            "i1": six.i1, "i2": six.i2, "i4": six.i4,
            "i10": six.i10, "i12": six.i12, "i14": six.i14,
        }
        cls = classify(rho, tol)
        payload["classification"] = {
            "verdict": cls.verdict,
            "criteria": sorted(cls.criteria_fired),
            "ppt_min_eigenvalue": cls.ppt_min_eigenvalue,
            "i4_zero_fallback_used": cls.i4_zero_fallback_used,
        }
    try:
        x = xform_extract(rho)
    except NotXForm:
        x = None
    if x is not None:
        payload["xform"] = {
            "a": x.a, "b_re": x.b.real, "b_im": x.b.imag, "c": x.c, "d": x.d,
        }
        xsix = xform_invariants(x)
        payload["xform_six"] = {
            "i1": xsix.i1, "i2": xsix.i2, "i4": xsix.i4,
            "i10": xsix.i10, "i12": xsix.i12, "i14": xsix.i14,
        }
    return payload


def _print_six(label: str, six: dict) -> None:
    parts = " ".join(f"{k}={_fmt(v)}" for k, v in six.items())
    print(f"{label}: {parts}")


def cmd_invariants(args) -> int:
    rho = read_state_file(args.state)
    payload = _invariants_payload(rho, args.tol)
    if args.json:
        print(json.dumps(payload, indent=2))
        return 0
    print(f"state: {args.state}")
    print(f"symmetric: {'yes' if payload['symmetric'] else 'no'}")
    print(f"xform: {'yes' if payload['xform'] is not None else 'no'}")
    for k in range(1, 19):
        print(f"I{k:<2d} = {_fmt(payload['invariants'][f'i{k}'])}")
    if payload["symmetric_six"] is not None:
        _print_six("symmetric six", payload["symmetric_six"])
    if payload["xform_six"] is not None:
        _print_six("xform closed forms", payload["xform_six"])
    if payload["classification"] is not None:
        cls = payload["classification"]
        crit = ",".join(cls["criteria"]) or "-"
        print(
            f"verdict: {cls['verdict']} criteria: {crit} "
            f"ppt_min_eig={_fmt(cls['ppt_min_eigenvalue'])} "
            f"i4_zero_fallback={'yes' if cls['i4_zero_fallback_used'] else 'no'}"
        )
    return 0


def cmd_classify(args) -> int:
    rho = read_state_file(args.state)
    cls = classify(rho, args.tol)
    if args.json:
        print(json.dumps({
            "verdict": cls.verdict,
            "criteria": sorted(cls.criteria_fired),
            "ppt_min_eigenvalue": cls.ppt_min_eigenvalue,
            "i4_zero_fallback_used": cls.i4_zero_fallback_used,
        }, indent=2))
        return 0
    crit = ",".join(sorted(cls.criteria_fired)) or "-"
    print(f"verdict: {cls.verdict}")
    print(f"criteria: {crit}")
    print(f"ppt_min_eig: {_fmt(cls.ppt_min_eigenvalue)}")
    print(f"i4_zero_fallback: {'yes' if cls.i4_zero_fallback_used else 'no'}")
    return 0


def _generate_xform(args):
    if args.family == "dicke":
        return dicke_pair(args.n, args.m)
    if args.family == "oat":
        return oat_pair(args.n, args.chit, paper_literal=args.paper_literal)
    return ising_pair(args.n, args.chit)


def cmd_generate(args) -> int:
    x = _generate_xform(args)
    if args.out:
        write_state_file(args.out, xform=x)
        print(f"wrote {args.out}: a={_fmt(x.a)} b_re={_fmt(x.b.real)} "
              f"b_im={_fmt(x.b.imag)} c={_fmt(x.c)} d={_fmt(x.d)}")
    else:
        print(json.dumps(state_payload(xform=x), indent=2))
    return 0


def _parse_int_list(text: str) -> list:
    """Comma list ('4,8') or inclusive range 'start:stop:step'."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected start:stop:step, got {text!r}")
        start, stop, step = (int(p) for p in parts)
        if step <= 0:
            raise ValueError("step must be positive")
        return list(range(start, stop + 1, step))
    return [int(p) for p in text.split(",")]


def _parse_float_list(text: str) -> list:
    """Comma list ('0.1,0.2') or linspace 'lo:hi:count' (inclusive ends)."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected lo:hi:count, got {text!r}")
        lo, hi, num = float(parts[0]), float(parts[1]), int(parts[2])
        if num < 2:
            raise ValueError("count must be >= 2")
        return [float(v) for v in np.linspace(lo, hi, num)]
    return [float(p) for p in text.split(",")]


def _sweep_grid(args) -> list:
    ns = _parse_int_list(args.n)
    if args.family == "dicke":
        if (args.m is None) == (args.m_ratio is None):
            raise ValueError("dicke sweep needs exactly one of --m / --m-ratio")
        if args.m_ratio is not None:
            points = [(n, args.m_ratio * n, None) for n in ns]
        else:
            ms = _parse_float_list(args.m)
            points = [(n, m, None) for n in ns for m in ms]
    else:
        if args.chit is None:
            raise ValueError(f"{args.family} sweep needs --chit")
        chits = _parse_float_list(args.chit)
        points = [(n, None, chit) for n in ns for chit in chits]
    return points


def _sweep_row(family: str, n: int, m, chi_t, paper_literal: bool) -> dict:
    if family == "dicke":
        x = dicke_pair(n, m)
    elif family == "oat":
        x = oat_pair(n, chi_t, paper_literal=paper_literal)
    else:
        x = ising_pair(n, chi_t)
    rho = x.to_matrix()
    six = symmetric_six(bloch_decompose(rho))
    ppt = ppt_check(rho)
    try:
        criteria = sorted(invariant_criteria(six))
    except I4Zero:
        criteria = []
    return {
        "family": family,
        "N": n,
        "M": m,
        "chi_t": chi_t,
        "i1": six.i1,
        "i2": six.i2,
        "i4": six.i4,
        "i10": six.i10,
        "i12": six.i12,
        "i14": six.i14,
        "i12_minus_i4sq": six.i12 - six.i4 ** 2,
        "ppt_min_eig": ppt.min_eig,
        "verdict": "Separable" if ppt.separable else "Entangled",
        "criteria": criteria,
    }


def cmd_sweep(args) -> int:
    points = _sweep_grid(args)
    if not points:
        raise ValueError("empty sweep grid")
    rows = [
        _sweep_row(args.family, n, m, chit, getattr(args, "paper_literal", False))
        for n, m, chit in points
    ]
    as_json = args.format == "json" or (
        args.format == "auto" and args.out.endswith(".json")
    )
    if as_json:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
            fh.write("\n")
    else:
        lines = [CSV_HEADER]
        for r in rows:
            lines.append(",".join([
                r["family"],
                str(r["N"]),
                _fmt(r["M"]) if r["M"] is not None else "",
                _fmt(r["chi_t"]) if r["chi_t"] is not None else "",
                _fmt(r["i1"]), _fmt(r["i2"]), _fmt(r["i4"]), _fmt(r["i10"]),
                _fmt(r["i12"]), _fmt(r["i14"]), _fmt(r["i12_minus_i4sq"]),
                _fmt(r["ppt_min_eig"]),
                r["verdict"],
                ";".join(r["criteria"]),
            ]))
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_selftest(args) -> int:
    report = run_selftest(seed=args.seed, count=args.count, out_dir=args.out)
    print(format_report(report))
    return 1 if report.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qubitpair",
        description="Local-unitary invariants and separability analysis of "
                    "two-qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="print all 18 invariants of a state file")
    p_inv.add_argument("state", help="path to a state JSON file")
    p_inv.add_argument("--json", action="store_true", help="machine-readable output")
    p_inv.add_argument("--tol", type=float, default=SIGN_ZERO_BAND)
    p_inv.set_defaults(func=cmd_invariants)

    p_cls = sub.add_parser("classify", help="separability verdict for a symmetric state")
    p_cls.add_argument("state")
    p_cls.add_argument("--json", action="store_true")
    p_cls.add_argument("--tol", type=float, default=SIGN_ZERO_BAND)
    p_cls.set_defaults(func=cmd_classify)

    p_gen = sub.add_parser("generate", help="write a model state file")
    gen_sub = p_gen.add_subparsers(dest="family", required=True)
    g_dicke = gen_sub.add_parser("dicke")
    g_dicke.add_argument("--n", type=int, required=True)
    g_dicke.add_argument("--m", type=float, required=True)
    g_oat = gen_sub.add_parser("oat")
    g_oat.add_argument("--n", type=int, required=True)
    g_oat.add_argument("--chit", type=float, required=True,
                       help="accumulated phase chi*t in radians")
    g_oat.add_argument("--paper-literal", action="store_true",
                       help="use the originally printed Im(b) exponent "
                            "instead of the self-consistent one")
    g_ising = gen_sub.add_parser("ising")
    g_ising.add_argument("--n", type=int, required=True)
    g_ising.add_argument("--chit", type=float, required=True)
    for g in (g_dicke, g_oat, g_ising):
        g.add_argument("--out", help="output path (stdout if omitted)")
        g.set_defaults(func=cmd_generate)

    p_sweep = sub.add_parser("sweep", help="tabulate invariants over a parameter grid")
    p_sweep.add_argument("family", choices=("dicke", "oat", "ising"))
    p_sweep.add_argument("--n", required=True,
                         help="comma list '4,8' or inclusive range 'start:stop:step'")
    p_sweep.add_argument("--m", help="dicke: comma list of M values")
    p_sweep.add_argument("--m-ratio", type=float,
                         help="dicke: set M = ratio * N per grid point")
    p_sweep.add_argument("--chit",
                         help="oat/ising: comma list or linspace 'lo:hi:count'")
    p_sweep.add_argument("--paper-literal", action="store_true")
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--format", choices=("auto", "csv", "json"), default="auto")
    p_sweep.set_defaults(func=cmd_sweep)

    p_self = sub.add_parser("selftest", help="run the seeded property suites")
    p_self.add_argument("--seed", type=int, default=42)
    p_self.add_argument("--count", type=int, default=500)
    p_self.add_argument("--out", default=".",
                        help="directory for counterexample files")
    p_self.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotSymmetricState as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (StateFileError, InvalidDensityMatrix, NotXForm, InvalidDicke,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QubitPairError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

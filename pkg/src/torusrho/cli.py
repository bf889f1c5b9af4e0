"""Command-line front end.

Exit status: 0 on success, 1 on invalid input, 2 when an internal invariant
fails (for instance the rho / H^2 bound, or an oracle mismatch).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from math import gcd
from typing import Sequence

from .fourier import (SingularBetaError, fourier_closed, fourier_numeric, n_pqr,
                      signatures_equal)
from .knots import (DescriptorError, format_knot, format_newton, format_triple_set,
                    newton_to_cables, parse_knot_descriptor, parse_newton_descriptor,
                    parse_triple_set)
from .rho import rho_closed, rho_dd_link, rho_integral
from .seifert import (IndeterminateSignature, seifert_matrix_from_braid, tl_signature,
                      torus_braid)
from .signature import (dd_link_step_function, knot_signature_function, s_pq,
                        signature_at, step_function_pqr)
from .singularity import BOUND, BoundViolation, bound_report, dd_counterexample
from .stepfunction import StepFunction, format_rational


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def rational(x) -> str:
    return format_rational(x)


def complex_json(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def step_function_json(f: StepFunction) -> list[dict]:
    return [{"x_start": rational(a), "x_end": rational(b), "value": v}
            for a, b, v in f.intervals]


def emit_plot_data(f: StepFunction, samples: int = 2) -> list[tuple[Fraction, int]]:
    """(x, value) rows on a uniform grid of ``samples`` points, with each interior
    breakpoint listed twice (left value, then right value)."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    rows = []
    jumps = set(f.breakpoints[1:-1])
    grid = {Fraction(i, samples - 1) for i in range(samples)}
    for x in sorted(grid | jumps):
        if x in jumps:
            left, right = f.limits(x)
            rows.append((x, left))
            rows.append((x, right))
        else:
            rows.append((x, f.value_on(x)))
    return rows


def plot_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "x_exact", "value"])
    for x, v in rows:
        w.writerow([repr(float(x)), rational(x), v])
    return buf.getvalue()


def _knot_arg(args):
    if args.newton:
        np_ = parse_newton_descriptor(args.newton)
        return newton_to_cables(np_)[0], format_newton(np_)
    if args.knot:
        knot = parse_knot_descriptor(args.knot)
        return knot, format_knot(knot)
    raise UsageError("one of --knot or --newton is required")


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise UsageError(f"cannot parse {text!r} as a number") from None


# -- subcommands ---------------------------------------------------------------

def cmd_signature(args):
    knot, desc = _knot_arg(args)
    f = knot_signature_function(knot)
    if args.at is not None:
        sv = signature_at(knot, Fraction(args.at), f)
        return {"knot": desc, "x": rational(Fraction(args.at)),
                "value": rational(sv.value), "jump": sv.jump}
    if args.plot:
        return plot_csv(emit_plot_data(f, args.samples))
    if args.format == "csv":
        return f.to_csv()
    return {"knot": desc, "intervals": step_function_json(f),
            "integral": rational(f.integral())}


def cmd_rho(args):
    knot, desc = _knot_arg(args)
    rho = rho_closed(knot) if args.method == "closed" else rho_integral(knot)
    return {"knot": desc, "rho": rational(rho), "method": args.method}


def cmd_fourier(args):
    triples = parse_triple_set(args.triple)
    if len(triples) != 1:
        raise UsageError("--triple takes exactly one p,q,r")
    tr = triples[0]
    out = {"triple": str(tr)}
    if args.t is not None:
        t = _parse_complex(args.t)
        nv = n_pqr(tr.p, tr.q, tr.r, t)
        out.update(t=complex_json(t), pole=nv.pole_flag,
                   n=None if nv.pole_flag else complex_json(nv.value),
                   residue=complex_json(nv.residue))
        return out
    if args.beta is None:
        raise UsageError("one of --beta or --t is required")
    beta = _parse_complex(args.beta)
    out.update(beta=complex_json(beta),
               closed=complex_json(fourier_closed(tr.p, tr.q, tr.r, beta)),
               numeric=complex_json(fourier_numeric(step_function_pqr(tr.p, tr.q, tr.r), beta)))
    return out


def cmd_compare(args):
    left, right = parse_triple_set(args.left), parse_triple_set(args.right)
    v = signatures_equal(left, right)
    return {"left": format_triple_set(left), "right": format_triple_set(right),
            "condition_a": v.condition_a, "condition_b": v.condition_b,
            "max_residue": v.max_residue, "pointwise_confirmed": v.pointwise_confirmed,
            "verdict": v.verdict, "period": v.period,
            "residues": [{"t0_over_pi": n, "magnitude": m} for n, m in v.residues]}


def cmd_algebraic(args):
    np_ = parse_newton_descriptor(args.newton)
    knot, a = newton_to_cables(np_)
    inv = bound_report(np_)
    return {"newton": format_newton(np_), "knot": format_knot(knot), "a": list(a),
            "kd_squared": inv.kd_squared, "h_squared": rational(inv.h_squared),
            "rho": rational(inv.rho), "delta": rational(inv.delta),
            "bound": rational(BOUND), "within_bound": inv.within_bound,
            "sharp_bound": rational(inv.sharp_bound),
            "within_sharp_bound": inv.within_sharp_bound}


def cmd_link_dd(args):
    if args.d < 2:
        raise UsageError("--d must be >= 2")
    f = dd_link_step_function(args.d)
    if args.plot:
        return plot_csv(emit_plot_data(f, args.samples))
    if args.format == "csv":
        return f.to_csv()
    rep = dd_counterexample(args.d)
    integral = f.integral()
    if integral != rho_dd_link(args.d):
        raise AssertionError(f"integral of s_{args.d} disagrees with the closed form")
    return {"d": args.d, "intervals": step_function_json(f),
            "integral": rational(integral), "h_squared": rep.h_squared,
            "delta": rational(rep.delta), "within_bound": rep.within_bound}


def oracle_table(p_max: int, q_max: int, samples: int, seed: int) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for p in range(2, p_max + 1):
        for q in range(p + 1, q_max + 1):
            if gcd(p, q) != 1:
                continue
            S = seifert_matrix_from_braid(torus_braid(p, q))
            jumps = step_function_pqr(p, q).breakpoints
            mismatches = indeterminate = checked = 0
            while checked < samples:
                x = Fraction(rng.randrange(1, 10**6), 10**6)
                if min(abs(x - b) for b in jumps) < Fraction(1, 1000):
                    continue
                checked += 1
                try:
                    if tl_signature(S, x) != s_pq(p, q, x):
                        mismatches += 1
                except IndeterminateSignature:
                    indeterminate += 1
            rows.append({"p": p, "q": q, "size": int(S.shape[0]), "checked": checked,
                         "mismatches": mismatches, "indeterminate": indeterminate,
                         "status": "pass" if mismatches == indeterminate == 0 else "fail"})
    return rows


def cmd_oracle_check(args):
    rows = oracle_table(args.p_max, args.q_max, args.samples, args.seed)
    failed = any(r["status"] != "pass" for r in rows)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["p"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out = buf.getvalue()
    else:
        out = {"seed": args.seed, "rows": rows, "all_pass": not failed}
    if failed:
        raise _OracleFailure(out)
    return out


class _OracleFailure(Exception):
    def __init__(self, output):
        self.output = output


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="torusrho", description=__doc__.splitlines()[0])
    parser.add_argument("--output", "-o", help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def knot_opts(sp):
        sp.add_argument("--knot", help='knot descriptor, e.g. "(2,5);(2,3)" (outermost first)')
        sp.add_argument("--newton", help='Newton descriptor, e.g. "N:(2,3);(2,1)"')

    def fmt_opts(sp, plot=True):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        if plot:
            sp.add_argument("--plot", action="store_true", help="emit plot-ready CSV rows")
            sp.add_argument("--samples", type=int, default=2)

    sp = sub.add_parser("signature", help="signature step function of a knot")
    knot_opts(sp)
    fmt_opts(sp)
    sp.add_argument("--at", help="evaluate at a single rational x")
    sp.set_defaults(func=cmd_signature)

    sp = sub.add_parser("rho", help="rho_ab invariant")
    knot_opts(sp)
    sp.add_argument("--method", choices=("closed", "integral"), default="closed")
    sp.set_defaults(func=cmd_rho)

    sp = sub.add_parser("fourier", help="normalised Fourier transform of s_{p,q;r}")
    sp.add_argument("--triple", required=True, help="p,q,r")
    sp.add_argument("--beta", help="transform frequency (complex allowed, e.g. 1+0.5j)")
    sp.add_argument("--t", help="evaluate n_{p,q;r} at t instead")
    sp.set_defaults(func=cmd_fourier)

    sp = sub.add_parser("compare", help="decide whether two sums of s_{p,q;r} agree")
    sp.add_argument("--left", required=True, help='triples "p,q,r;p,q,r;..."')
    sp.add_argument("--right", required=True)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("algebraic", help="(K+D)^2, H^2, rho and the bound for a singularity")
    sp.add_argument("--newton", required=True)
    sp.set_defaults(func=cmd_algebraic)

    sp = sub.add_parser("link-dd", help="the (d,d) torus link")
    sp.add_argument("--d", type=int, required=True)
    fmt_opts(sp)
    sp.set_defaults(func=cmd_link_dd)

    sp = sub.add_parser("oracle-check", help="compare s_pq against Seifert-matrix signatures")
    sp.add_argument("--p-max", type=int, default=7)
    sp.add_argument("--q-max", type=int, default=7)
    sp.add_argument("--samples", type=int, default=25)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_oracle_check)
    return parser


def _write(output, path):
    text = output if isinstance(output, str) else json.dumps(output, indent=2) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _write(args.func(args), args.output)
    except (DescriptorError, SingularBetaError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _OracleFailure as exc:
        _write(exc.output, args.output)
        print("error: Seifert oracle disagrees with s_pq", file=sys.stderr)
        return 2
    except (BoundViolation, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

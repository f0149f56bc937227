"""Command-line front end.

Subcommands:

  constants   table of envelope constants and integration constants
  eval        one-point evaluation (same row format as sweep)
  sweep       t-sweep with CSV emission
  verify      run the full self-verification suite
  envelope    envelope constant decomposition for one order m

Exit codes: 0 all good, 1 at least one verify check failed, 2 bad
configuration or input (including zero-table load failures and scale
policy violations).  CSV values are printed with 15 significant digits so
identical configurations yield byte-identical output.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

from . import envelope as env
from . import mollifier as mol
from . import sfunctions as sf
from . import verify as vf
from . import zeros as zr
from .errors import AtOrdinateError, ZetaArgboundError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig

SWEEP_HEADER = "t,s0,sm_iterated,im_single,discrepancy,envelope,margin_ratio,error"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2

ZEROS_ENV_VAR = "ZETA_ARGBOUND_ZEROS"


@dataclass
class RunConfig:
    """Resolved invocation: command, order, t-range, scale policy, paths."""

    command: str
    m: int
    t_start: float
    t_stop: float
    t_step: float
    x_policy: str            # "logt" | "fixed"
    x_value: float | None
    zero_table_path: str | None
    output_path: str | None
    quadrature: QuadratureConfig


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _resolve_scale(rc: RunConfig, t: float) -> float:
    """Apply the X policy at a given t, enforcing 4 <= X <= t^2."""
    if rc.x_policy == "fixed":
        x = rc.x_value if rc.x_value is not None else 10.0
    else:
        x = math.log(t) if t > 1.0 else 0.0
        if x < 4.0:
            print(f"note: X = log t = {x:.3f} clamped to the legal floor 4",
                  file=sys.stderr)
            x = 4.0
    if not 4.0 <= x <= t * t:
        raise ZetaArgboundError(
            f"resolved scale X={x:.4g} violates 4 <= X <= t^2 at t={t}")
    return x


def _load_table(rc: RunConfig) -> zr.ZeroTable:
    path = rc.zero_table_path or os.environ.get(ZEROS_ENV_VAR)
    if path:
        return zr.load_zero_table(path)
    return zr.bundled_zero_table()


def _emit(rc: RunConfig, text: str):
    if rc.output_path:
        with open(rc.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _sweep_row(rc: RunConfig, z: zr.ZeroTable, t: float) -> str:
    cfg = rc.quadrature
    notes = []
    if t <= z.last and z.nearest_distance(t) < cfg.zero_exclusion_eps:
        notes.append("midpoint-convention")
    try:
        s0 = sf.s_of_t(t, cfg, z)
        if rc.m == 0:
            ev = sf.sm_crosscheck(0, t, cfg, z)
            sm, im = ev.value_iterated, ev.value_single
        else:
            sm = sf.s_m_iterated(rc.m, t, cfg, z)
            im = sf.i_m_single(rc.m, t, cfg, z)
        disc = abs(sm - im)
        if rc.m >= 1 and t > math.e ** math.e:
            bound = env.envelope_bound(rc.m, t)
            ratio = abs(sm) / bound
            env_s, ratio_s = _fmt(bound), _fmt(ratio)
        else:
            env_s, ratio_s = "", ""
            if rc.m >= 1:
                notes.append("t<=e^e:envelope-undefined")
        return (f"{_fmt(t)},{_fmt(s0)},{_fmt(sm)},{_fmt(im)},{_fmt(disc)},"
                f"{env_s},{ratio_s},{';'.join(notes)}")
    except ZetaArgboundError as exc:
        notes.append(f"{type(exc).__name__}:{exc}")
        note = ";".join(notes).replace(",", ";").replace("\n", " ")
        return f"{_fmt(t)},,,,,,,{note}"


def cmd_constants(rc: RunConfig, max_m: int) -> int:
    if not 1 <= max_m <= 8:
        print(f"error: --max-m must be in 1..8, got {max_m}", file=sys.stderr)
        return EXIT_CONFIG
    lines = ["m,parity,a_sum,j2_term,j3_term,k_total,C_m"]
    for m in range(1, max_m + 1):
        c = env.theorem_constant(m)
        cm = sf.constant_Cm(m, rc.quadrature)
        parity = "odd" if m % 2 else "even"
        lines.append(f"{m},{parity},{_fmt(c.a_sum)},{_fmt(c.j2_term)},"
                     f"{_fmt(c.j3_term)},{_fmt(c.k_total)},{_fmt(cm.value)}")
    _emit(rc, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_envelope(rc: RunConfig, t: float | None) -> int:
    c = env.theorem_constant(rc.m)
    lines = ["m,parity,q_bar,a_sum,j2_term,j3_term,k_total,t,envelope"]
    if t is not None:
        bound = env.envelope_bound(rc.m, t)
        tcol, bcol = _fmt(t), _fmt(bound)
    else:
        tcol, bcol = "", ""
    parity = "odd" if rc.m % 2 else "even"
    lines.append(f"{rc.m},{parity},{_fmt(c.q_bar)},{_fmt(c.a_sum)},"
                 f"{_fmt(c.j2_term)},{_fmt(c.j3_term)},{_fmt(c.k_total)},"
                 f"{tcol},{bcol}")
    _emit(rc, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_eval(rc: RunConfig) -> int:
    z = _load_table(rc)
    t = rc.t_start
    if t > z.last:
        print(f"error: t={t} beyond zero-table coverage {z.last:.4f}",
              file=sys.stderr)
        return EXIT_CONFIG
    _resolve_scale(rc, t)
    _emit(rc, SWEEP_HEADER + "\n" + _sweep_row(rc, z, t) + "\n")
    return EXIT_OK


def cmd_sweep(rc: RunConfig) -> int:
    z = _load_table(rc)
    if rc.t_step <= 0.0:
        print(f"error: --t-step must be positive, got {rc.t_step}",
              file=sys.stderr)
        return EXIT_CONFIG
    if rc.t_stop < rc.t_start:
        print("error: --t-stop must be >= --t-start", file=sys.stderr)
        return EXIT_CONFIG
    if rc.t_start < 2.0 or rc.t_stop > z.last:
        print(f"error: sweep range [{rc.t_start}, {rc.t_stop}] outside "
              f"zero-table coverage [2, {z.last:.4f}]", file=sys.stderr)
        return EXIT_CONFIG
    _resolve_scale(rc, rc.t_start)
    rows = [SWEEP_HEADER]
    k = 0
    while True:
        t = rc.t_start + k * rc.t_step
        if t > rc.t_stop + 1e-12:
            break
        rows.append(_sweep_row(rc, z, min(t, rc.t_stop)))
        k += 1
    _emit(rc, "\n".join(rows) + "\n")
    return EXIT_OK


def cmd_verify(rc: RunConfig) -> int:
    z = _load_table(rc)
    tbl = mol.build_mangoldt(40001)
    report = vf.run_verification(z, tbl, rc.quadrature)
    print(vf.format_report(report))
    if rc.output_path:
        lines = ["name,status,value,tolerance,detail"]
        for c in report.checks:
            detail = c.detail.replace(",", ";")
            lines.append(f"{c.name},{c.status},{_fmt(c.value)},"
                         f"{_fmt(c.tolerance)},{detail}")
        with open(rc.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zeta-argbound",
        description="Verification toolkit for explicit bounds on the "
                    "iterated argument function of the Riemann zeta function")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--zeros", metavar="PATH", default=None,
                       help=f"zero-ordinate table (default: ${ZEROS_ENV_VAR} "
                            f"or the bundled 100-zero table)")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="output file (default: stdout)")
        p.add_argument("--abs-tol", type=float, default=DEFAULT_CONFIG.abs_tol)
        p.add_argument("--rel-tol", type=float, default=DEFAULT_CONFIG.rel_tol)
        p.add_argument("--x-policy", choices=("logt", "fixed"), default="logt")
        p.add_argument("--x-value", type=float, default=None,
                       help="scale X when --x-policy fixed")

    p = sub.add_parser("constants", help="envelope and integration constants")
    common(p)
    p.add_argument("--max-m", type=int, default=8)

    p = sub.add_parser("eval", help="single-point evaluation")
    common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=float, required=True)

    p = sub.add_parser("sweep", help="CSV sweep over a t range")
    common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t-start", type=float, required=True)
    p.add_argument("--t-stop", type=float, required=True)
    p.add_argument("--t-step", type=float, required=True)

    p = sub.add_parser("verify", help="run the full verification suite")
    common(p)

    p = sub.add_parser("envelope", help="envelope constant for one order")
    common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=float, default=None)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = QuadratureConfig(abs_tol=args.abs_tol, rel_tol=args.rel_tol)
    except ZetaArgboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    rc = RunConfig(
        command=args.command,
        m=getattr(args, "m", 1),
        t_start=getattr(args, "t", None) or getattr(args, "t_start", 0.0) or 0.0,
        t_stop=getattr(args, "t_stop", 0.0) or 0.0,
        t_step=getattr(args, "t_step", 0.0) or 0.0,
        x_policy=args.x_policy,
        x_value=args.x_value,
        zero_table_path=args.zeros,
        output_path=args.out,
        quadrature=cfg,
    )
    try:
        if args.command == "constants":
            return cmd_constants(rc, args.max_m)
        if args.command == "eval":
            if rc.m < 0 or rc.m > 8:
                print(f"error: --m must be in 0..8, got {rc.m}", file=sys.stderr)
                return EXIT_CONFIG
            return cmd_eval(rc)
        if args.command == "sweep":
            if rc.m < 1 or rc.m > 8:
                print(f"error: --m must be in 1..8, got {rc.m}", file=sys.stderr)
                return EXIT_CONFIG
            return cmd_sweep(rc)
        if args.command == "verify":
            return cmd_verify(rc)
        if args.command == "envelope":
            if rc.m < 1:
                print(f"error: --m must be >= 1, got {rc.m}", file=sys.stderr)
                return EXIT_CONFIG
            return cmd_envelope(rc, args.t)
        raise AssertionError(f"unhandled command {args.command}")
    except AtOrdinateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ZetaArgboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

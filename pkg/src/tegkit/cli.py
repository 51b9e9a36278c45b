"""Command line front end.

Subcommands: eval, sweep, optimize, compare, calibrate, ecd simulate,
ecd sand-time. Every run prints a machine-readable report (JSON) to stdout;
CSV artifacts go to --out. Exit codes: 0 success, 1 configuration or
validation error, 2 numerical failure (depletion, instability).
"""

import argparse
import sys
from pathlib import Path

from .config import MA_CM2_TO_A_M2, UV_K_TO_V_K, UW_CM2_TO_W_M2, parse_design
from .device import calibrate_seebeck, evaluate
from .ecd import BathSpec, sand_time, simulate_diffusion
from .errors import ConfigFieldError, NumericalError, TegkitError, UsageError
from .materials import MaterialProps
from .optimize import SWEEPABLE_PARAMETERS, compare_designs, optimize_leg_length, sweep
from .output import (
    emit_comparison,
    emit_curve,
    emit_deposit_series,
    operating_point_dict,
    report_text,
    run_report,
    write_report,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; map them to the
    # validation exit code instead.
    def error(self, message):
        raise UsageError(message)


def _material_dict(mat: MaterialProps) -> dict:
    return {
        "name": mat.name,
        "seebeck_V_K": mat.seebeck,
        "resistivity_ohm_m": mat.resistivity,
        "thermal_conductivity_W_mK": mat.thermal_conductivity,
        "carrier": mat.carrier,
    }


def _design_dict(design) -> dict:
    return {
        "leg_length_m": design.leg_length,
        "leg_area_m2": design.leg_area,
        "fill_factor": design.fill_factor,
        "device_area_m2": design.device_area,
        "contact_resistivity_ohm_m2": design.contact_resistivity,
        "interface_resistance_K_W": design.interface_resistance,
        "couples": design.couples,
        "p_material": _material_dict(design.p_material),
        "n_material": _material_dict(design.n_material),
        "matrix_material": _material_dict(design.matrix_material),
    }


def _cmd_eval(args, argv):
    cfg = parse_design(args.config)
    op = evaluate(cfg.design, args.dt)
    report = run_report(
        "eval",
        argv,
        {"config": args.config, "dt_meas_K": args.dt,
         "design": _design_dict(cfg.design)},
        operating_point_dict(op),
    )
    if args.out:
        write_report(report, args.out)
    return report


def _cmd_sweep(args, argv):
    cfg = parse_design(args.config)
    curve = sweep(
        cfg.design,
        args.dt,
        args.param,
        args.lo,
        args.hi,
        args.points,
        spacing="log" if args.log else "linear",
    )
    emit_curve(curve, args.out)
    densities = [op.power_density for _, op in curve.points]
    best_idx = densities.index(max(densities))
    report = run_report(
        "sweep",
        argv,
        {"config": args.config, "dt_meas_K": args.dt, "param": args.param,
         "from_si": args.lo, "to_si": args.hi, "points": args.points,
         "spacing": "log" if args.log else "linear"},
        {"csv": str(args.out), "rows": len(curve.points),
         "best_param_value_si": curve.points[best_idx][0],
         "best_p_density_uW_cm2": densities[best_idx] / UW_CM2_TO_W_M2},
    )
    return report


def _cmd_optimize(args, argv):
    cfg = parse_design(args.config)
    result = optimize_leg_length(cfg.design, args.dt, args.lo, args.hi, args.tol)
    warnings = []
    if result.grid_fallback:
        warnings.append("unimodality pre-scan failed; dense-grid argmax returned")
    report = run_report(
        "optimize",
        argv,
        {"config": args.config, "dt_meas_K": args.dt,
         "bracket_si": [args.lo, args.hi], "tol_si": args.tol},
        {"best_leg_length_m": result.best_value,
         "best_leg_length_um": result.best_value / 1e-6,
         "iterations": result.iterations,
         "grid_fallback": result.grid_fallback,
         "best_point": operating_point_dict(result.best_point)},
        warnings,
    )
    if args.out:
        write_report(report, args.out)
    return report


def _cmd_compare(args, argv):
    names = [Path(c).stem for c in args.config]
    if len(set(names)) != len(names):
        raise UsageError("config file stems must be distinct design names")
    designs = {}
    for name, path in zip(names, args.config):
        designs[name] = parse_design(path).design
    table = compare_designs(designs, args.dt)
    if args.out:
        emit_comparison(table, args.out)
    report = run_report(
        "compare",
        argv,
        {"configs": list(args.config), "dt_meas_K": args.dt},
        {"csv": str(args.out) if args.out else None,
         "rows": {name: operating_point_dict(op) for name, op in table.rows},
         "p_density_ratios": table.ratios()},
    )
    return report


def _cmd_calibrate(args, argv):
    cfg = parse_design(args.config)
    target_si = args.target * UW_CM2_TO_W_M2
    couple = calibrate_seebeck(cfg.design, args.dt, target_si)
    report = run_report(
        "calibrate",
        argv,
        {"config": args.config, "dt_meas_K": args.dt,
         "target_density_uW_cm2": args.target,
         "design": _design_dict(cfg.design)},
        {"couple_seebeck_V_K": couple,
         "couple_seebeck_uV_K": couple / UV_K_TO_V_K,
         "leg_seebeck_uV_K": couple / 2 / UV_K_TO_V_K},
    )
    if args.out:
        write_report(report, args.out)
    return report


def _require_section(value, name: str):
    if value is None:
        raise ConfigFieldError("section required by this command is missing", name)
    return value


def _cmd_ecd_simulate(args, argv):
    cfg = parse_design(args.config)
    plan = _require_section(cfg.pulse, "ecd.pulse")
    sim = _require_section(cfg.sim, "ecd.sim")
    bath = cfg.bath if cfg.bath is not None else BathSpec()
    state = simulate_diffusion(
        sim.mold_depth, bath, plan, sim.grid, sim.dt, sim.record_every
    )
    emit_deposit_series(state, args.out)
    report = run_report(
        "ecd simulate",
        argv,
        {"config": args.config, "mold_depth_m": sim.mold_depth,
         "grid": sim.grid, "dt_s": sim.dt,
         "j_pulse_A_m2": plan.j_pulse, "t_pulse_s": plan.t_pulse,
         "t_pause_s": plan.t_pause, "total_time_s": plan.total_time,
         "c_teo2_mol_m3": bath.c_teo2, "diffusivity_m2_s": bath.diffusivity},
        {"csv": str(args.out),
         "thickness_um": state.thickness / 1e-6,
         "avg_growth_rate_um_h": state.growth_rate * 3600 / 1e-6,
         "min_surface_conc_mol_m3": state.min_surface_conc,
         "te_to_bi": state.composition.te_to_bi if state.composition else None,
         "duty": plan.duty},
    )
    return report


def _cmd_ecd_sand_time(args, argv):
    cfg = parse_design(args.config)
    plan = _require_section(cfg.pulse, "ecd.pulse")
    bath = cfg.bath if cfg.bath is not None else BathSpec()
    j = args.j * MA_CM2_TO_A_M2 if args.j is not None else plan.j_pulse
    tau = sand_time(bath.c_teo2, bath.diffusivity, bath.electrons_per_formula, j)
    warnings = []
    if plan.t_pulse >= tau:
        warnings.append(
            f"t_pulse = {plan.t_pulse:g} s is not below the depletion time "
            f"{tau:g} s; the surface will deplete mid-pulse"
        )
    report = run_report(
        "ecd sand-time",
        argv,
        {"config": args.config, "j_A_m2": j,
         "c_bulk_mol_m3": bath.c_teo2, "diffusivity_m2_s": bath.diffusivity,
         "n_e": bath.electrons_per_formula},
        {"sand_time_s": tau, "t_pulse_s": plan.t_pulse,
         "margin": tau / plan.t_pulse},
        warnings,
    )
    if args.out:
        write_report(report, args.out)
    return report


def build_parser() -> _Parser:
    parser = _Parser(prog="tegkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out_required=False, out_help="artifact path"):
        p.add_argument("--config", required=True, help="design config JSON")
        p.add_argument("--out", required=out_required, help=out_help)

    p = sub.add_parser("eval", help="evaluate a design at one dt_meas")
    common(p, out_help="also write the report JSON here")
    p.add_argument("--dt", type=float, required=True, help="dt_meas in K")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sweep", help="sweep one parameter, emit CSV")
    common(p, out_required=True, out_help="CSV output path")
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--param", required=True, choices=SWEEPABLE_PARAMETERS)
    p.add_argument("--from", dest="lo", type=float, required=True,
                   help="lower bound, SI units")
    p.add_argument("--to", dest="hi", type=float, required=True,
                   help="upper bound, SI units")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--log", action="store_true", help="log-spaced points")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("optimize", help="optimize leg length for power")
    common(p, out_help="also write the report JSON here")
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--from", dest="lo", type=float, required=True)
    p.add_argument("--to", dest="hi", type=float, required=True)
    p.add_argument("--tol", type=float, default=0.1e-6, help="bracket tol, m")
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("compare", help="compare two or more designs")
    p.add_argument("--config", action="append", required=True,
                   help="repeat for each design; file stem names the design")
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--out", help="CSV output path")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("calibrate", help="couple Seebeck hitting a target density")
    common(p, out_help="also write the report JSON here")
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--target", type=float, required=True,
                   help="target power density, uW/cm2")
    p.set_defaults(func=_cmd_calibrate)

    p = sub.add_parser("ecd", help="deposition process commands")
    ecd_sub = p.add_subparsers(dest="ecd_command", required=True)

    p2 = ecd_sub.add_parser("simulate", help="run the pulse-train diffusion model")
    common(p2, out_required=True, out_help="time-series CSV path")
    p2.set_defaults(func=_cmd_ecd_simulate)

    p2 = ecd_sub.add_parser("sand-time", help="analytic depletion time")
    common(p2, out_help="also write the report JSON here")
    p2.add_argument("--j", type=float, default=None,
                    help="current density in mA/cm2 (default: pulse current)")
    p2.set_defaults(func=_cmd_ecd_sand_time)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report = args.func(args, argv)
        sys.stdout.write(report_text(report))
        return 0
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except TegkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""

:Purpose:
    Command line interface.

        pde-nudging run fig5 --out output/fig5
        pde-nudging run --config my.yaml --override mu=40
        pde-nudging sweep fig6 --key mu --values 5 10 20 40 --jobs 4
        pde-nudging check kse --nu 0.2667 --mu 20 --h 1.5708 --c 0.3
        pde-nudging estimate-c --family finite_volume --n-actuators 4
        pde-nudging estimate-r2 fig4 --burn-in 60

    Exit status is 0 on success (a flagged blow-up included), 2 for an
    invalid configuration and 1 for any other error.

:Dependencies:
    #. argparse
"""

import argparse
import logging
import os
import sys

from ..control import (
    check_ci_condition,
    check_kse_reference_condition,
    check_kse_zero_condition,
)
from ..interpolants import (
    FAMILIES,
    NODE_RULES,
    InterpolantSpec,
    estimate_interpolation_constant,
)
from .config import ConfigError, resolve_config
from .presets import PRESET_NAMES
from .runner import estimate_r2, run_scenario, sweep

logger = logging.getLogger(__name__)


def _add_scenario_options(parser):
    parser.add_argument("scenario", nargs="?", default=None,
                        help="preset name (%s)" % ", ".join(PRESET_NAMES))
    parser.add_argument("--scenario", dest="scenario_opt", default=None,
                        help="preset name, same as the positional form")
    parser.add_argument("--config", default=None,
                        help="YAML scenario file")
    parser.add_argument("--override", action="append", default=[],
                        metavar="KEY=VALUE",
                        help="override a configuration entry (repeatable)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pde-nudging",
        description="Feedback control of 1-D dissipative PDEs with "
                    "finite-rank interpolant operators.",
    )
    parser.add_argument("--verbose", action="store_true",
                        help="log progress at INFO level")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    run = sub.add_parser("run", help="run one scenario")
    _add_scenario_options(run)
    run.add_argument("--out", default=None, help="run directory")
    run.add_argument("--snapshots-stride", type=int, default=None,
                     help="steps between stored fields")

    swp = sub.add_parser("sweep", help="run a scenario for several values "
                                       "of one key")
    _add_scenario_options(swp)
    swp.add_argument("--key", required=True)
    swp.add_argument("--values", nargs="+", required=True)
    swp.add_argument("--out", default=None)
    swp.add_argument("--jobs", type=int, default=1)
    swp.add_argument("--snapshots-stride", type=int, default=None)

    chk = sub.add_parser("check", help="evaluate a stability condition")
    chk.add_argument("kind", choices=("ci", "kse", "kse-ref"))
    chk.add_argument("--nu", type=float, required=True)
    chk.add_argument("--mu", type=float, required=True)
    chk.add_argument("--alpha", type=float, default=None)
    chk.add_argument("--length", type=float, default=None)
    chk.add_argument("--n-actuators", type=int, default=None)
    chk.add_argument("--h", type=float, default=None)
    chk.add_argument("--c", type=float, default=None)
    chk.add_argument("--r2", type=float, default=None)

    est = sub.add_parser("estimate-c", help="empirical interpolation "
                                            "constant")
    est.add_argument("--family", choices=FAMILIES, required=True)
    est.add_argument("--n-actuators", type=int, required=True)
    est.add_argument("--mean-zero", action="store_true")
    est.add_argument("--node-rule", choices=NODE_RULES, default="midpoint")
    est.add_argument("--samples", type=int, default=200)
    est.add_argument("--seed", type=int, default=0)

    r2 = sub.add_parser("estimate-r2", help="attractor bound R2 of an "
                                            "uncontrolled run")
    _add_scenario_options(r2)
    r2.add_argument("--burn-in", type=float, required=True)
    return parser


def _config_of(args):
    return resolve_config(args.scenario_opt or args.scenario, args.config,
                          args.override)


def _run(args):
    config = _config_of(args)
    out = args.out or os.path.join("output", config["name"])
    report = run_scenario(config, out, args.snapshots_stride, args.override)
    summary = report.summary
    print("%s: %s, l2_final = %.6g, decay rate = %.6g, stabilized = %s"
          % (summary["scenario"], summary["status"], summary["l2_final"],
             summary["decay_rate"], summary["stabilized"]))
    for verdict in report.verdicts:
        print(verdict.report())
    print("output written to: %s" % out)
    return 0


def _sweep(args):
    config = _config_of(args)
    out = args.out or os.path.join("output", "%s_sweep_%s"
                                   % (config["name"], args.key))
    frame = sweep(config, args.key, args.values, out, args.jobs,
                  args.snapshots_stride)
    print(frame[["value", "status", "decay_rate", "stabilized"]]
          .to_string(index=False))
    return 0


def _require(args, names, kind):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ConfigError(kind, "missing --%s."
                          % ", --".join(m.replace("_", "-")
                                        for m in missing))


def _check(args):
    if args.kind == "ci":
        _require(args, ("alpha", "length", "n_actuators"), "check ci")
        verdict = check_ci_condition(args.nu, args.alpha, args.length,
                                     args.n_actuators, args.mu)
    elif args.kind == "kse":
        _require(args, ("h", "c"), "check kse")
        verdict = check_kse_zero_condition(args.nu, args.mu, args.h, args.c)
    else:
        _require(args, ("h", "c", "r2", "length"), "check kse-ref")
        verdict = check_kse_reference_condition(args.nu, args.mu, args.h,
                                                args.c, args.r2, args.length)
    print(verdict.report())
    return 0


def _estimate_c(args):
    spec = InterpolantSpec(args.family, args.n_actuators,
                           mean_zero=args.mean_zero,
                           node_rule=args.node_rule)
    c = estimate_interpolation_constant(spec, args.samples, args.seed)
    print("c = %.10g (%s, N = %d, %d samples, seed %d)"
          % (c, args.family, args.n_actuators, args.samples, args.seed))
    return 0


def _estimate_r2(args):
    bound = estimate_r2(_config_of(args), args.burn_in)
    print("R2 = %.10g over t in [%.6g, %.6g], relative drift %.3g"
          % (bound.value, bound.t_start, bound.t_stop, bound.drift))
    return 0


_COMMANDS = {
    "run": _run,
    "sweep": _sweep,
    "check": _check,
    "estimate-c": _estimate_c,
    "estimate-r2": _estimate_r2,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as err:
        print("configuration error: %s" % err, file=sys.stderr)
        return 2
    except (ValueError, TypeError, FloatingPointError) as err:
        print("error: %s" % str(err).strip(), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

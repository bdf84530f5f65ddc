import argparse
import os

import viable.axis
import viable.business_case
import viable.landscape
import viable.output
import viable.roc
import viable.util
import viable.version


class ArgumentParser(argparse.ArgumentParser):
    """ Reports usage errors through viable.util.error so that every input problem exits with status 2 """
    def error(self, message):
        viable.util.error(message)


def expand_config(argv):
    """ Replace each '--config FILE' by the whitespace-separated arguments in FILE

    The file's arguments are appended to the end of the command line.

    Arguments:
       argv (list): Command line, including the program name

    Returns:
       list: The expanded command line
    """
    args = list()
    extra = list()
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg == "--config":
            if i == len(argv) - 1:
                viable.util.error("Missing filename after --config")
            i = i + 1
            filename = argv[i]
            if not os.path.isfile(filename):
                viable.util.error("Could not read %s" % filename)
            with open(filename, 'r') as fid:
                for line in fid:
                    extra += line.split()
        else:
            args.append(arg)
        i = i + 1
    return args + extra


def _search_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--thresholds', type=int, default=1001, help="Number of uniformly spaced false positive rates at which each curve is evaluated (default: %(default)s)")
    parser.add_argument('--beta-max', type=float, default=100, dest="beta_max", help="Largest beta searched (default: %(default)s)")
    parser.add_argument('--beta-steps', type=int, default=60, dest="beta_steps", help="Number of log-spaced beta values between 0.5 and --beta-max (default: %(default)s)")
    parser.add_argument('--alpha-tol', type=float, default=1e-4, dest="alpha_tol", help="Tolerance of the alpha bisection (default: %(default)s)")
    return parser


def _parser():
    parser = ArgumentParser(prog="viable", description="Estimates the minimum performance a binary classifier needs to meet a business case.")
    parser.add_argument('--version', action="store_true", help="Prints what version of viable this is")
    parser.add_argument('--config', metavar="FILE", help="Append the arguments in FILE to the command line (repeatable)")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    search = _search_parser()

    p = subparsers.add_parser('estimate', parents=[search], help="Minimum viable model of one business case")
    p.add_argument('--case-file', dest="case_file", help="JSON file with the business case (instead of the inline flags)")
    p.add_argument('--cases', type=float, help="Number of cases per analysis period")
    p.add_argument('--base-rate', type=float, dest="base_rate", help="Prevalence of the positive event, in (0, 1)")
    p.add_argument('--tp-benefit', type=float, dest="tp_benefit", help="Value of one true positive")
    p.add_argument('--fp-cost', type=float, dest="fp_cost", help="Cost of one false positive")
    p.add_argument('--min-roi', type=float, dest="min_roi", help="Return required per analysis period")
    p.add_argument('--format', default="json", choices=["json", "csv"], help="Output format (default: %(default)s)")
    p.add_argument('--out', help="Write the result to this file instead of standard output")
    p.add_argument('--svg', help="Draw the minimum viable curve and its operating point to this SVG file")
    p.set_defaults(func=cmd_estimate)

    p = subparsers.add_parser('sweep', parents=[search], help="Trend of the minimum viable AUC along one ratio")
    p.add_argument('--dimension', required=True, help="Ratio to sweep: one of %s" % ", ".join(viable.axis.names()))
    p.add_argument('--from', type=float, dest="start", help="First grid value")
    p.add_argument('--to', type=float, dest="end", help="Last grid value")
    p.add_argument('--grid', help="Explicit grid values instead of --from/--to/--points, e.g. 1e-4,1e-3,1e-2 or 0.1:0.1:0.5")
    p.add_argument('--points', type=int, default=25, help="Number of log-spaced grid values (default: %(default)s)")
    p.add_argument('--samples', type=int, default=200, help="Number of background settings of the other two ratios (default: %(default)s)")
    p.add_argument('--seed', type=int, default=0, help="Seed of the background draws (default: %(default)s)")
    p.add_argument('--cases', type=float, default=1e6, help="Number of cases per analysis period (default: %(default)g)")
    p.add_argument('--exclude-infeasible', action="store_true", dest="exclude_infeasible", help="Aggregate only feasible draws instead of counting infeasible ones as AUC 1")
    p.add_argument('--out', help="CSV file (default: standard output)")
    p.add_argument('--svg', help="Draw the mean and quartile band to this SVG file")
    p.set_defaults(func=cmd_sweep)

    p = subparsers.add_parser('surface', parents=[search], help="Minimum viable AUC over base rate and cost-to-benefit")
    p.add_argument('--benefit-roi-ratio', type=float, default=1e-4, dest="benefit_to_roi", help="Fixed benefit-to-return ratio (default: %(default)g)")
    p.add_argument('--base-rate-from', type=float, default=1e-4, dest="base_rate_from", help="(default: %(default)g)")
    p.add_argument('--base-rate-to', type=float, default=0.5, dest="base_rate_to", help="(default: %(default)g)")
    p.add_argument('--base-rate-points', type=int, default=20, dest="base_rate_points", help="(default: %(default)s)")
    p.add_argument('--cb-from', type=float, default=1e-3, dest="cb_from", help="(default: %(default)g)")
    p.add_argument('--cb-to', type=float, default=1, dest="cb_to", help="(default: %(default)g)")
    p.add_argument('--cb-points', type=int, default=20, dest="cb_points", help="(default: %(default)s)")
    p.add_argument('--cases', type=float, default=1e6, help="Number of cases per analysis period (default: %(default)g)")
    p.add_argument('--out', help="CSV file (default: standard output)")
    p.set_defaults(func=cmd_surface)

    p = subparsers.add_parser('roc', help="Sample one synthetic ROC curve and print its AUC")
    p.add_argument('--alpha', type=float, required=True, help="Weight of the curved component, in [0, 1]")
    p.add_argument('--beta', type=float, required=True, help="Curvature, at least 0.5")
    p.add_argument('--points', type=int, default=101, help="Number of sampled false positive rates (default: %(default)s)")
    p.add_argument('--out', help="Write the sampled curve (fpr,tpr) to this CSV file")
    p.add_argument('--svg', help="Draw the curve to this SVG file")
    p.set_defaults(func=cmd_roc)
    return parser


def run(argv):
    """ Run the command line

    Arguments:
       argv (list): Command line, including the program name

    Returns:
       int: 0 on success. Input errors exit with status 2.
    """
    argv = expand_config(argv)
    parser = _parser()
    if len(argv) == 1:
        parser.print_help()
        return 0

    args = parser.parse_args(argv[1:])
    if args.version:
        print("Version: " + viable.version.__version__)
        return 0
    if args.command is None:
        viable.util.error("Missing command (choose from estimate, sweep, surface, roc)")

    try:
        return args.func(args)
    except (ValueError, IOError, OSError) as e:
        viable.util.error(str(e))


def _search_config(args):
    if args.beta_max > 100:
        viable.util.warning("--beta-max above 100 gives nearly rectangular ROC curves")
    return viable.roc.SearchConfig(beta_max=args.beta_max, beta_steps=args.beta_steps,
            thresholds=args.thresholds, alpha_tol=args.alpha_tol)


def _plot(output, filename):
    # Charts are written before any text result
    if filename is not None:
        output.filename = filename
        output.plot()


def _read_case(args):
    inline = {"num_cases": args.cases, "base_rate": args.base_rate, "tp_benefit": args.tp_benefit,
              "fp_cost": args.fp_cost, "min_roi": args.min_roi}
    given = [key for key in inline if inline[key] is not None]
    if args.case_file is not None:
        if len(given) > 0:
            raise ValueError("Use either --case-file or the inline case flags, not both")
        return viable.business_case.read_case_file(args.case_file)
    flags = {"num_cases": "--cases", "base_rate": "--base-rate", "tp_benefit": "--tp-benefit",
             "fp_cost": "--fp-cost", "min_roi": "--min-roi"}
    for key in ["num_cases", "base_rate", "tp_benefit", "fp_cost", "min_roi"]:
        if inline[key] is None:
            raise ValueError("Missing %s (or give --case-file)" % flags[key])
    return viable.business_case.case_from_dict(inline)


def cmd_estimate(args):
    case = _read_case(args)
    search = _search_config(args)
    result = viable.roc.find_min_viable_model(case, search)

    output = viable.output.Estimate(case, search, result)
    _plot(output, args.svg)
    output.filename = args.out
    if args.format == "json":
        output.json()
    else:
        output.csv()
    return 0


def cmd_sweep(args):
    dimension = viable.axis.get(args.dimension)
    if args.grid is not None:
        if args.start is not None or args.end is not None:
            raise ValueError("Use either --grid or --from/--to, not both")
        grid = viable.util.parse_numbers(args.grid)
        if len(grid) == 0:
            raise ValueError("Empty grid '%s'" % args.grid)
    else:
        if args.start is None or args.end is None:
            raise ValueError("Missing --from and --to (or give --grid)")
        grid = viable.util.log_grid(args.start, args.end, args.points)
    lower, upper = dimension.sample_range
    if min(grid) < lower or max(grid) > upper:
        viable.util.warning("Grid extends beyond the background sampling range [%g, %g] of %s" %
              (lower, upper, dimension.name))
    spec = viable.landscape.SweepSpec(dimension, grid, args.samples, args.cases, args.seed,
            exclude_infeasible=args.exclude_infeasible, search=_search_config(args))
    rows = viable.landscape.sweep(spec)

    output = viable.output.Sweep(spec, rows)
    _plot(output, args.svg)
    output.filename = args.out
    output.csv()
    return 0


def cmd_surface(args):
    base_rates = viable.util.log_grid(args.base_rate_from, args.base_rate_to, args.base_rate_points)
    cost_to_benefits = viable.util.log_grid(args.cb_from, args.cb_to, args.cb_points)
    surface = viable.landscape.surface(args.benefit_to_roi, base_rates, cost_to_benefits, args.cases,
            _search_config(args))

    output = viable.output.Surface(surface)
    output.filename = args.out
    output.csv()
    return 0


def cmd_roc(args):
    curve = viable.roc.RocCurve(args.alpha, args.beta)
    output = viable.output.Roc(curve, args.points)
    _plot(output, args.svg)
    if args.out is not None:
        output.filename = args.out
        output.csv()
    print("%.6f" % curve.auc)
    return 0

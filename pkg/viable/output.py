""" Serialization of results to JSON, CSV and SVG

Text outputs are printed to screen unless a filename is set, in which case
they are written to that file. Plots are always written to a file.
"""
import collections
import json
import matplotlib.pyplot as mpl
import numpy as np

import viable.business_case
import viable.landscape
import viable.roc
import viable.util


SWEEP_HEADER = ["dim_value", "mean_auc", "q1_auc", "q3_auc", "infeasible_fraction"]
SURFACE_HEADER = ["base_rate", "cost_to_benefit", "min_auc", "feasible"]
ROC_HEADER = ["fpr", "tpr"]

KINDS = ["estimate", "sweep", "surface", "roc"]


class OutputRecord(object):
    """ A result together with the fully resolved inputs that produced it

    Attributes:
       kind (str): One of KINDS
       payload (OrderedDict): JSON-compatible content
    """
    def __init__(self, kind, payload):
        if kind not in KINDS:
            raise ValueError("Unknown record kind '%s'" % kind)
        self.kind = kind
        self.payload = payload

    def to_json(self):
        values = collections.OrderedDict([("kind", self.kind)])
        values.update(self.payload)
        return json.dumps(values, indent=2, allow_nan=False)

    @staticmethod
    def from_json(text):
        """ Parse a record written by to_json

        Raises:
           ValueError: if the text is not a record
        """
        values = json.loads(text, object_pairs_hook=collections.OrderedDict)
        if not isinstance(values, dict) or "kind" not in values:
            raise ValueError("Not an output record")
        kind = values.pop("kind")
        return OutputRecord(kind, values)

    def __eq__(self, other):
        return isinstance(other, OutputRecord) and self.kind == other.kind and self.payload == other.payload

    def __ne__(self, other):
        return not self.__eq__(other)


def estimate_record(case, search, result):
    payload = result.to_dict()
    payload["case"] = case.to_dict()
    payload["search"] = search.to_dict()
    return OutputRecord("estimate", payload)


def _csv_value(value, exact=False):
    if isinstance(value, bool):
        return "true" if value else "false"
    if exact:
        return viable.util.fmt_exact(value)
    return viable.util.fmt(value)


def _parse_csv_value(value):
    if value == "":
        return np.nan
    if value in ["true", "false"]:
        return value == "true"
    return float(value)


class Output(object):
    """ Base class for everything the command line writes

    Attributes:
       filename (str): Where to write. Text goes to standard output if None.
       figsize (list): Figure width and height in inches
       lw (float): Line width
       line_colors (list): Colors of successive lines
       title (str): Plot title
       exact_columns (list): Csv columns written without rounding. Other
          numbers get 6 decimals.
    """
    exact_columns = []

    def __init__(self):
        self.filename = None
        self.figsize = [6, 5]
        self.lw = 2
        self.ms = 8
        self.line_colors = ['r', 'b', 'g', [1, 0.73, 0.2], 'k']
        self.title = None
        self.grid = True

    def csv(self):
        """ Write machine-readable csv output """
        header = self._header()
        exact = [name in self.exact_columns for name in header]
        lines = [",".join(header)]
        for row in self._rows():
            lines.append(",".join(_csv_value(value, e) for value, e in zip(row, exact)))
        self._write("\n".join(lines))

    def plot(self):
        """ Write an SVG chart to self.filename """
        if self.filename is None:
            raise ValueError("Plots need a filename")
        mpl.clf()
        self._plot_core()
        self._adjust_axes()
        self._save_plot()

    def _header(self):
        raise NotImplementedError()

    def _rows(self):
        raise NotImplementedError()

    def _plot_core(self):
        raise ValueError("This output does not plot")

    def _adjust_axes(self):
        if self.title is not None:
            mpl.title(self.title)
        if self.grid:
            mpl.grid(True, alpha=0.3)

    def _write(self, s):
        if self.filename is not None:
            with open(self.filename, 'w') as fid:
                fid.write(s)
                fid.write("\n")
        else:
            print(s)

    def _save_plot(self):
        # Fixed ids and no timestamp make the file reproducible
        mpl.rcParams['svg.hashsalt'] = 'viable'
        mpl.gcf().set_size_inches(self.figsize[0], self.figsize[1], forward=True)
        try:
            mpl.savefig(self.filename, format='svg', bbox_inches='tight', metadata={'Date': None})
        finally:
            mpl.close()


class Estimate(Output):
    """ The minimum viable model of one business case """
    exact_columns = list(viable.business_case.BusinessCase._fields)

    def __init__(self, case, search, result):
        Output.__init__(self)
        self.case = case
        self.search = search
        self.result = result

    def record(self):
        return estimate_record(self.case, self.search, self.result)

    def json(self):
        self._write(self.record().to_json())

    def _header(self):
        return list(self.case._fields) + list(self.result.to_dict().keys())

    def _rows(self):
        return [list(self.case) + list(self.result.to_dict().values())]

    def _plot_core(self):
        x = np.linspace(0, 1, 201)
        mpl.plot([0, 1], [0, 1], '--', color="gray", lw=1, label="random")
        if self.result.feasible:
            curve = self.result.curve
            mpl.plot(x, viable.roc.curve_eval(curve, x), '-', color=self.line_colors[0], lw=self.lw,
                    label="minimum viable (AUC %.3f)" % self.result.auc)
            point = self.result.operating_point
            mpl.plot(point.fpr, point.tpr, 'o', color=self.line_colors[1], ms=self.ms, label="operating point")
        else:
            mpl.text(0.5, 0.25, "no viable model", ha="center")
        mpl.xlabel("False positive rate")
        mpl.ylabel("True positive rate")
        mpl.xlim([0, 1])
        mpl.ylim([0, 1])
        mpl.legend(loc="lower right")


class Roc(Output):
    """ Sampled points of one synthetic ROC curve """
    def __init__(self, curve, points=101):
        Output.__init__(self)
        if points < 2:
            raise ValueError("points must be at least 2")
        self.curve = curve
        self.points = int(points)

    def _header(self):
        return ROC_HEADER

    def _rows(self):
        x = np.linspace(0, 1, self.points)
        y = viable.roc.curve_eval(self.curve, x)
        return [[x[i], y[i]] for i in range(len(x))]

    def _plot_core(self):
        x = np.linspace(0, 1, max(self.points, 201))
        mpl.plot([0, 1], [0, 1], '--', color="gray", lw=1, label="random")
        mpl.plot(x, viable.roc.curve_eval(self.curve, x), '-', color=self.line_colors[0], lw=self.lw,
                label="alpha=%g beta=%g (AUC %.3f)" % (self.curve.alpha, self.curve.beta, self.curve.auc))
        mpl.xlabel("False positive rate")
        mpl.ylabel("True positive rate")
        mpl.xlim([0, 1])
        mpl.ylim([0, 1])
        mpl.legend(loc="lower right")


class Sweep(Output):
    """ Trend of the minimum viable AUC along one dimension, with quartile band """
    exact_columns = ["dim_value"]

    def __init__(self, spec, rows):
        Output.__init__(self)
        self.spec = spec
        self.rows = rows

    def _header(self):
        return SWEEP_HEADER

    def _rows(self):
        return [list(row) for row in self.rows]

    def _plot_core(self):
        x = np.array([row.dim_value for row in self.rows])
        mean = np.array([row.mean_auc for row in self.rows])
        lower = np.array([row.q1_auc for row in self.rows])
        upper = np.array([row.q3_auc for row in self.rows])
        color = self.line_colors[1]
        viable.util.fill(x, lower, upper, color, alpha=0.3)
        mpl.plot(x, mean, '-', color=color, lw=self.lw, label="mean")
        mpl.gca().set_xscale('log')
        mpl.gca().xaxis.set_major_formatter(self.spec.dimension.formatter())
        mpl.xlabel(self.spec.dimension.label())
        mpl.ylabel("Minimum viable AUC")
        mpl.ylim([0.5, 1])


class Surface(Output):
    """ Minimum viable AUC on a base rate x cost-to-benefit grid, in long format """
    exact_columns = ["base_rate", "cost_to_benefit"]

    def __init__(self, surface):
        Output.__init__(self)
        self.surface = surface

    def _header(self):
        return SURFACE_HEADER

    def _rows(self):
        surface = self.surface
        rows = list()
        for i, base_rate in enumerate(surface.base_rates):
            for j, cost_to_benefit in enumerate(surface.cost_to_benefits):
                feasible = not surface.infeasible[i, j]
                auc = surface.matrix[i, j] if feasible else None
                rows.append([base_rate, cost_to_benefit, auc, feasible])
        return rows


def _read_csv(filename, header):
    with open(filename, 'r') as fid:
        lines = [line.strip() for line in fid if line.strip() != ""]
    if len(lines) == 0 or lines[0].split(",") != header:
        raise ValueError("'%s' does not have the header '%s'" % (filename, ",".join(header)))
    rows = list()
    for line in lines[1:]:
        words = line.split(",")
        if len(words) != len(header):
            raise ValueError("Could not parse line '%s' in '%s'" % (line, filename))
        rows.append([_parse_csv_value(word) for word in words])
    return rows


def read_sweep_csv(filename):
    """ Parse a sweep csv file

    Returns:
       list: viable.landscape.SweepRow per line. Empty fields become nan.
    """
    return [viable.landscape.SweepRow(*row) for row in _read_csv(filename, SWEEP_HEADER)]


def read_surface_csv(filename, benefit_to_roi=np.nan, num_cases=np.nan):
    """ Parse a surface csv file

    The csv does not contain the fixed benefit-to-return ratio or the number
    of cases; pass them to fill in the corresponding attributes.

    Returns:
       viable.landscape.Surface: with infeasible cells set to INFEASIBLE_AUC
    """
    rows = _read_csv(filename, SURFACE_HEADER)
    base_rates = list()
    cost_to_benefits = list()
    for row in rows:
        if row[0] not in base_rates:
            base_rates.append(row[0])
        if row[0] == rows[0][0]:
            cost_to_benefits.append(row[1])
    if len(rows) != len(base_rates) * len(cost_to_benefits):
        raise ValueError("'%s' is not a complete grid" % filename)
    shape = [len(base_rates), len(cost_to_benefits)]
    infeasible = np.array([not row[3] for row in rows], bool).reshape(shape)
    matrix = np.array([row[2] for row in rows], float).reshape(shape)
    matrix[infeasible] = viable.landscape.INFEASIBLE_AUC
    return viable.landscape.Surface(benefit_to_roi, np.array(base_rates), np.array(cost_to_benefits),
            num_cases, matrix, infeasible)

""" Inputs that define a business problem

A business problem is described by five global criteria: how many cases are
scored per analysis period, the base rate of the positive event, the benefit
of each true positive, the cost of each false positive, and the return the
deployed model must generate per period. Benefits of stochastic actions are
expected values, i.e. the user multiplies the value of a successful
intervention by its success probability before entering it here.
"""
import collections
import json
import numpy as np

import viable.interval
import viable.util


_BusinessCase = collections.namedtuple("BusinessCase", ["num_cases", "base_rate", "tp_benefit", "fp_cost", "min_roi"])


class BusinessCase(_BusinessCase):
    """ The five global criteria of one problem. Immutable.

    Attributes:
       num_cases (float): Number of events per analysis period (N)
       base_rate (float): Prevalence of the positive event, in (0, 1) (r)
       tp_benefit (float): Currency units gained per true positive
       fp_cost (float): Currency units lost per false positive
       min_roi (float): Return required per analysis period
    """
    __slots__ = ()

    def __new__(cls, num_cases, base_rate, tp_benefit, fp_cost, min_roi):
        return _BusinessCase.__new__(cls, float(num_cases), float(base_rate),
                float(tp_benefit), float(fp_cost), float(min_roi))

    @property
    def num_positive(self):
        """ float: Expected number of positive events (N*r) """
        return self.num_cases * self.base_rate

    @property
    def num_negative(self):
        """ float: Expected number of negative events (N*(1-r)) """
        return self.num_cases * (1 - self.base_rate)

    def scaled(self, factor):
        """ Scale benefit, cost and required return jointly by a positive factor """
        if not factor > 0:
            raise ValueError("scale factor must be positive")
        return BusinessCase(self.num_cases, self.base_rate, self.tp_benefit * factor,
                self.fp_cost * factor, self.min_roi * factor)

    def to_dict(self):
        return collections.OrderedDict((key, getattr(self, key)) for key in self._fields)

    def __str__(self):
        return "(N,r,B,C,M) = (%g,%g,%g,%g,%g)" % tuple(self)


_CostMatrix = collections.namedtuple("CostMatrix", ["tp_value", "fp_value", "fn_value", "tn_value"])


class CostMatrix(_CostMatrix):
    """ The full 2x2 cost/benefit matrix. Benefits are positive, costs negative.

    Attributes:
       tp_value (float): Value of a true positive
       fp_value (float): Value of a false positive
       fn_value (float): Value of a false negative
       tn_value (float): Value of a true negative
    """
    __slots__ = ()

    def __new__(cls, tp_value, fp_value, fn_value, tn_value):
        values = [float(value) for value in (tp_value, fp_value, fn_value, tn_value)]
        for name, value in zip(_CostMatrix._fields, values):
            if not np.isfinite(value):
                raise ValueError("%s must be finite" % name)
        return _CostMatrix.__new__(cls, *values)

    @property
    def effective_benefit(self):
        """ float: Gain of acting on a positive relative to not acting """
        return self.tp_value - self.fn_value

    @property
    def effective_cost(self):
        """ float: Loss of acting on a negative relative to not acting """
        return self.tn_value - self.fp_value

    def baseline(self, num_cases, base_rate):
        """ Payoff of the status quo, where every case is predicted negative """
        return num_cases * base_rate * self.fn_value + num_cases * (1 - base_rate) * self.tn_value

    def payoff(self, num_cases, base_rate, tp, fp):
        """ Total payoff of a confusion matrix, cell by cell

        Arguments:
           num_cases (float): Number of cases
           base_rate (float): Prevalence of the positive event
           tp (float): Number of true positives
           fp (float): Number of false positives

        Returns:
           float: Sum over the four cells of count times value
        """
        fn = num_cases * base_rate - tp
        tn = num_cases * (1 - base_rate) - fp
        return tp * self.tp_value + fp * self.fp_value + fn * self.fn_value + tn * self.tn_value


_RatioSpec = collections.namedtuple("RatioSpec", ["benefit_to_roi", "cost_to_benefit", "base_rate", "num_cases"])


class RatioSpec(_RatioSpec):
    """ A point in the three-ratio space of business problems

    Attributes:
       benefit_to_roi (float): Benefit of one true positive relative to the
          required return, in (0, 1]
       cost_to_benefit (float): Cost of a false positive relative to the
          benefit of a true positive, in (0, 1]
       base_rate (float): Prevalence of the positive event, in (0, 1)
       num_cases (float): Number of cases per period
    """
    __slots__ = ()

    def __new__(cls, benefit_to_roi, cost_to_benefit, base_rate, num_cases=1e6):
        return _RatioSpec.__new__(cls, float(benefit_to_roi), float(cost_to_benefit),
                float(base_rate), float(num_cases))


def validate(case):
    """ Check every invariant of a business case

    Arguments:
       case (BusinessCase): The case to check

    Returns:
       BusinessCase: The case, unchanged

    Raises:
       ValueError: naming the first field that violates its invariant
    """
    positive = viable.interval.positive()
    if not positive.within(case.num_cases):
        raise ValueError("num_cases must be positive (got %g)" % case.num_cases)
    viable.interval.unit_open().check("base_rate", case.base_rate)
    if not positive.within(case.tp_benefit):
        raise ValueError("tp_benefit must be positive (got %g)" % case.tp_benefit)
    if not positive.within(case.fp_cost):
        raise ValueError("fp_cost must be positive (got %g)" % case.fp_cost)
    if not viable.interval.non_negative().within(case.min_roi):
        raise ValueError("min_roi must be non-negative (got %g)" % case.min_roi)
    # Guards against underflow for extreme base rates
    if not (case.num_positive > 0 and case.num_negative > 0):
        raise ValueError("num_cases*base_rate and num_cases*(1-base_rate) must both be positive")
    return case


def reduce_cost_matrix(matrix, num_cases, base_rate, min_roi):
    """ Reduce a full cost matrix to the canonical benefit/cost/return form

    The predicted-negative row is folded into a constant baseline that the
    model earns regardless of its decisions. The required return is lowered
    by that baseline and clamped at zero, since a baseline that alone clears
    the target makes the project trivially feasible.

    Arguments:
       matrix (CostMatrix): The full matrix
       num_cases (float): Number of cases
       base_rate (float): Prevalence of the positive event
       min_roi (float): Return required from the full matrix payoff

    Returns:
       BusinessCase: with tp_benefit = tp - fn, fp_cost = tn - fp

    Raises:
       ValueError: if the effective benefit or cost is not positive
    """
    if not matrix.effective_benefit > 0:
        raise ValueError("effective benefit non-positive (tp - fn = %g)" % matrix.effective_benefit)
    if not matrix.effective_cost > 0:
        raise ValueError("effective cost non-positive (tn - fp = %g)" % matrix.effective_cost)
    reduced_roi = max(0.0, min_roi - matrix.baseline(num_cases, base_rate))
    return BusinessCase(num_cases, base_rate, matrix.effective_benefit, matrix.effective_cost, reduced_roi)


def validate_ratios(spec):
    """ Check that all ratios lie within their legal ranges """
    viable.interval.unit_right_closed().check("benefit_to_roi", spec.benefit_to_roi)
    viable.interval.unit_right_closed().check("cost_to_benefit", spec.cost_to_benefit)
    viable.interval.unit_open().check("base_rate", spec.base_rate)
    viable.interval.positive().check("num_cases", spec.num_cases)
    return spec


def case_from_ratios(spec):
    """ Build a business case from the three ratios, normalizing the return to 1

    All operations downstream are invariant under joint scaling of benefit,
    cost and required return, so fixing the return at one loses nothing.

    Arguments:
       spec (RatioSpec): The ratios

    Returns:
       BusinessCase: (N, r, benefit_to_roi, cost_to_benefit * benefit_to_roi, 1)
    """
    validate_ratios(spec)
    tp_benefit = spec.benefit_to_roi * 1.0
    return BusinessCase(spec.num_cases, spec.base_rate, tp_benefit, spec.cost_to_benefit * tp_benefit, 1.0)


def amortize(total_roi, periods):
    """ Spread an overall project return evenly over a number of analysis periods

    Arguments:
       total_roi (float): Return required over the life of the project
       periods (float): Number of analysis periods (e.g. years)

    Returns:
       float: Return required per period
    """
    if not periods > 0:
        raise ValueError("periods must be positive (got %g)" % periods)
    if not total_roi >= 0:
        raise ValueError("total_roi must be non-negative (got %g)" % total_roi)
    return float(total_roi) / periods


def case_from_dict(values):
    """ Build and validate a business case from a dictionary using the case-file schema

    Recognized keys: num_cases, base_rate, tp_benefit, fp_cost, min_roi, and
    optionally cost_matrix (an object with keys tp, fp, fn, tn) which
    overrides tp_benefit and fp_cost, and total_roi with periods, which
    replace min_roi.

    Raises:
       ValueError: for missing keys, non-numeric values, or invalid cases
    """
    if not isinstance(values, dict):
        raise ValueError("a business case must be a JSON object")

    def number(key, source=values):
        if key not in source:
            raise ValueError("missing key '%s'" % key)
        value = source[key]
        if isinstance(value, bool) or not viable.util.is_number(value):
            raise ValueError("'%s' must be a number" % key)
        return float(value)

    num_cases = number("num_cases")
    base_rate = number("base_rate")
    if "min_roi" in values:
        min_roi = number("min_roi")
    elif "total_roi" in values:
        min_roi = amortize(number("total_roi"), number("periods"))
    else:
        raise ValueError("missing key 'min_roi'")

    if "cost_matrix" in values:
        cells = values["cost_matrix"]
        if not isinstance(cells, dict):
            raise ValueError("'cost_matrix' must be an object with keys tp, fp, fn, tn")
        if "tp_benefit" in values or "fp_cost" in values:
            viable.util.warning("cost_matrix overrides tp_benefit and fp_cost")
        matrix = CostMatrix(*[number(key, cells) for key in ["tp", "fp", "fn", "tn"]])
        viable.interval.unit_open().check("base_rate", base_rate)
        case = reduce_cost_matrix(matrix, num_cases, base_rate, min_roi)
        if case.min_roi == 0 and min_roi > 0:
            viable.util.warning("The status quo alone meets the required return; min_roi clamped to 0")
    else:
        case = BusinessCase(num_cases, base_rate, number("tp_benefit"), number("fp_cost"), min_roi)
    return validate(case)


def read_case_file(filename):
    """ Read a business case from a JSON file

    Arguments:
       filename (str): Path to the file

    Returns:
       BusinessCase: The validated case
    """
    with open(filename, 'r') as fid:
        try:
            values = json.load(fid)
        except ValueError as e:
            raise ValueError("Could not parse '%s' as JSON: %s" % (filename, e))
    return case_from_dict(values)

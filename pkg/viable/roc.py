""" Synthetic ROC curves and the search for the minimum viable model

Curves come from the two-parameter family

   y(x) = alpha * (1 - (1 - x)^(2*beta)) + (1 - alpha) * x

where x is the false positive rate and y the true positive rate. Every
member passes through (0,0) and (1,1), is nondecreasing, and lies on or above
the diagonal when beta >= 0.5. The curve is pointwise nondecreasing in both
alpha and beta, so viability is monotone in alpha for fixed beta and the
minimum viable alpha can be found by bisection. beta is searched on a grid.

Payoffs are compared in units of the true positive benefit, i.e. tp - fp*C/B
against M/B, which makes the search invariant to joint scaling of B, C and M.
"""
import collections
import numpy as np
import scipy.integrate

import viable.bounds
import viable.business_case
import viable.interval
import viable.metric
import viable.util


BETA_MIN = 0.5


class RocCurve(collections.namedtuple("RocCurve", ["alpha", "beta"])):
    """ A member of the synthetic ROC family

    Attributes:
       alpha (float): Weight of the curved component, in [0, 1]
       beta (float): Half the exponent of the curved component, >= 0.5
    """
    __slots__ = ()

    def __new__(cls, alpha, beta):
        alpha = float(alpha)
        beta = float(beta)
        viable.interval.unit_closed().check("alpha", alpha)
        if not beta >= BETA_MIN:
            raise ValueError("beta must be at least %g (got %g)" % (BETA_MIN, beta))
        if not np.isfinite(beta):
            raise ValueError("beta must be finite")
        return super(RocCurve, cls).__new__(cls, alpha, beta)

    def __call__(self, x):
        return curve_eval(self, x)

    @property
    def auc(self):
        return curve_auc(self)


class OperatingPoint(collections.namedtuple("OperatingPoint", ["fpr", "tpr", "tp", "fp", "payoff"])):
    """ One threshold on a curve applied to a business case

    Attributes:
       fpr (float): False positive rate
       tpr (float): True positive rate
       tp (float): Implied number of true positives (tpr*N*r)
       fp (float): Implied number of false positives (fpr*N*(1-r))
       payoff (float): tp*B - fp*C
    """
    __slots__ = ()

    def fn(self, case):
        return case.num_positive - self.tp

    def tn(self, case):
        return case.num_negative - self.fp


class SearchConfig(object):
    """ Resolution of the minimum viable model search

    Attributes:
       beta_min (float): Smallest beta on the grid (>= 0.5)
       beta_max (float): Largest beta on the grid. Very large values give
          curves that degenerate into two straight segments.
       beta_steps (int): Number of log-spaced beta values
       thresholds (int): Number of uniformly spaced false positive rates,
          including 0 and 1, at which each curve is evaluated
       alpha_tol (float): Absolute tolerance of the alpha bisection
    """
    def __init__(self, beta_min=BETA_MIN, beta_max=100, beta_steps=60, thresholds=1001, alpha_tol=1e-4, betas=None):
        self.beta_min = float(beta_min)
        self.beta_max = float(beta_max)
        self.beta_steps = int(beta_steps)
        self.thresholds = int(thresholds)
        self.alpha_tol = float(alpha_tol)
        if betas is not None:
            self._betas = np.sort(np.array(betas, float))
        else:
            if self.beta_steps < 1:
                raise ValueError("beta grid must not be empty")
            if not self.beta_max >= self.beta_min:
                raise ValueError("beta_max must be at least beta_min")
            self._betas = viable.util.log_grid(self.beta_min, self.beta_max, self.beta_steps)
        if len(self._betas) == 0:
            raise ValueError("beta grid must not be empty")
        if np.min(self._betas) < BETA_MIN or not np.all(np.isfinite(self._betas)):
            raise ValueError("beta values must be finite and at least %g" % BETA_MIN)
        if not self.alpha_tol > 0:
            raise ValueError("alpha_tol must be positive")
        if self.thresholds < 2:
            raise ValueError("thresholds must be at least 2")

    @property
    def betas(self):
        """ np.array: The beta grid, ascending """
        return self._betas

    def to_dict(self):
        return collections.OrderedDict([("beta_min", float(self._betas[0])), ("beta_max", float(self._betas[-1])),
            ("beta_steps", len(self._betas)), ("thresholds", self.thresholds), ("alpha_tol", self.alpha_tol)])

    def __eq__(self, other):
        return isinstance(other, SearchConfig) and self.thresholds == other.thresholds and\
               self.alpha_tol == other.alpha_tol and np.array_equal(self._betas, other._betas)

    def __ne__(self, other):
        return not self.__eq__(other)


class MinViableResult(object):
    """ Outcome of the minimum viable model search

    Attributes:
       feasible (bool): True if some curve in the search space is viable
       auc (float): AUC of the minimum viable curve (None if infeasible)
       curve (RocCurve): The minimum viable curve (None if infeasible)
       operating_point (OperatingPoint): Payoff-maximizing point on the curve
          (None if infeasible)
       precision, recall, fallout, specificity, accuracy, f1 (float): Metrics
          of the operating point. None when infeasible or undefined.
       simplicity (float): Fraction of viable model outputs
       precision_lower_bound (float): Break-even precision
    """
    _metrics = ["precision", "recall", "fallout", "specificity", "accuracy", "f1"]

    def __init__(self, case, feasible, curve=None, operating_point=None):
        self.feasible = bool(feasible)
        self.curve = curve
        self.operating_point = operating_point
        self.auc = curve_auc(curve) if curve is not None else None
        self.simplicity = viable.bounds.simplicity(case)
        self.precision_lower_bound = viable.bounds.precision_lower_bound(case)
        for name in self._metrics:
            setattr(self, name, None)
        if operating_point is not None:
            pt = operating_point
            a, b, c, d = pt.tp, pt.fp, pt.fn(case), pt.tn(case)
            for name in self._metrics:
                value = viable.metric.get(name)(a, b, c, d)
                setattr(self, name, viable.util.to_float_or_none(value))

    def to_dict(self):
        """ Flat dictionary with the keys used by the estimate output """
        curve = self.curve
        pt = self.operating_point
        d = collections.OrderedDict()
        d["feasible"] = self.feasible
        d["auc"] = self.auc
        d["alpha"] = curve.alpha if curve is not None else None
        d["beta"] = curve.beta if curve is not None else None
        for key in OperatingPoint._fields:
            d[key] = getattr(pt, key) if pt is not None else None
        for name in self._metrics:
            d[name] = getattr(self, name)
        d["simplicity"] = self.simplicity
        d["precision_lower_bound"] = self.precision_lower_bound
        return d


def _curved_part(x, beta):
    """ The component 1 - (1 - x)^(2*beta) """
    return 1 - (1 - x) ** (2 * beta)


def _mix(alpha, curved, x):
    return alpha * curved + (1 - alpha) * x


def _unit_payoff(case, fpr, tpr):
    """ Payoff in units of the true positive benefit: tp - fp*C/B """
    return tpr * case.num_positive - (fpr * case.num_negative) * (case.fp_cost / case.tp_benefit)


def _unit_target(case):
    return case.min_roi / case.tp_benefit


def _threshold_grid(thresholds):
    if thresholds < 2:
        raise ValueError("thresholds must be at least 2")
    return np.linspace(0, 1, int(thresholds))


def curve_eval(curve, x):
    """ Evaluate the true positive rate of a curve

    Arguments:
       curve (RocCurve): The curve
       x (float or np.array): False positive rate(s) in [0, 1]

    Returns:
       float or np.array: True positive rate(s)
    """
    x_array = np.asarray(x, float)
    if np.any(~((x_array >= 0) & (x_array <= 1))):
        raise ValueError("x must lie in [0, 1]")
    y = _mix(curve.alpha, _curved_part(x_array, curve.beta), x_array)
    if y.ndim == 0:
        return float(y)
    return y


def curve_auc(curve):
    """ Closed-form area under the curve: alpha*2beta/(2beta+1) + (1-alpha)/2 """
    exponent = 2 * curve.beta
    return curve.alpha * (exponent / (exponent + 1)) + (1 - curve.alpha) / 2


def auc_numeric(curve, samples):
    """ Trapezoidal integral of the curve on a uniform grid of samples points """
    if samples < 2:
        raise ValueError("samples must be at least 2")
    x = np.linspace(0, 1, int(samples))
    return float(scipy.integrate.trapezoid(curve_eval(curve, x), x))


def _operating_point(case, fpr, tpr):
    tp = tpr * case.num_positive
    fp = fpr * case.num_negative
    return OperatingPoint(float(fpr), float(tpr), float(tp), float(fp),
            float(tp * case.tp_benefit - fp * case.fp_cost))


def best_operating_point(case, curve, thresholds):
    """ The payoff-maximizing threshold on a curve

    Arguments:
       case (viable.business_case.BusinessCase): The business case
       curve (RocCurve): The curve
       thresholds (int): Number of uniformly spaced false positive rates in
          [0, 1] to evaluate, including both end points

    Returns:
       OperatingPoint: The point with the largest payoff. Ties go to the
          smaller false positive rate.
    """
    x = _threshold_grid(thresholds)
    y = curve_eval(curve, x)
    # argmax returns the first maximum, i.e. the smallest fpr
    i = int(np.argmax(_unit_payoff(case, x, y)))
    return _operating_point(case, x[i], y[i])


def is_viable(case, curve, thresholds):
    """ Does some threshold on the curve meet the required return? """
    x = _threshold_grid(thresholds)
    y = curve_eval(curve, x)
    return bool(np.max(_unit_payoff(case, x, y)) >= _unit_target(case))


def _min_alphas(case, betas, thresholds, tol):
    """ Bisect for the smallest viable alpha of every beta simultaneously

    Returns:
       np.array: Smallest viable alpha per beta, nan where alpha=1 is not viable
    """
    x = _threshold_grid(thresholds)
    curved = np.array([_curved_part(x, beta) for beta in betas])
    target = _unit_target(case)

    def viable_at(alpha):
        y = _mix(alpha[:, None], curved, x[None, :])
        return np.max(_unit_payoff(case, x[None, :], y), axis=1) >= target

    num = len(betas)
    lower = np.zeros(num)
    upper = np.ones(num)
    result = np.nan * np.zeros(num)

    at_zero = viable_at(lower)
    at_one = viable_at(upper)
    result[at_zero] = 0.0
    active = at_one & ~at_zero
    while np.any(active) and np.max(upper[active] - lower[active]) > tol:
        mid = (lower + upper) / 2
        ok = viable_at(mid)
        upper = np.where(active & ok, mid, upper)
        lower = np.where(active & ~ok, mid, lower)
    result[active] = upper[active]
    return result


def min_viable_alpha(case, beta, thresholds, tol):
    """ Smallest alpha in [0, 1] for which (alpha, beta) is viable

    Arguments:
       case (viable.business_case.BusinessCase): The business case
       beta (float): Curve parameter, >= 0.5
       thresholds (int): Number of thresholds per curve
       tol (float): Absolute tolerance; the returned alpha is viable and
          alpha - tol is not

    Returns:
       float: The alpha, or None if no alpha in [0, 1] is viable
    """
    if not beta >= BETA_MIN:
        raise ValueError("beta must be at least %g (got %g)" % (BETA_MIN, beta))
    if not tol > 0:
        raise ValueError("tol must be positive")
    alpha = _min_alphas(case, np.array([float(beta)]), thresholds, tol)[0]
    if np.isnan(alpha):
        return None
    return float(alpha)


def find_min_viable_model(case, search=None):
    """ Search for the synthetic ROC curve with the smallest viable AUC

    For every beta on the grid the smallest viable alpha is found by
    bisection. The curve with the smallest AUC wins, ties going to the
    smaller beta and then the smaller alpha.

    Arguments:
       case (viable.business_case.BusinessCase): The business case
       search (SearchConfig): Search resolution. Uses defaults if None.

    Returns:
       MinViableResult: feasible is False if no curve in the search space
          meets the required return
    """
    viable.business_case.validate(case)
    if search is None:
        search = SearchConfig()
    betas = search.betas
    alphas = _min_alphas(case, betas, search.thresholds, search.alpha_tol)

    best = None
    best_auc = np.inf
    for alpha, beta in zip(alphas, betas):
        if np.isnan(alpha):
            continue
        curve = RocCurve(alpha, beta)
        auc = curve_auc(curve)
        if auc < best_auc:
            best = curve
            best_auc = auc

    if best is None:
        return MinViableResult(case, False)
    return MinViableResult(case, True, best, best_operating_point(case, best, search.thresholds))

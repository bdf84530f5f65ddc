""" Sensitivity of the minimum viable AUC across the space of business problems

A business problem is summarized by three ratios (see viable.axis): the
benefit of a true positive relative to the required return, the cost of a
false positive relative to that benefit, and the base rate. A sweep varies one
ratio along a grid while the other two are drawn at random. A surface varies
base rate and cost-to-benefit on a grid at a fixed benefit-to-return ratio.
"""
import collections
import numpy as np
import scipy.stats

import viable.aggregator
import viable.axis
import viable.business_case
import viable.roc


# Minimum AUC assigned to problems that no curve in the search space solves
INFEASIBLE_AUC = 1.0


class SweepSpec(object):
    """ Parameters of a one-dimensional sweep

    Attributes:
       dimension (viable.axis.Dimension): The swept ratio
       grid (np.array): Values of the swept ratio, in order
       background_samples (int): Number of random settings of the other two
          ratios. The same settings are used at every grid point.
       num_cases (float): Number of cases per period
       seed (int): Seed of the background draws
       ranges (dict): Maps dimension name to the (lower, upper) range that
          background values are drawn log-uniformly from. Dimensions not in
          the dictionary use their default sample_range.
       exclude_infeasible (bool): If True, aggregate only over feasible draws.
          Otherwise infeasible draws count as INFEASIBLE_AUC.
       search (viable.roc.SearchConfig): Resolution of each search
    """
    def __init__(self, dimension, grid, background_samples=200, num_cases=1e6, seed=0, ranges=None,
                 exclude_infeasible=False, search=None):
        if not isinstance(dimension, viable.axis.Dimension):
            dimension = viable.axis.get(dimension)
        self.dimension = dimension
        self.grid = np.array(grid, float).flatten()
        self.background_samples = int(background_samples)
        self.num_cases = float(num_cases)
        self.seed = int(seed)
        self.ranges = dict(ranges) if ranges is not None else dict()
        self.exclude_infeasible = bool(exclude_infeasible)
        self.search = search if search is not None else viable.roc.SearchConfig()

        if len(self.grid) == 0:
            raise ValueError("sweep grid must not be empty")
        for value in self.grid:
            self.dimension.check(value)
        if self.background_samples < 1:
            raise ValueError("background_samples must be at least 1")
        if not self.num_cases > 0:
            raise ValueError("num_cases must be positive (got %g)" % self.num_cases)
        for name in self.ranges:
            dim = viable.axis.get(name)
            lower, upper = self.ranges[name]
            dim.check(lower)
            dim.check(upper)
            if lower > upper:
                raise ValueError("%s range is empty (%g > %g)" % (dim.name, lower, upper))

    @property
    def background(self):
        """ list: The two non-swept dimensions, in a fixed order """
        return [dim() for dim in [viable.axis.BenefitToRoi, viable.axis.CostToBenefit, viable.axis.BaseRate]
                if dim() != self.dimension]

    def sample_range(self, dimension):
        for name in self.ranges:
            if viable.axis.get(name) == dimension:
                return tuple(float(value) for value in self.ranges[name])
        return dimension.sample_range


class SweepRow(collections.namedtuple("SweepRow", ["dim_value", "mean_auc", "q1_auc", "q3_auc", "infeasible_fraction"])):
    """ Aggregated minimum viable AUC at one grid point of a sweep """
    __slots__ = ()


class Surface(object):
    """ Minimum viable AUC on a base rate x cost-to-benefit grid

    Attributes:
       benefit_to_roi (float): The fixed benefit-to-return ratio
       base_rates (np.array): Row coordinates
       cost_to_benefits (np.array): Column coordinates
       num_cases (float): Number of cases per period
       matrix (np.array): matrix[i, j] is the minimum viable AUC at
          (base_rates[i], cost_to_benefits[j]), INFEASIBLE_AUC where infeasible
       infeasible (np.array): Boolean mask of infeasible cells
    """
    def __init__(self, benefit_to_roi, base_rates, cost_to_benefits, num_cases, matrix, infeasible):
        self.benefit_to_roi = benefit_to_roi
        self.base_rates = base_rates
        self.cost_to_benefits = cost_to_benefits
        self.num_cases = num_cases
        self.matrix = matrix
        self.infeasible = infeasible

    @property
    def feasible(self):
        return ~self.infeasible

    @property
    def shape(self):
        return self.matrix.shape


def _draw(value_range, size, random_state):
    lower, upper = value_range
    if lower == upper:
        return np.full(size, float(lower))
    return scipy.stats.loguniform(lower, upper).rvs(size=size, random_state=random_state)


def draw_background(spec):
    """ Draw the settings of the two non-swept ratios

    Returns:
       dict: Maps dimension name to an array of background_samples values
    """
    random_state = np.random.RandomState(spec.seed)
    values = dict()
    for dimension in spec.background:
        values[dimension.name] = _draw(spec.sample_range(dimension), spec.background_samples, random_state)
    return values


def min_auc(ratio_spec, search=None):
    """ Minimum viable AUC of a ratio spec, INFEASIBLE_AUC if infeasible

    Arguments:
       ratio_spec (viable.business_case.RatioSpec): The problem
       search (viable.roc.SearchConfig): Search resolution

    Returns:
       tuple: (auc, feasible)
    """
    case = viable.business_case.case_from_ratios(ratio_spec)
    result = viable.roc.find_min_viable_model(case, search)
    if result.feasible:
        return result.auc, True
    return INFEASIBLE_AUC, False


def sweep(spec):
    """ Trend of the minimum viable AUC along one ratio

    Arguments:
       spec (SweepSpec): The sweep

    Returns:
       list: One SweepRow per grid value, in grid order. With
       exclude_infeasible, statistics are nan at grid values where no draw is
       feasible.
    """
    background = draw_background(spec)
    mean = viable.aggregator.Mean()
    q1 = viable.aggregator.Quantile(0.25)
    q3 = viable.aggregator.Quantile(0.75)

    rows = list()
    for value in spec.grid:
        ratios = dict(background)
        ratios[spec.dimension.name] = np.full(spec.background_samples, value)
        aucs = np.zeros(spec.background_samples)
        feasible = np.zeros(spec.background_samples, bool)
        for s in range(spec.background_samples):
            ratio_spec = viable.business_case.RatioSpec(ratios["benefit_to_roi"][s], ratios["cost_to_benefit"][s],
                    ratios["base_rate"][s], spec.num_cases)
            aucs[s], feasible[s] = min_auc(ratio_spec, spec.search)
        if spec.exclude_infeasible:
            aucs = aucs[feasible]
        rows.append(SweepRow(float(value), mean(aucs), q1(aucs), q3(aucs), float(np.mean(~feasible))))
    return rows


def surface(benefit_to_roi, base_rate_grid, cost_to_benefit_grid, num_cases=1e6, search=None):
    """ Minimum viable AUC over a grid of base rates and cost-to-benefit ratios

    Arguments:
       benefit_to_roi (float): Fixed benefit-to-return ratio, in (0, 1]
       base_rate_grid (list): Base rates, in (0, 1)
       cost_to_benefit_grid (list): Cost-to-benefit ratios, in (0, 1]
       num_cases (float): Number of cases per period
       search (viable.roc.SearchConfig): Search resolution

    Returns:
       Surface: the matrix with rows following base_rate_grid
    """
    base_rates = np.array(base_rate_grid, float).flatten()
    cost_to_benefits = np.array(cost_to_benefit_grid, float).flatten()
    if len(base_rates) == 0 or len(cost_to_benefits) == 0:
        raise ValueError("surface grids must not be empty")
    viable.axis.BenefitToRoi().check(benefit_to_roi)
    for value in base_rates:
        viable.axis.BaseRate().check(value)
    for value in cost_to_benefits:
        viable.axis.CostToBenefit().check(value)

    matrix = np.zeros([len(base_rates), len(cost_to_benefits)])
    infeasible = np.zeros(matrix.shape, bool)
    for i, base_rate in enumerate(base_rates):
        for j, cost_to_benefit in enumerate(cost_to_benefits):
            ratio_spec = viable.business_case.RatioSpec(benefit_to_roi, cost_to_benefit, base_rate, num_cases)
            auc, feasible = min_auc(ratio_spec, search)
            matrix[i, j] = auc
            infeasible[i, j] = not feasible
    return Surface(float(benefit_to_roi), base_rates, cost_to_benefits, float(num_cases), matrix, infeasible)

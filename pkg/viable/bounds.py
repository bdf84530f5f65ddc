""" Closed-form results of the cost-matrix analysis

Model outputs are points (fp, tp) in the rectangle [0, N(1-r)] x [0, N*r].
A point is viable when tp*B - fp*C >= M, i.e. it lies on or above the
viability line tp = (fp*C + M)/B. Counts are real valued throughout.
"""
import collections
import numpy as np


# Relative slack when checking counts against population sizes
_COUNT_TOLERANCE = 1e-9

# Largest population (per class) that brute_force_viable_fraction will enumerate
MAX_ENUMERATION = 10000

_ConfusionPoint = collections.namedtuple("ConfusionPoint", ["tp", "fp"])


class ConfusionPoint(_ConfusionPoint):
    """ The two free cells of a confusion matrix. fn and tn follow from the case.

    Attributes:
       tp (float): Number of true positives
       fp (float): Number of false positives
    """
    __slots__ = ()

    def __new__(cls, tp, fp):
        return _ConfusionPoint.__new__(cls, float(tp), float(fp))

    def fn(self, case):
        return case.num_positive - self.tp

    def tn(self, case):
        return case.num_negative - self.fp


def _check_tp(case, tp):
    if not (-_COUNT_TOLERANCE * case.num_cases <= tp <= case.num_positive * (1 + _COUNT_TOLERANCE)):
        raise ValueError("tp must lie in [0, %g] (got %g)" % (case.num_positive, tp))


def _check_fp(case, fp):
    if not (-_COUNT_TOLERANCE * case.num_cases <= fp <= case.num_negative * (1 + _COUNT_TOLERANCE)):
        raise ValueError("fp must lie in [0, %g] (got %g)" % (case.num_negative, fp))


def payoff(case, point):
    """ Net economic impact of a confusion matrix: tp*B - fp*C

    Arguments:
       case (viable.business_case.BusinessCase): The business case
       point (ConfusionPoint): The confusion counts

    Returns:
       float: Payoff in currency units
    """
    _check_tp(case, point.tp)
    _check_fp(case, point.fp)
    return point.tp * case.tp_benefit - point.fp * case.fp_cost


def tp_required(case, fp):
    """ Number of true positives needed to meet the required return with fp false positives """
    if not fp >= 0:
        raise ValueError("fp must be non-negative (got %g)" % fp)
    return (fp * case.fp_cost + case.min_roi) / case.tp_benefit


def fp_allowed(case, tp):
    """ Number of false positives tolerated while still meeting the required return with tp true positives """
    if not tp * case.tp_benefit >= case.min_roi:
        raise ValueError("tp insufficient for any viable fp (tp=%g)" % tp)
    return (tp * case.tp_benefit - case.min_roi) / case.fp_cost


def tpr_of(case, tp):
    """ True positive rate (recall) of a number of true positives """
    _check_tp(case, tp)
    return min(1.0, max(0.0, tp / case.num_positive))


def fpr_of(case, fp):
    """ False positive rate (fallout) of a number of false positives """
    _check_fp(case, fp)
    return min(1.0, max(0.0, fp / case.num_negative))


def precision_at_roi(case, tp):
    """ Precision of the model that meets the required return exactly with tp true positives

    Arguments:
       case (viable.business_case.BusinessCase): The business case
       tp (float): Number of true positives, with tp > 0 and tp*B >= M

    Returns:
       float: tp / (tp + fp_allowed(tp))
    """
    if not tp > 0:
        raise ValueError("tp must be positive (got %g)" % tp)
    if not tp * case.tp_benefit >= case.min_roi:
        raise ValueError("tp insufficient for any viable fp (tp=%g)" % tp)
    B = case.tp_benefit
    C = case.fp_cost
    M = case.min_roi
    return 1.0 / (1 + B / C - M / (tp * C))


def precision_lower_bound(case):
    """ The break-even precision C/(C+B). No threshold with lower precision can be net-positive """
    return 1.0 / (1 + case.tp_benefit / case.fp_cost)


def simplicity(case):
    """ Fraction of all possible model outputs that meet the required return

    This is the area of the rectangle [0, N(1-r)] x [0, N*r] in (fp, tp)
    space lying on or above the viability line, divided by the area of the
    rectangle. The viable region is a triangle in the top-left corner when the
    line leaves the rectangle through its top edge, and a trapezoid when the
    line leaves through the right edge.

    Arguments:
       case (viable.business_case.BusinessCase): The business case

    Returns:
       float: Value in [0, 1]
    """
    positives = case.num_positive
    negatives = case.num_negative
    slope = case.fp_cost / case.tp_benefit
    # Height of the viable region at fp = 0
    height = positives - case.min_roi / case.tp_benefit
    if height <= 0:
        return 0.0

    # fp where the viability line reaches tp = N*r
    width = height / slope
    if width <= negatives:
        area = 0.5 * width * height
    else:
        right_height = height - slope * negatives
        area = 0.5 * negatives * (height + right_height)
    return min(1.0, max(0.0, area / (positives * negatives)))


def brute_force_viable_fraction(case):
    """ Fraction of integer (tp, fp) lattice points that meet the required return

    Enumerates tp = 0..floor(N*r) and fp = 0..floor(N(1-r)). Used as an
    independent check of simplicity().

    Raises:
       ValueError: if either population exceeds MAX_ENUMERATION
    """
    if case.num_positive > MAX_ENUMERATION or case.num_negative > MAX_ENUMERATION:
        raise ValueError("instance too large to enumerate (N*r=%g, N*(1-r)=%g, limit %d)" %
              (case.num_positive, case.num_negative, MAX_ENUMERATION))
    tp = np.arange(0, int(np.floor(case.num_positive + 1e-9)) + 1, dtype=float)
    fp = np.arange(0, int(np.floor(case.num_negative + 1e-9)) + 1, dtype=float)

    # For each fp, the smallest viable tp. Count viable tp values per column
    # rather than materializing the full grid.
    needed = (fp * case.fp_cost + case.min_roi) / case.tp_benefit
    count = len(tp) - np.searchsorted(tp, needed, side='left')
    # Exact comparison on the lattice points adjacent to the boundary
    I = np.where((count > 0) & (count < len(tp)))[0]
    for i in I:
        j = len(tp) - count[i]
        if tp[j - 1] * case.tp_benefit - fp[i] * case.fp_cost >= case.min_roi:
            count[i] += 1
        elif not tp[j] * case.tp_benefit - fp[i] * case.fp_cost >= case.min_roi:
            count[i] -= 1
    return float(np.sum(count)) / (len(tp) * len(fp))

""" Statistics that reduce the minimum viable AUCs of many draws to one number """
import numpy as np


class Aggregator(object):
    """ Reduces a 1-D array of AUCs to a scalar

    Usage:
       mean = viable.aggregator.Mean()
       mean([0.6, 0.7, 0.8])

    Empty arrays (e.g. a grid value where no draw is feasible) reduce to nan.
    """

    def __call__(self, array):
        values = np.asarray(array, float)
        if values.size == 0:
            return np.nan
        return float(self._compute(values))

    def _compute(self, values):
        raise NotImplementedError()

    def __eq__(self, other):
        return self.__class__ == other.__class__

    def __ne__(self, other):
        return not self.__eq__(other)


class Mean(Aggregator):
    def _compute(self, values):
        return np.mean(values)


class Quantile(Aggregator):
    """ Linearly interpolated quantile, e.g. Quantile(0.25) is the lower quartile

    Arguments:
       quantile (float): Level in [0, 1]
    """
    def __init__(self, quantile):
        if not 0 <= quantile <= 1:
            raise ValueError("Quantile must be between 0 and 1 (got %g)" % quantile)
        self.quantile = float(quantile)

    def _compute(self, values):
        return np.percentile(values, 100 * self.quantile)

    def __eq__(self, other):
        return isinstance(other, Quantile) and self.quantile == other.quantile

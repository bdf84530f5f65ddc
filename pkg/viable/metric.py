import inspect
import numpy as np
import sys


def get_all():
    """ Returns a list of all concrete metric classes """
    temp = inspect.getmembers(sys.modules[__name__], inspect.isclass)
    return [i[1] for i in temp if i[1] is not Contingency and issubclass(i[1], Contingency)]


def get(name):
    """ Returns an instance of the metric with the given (lowercase class) name

    Raises:
       ValueError: if no metric has that name
    """
    for metric in get_all():
        if name == metric.__name__.lower():
            return metric()
    raise ValueError("No metric by the name '%s'" % name)


class Contingency(object):
    """
    Metrics based on the 2x2 contingency table of a binary classifier applied
    to one analysis period. Counts are expected values and need not be
    integers.
    """
    def compute_from_abcd(self, a, b, c, d):
        """ Compute the score given the 4 values in the 2x2 contingency table:

        Arguments:
           a (float): True positives
           b (float): False positives
           c (float): False negatives
           d (float): True negatives

        Returns:
           float: The score, nan if undefined
        """
        raise NotImplementedError()

    def __call__(self, a, b, c, d):
        value = self.compute_from_abcd(a, b, c, d)
        if np.isinf(value):
            value = np.nan
        return value


class Precision(Contingency):
    def compute_from_abcd(self, a, b, c, d):
        if a + b == 0:
            return np.nan
        return a / 1.0 / (a + b)


# True positive rate
class Recall(Contingency):
    def compute_from_abcd(self, a, b, c, d):
        if a + c == 0:
            return np.nan
        return a / 1.0 / (a + c)


# Fraction of negatives that are predicted positive
class Fallout(Contingency):
    def compute_from_abcd(self, a, b, c, d):
        if b + d == 0:
            return np.nan
        return b / 1.0 / (b + d)


class Specificity(Contingency):
    def compute_from_abcd(self, a, b, c, d):
        if b + d == 0:
            return np.nan
        return d / 1.0 / (b + d)


class Accuracy(Contingency):
    def compute_from_abcd(self, a, b, c, d):
        N = a + b + c + d
        if N == 0:
            return np.nan
        return (a + d) / 1.0 / N


# Harmonic mean of precision and recall
class F1(Contingency):
    def compute_from_abcd(self, a, b, c, d):
        if 2 * a + b + c == 0:
            return np.nan
        return 2.0 * a / (2 * a + b + c)

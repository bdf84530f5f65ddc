""" The dimensions of the ratio space that the landscape can be swept along """
import inspect
import matplotlib.ticker
import sys

import viable.interval


def get_all():
    """ Returns a list of all dimension classes """
    temp = inspect.getmembers(sys.modules[__name__], inspect.isclass)
    return [i[1] for i in temp if i[1] is not Dimension and issubclass(i[1], Dimension)]


def get(name):
    """ Returns an instance of the dimension with the given name

    Arguments:
       name (str): e.g. "benefit-to-roi" or "benefit_to_roi"

    Raises:
       ValueError: if no dimension has that name
    """
    key = name.replace("-", "_").lower()
    for dimension in get_all():
        if key == dimension.name:
            return dimension()
    raise ValueError("No dimension by name '%s' (choose from %s)" %
          (name, ", ".join(names())))


def names():
    """ Command-line names of all dimensions """
    return sorted(dimension.name.replace("_", "-") for dimension in get_all())


class Dimension(object):
    """ One of the three ratios that together define a business problem

    Attributes:
       name (str): Field name in viable.business_case.RatioSpec
       legal (viable.interval.Interval): Allowed values
       sample_range (tuple): Default (lower, upper) range from which background
          values are drawn log-uniformly
    """
    name = None
    legal = None
    sample_range = None

    def label(self):
        """ Returns an appropriate string for labeling an axis on a plot """
        raise NotImplementedError()

    def formatter(self):
        return matplotlib.ticker.LogFormatterSciNotation()

    def check(self, value):
        return self.legal.check(self.name, value)

    def __eq__(self, other):
        return self.__class__ == other.__class__

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.name)


class BenefitToRoi(Dimension):
    """ Benefit of one true positive relative to the required return """
    name = "benefit_to_roi"
    legal = viable.interval.unit_right_closed()
    sample_range = (1e-6, 1.0)

    def label(self):
        return "Benefit / required return"


class CostToBenefit(Dimension):
    """ Cost of a false positive relative to the benefit of a true positive """
    name = "cost_to_benefit"
    legal = viable.interval.unit_right_closed()
    sample_range = (1e-3, 1.0)

    def label(self):
        return "False positive cost / true positive benefit"


class BaseRate(Dimension):
    name = "base_rate"
    legal = viable.interval.unit_open()
    sample_range = (1e-5, 0.5)

    def label(self):
        return "Base rate"

import numpy as np


class Interval(object):
    """ Represents a legal range of a parameter on the real number line

    The following forms are supported, where [,] are inclusive and (,) are not:
    [lower, upper], (lower, upper], [lower, upper), or (lower, upper)

    Attributes:
       lower (float): The lower boundary of the interval
       upper (float): The upper boundary of the interval
       lower_eq (bool): True to include the lower boundary in the interval
       upper_eq (bool): True to include the upper boundary in the interval
    """
    def __init__(self, lower, upper, lower_eq, upper_eq):
        self.lower = lower if lower is not None else -np.inf
        self.upper = upper if upper is not None else np.inf
        self.lower_eq = lower_eq
        self.upper_eq = upper_eq

    def within(self, x):
        """ Is one or more values within the interval?

        Args:
           x (float or np.array): value(s)

        Returns:
           bool or np.array(bool): True if the value(s) is in the interval. nan
           is never within an interval.
        """
        x = np.asarray(x, float)
        is_above = (x > self.lower) | (self.lower_eq & (x == self.lower))
        is_below = (x < self.upper) | (self.upper_eq & (x == self.upper))
        values = is_above & is_below
        if values.ndim == 0:
            return bool(values)
        return values

    def check(self, name, value):
        """ Raise a ValueError naming the parameter if value is outside the interval

        Arguments:
           name (str): Parameter name used in the message
           value (float): Value to check

        Returns:
           float: value, if it is within the interval
        """
        if not self.within(value):
            raise ValueError("%s must lie in %s (got %g)" % (name, self, value))
        return value

    def __str__(self):
        lower_bracket = "[" if self.lower_eq else "("
        upper_bracket = "]" if self.upper_eq else ")"
        return "%s%g, %g%s" % (lower_bracket, self.lower, self.upper, upper_bracket)

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return False
        return (self.lower, self.upper, self.lower_eq, self.upper_eq) == \
               (other.lower, other.upper, other.lower_eq, other.upper_eq)

    def __ne__(self, other):
        return not self.__eq__(other)


def unit_open():
    """ The open interval (0, 1) """
    return Interval(0, 1, False, False)


def unit_right_closed():
    """ The interval (0, 1] """
    return Interval(0, 1, False, True)


def unit_closed():
    """ The interval [0, 1] """
    return Interval(0, 1, True, True)


def positive():
    """ The interval (0, inf) """
    return Interval(0, np.inf, False, False)


def non_negative():
    """ The interval [0, inf) """
    return Interval(0, np.inf, True, False)

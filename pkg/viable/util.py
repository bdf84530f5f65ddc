import matplotlib.pyplot as mpl
import numpy as np
import sys


def red(text):
    """ Print text in bold red to the console """
    return "\033[1;31m" + text + "\033[0m"


def yellow(text):
    """ Print text in yellow to the console """
    return "\033[1;33m" + text + "\033[0m"


def error(message):
    """ Write a one-line error message to stderr and abort with exit status 2 """
    message = " ".join(str(message).split())
    print(red("Error: " + message), file=sys.stderr)
    sys.exit(2)


def warning(message):
    """ Write a warning message to stderr """
    print(yellow("Warning: " + message), file=sys.stderr)


def is_number(s):
    """ Returns true if s can be converted to a float """
    try:
        float(s)
        return True
    except (TypeError, ValueError):
        return False


def parse_numbers(numbers):
    """
    Parses numbers from an input string. Recognizes MATLAB syntax, such as:
    3              single numbers
    3,4,5          list of numbers
    3:5            number range
    3:2:12         number range with a step size of 2
    1e-4,1e-3      scientific notation

    Arguments:
       numbers (str): String of numbers

    Returns:
       list: parsed numbers

    Raises:
       ValueError: if the string cannot be parsed
    """
    if len(numbers) == 0 or any(char not in set('-+0123456789.:,eE') for char in numbers):
        raise ValueError("Could not translate '%s' into numbers" % numbers)

    values = list()
    for comma_list in numbers.split(','):
        colon_list = comma_list.split(':')
        if not all(is_number(value) for value in colon_list):
            raise ValueError("Could not translate '%s' into numbers" % numbers)
        if len(colon_list) == 1:
            values.append(float(colon_list[0]))
        elif len(colon_list) <= 3:
            start = float(colon_list[0])
            step = 1
            if len(colon_list) == 3:
                step = float(colon_list[1])
            if step == 0:
                raise ValueError("Could not parse '%s': Step cannot be 0." % numbers)
            step_sign = step / abs(step)
            # arange does not include the end point:
            end = float(colon_list[-1]) + step_sign * 0.0001
            # Round to avoid floating point problems for strings like 0.1:0.1:0.9
            values = values + list(np.round(np.arange(start, end, step), 7))
        else:
            raise ValueError("Could not translate '%s' into numbers" % numbers)
    return [float(value) for value in values]


def log_grid(start, end, points):
    """ Logarithmically spaced grid from start to end (inclusive)

    Arguments:
       start (float): First value, must be positive
       end (float): Last value, must be positive
       points (int): Number of values

    Returns:
       np.array: grid of length points

    Raises:
       ValueError: for non-positive end points, fewer than one point, or one
          point between different end points
    """
    if start <= 0 or end <= 0:
        raise ValueError("log-spaced grids need positive end points")
    if points < 1:
        raise ValueError("a grid needs at least one point")
    if points == 1:
        if start != end:
            raise ValueError("a one-point grid needs equal end points (got %g and %g)" % (start, end))
        return np.array([float(start)])
    return np.geomspace(start, end, int(points))


def fmt(value, decimals=6):
    """ Fixed-decimal formatting of csv statistics. None and nan become the
    empty string """
    if value is None or np.isnan(value):
        return ""
    return "%.*f" % (decimals, value)


def fmt_exact(value):
    """ Shortest text that parses back to exactly the same float. Used for grid
    coordinates and inputs, which may be far below the fixed-decimal resolution.
    None and nan become the empty string """
    if value is None or np.isnan(value):
        return ""
    return repr(float(value))


def to_float_or_none(value):
    """ Convert nan and None to None, everything else to float """
    if value is None:
        return None
    value = float(value)
    if np.isnan(value):
        return None
    return value


def fill(x, y_lower, y_upper, col, alpha=1):
    """ Fill an area between two curves

    Fill an area along x, between y_lower and y_upper. Both y_lower and y_upper most
    correspond to points in x (i.e. be in the same order)

    Arguments:
       x (np.array): x-axis values
       y_lower (np.array): y-axis values for lower envelope
       y_upper (np.array): y-axis values for upper envelope
       col: Color of filled area in any format understood by mpl.fill
       alpha: alpha of filled area
    """
    # Populate a list of non-missing points
    X = list()
    Y = list()
    for i in range(0, len(x)):
        if not(np.isnan(x[i]) or np.isnan(y_lower[i])):
            X.append(x[i])
            Y.append(y_lower[i])
    for i in range(len(x) - 1, -1, -1):
        if not (np.isnan(x[i]) or np.isnan(y_upper[i])):
            X.append(x[i])
            Y.append(y_upper[i])
    if len(X) > 0:
        mpl.fill(X, Y, facecolor=col, alpha=alpha, linewidth=0)
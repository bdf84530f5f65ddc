import unittest
import viable.interval
import numpy as np


class TestInterval(unittest.TestCase):
    values = [-0.1, 0, 0.1, 0.9, 1, 1.1]

    def compare(self, interval, expected):
        """ Check interval.within for every entry of self.values """
        for value, inside in zip(self.values, expected):
            self.assertEqual(inside, interval.within(value), "%s within %s" % (value, interval))

    def test_open(self):
        self.compare(viable.interval.unit_open(), [False, False, True, True, False, False])

    def test_closed(self):
        self.compare(viable.interval.unit_closed(), [False, True, True, True, True, False])

    def test_right_closed(self):
        self.compare(viable.interval.unit_right_closed(), [False, False, True, True, True, False])

    def test_left_closed(self):
        interval = viable.interval.Interval(0, 1, True, False)  # 0 <= x < 1
        self.compare(interval, [False, True, True, True, False, False])

    def test_half_lines(self):
        self.compare(viable.interval.positive(), [False, False, True, True, True, True])
        self.compare(viable.interval.non_negative(), [False, True, True, True, True, True])
        self.assertFalse(viable.interval.positive().within(np.inf))

    def test_zero_interval(self):
        interval = viable.interval.Interval(0, 0, True, True)  # 0 <= x <= 0
        self.compare(interval, [False, True, False, False, False, False])
        interval = viable.interval.Interval(0, 0, False, True)  # 0 < x <= 0
        self.compare(interval, [False, False, False, False, False, False])

    def test_equal(self):
        from viable.interval import Interval
        self.assertEqual(Interval(0, 1, False, True), viable.interval.unit_right_closed())
        self.assertTrue(Interval(0, 0, True, False) == Interval(0, 0, True, False))
        self.assertFalse(Interval(0, 0, True, False) != Interval(0, 0, True, False))

    def test_unequal(self):
        from viable.interval import Interval
        for interval in [Interval(0, 0, True, True), Interval(0, 0, False, False),
              Interval(0, 1, True, False), Interval(1, 0, True, False)]:
            self.assertFalse(Interval(0, 0, True, False) == interval)
            self.assertTrue(Interval(0, 0, True, False) != interval)

    def test_array(self):
        ar = np.array([1, 3, 2, 0, 15])
        interval = viable.interval.Interval(2, 5, True, True)
        np.testing.assert_array_equal(np.array([False, True, True, False, False]), interval.within(ar))
        self.assertTrue(interval.within(3))

    def test_nan(self):
        ar = np.array([1, 3, 2, np.nan, 15])
        interval = viable.interval.Interval(2, 5, True, True)
        np.testing.assert_array_equal(np.array([False, True, True, False, False]), interval.within(ar))
        self.assertFalse(interval.within(np.nan))

    def test_check(self):
        self.assertEqual(0.5, viable.interval.unit_open().check("base_rate", 0.5))
        with self.assertRaises(ValueError) as context:
            viable.interval.unit_open().check("base_rate", 1.5)
        self.assertEqual("base_rate must lie in (0, 1) (got 1.5)", str(context.exception))

    def test_str(self):
        self.assertEqual("(0, 1]", str(viable.interval.unit_right_closed()))
        self.assertEqual("[0, inf)", str(viable.interval.non_negative()))


if __name__ == '__main__':
    unittest.main()

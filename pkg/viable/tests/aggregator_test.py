import unittest
import viable.aggregator
import numpy as np


class TestAggregator(unittest.TestCase):
    def test_mean(self):
        self.assertEqual(2, viable.aggregator.Mean()(np.array([1, 2, 3])))
        self.assertEqual(0.75, viable.aggregator.Mean()([0.5, 1]))

    def test_quantile(self):
        values = np.array([0.5, 0.6, 0.7, 0.8, 0.9])
        self.assertAlmostEqual(0.6, viable.aggregator.Quantile(0.25)(values))
        self.assertAlmostEqual(0.8, viable.aggregator.Quantile(0.75)(values))
        # Linear interpolation between order statistics
        self.assertAlmostEqual(1.75, viable.aggregator.Quantile(0.25)(np.array([1, 2, 3, 4])))
        self.assertEqual(0.7, viable.aggregator.Quantile(0.25)(np.array([0.7])))

    def test_empty(self):
        self.assertTrue(np.isnan(viable.aggregator.Mean()(np.array([]))))
        self.assertTrue(np.isnan(viable.aggregator.Quantile(0.75)(np.array([]))))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            viable.aggregator.Quantile(1.5)
        with self.assertRaises(ValueError):
            viable.aggregator.Quantile(-0.1)

    def test_equal(self):
        self.assertEqual(viable.aggregator.Mean(), viable.aggregator.Mean())
        self.assertFalse(viable.aggregator.Mean() != viable.aggregator.Mean())
        self.assertEqual(viable.aggregator.Quantile(0.2), viable.aggregator.Quantile(0.2))

    def test_unequal(self):
        self.assertFalse(viable.aggregator.Mean() == viable.aggregator.Quantile(0.2))
        self.assertTrue(viable.aggregator.Mean() != viable.aggregator.Quantile(0.2))
        self.assertTrue(viable.aggregator.Quantile(0.2) != viable.aggregator.Quantile(0.3))


if __name__ == '__main__':
    unittest.main()

import unittest
import viable.metric
import numpy as np


class MetricTest(unittest.TestCase):
    def test_values(self):
        # tp, fp, fn, tn
        a, b, c, d = 20, 100, 80, 800
        self.assertAlmostEqual(20.0 / 120, viable.metric.Precision()(a, b, c, d))
        self.assertAlmostEqual(0.2, viable.metric.Recall()(a, b, c, d))
        self.assertAlmostEqual(100.0 / 900, viable.metric.Fallout()(a, b, c, d))
        self.assertAlmostEqual(800.0 / 900, viable.metric.Specificity()(a, b, c, d))
        self.assertAlmostEqual(0.82, viable.metric.Accuracy()(a, b, c, d))
        self.assertAlmostEqual(40.0 / 220, viable.metric.F1()(a, b, c, d))

    def test_fractional_counts(self):
        self.assertAlmostEqual(0.5, viable.metric.Precision()(0.25, 0.25, 1, 1))

    def test_undefined(self):
        self.assertTrue(np.isnan(viable.metric.Precision()(0, 0, 10, 10)))
        self.assertTrue(np.isnan(viable.metric.Recall()(0, 5, 0, 10)))
        self.assertTrue(np.isnan(viable.metric.Fallout()(5, 0, 5, 0)))
        self.assertTrue(np.isnan(viable.metric.F1()(0, 0, 0, 10)))

    def test_specificity_and_fallout_sum_to_one(self):
        for b, d in [(1, 9), (0.5, 0.5), (100, 0)]:
            total = viable.metric.Specificity()(3, b, 2, d) + viable.metric.Fallout()(3, b, 2, d)
            self.assertAlmostEqual(1, total)

    def test_get(self):
        self.assertIsInstance(viable.metric.get("precision"), viable.metric.Precision)
        self.assertIsInstance(viable.metric.get("f1"), viable.metric.F1)
        with self.assertRaises(ValueError):
            viable.metric.get("ets")
        names = sorted(metric.__name__.lower() for metric in viable.metric.get_all())
        self.assertEqual(["accuracy", "f1", "fallout", "precision", "recall", "specificity"], names)


if __name__ == '__main__':
    unittest.main()

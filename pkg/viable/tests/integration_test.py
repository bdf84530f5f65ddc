import json
import os
import tempfile
import unittest

import viable.driver
import viable.output
import viable.util


class IntegrationTest(unittest.TestCase):
    """
    These tests run viable on the command-line and check the written files,
    but do not check the contents of the graphics.
    """
    fast = " --beta-steps 10 --thresholds 101"

    def setUp(self):
        self.files = list()

    def tearDown(self):
        for filename in self.files:
            if os.path.exists(filename):
                os.remove(filename)

    @staticmethod
    def run_command(command):
        """ Runs a viable command line """
        argv = command.split()
        return viable.driver.run(argv)

    def temp(self, suffix):
        fd, filename = tempfile.mkstemp(suffix=suffix)
        os.close(fd)
        self.files.append(filename)
        return filename

    @staticmethod
    def read(filename):
        with open(filename, 'r') as fid:
            return fid.read()

    def run_with_output(self, command, suffix=".csv"):
        """ Runs the command with --out <somefile> and returns the contents of the file """
        filename = self.temp(suffix)
        self.assertEqual(0, self.run_command(command + " --out " + filename))
        return self.read(filename)

    def assert_input_error(self, command):
        with self.assertRaises(SystemExit) as context:
            self.run_command(command)
        self.assertEqual(2, context.exception.code)

    def test_valid(self):
        self.assertEqual(0, self.run_command("viable"))
        self.assertEqual(0, self.run_command("viable --version"))

    def test_estimate(self):
        text = self.run_with_output("viable estimate --cases 1000000 --base-rate 0.01 --tp-benefit 200 --fp-cost 10 --min-roi 100000 --format json", ".json")
        values = json.loads(text)
        for key in ["feasible", "auc", "alpha", "beta", "fpr", "tpr", "tp", "fp", "payoff", "precision", "recall",
                    "fallout", "simplicity", "precision_lower_bound", "specificity", "accuracy", "f1", "case"]:
            self.assertIn(key, values)
        self.assertTrue(values["feasible"])
        self.assertGreater(values["auc"], 0.5)
        self.assertEqual(1e6, values["case"]["num_cases"])
        record = viable.output.OutputRecord.from_json(text)
        self.assertEqual("estimate", record.kind)

    def test_estimate_infeasible(self):
        text = self.run_with_output("viable estimate --cases 100 --base-rate 0.5 --tp-benefit 1 --fp-cost 1 --min-roi 1000" + self.fast, ".json")
        values = json.loads(text)
        self.assertFalse(values["feasible"])
        self.assertIsNone(values["auc"])

    def test_estimate_case_file(self):
        case_file = self.temp(".json")
        with open(case_file, 'w') as fid:
            json.dump({"num_cases": 1000000, "base_rate": 0.01, "tp_benefit": 200, "fp_cost": 10, "min_roi": 100000}, fid)
        for format in ["json", "csv"]:
            flags = self.run_with_output("viable estimate --cases 1000000 --base-rate 0.01 --tp-benefit 200 --fp-cost 10 --min-roi 100000 --format " + format + self.fast)
            from_file = self.run_with_output("viable estimate --case-file " + case_file + " --format " + format + self.fast)
            self.assertEqual(flags, from_file)

    def test_estimate_svg(self):
        svg = self.temp(".svg")
        self.run_with_output("viable estimate --cases 10000 --base-rate 0.1 --tp-benefit 10 --fp-cost 1 --min-roi 2000 --svg " + svg + self.fast)
        self.assertIn("<svg", self.read(svg))

    def test_bad_svg_writes_no_result(self):
        out = self.temp(".json")
        self.assert_input_error("viable estimate --cases 10000 --base-rate 0.1 --tp-benefit 10 --fp-cost 1 --min-roi 2000 --out " + out + " --svg /nonexistent/curve.svg" + self.fast)
        self.assertEqual("", self.read(out))
        out = self.temp(".csv")
        self.assert_input_error("viable sweep --dimension base-rate --from 1e-3 --to 0.5 --points 2 --samples 2 --out " + out + " --svg /nonexistent/sweep.svg" + self.fast)
        self.assertEqual("", self.read(out))

    def test_config(self):
        config = self.temp(".txt")
        with open(config, 'w') as fid:
            fid.write("--cases 1000000 --base-rate 0.01\n--tp-benefit 200 --fp-cost 10\n")
        flags = self.run_with_output("viable estimate --cases 1000000 --base-rate 0.01 --tp-benefit 200 --fp-cost 10 --min-roi 100000" + self.fast)
        configured = self.run_with_output("viable estimate --config " + config + " --min-roi 100000" + self.fast)
        self.assertEqual(flags, configured)

    def test_invalid(self):
        self.assert_input_error("viable estimate --cases 1000 --base-rate 1.5 --tp-benefit 1 --fp-cost 1 --min-roi 1")
        self.assert_input_error("viable estimate --cases 1000 --base-rate 0.1 --tp-benefit 1 --fp-cost 1")
        self.assert_input_error("viable estimate --cases 1000 --base-rate test --tp-benefit 1 --fp-cost 1 --min-roi 1")
        self.assert_input_error("viable estimate --case-file /nonexistent/case.json")
        self.assert_input_error("viable estimate --cases 1000 --base-rate 0.1 --tp-benefit 1 --fp-cost 1 --min-roi 1 --thresholds 1")
        self.assert_input_error("viable estimate --cases 1000 --base-rate 0.1 --tp-benefit 1 --fp-cost 1 --min-roi 1 --out /nonexistent/out.json")
        self.assert_input_error("viable forecast")
        self.assert_input_error("viable --config")
        self.assert_input_error("viable --config /nonexistent/config.txt")
        self.assert_input_error("viable sweep --dimension num-cases --from 1 --to 2")
        self.assert_input_error("viable sweep --dimension base-rate --from 0.1 --to 1.5")
        self.assert_input_error("viable sweep --dimension base-rate --to 0.5")
        self.assert_input_error("viable sweep --dimension base-rate --from 0.1 --to 0.5 --points 1")
        self.assert_input_error("viable sweep --dimension base-rate --grid 0.1,0.2 --from 0.1")
        self.assert_input_error("viable surface --base-rate-to 1")
        self.assert_input_error("viable roc --alpha 2 --beta 1")

    def test_sweep(self):
        command = "viable sweep --dimension base-rate --from 1e-3 --to 0.5 --points 3 --samples 5 --seed 4" + self.fast
        text = self.run_with_output(command)
        lines = text.strip().split("\n")
        self.assertEqual("dim_value,mean_auc,q1_auc,q3_auc,infeasible_fraction", lines[0])
        self.assertEqual(4, len(lines))
        # Same seed, same bytes
        self.assertEqual(text, self.run_with_output(command))

    def test_sweep_single(self):
        filename = self.temp(".csv")
        self.run_command("viable sweep --dimension cost-to-benefit --grid 0.1 --samples 1 --out " + filename + self.fast)
        rows = viable.output.read_sweep_csv(filename)
        self.assertEqual(1, len(rows))
        self.assertEqual(rows[0].mean_auc, rows[0].q1_auc)
        self.assertEqual(rows[0].mean_auc, rows[0].q3_auc)

    def test_sweep_small_values(self):
        filename = self.temp(".csv")
        self.run_command("viable sweep --dimension benefit-to-roi --from 1e-8 --to 1e-7 --points 3 --samples 2 --out " + filename + self.fast)
        rows = viable.output.read_sweep_csv(filename)
        self.assertEqual(list(viable.util.log_grid(1e-8, 1e-7, 3)), [row.dim_value for row in rows])

    def test_sweep_svg(self):
        svg = self.temp(".svg")
        self.run_with_output("viable sweep --dimension benefit-to-roi --from 1e-3 --to 1 --points 3 --samples 5 --svg " + svg + self.fast)
        self.assertIn("<svg", self.read(svg))

    def test_surface(self):
        command = "viable surface --base-rate-from 0.01 --base-rate-to 0.5 --base-rate-points 3 --cb-from 0.01 --cb-to 1 --cb-points 3" + self.fast
        text = self.run_with_output(command)
        lines = text.strip().split("\n")
        self.assertEqual("base_rate,cost_to_benefit,min_auc,feasible", lines[0])
        self.assertEqual(10, len(lines))
        self.assertEqual(text, self.run_with_output(command))

    def test_surface_matches_estimate(self):
        filename = self.temp(".csv")
        self.run_command("viable surface --benefit-roi-ratio 1e-4 --base-rate-from 0.05 --base-rate-to 0.05 --base-rate-points 1 --cb-from 0.1 --cb-to 0.1 --cb-points 1 --cases 1e6 --out " + filename)
        surface = viable.output.read_surface_csv(filename)
        self.assertEqual((1, 1), surface.matrix.shape)
        text = self.run_with_output("viable estimate --cases 1e6 --base-rate 0.05 --tp-benefit 1e-4 --fp-cost 1e-5 --min-roi 1", ".json")
        self.assertAlmostEqual(json.loads(text)["auc"], surface.matrix[0, 0], 5)

    def test_surface_infeasible(self):
        text = self.run_with_output("viable surface --base-rate-from 1e-3 --base-rate-to 1e-3 --base-rate-points 1 --cb-points 2" + self.fast)
        for line in text.strip().split("\n")[1:]:
            self.assertEqual(",false", line[line.rfind(","):])
            self.assertIn(",,", line)

    def test_roc(self):
        text = self.run_with_output("viable roc --alpha 1 --beta 1 --points 3")
        self.assertEqual("fpr,tpr\n0.000000,0.000000\n0.500000,0.750000\n1.000000,1.000000\n", text)
        svg = self.temp(".svg")
        self.assertEqual(0, self.run_command("viable roc --alpha 0.5 --beta 4 --svg " + svg))
        self.assertIn("<svg", self.read(svg))


if __name__ == '__main__':
    unittest.main()

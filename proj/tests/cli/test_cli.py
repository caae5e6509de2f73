"""End-to-end checks of arcgap_cli: exit codes, determinism, CSV layout, JSON schema."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = sys.argv.pop(1)
SCHEMA = sys.argv.pop(1)


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("ARCGAP_SEED", None)
    if env:
        e.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=e)


QUICK = {
    "gap": ["gap", "--s", "0.5"],
    "fit-c0-fredholm": ["fit-c0-fredholm", "--s-min", "6", "--s-max", "8", "--step", "1"],
    "fit-c0-widom": ["fit-c0-widom", "--n-min", "50", "--n-max", "150", "--step", "25"],
    "verify-thm2": ["verify-thm2", "--alpha-grid", "1.0", "--rho-list", "20,40", "--n-list", "200,400",
                    "--chi-n-list", "20,40"],
    "verify-deift": ["verify-deift", "--alpha-grid", "1.0", "--n-list", "1,5,10"],
    "crosscheck-tf": ["crosscheck-tf", "--s", "1", "--n-list", "100,200"],
    "gue": ["gue", "--s-list", "0,0.5", "--N", "200", "--trials", "1000"],
}


class Cli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA) as f:
            cls.schema = json.load(f)

    def test_json_reports_validate(self):
        for name, args in QUICK.items():
            with self.subTest(name):
                p = run(*args, "--json")
                self.assertEqual(p.returncode, 0, p.stderr)
                doc = json.loads(p.stdout)
                jsonschema.validate(doc, self.schema)
                self.assertEqual(doc["experiment"], name)

    def test_reruns_are_byte_identical(self):
        for name, args in QUICK.items():
            with self.subTest(name):
                a = run(*args, "--csv").stdout
                b = run(*args, "--csv").stdout
                self.assertEqual(a, b)
                self.assertTrue(a)
        a = run(*QUICK["gue"], "--json", "--seed", "9").stdout
        b = run(*QUICK["gue"], "--json", env={"ARCGAP_SEED": "9"}).stdout
        c = run(*QUICK["gue"], "--json", "--seed", "10").stdout
        self.assertEqual(a, b)
        self.assertNotEqual(a, c)

    def test_csv_columns(self):
        lines = run(*QUICK["gue"], "--csv").stdout.splitlines()
        self.assertEqual(lines[0], "s,trials,hits,p_hat,stderr,delta,difference,z")
        self.assertEqual(len(lines), 3)
        row = lines[1].split(",")
        self.assertEqual(row[3], "1")

    def test_gap_values(self):
        doc = json.loads(run("gap", "--s", "0", "--json").stdout)
        self.assertEqual(doc["rows"][0]["log_delta"], 0.0)
        doc = json.loads(run("gap", "--s", "0.05", "--json").stdout)
        self.assertAlmostEqual(doc["rows"][0]["log_delta"], -0.0323483179, delta=1e-9)
        doc = json.loads(run("gap", "--s", "10", "--json").stdout)
        self.assertLess(abs(doc["rows"][0]["log_delta"] + 51.0141474), 0.02)

    def test_exit_codes(self):
        self.assertEqual(run().returncode, 1)
        self.assertEqual(run("bogus").returncode, 1)
        self.assertEqual(run("gap").returncode, 1)
        self.assertEqual(run("gap", "--s", "x").returncode, 1)
        self.assertEqual(run("gap", "--s", "-1").returncode, 1)
        self.assertEqual(run("gap", "--s", "1", "--precision", "quad").returncode, 1)
        self.assertEqual(run("gap", "--s", "25", "--precision", "standard").returncode, 2)
        self.assertEqual(run("fit-c0-fredholm", "--s-min", "14", "--s-max", "16", "--precision", "standard").returncode, 2)
        p = run("verify-deift", "--alpha-grid", "1.0", "--n-list", "5", "--tolerance", "1e-18")
        self.assertEqual(p.returncode, 3)
        self.assertIn("verification failed", p.stderr)
        self.assertEqual(run("crosscheck-tf", "--s", "5", "--n-list", "1000,500").returncode, 3)
        self.assertEqual(run("gue", "--s-list", "1", "--N", "200", "--trials", "1000", "--max-abs-z", "0").returncode, 3)
        self.assertEqual(run("--help").returncode, 0)

    def test_out_and_config(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "r.csv")
            self.assertEqual(run("gap", "--s", "2", "--csv", "--out", out).returncode, 0)
            with open(out) as f:
                via_file = f.read()
            self.assertEqual(via_file, run("gap", "--s", "2", "--csv").stdout)
            cfg = os.path.join(d, "c.ini")
            with open(cfg, "w") as f:
                f.write("precision=standard\n[gap]\ns=2\n")
            p = run("--config", cfg, "gap", "--json")
            doc = json.loads(p.stdout)
            self.assertEqual(doc["params"]["s"], 2.0)
            self.assertEqual(doc["params"]["precision"], "standard")
            doc = json.loads(run("--config", cfg, "gap", "--s", "3", "--json").stdout)
            self.assertEqual(doc["params"]["s"], 3.0)

    def test_timing_is_opt_in(self):
        doc = json.loads(run("gap", "--s", "1", "--json").stdout)
        self.assertNotIn("wall_time_s", doc["meta"])
        doc = json.loads(run("gap", "--s", "1", "--json", "--timing").stdout)
        self.assertGreaterEqual(doc["meta"]["wall_time_s"], 0.0)


if __name__ == "__main__":
    unittest.main()

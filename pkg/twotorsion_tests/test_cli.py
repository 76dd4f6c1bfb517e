import json
import random
import unittest
from os import path

from click.testing import CliRunner

from twotorsion import curves
from twotorsion.cli import hyperelliptic
from twotorsion.cli.__main__ import cli
from twotorsion.cli.verify import suite
from twotorsion.exact_math import SquareClass

GENUS_TWO = ["--roots", "0,1,2,3,4,5", "--lead", "1"]


def fixture_path(fixture_name: str):
    return path.join(path.dirname(__file__), "fixtures", fixture_name)


class HyperTableTestCase(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def test_genus_two_json(self):
        result = self.runner.invoke(cli, ["hyper-table"] + GENUS_TWO + ["--json"])
        self.assertEqual(result.exit_code, 0)
        report = json.loads(result.output)
        self.assertEqual(report["command"], "hyper-table")
        self.assertEqual(report["input"]["roots"], "0,1,2,3,4,5")

        with open(fixture_path("genus2_q2_values.txt")) as f:
            expected = [int(line) for line in f if line.strip()]
        values = [c["q2"] for c in report["result"]["classes"]]
        self.assertEqual(values, expected)
        self.assertEqual(report["result"]["signed_count"], 4)
        self.assertEqual(report["result"]["positive"], 10)
        self.assertTrue(all(c["status"] == "pass" for c in report["paper_checks"]))

    def test_json_is_byte_stable(self):
        args = ["hyper-table"] + GENUS_TWO + ["--json"]
        first = self.runner.invoke(cli, args)
        second = self.runner.invoke(cli, args)
        self.assertEqual(first.output, second.output)

    def test_human_output(self):
        result = self.runner.invoke(
            cli, ["hyper-table", "--poly", "x*(x-1)*(x-2)*(x-3)"]
        )
        self.assertEqual(result.exit_code, 0)
        self.assertIn("signed_count: 2", result.output)
        self.assertIn("a01", result.output)

    def test_no_color(self):
        args = ["hyper-table"] + GENUS_TWO
        coloured = self.runner.invoke(cli, args, color=True, env={"NO_COLOR": None})
        self.assertIn("\x1b[", coloured.output)
        plain = self.runner.invoke(cli, args, color=True, env={"NO_COLOR": "1"})
        self.assertNotIn("\x1b[", plain.output)
        self.assertIn("pass", plain.output)


class CommandsTestCase(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke_json(self, *args: str):
        result = self.runner.invoke(cli, list(args) + ["--json"])
        return result.exit_code, json.loads(result.output)

    def test_hyper_q2(self):
        code, report = self.invoke_json("hyper-q2", *GENUS_TWO, "--subset", "0,2")
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["q2"], -10)
        self.assertEqual(report["result"]["sign"], -1)

    def test_elliptic_q2(self):
        code, report = self.invoke_json("elliptic-q2", "--poly", "x^3 - x")
        self.assertEqual(code, 0)
        values = {p["root"]: p["q2"] for p in report["result"]["points"]}
        self.assertEqual(values, {"-1": 2, "0": -1, "1": 2})

    def test_elliptic_table(self):
        code, report = self.invoke_json("elliptic-table", "--poly", "x^3 - x")
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["basis"], ["-1", "0"])
        self.assertEqual(report["result"]["signed_count"], 2)

    def test_theta_counts(self):
        code, report = self.invoke_json(
            "theta-counts",
            *("--g", "2", "--s", "1", "--a", "1"),
            *("--orientation", "0", "--parity", "0"),
        )
        self.assertEqual(code, 0)
        self.assertEqual(report["result"], {"even": 1, "odd": 1})

    def test_odd_signed_sum(self):
        code, report = self.invoke_json(
            "odd-signed-sum", "--g", "2", "--s", "2", "--a", "0", "--nu", "1,0,0,0"
        )
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["signed_sum"], 2)

    def test_conjecture_genus_one(self):
        result = self.runner.invoke(
            cli, ["conjecture", "--genus", "1", "--poly", "x^3 - x"]
        )
        self.assertEqual(result.exit_code, 0)
        self.assertIn("isometric: true", result.output)

    def test_version(self):
        result = self.runner.invoke(cli, ["version"])
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(result.output.strip())


class ExitCodeTestCase(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def test_unknown_option(self):
        result = self.runner.invoke(cli, ["hyper-table", "--bogus"])
        self.assertEqual(result.exit_code, 1)

    def test_parse_error(self):
        result = self.runner.invoke(cli, ["hyper-table", "--poly", "x^"])
        self.assertEqual(result.exit_code, 1)
        self.assertIn("offset 2", result.output)

    def test_missing_curve(self):
        result = self.runner.invoke(cli, ["hyper-table"])
        self.assertEqual(result.exit_code, 1)

    def test_nu_length(self):
        result = self.runner.invoke(
            cli, ["odd-signed-sum", "--g", "2", "--s", "2", "--a", "0", "--nu", "1,0"]
        )
        self.assertEqual(result.exit_code, 1)

    def test_nu_odd_length(self):
        result = self.runner.invoke(
            cli, ["odd-signed-sum", "--g", "2", "--s", "2", "--a", "0", "--nu", "1,0,1"]
        )
        self.assertEqual(result.exit_code, 1)
        self.assertIn("needs 4 bits", result.output)

    def test_repeated_roots(self):
        result = self.runner.invoke(
            cli, ["hyper-table", "--roots", "0,0,1,2", "--json"]
        )
        self.assertEqual(result.exit_code, 2)
        error = json.loads(result.output)["error"]
        self.assertEqual(error["type"], "RepeatedRoots")

    def test_odd_degree_poly(self):
        result = self.runner.invoke(cli, ["hyper-table", "--poly", "x^3 - x"])
        self.assertEqual(result.exit_code, 2)

    def test_invalid_type(self):
        result = self.runner.invoke(
            cli, ["theta-counts", "--g", "2", "--s", "3", "--a", "0"]
        )
        self.assertEqual(result.exit_code, 2)


def test_failed_check_exits_with_three(monkeypatch):
    monkeypatch.setattr(hyperelliptic, "q2", lambda m, c: SquareClass.of_integer(-1))
    result = CliRunner().invoke(cli, ["hyper-q2"] + GENUS_TWO + ["--subset", "0,1"])
    assert result.exit_code == 3
    assert "fail" in result.output


def test_suite_detects_broken_q2(monkeypatch):
    monkeypatch.setattr(curves, "q2", lambda m, c: SquareClass.one())
    checks = suite.genus_two_values(random.Random(0))
    assert any(c.failed for c in checks)


def test_verify_json():
    runner = CliRunner()
    result = runner.invoke(cli, ["verify", "--seed", "7", "--json"])
    again = runner.invoke(cli, ["verify", "--seed", "7", "--json"])
    assert result.exit_code == 0
    assert result.output == again.output
    report = json.loads(result.output)
    assert report["result"]["failed"] == 0
    assert report["result"]["items"] == len(suite.ITEMS)


def test_verify_exits_with_three_on_failed_check(monkeypatch):
    original = curves.q2
    monkeypatch.setattr(curves, "q2", lambda m, c: -original(m, c))
    monkeypatch.setattr(
        suite, "ITEMS", [("genus two worked values", suite.genus_two_values)]
    )
    result = CliRunner().invoke(cli, ["verify", "--json"])
    assert result.exit_code == 3
    assert json.loads(result.output)["result"]["failed"] > 0

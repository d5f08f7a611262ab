#!/usr/bin/env python3
"""End-to-end checks of the mvalg command line: exit codes, output formats
and each subcommand on corpus files.

usage: cli_test.py MVALG_BINARY CORPUS_DIR [FIXTURE_DIR [BRUTEFORCE_SCRIPT]]

With a brute-force script, every kind and order up to 3 is re-enumerated
from scratch and compared with the CLI (slow: tens of seconds).
"""

import filecmp
import json
import os
import subprocess
import sys
import tempfile
import unittest

BIN = CORPUS = FIXTURES = SCRIPT = None


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=120)
    return p.returncode, p.stdout, p.stderr


def corpus(name):
    return os.path.join(CORPUS, name + ".mrs")


def load(name):
    with open(corpus(name)) as f:
        return json.load(f)


class ExitCodes(unittest.TestCase):
    def test_passing_audit_is_zero(self):
        code, out, _ = run("check", corpus("q2"))
        self.assertEqual(code, 0)
        self.assertRegex(out.splitlines()[-1], r"^overall\s+pass")

    def test_every_corpus_file_checks(self):
        for f in sorted(os.listdir(CORPUS)):
            code, _, err = run("check", os.path.join(CORPUS, f))
            self.assertEqual(code, 0, f + ": " + err)

    def test_failing_audit_is_one(self):
        doc = load("q2")
        doc["add"][1][1] = ["-1"]  # 1+1 = {-1}
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "bad.mrs")
            with open(path, "w") as f:
                json.dump(doc, f)
            code, out, _ = run("check", path)
        self.assertEqual(code, 1)
        self.assertRegex(out, r"witness=")
        self.assertRegex(out.splitlines()[-1], r"^overall\s+fail")

    def test_input_errors_are_two(self):
        self.assertEqual(run("check", "no/such/file.mrs")[0], 2)
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "broken.mrs")
            with open(path, "w") as f:
                f.write('{"kind": "multiring", ')
            code, _, err = run("check", path)
        self.assertEqual(code, 2)
        self.assertIn("line", err)

    def test_precondition_failure_is_one(self):
        code, _, err = run("construct", "ff", corpus("z6"))
        self.assertEqual(code, 1)
        self.assertTrue(err)

    def test_usage_errors(self):
        self.assertEqual(run("frobnicate")[0], 2)
        self.assertEqual(run("--help")[0], 0)

    def test_hom_refuses_multigroups(self):
        self.assertEqual(run("hom", corpus("q2_add"), corpus("q2_add"))[0], 2)


class Formats(unittest.TestCase):
    def test_json_lines_either_side_of_subcommand(self):
        a = run("--format", "json-lines", "check", corpus("z6"))
        b = run("check", corpus("z6"), "--format", "json-lines")
        self.assertEqual(a, b)
        lines = a[1].splitlines()
        self.assertTrue(lines)
        for line in lines[:-1]:
            v = json.loads(line)
            self.assertEqual(list(v), ["id", "status", "informational", "witness", "detail"])
            self.assertIn(v["status"], ("pass", "fail", "skip"))
        self.assertEqual(json.loads(lines[-1]), {"id": "overall", "status": "pass"})

    def test_json_lines_witness_on_failure(self):
        code, out, _ = run("--format", "json-lines", "diagram", corpus("z3"))
        self.assertEqual(code, 1)
        verdicts = [json.loads(l) for l in out.splitlines()]
        failed = [v for v in verdicts if v["status"] == "fail"]
        self.assertTrue(failed)
        self.assertTrue(failed[0]["witness"])

    def test_output_is_deterministic(self):
        for args in (("check", corpus("q2xq2")), ("spec", corpus("z6")), ("sample", "--seed", "9", "--trials", "300")):
            self.assertEqual(run(*args), run(*args))


class Subcommands(unittest.TestCase):
    def test_spec(self):
        code, out, _ = run("spec", corpus("z6"))
        self.assertEqual(code, 0)
        self.assertIn("primes: 2", out)
        self.assertIn("{0,3}", out)
        self.assertIn("{0,2,4}", out)

    def test_orderings_and_sper(self):
        code, out, _ = run("orderings", corpus("q2xq2"))
        self.assertEqual(code, 0)
        self.assertIn("orderings: 2", out)
        code, out, _ = run("sper", corpus("q2"))
        self.assertEqual(code, 0)
        self.assertIn("morphisms to Q2: 1", out)

    def test_real_check(self):
        code, out, _ = run("real-check", corpus("q2"))
        self.assertEqual(code, 0)
        self.assertRegex(out, r"real\s+pass")
        code, out, _ = run("real-check", corpus("kxk"))
        self.assertEqual(code, 0)  # informational verdicts never fail the run
        self.assertRegex(out, r"real\s+fail \(info\)")

    def test_construct_outputs_reload(self):
        with tempfile.TemporaryDirectory() as d:
            cases = [
                (["product", corpus("q2"), corpus("q2")], 9),
                (["quotient", corpus("z6"), "--ideal", "0,3"], 3),
                (["localize", corpus("z6"), "--set", "1,3"], 2),
                (["marshall", corpus("z5"), "--set", "1,4"], 3),
                (["qred", corpus("q2xq2")], 9),
                (["ff", corpus("z5")], 5),
            ]
            for i, (args, size) in enumerate(cases):
                path = os.path.join(d, "c%d.mrs" % i)
                code, _, err = run("construct", *args, "-o", path)
                self.assertEqual(code, 0, " ".join(args) + ": " + err)
                with open(path) as f:
                    self.assertEqual(len(json.load(f)["elements"]), size, args)
                self.assertEqual(run("check", path)[0], 0, args)

    def test_construct_to_stdout(self):
        code, out, _ = run("construct", "quotient", corpus("z6"), "--ideal", "0,3")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["elements"], ["[0]", "[1]", "[2]"])

    def test_functors_then_check(self):
        with tempfile.TemporaryDirectory() as d:
            for name, src in (("sg->mf", "sg_z2"), ("mf->sg", "q2"), ("rs->mr", "three"), ("mr->rs", "q2"),
                              ("aos->mf", "aos_fan2"), ("mf->aos", "fan2_mf"), ("ars->mr", "ars_full2"),
                              ("mr->ars", "q2")):
                path = os.path.join(d, "out.mrs")
                code, _, err = run("functor", name, corpus(src), "-o", path)
                self.assertEqual(code, 0, name + ": " + err)
                self.assertEqual(run("check", path)[0], 0, name)

    def test_round_trips(self):
        for pair, name in (("sg-smf", "q2"), ("sg-smf", "sg_z2"), ("rs-mr", "three"),
                           ("aos-mf", "aos_fan2"), ("ars-mr", "q2xq2")):
            code, out, err = run("roundtrip", "--pair", pair, corpus(name))
            self.assertEqual(code, 0, pair + " " + name + ": " + err)
            self.assertRegex(out.splitlines()[-1], r"^overall\s+pass")

    def test_hom(self):
        code, out, _ = run("hom", corpus("q2xq2"), corpus("q2"))
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "count: 2")

    def test_diagram(self):
        self.assertEqual(run("diagram", corpus("q2"))[0], 0)
        self.assertEqual(run("diagram", corpus("z3"))[0], 1)

    def test_rs_unique3(self):
        code, out, _ = run("rs-unique3")
        self.assertEqual(code, 0)
        doc, end = json.JSONDecoder().raw_decode(out)
        self.assertRegex(out[end:], r"unique\s+pass")
        self.assertEqual(doc["kind"], "real_semigroup")
        self.assertEqual(doc["elements"], ["0", "1", "-1"])

    def test_sample(self):
        code, out, _ = run("sample", "--seed", "3", "--trials", "500")
        self.assertEqual(code, 0)
        self.assertIn("seed 3", out)

    def test_corpus_list_and_export(self):
        code, out, _ = run("corpus", "list")
        self.assertEqual(code, 0)
        names = [l.split()[0] for l in out.splitlines() if l.strip()]
        self.assertEqual(sorted(n + ".mrs" for n in names), sorted(os.listdir(CORPUS)))
        with tempfile.TemporaryDirectory() as d:
            self.assertEqual(run("corpus", "export", d)[0], 0)
            files = sorted(os.listdir(CORPUS))
            match, mismatch, errors = filecmp.cmpfiles(CORPUS, d, files, shallow=False)
            self.assertEqual(mismatch + errors, [])


class Enumeration(unittest.TestCase):
    def test_counts_match_frozen_fixtures(self):
        if not FIXTURES:
            self.skipTest("no fixture directory")
        for kind in ("multigroup", "multiring", "multifield"):
            for order in (1, 2, 3):
                code, out, _ = run("enumerate", "--kind", kind, "--order", str(order), "--up-to-iso")
                self.assertEqual(code, 0)
                lines = out.splitlines()
                codes = [l for l in lines if "|" in l]
                with open(os.path.join(FIXTURES, "%s_%d.txt" % (kind, order))) as f:
                    expected = f.read().split()
                self.assertEqual(codes, expected, (kind, order))
                self.assertIn("count: %d" % len(expected), lines)

    def test_cli_matches_bruteforce(self):
        if not SCRIPT:
            self.skipTest("no brute-force script")
        for kind in ("multigroup", "multiring", "multifield"):
            for order in (1, 2, 3):
                p = subprocess.run([sys.executable, SCRIPT, kind, str(order)], capture_output=True, text=True,
                                   timeout=600, check=True)
                _, out, _ = run("enumerate", "--kind", kind, "--order", str(order), "--up-to-iso")
                self.assertEqual([l for l in out.splitlines() if "|" in l], p.stdout.split(), (kind, order))


if __name__ == "__main__":
    BIN, CORPUS = sys.argv[1], sys.argv[2]
    FIXTURES = sys.argv[3] if len(sys.argv) > 3 else None
    SCRIPT = sys.argv[4] if len(sys.argv) > 4 else None
    unittest.main(argv=sys.argv[:1], verbosity=2)

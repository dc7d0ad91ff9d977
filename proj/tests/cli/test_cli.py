"""End-to-end tests of the antichain command-line tool.

ANTICHAIN_BIN points at the binary, ANTICHAIN_SCHEMAS at the schema directory.
"""

import csv
import io
import json
import os
import pathlib
import re
import subprocess
import tempfile
import unittest

import jsonschema
import referencing

BIN = os.environ["ANTICHAIN_BIN"]
SCHEMAS = pathlib.Path(os.environ["ANTICHAIN_SCHEMAS"])
DATA = pathlib.Path(__file__).resolve().parent / "data"


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def registry():
    resources = []
    for f in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(f.read_text())
        resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
    return referencing.Registry().with_resources(resources)


def validate(doc, schema_file):
    schema = json.loads((SCHEMAS / schema_file).read_text())
    jsonschema.Draft202012Validator(schema, registry=registry()).validate(doc)


def coeffs(report):
    return [int(c) for c in report["polynomial"]]


class Poly(unittest.TestCase):
    def test_worked_example(self):
        rc, out, _ = run("poly", "C(2) x C(3)", "--k", "4", "--json")
        self.assertEqual(rc, 0)
        doc = json.loads(out)
        validate(doc, "poly.schema.json")
        self.assertEqual(coeffs(doc["report"]), [1, 24, 120, 200, 120, 24, 1])

    def test_cube_two_ways(self):
        _, a, _ = run("poly", "C(3) x C(3) x C(3)", "--k", "1", "--json")
        _, b, _ = run("poly", "C(3) x C(3)", "--k", "3", "--json")
        ra, rb = json.loads(a)["report"], json.loads(b)["report"]
        self.assertEqual(ra, rb)
        self.assertEqual(coeffs(ra), [1, 27, 162, 350, 310, 114, 15, 1])
        self.assertFalse(ra["palindromic"])
        self.assertFalse(ra["real_rooted"])

    def test_single_point(self):
        rc, out, _ = run("poly", "C(1)", "--k", "1", "--json")
        self.assertEqual(rc, 0)
        self.assertEqual(coeffs(json.loads(out)["report"]), [1, 1])

    def test_hasse_input(self):
        _, a, _ = run("poly", "hasse:" + str(DATA / "k2.hasse"), "--k", "2", "--json")
        _, b, _ = run("poly", "K(2)", "--k", "2", "--json")
        self.assertEqual(json.loads(a)["report"], json.loads(b)["report"])

    def test_csv_header_and_row(self):
        rc, out, _ = run("poly", "C(2) x C(3)", "--k", "4", "--csv")
        self.assertEqual(rc, 0)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0], ["expression", "k", "coefficients", "degree", "palindromic", "monic",
                                   "unimodal", "log_concave", "gamma", "gamma_positive", "real_rooted",
                                   "evaluation_at_1"])
        self.assertEqual(rows[1][2], "1;24;120;200;120;24;1")
        self.assertEqual(rows[1][-1], "490")

    def test_gamma_null_when_not_palindromic(self):
        _, out, _ = run("poly", "C(2)", "--json")
        doc = json.loads(out)
        validate(doc, "poly.schema.json")
        self.assertIsNone(doc["report"]["gamma"])


class Mpoly(unittest.TestCase):
    def test_grid23_k1(self):
        rc, out, _ = run("mpoly", "C(2) x C(3)", "--k", "1", "--json")
        self.assertEqual(rc, 0)
        doc = json.loads(out)
        validate(doc, "poly.schema.json")
        self.assertEqual(sum(coeffs(doc["direct"])), 10)
        self.assertEqual(doc["N_at_1"], "10")

    def test_paths_agree(self):
        rc, out, _ = run("mpoly", "C(2) x C(2)", "--k", "3", "--json")
        doc = json.loads(out)
        self.assertEqual(rc, 0)
        self.assertTrue(doc["agree"])
        self.assertEqual(doc["direct"], doc["product_formula"])

    def test_M1_equals_N1(self):
        for expr, k in [("C(2) x C(3)", 2), ("H(3)", 2), ("K(2)", 3), ("J(J(C(2) x C(3)))", 1), ("C(4)", 3)]:
            _, out, _ = run("mpoly", expr, "--k", str(k), "--json")
            doc = json.loads(out)
            self.assertEqual(doc["direct"]["evaluation_at_1"], doc["N_at_1"], expr)

    def test_non_minuscule_has_no_formula(self):
        _, out, _ = run("mpoly", "hasse:" + str(DATA / "k2.hasse"), "--json")
        self.assertIsNone(json.loads(out)["product_formula"])


class Dot(unittest.TestCase):
    @staticmethod
    def nodes_and_edges(text):
        nodes = re.findall(r"^\s*(\d+);$", text, re.M)
        edges = re.findall(r"^\s*(\d+) -> (\d+);$", text, re.M)
        return nodes, edges

    def test_J2_has_16_nodes(self):
        rc, out, _ = run("dot", "J(J(C(2) x C(3)))")
        self.assertEqual(rc, 0)
        self.assertTrue(out.startswith("digraph"))
        nodes, _ = self.nodes_and_edges(out)
        self.assertEqual(len(nodes), 16)

    def test_chain_is_a_path(self):
        nodes, edges = self.nodes_and_edges(run("dot", "C(3)")[1])
        self.assertEqual(len(nodes), 3)
        self.assertEqual(sorted(edges), [("0", "1"), ("1", "2")])

    def test_K2(self):
        out = run("dot", "K(2)")[1]
        nodes, edges = self.nodes_and_edges(out)
        self.assertEqual(len(nodes), 6)
        self.assertEqual(len(edges), 6)
        groups = re.findall(r"\{ rank=same;((?: \d+;)+) \}", out)
        self.assertEqual([len(g.split()) for g in groups], [1, 1, 2, 1, 1])


class Scan(unittest.TestCase):
    def test_gamma_table_family(self):
        rc, out, _ = run("scan", "--family", "C(n) x C(n+1)", "--n", "1:6", "--k", "2",
                         "--check", "B,4.4", "--json")
        self.assertEqual(rc, 0)
        doc = json.loads(out)
        validate(doc, "scan.schema.json")
        gammas = {r["n"]: [int(g) for g in r["report"]["gamma"]] for r in doc["rows"]}
        self.assertEqual(gammas[1], [1, 2])
        self.assertEqual(gammas[3], [1, 18, 33, 6])
        self.assertEqual(gammas[6], [1, 72, 1020, 4480, 6300, 2400, 100])
        self.assertEqual(len(doc["rows"]), 6)
        self.assertEqual(doc["summary"]["4.4"]["VERIFIED"], 6)

    def test_cube_flagged(self):
        rc, out, _ = run("scan", "--family", "C(3) x C(3) x C(n)", "--n", "3:3", "--k", "1", "--json")
        self.assertEqual(rc, 0)
        row = json.loads(out)["rows"][0]
        self.assertFalse(row["report"]["real_rooted"])
        self.assertFalse(row["report"]["palindromic"])

    def test_real_rootedness_map(self):
        rc, out, _ = run("scan", "--family", "C(2) x C(n)", "--n", "1:5", "--k", "1:7", "--check", "4.3",
                         "--json", "--threads", "4")
        self.assertEqual(rc, 0)
        doc = json.loads(out)
        self.assertEqual(len(doc["rows"]), 35)
        self.assertTrue(all(r["report"]["real_rooted"] for r in doc["rows"]))
        self.assertEqual(doc["summary"]["4.3"]["VERIFIED"], 35)

    def test_corpus_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            corpus = pathlib.Path(tmp) / "c.txt"
            corpus.write_text((DATA / "small.corpus").read_text().replace("@DATA@", str(DATA)))
            rc, out, _ = run("scan", "--corpus", str(corpus), "--k", "1:2", "--check", "C", "--csv")
        self.assertEqual(rc, 0)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0][:3], ["subject", "n", "k"])
        self.assertEqual(rows[0][-6:], ["B", "C", "4.2", "4.3", "4.4", "detail"])
        self.assertEqual(len(rows), 7)

    def test_defaults_no_refutation(self):
        rc, out, _ = run("scan", "--defaults", "--threads", "4", "--json")
        self.assertEqual(rc, 0)
        doc = json.loads(out)
        validate(doc, "scan.schema.json")
        self.assertEqual(doc["skipped"], 0)
        self.assertTrue(all(v["REFUTED"] == 0 for v in doc["summary"].values()))

    def test_deterministic_across_thread_counts(self):
        a = run("scan", "--graded", "5", "--k", "1:3", "--check", "C", "--json", "--threads", "1")[1]
        b = run("scan", "--graded", "5", "--k", "1:3", "--check", "C", "--json", "--threads", "8")[1]
        c = run("scan", "--graded", "5", "--k", "1:3", "--check", "C", "--json", "--threads", "8")[1]
        self.assertEqual(a, b)
        self.assertEqual(b, c)

    def test_zero_wall_clock_is_resource_guard(self):
        rc, _, err = run("scan", "--family", "C(2) x C(n)", "--n", "1:8", "--k", "1:8", "--wall-clock", "0")
        self.assertEqual(rc, 3)
        self.assertIn("wall clock", err)


class Check(unittest.TestCase):
    def test_suite_passes(self):
        rc, out, _ = run("check")
        self.assertEqual(rc, 0)
        lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
        self.assertGreater(len(lines), 40)
        self.assertTrue(all(l.startswith("PASS") for l in lines))
        self.assertTrue(all(re.search(r"\d+ ms", l) for l in lines))

    def test_corruption_fails_exactly_one(self):
        rc, out, _ = run("check", "--corrupt", "J2_k5_gamma")
        self.assertEqual(rc, 1)
        failed = [l.split()[1] for l in out.splitlines() if l.startswith("FAIL")]
        self.assertEqual(failed, ["J2_k5_gamma"])


class Misc(unittest.TestCase):
    def test_interlace_worked_relation(self):
        rc, out, _ = run("interlace", "1,3,1", "1,1", "--json")
        self.assertEqual(rc, 0)
        doc = json.loads(out)
        self.assertEqual(doc["g_interlaces_f"], "Interlaces")
        self.assertTrue(doc["combination_battery"])

    def test_peck(self):
        rc, out, _ = run("peck", "C(2) x C(3)", "--k", "2", "--json")
        self.assertEqual(rc, 0)
        doc = json.loads(out)
        self.assertTrue(doc["peck"])
        self.assertEqual(doc["rank_levels"], [1, 3, 4, 3, 1])

    def test_tableaux(self):
        rc, out, _ = run("tableaux", "2", "1", "1", "--json")
        self.assertEqual(rc, 0)
        doc = json.loads(out)
        self.assertEqual(doc["direct"], "1,3,1")
        self.assertTrue(doc["agree"])

    def test_outputs_deterministic(self):
        for args in [("poly", "J(J(C(2) x C(3)))", "--k", "3", "--json"), ("dot", "H(4)"),
                     ("peck", "K(3)", "--csv")]:
            self.assertEqual(run(*args), run(*args), args)


class ExitCodes(unittest.TestCase):
    def test_parse_error(self):
        rc, _, err = run("poly", "C(2) x")
        self.assertEqual(rc, 2)
        self.assertIn("parse error", err)

    def test_usage_error(self):
        self.assertEqual(run("poly")[0], 2)
        self.assertEqual(run("frobnicate")[0], 2)
        self.assertEqual(run("poly", "C(2)", "--k", "0")[0], 2)
        self.assertEqual(run("scan", "--check", "Z", "--graded", "3")[0], 2)
        self.assertEqual(run("check", "--corrupt", "no_such_vector")[0], 2)

    def test_missing_hasse_file(self):
        self.assertEqual(run("poly", "hasse:/nonexistent/file")[0], 2)

    def test_explosion_guard(self):
        rc, _, err = run("poly", "C(6) x C(6) x C(6)", "--k", "6", "--max-ideals", "1000")
        self.assertEqual(rc, 3)
        self.assertIn("resource guard", err)

    def test_help_is_success(self):
        self.assertEqual(run("--help")[0], 0)


if __name__ == "__main__":
    unittest.main()

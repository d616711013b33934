#!/usr/bin/env python3
# Copyright 2026 The resumeann Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the resumeann command line tool.

usage: cli_test.py <resumeann binary> <data dir> <fixture dir>
"""

import filecmp
import os
import subprocess
import sys
import tempfile
import unittest
import xml.dom.minidom

CLI, DATA, FIXTURES = sys.argv[1:4]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def fixture(*parts):
    return os.path.join(FIXTURES, *parts)


class CliTest(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def out(self, name):
        path = os.path.join(self.tmp, name)
        os.makedirs(path, exist_ok=True)
        return path

    def test_ontology_check(self):
        r = run("ontology", "check")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("26 classes", r.stdout)

    def test_bad_ontology_is_config_error(self):
        r = run("ontology", "check", "--ontology", fixture("bad.onto"))
        self.assertEqual(r.returncode, 2)
        self.assertIn("bad.onto:2", r.stderr)

    def test_missing_paths_are_config_errors(self):
        missing = os.path.join(self.tmp, "nowhere")
        self.assertEqual(run("annotate", missing, "--out", self.out("a")).returncode, 2)
        self.assertEqual(run("annotate", os.path.join(DATA, "samples"), "--out",
                             self.out("b"), "--lexicon", missing).returncode, 2)
        self.assertEqual(run("evaluate", missing, "--gold",
                             fixture("diff_key")).returncode, 2)
        self.assertEqual(run("bogus-subcommand").returncode, 2)

    def test_invalid_document_is_partial_failure(self):
        out = self.out("iu")
        r = run("annotate", fixture("invalid_utf8.txt"), "--out", out)
        self.assertEqual(r.returncode, 1)
        self.assertIn("invalid UTF-8", r.stderr)
        self.assertEqual(os.listdir(out), [])

    def test_annotate_sample_emits_wellformed_xml(self):
        out = self.out("personal")
        r = run("annotate", os.path.join(DATA, "samples", "personal.txt"), "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = xml.dom.minidom.parse(os.path.join(out, "personal.xml"))
        self.assertEqual(doc.documentElement.tagName, "EuropassCV")
        with open(os.path.join(out, "personal.ann"), encoding="utf-8") as f:
            ann = f.read()
        self.assertIn("6\t11\tName\tAHMED", ann)
        self.assertIn("36\t43\tGender\tFéminin", ann)

    def test_corpus_xml_is_wellformed(self):
        out = self.out("corpus")
        r = run("annotate", os.path.join(DATA, "corpus"), "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        xmls = [n for n in os.listdir(out) if n.endswith(".xml")]
        self.assertGreaterEqual(len(xmls), 20)
        for name in xmls:
            xml.dom.minidom.parse(os.path.join(out, name))

    def test_annotate_is_deterministic_across_workers(self):
        corpus = os.path.join(DATA, "corpus")
        dirs = []
        for i, workers in enumerate(("1", "4", "4")):
            out = self.out(f"w{i}")
            self.assertEqual(run("annotate", corpus, "--out", out,
                                 "--workers", workers).returncode, 0)
            dirs.append(out)
        names = sorted(os.listdir(dirs[0]))
        for other in dirs[1:]:
            self.assertEqual(names, sorted(os.listdir(other)))
            _, mismatch, errors = filecmp.cmpfiles(dirs[0], other, names, shallow=False)
            self.assertEqual(mismatch + errors, [])

    def test_evaluate_diff_modes(self):
        for mode, value in (("strict", "0.00"), ("lenient", "1.00"), ("average", "0.50")):
            out = self.out(mode)
            r = run("evaluate", fixture("diff_response"), "--gold", fixture("diff_key"),
                    "--mode", mode, "--out", out)
            self.assertEqual(r.returncode, 0, r.stderr)
            self.assertIn(f"micro-average ({mode}): precision {value}  recall {value}"
                          f"  F-measure {value}", r.stdout)
            self.assertIn("correct 0  partial 6  missing 0  spurious 0", r.stdout)
            with open(os.path.join(out, "report.csv"), encoding="utf-8") as f:
                rows = f.read().splitlines()
            self.assertEqual(rows[0], "class,precision,recall,f_measure,mode")
            v = f"{float(value):.6f}"
            self.assertEqual(rows[-1], f"ALL,{v},{v},{v},{mode}")

    def test_evaluate_disjoint_sets(self):
        csv = os.path.join(self.tmp, "disjoint.csv")
        r = run("evaluate", fixture("disjoint_response"), "--gold",
                fixture("disjoint_key"), "--csv", csv)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("correct 0  partial 0  missing 2  spurious 2", r.stdout)
        with open(csv, encoding="utf-8") as f:
            self.assertEqual(f.read().splitlines()[-1],
                             "ALL,0.000000,0.000000,0.000000,average")

    def test_evaluate_rejects_bad_beta(self):
        r = run("evaluate", fixture("diff_response"), "--gold", fixture("diff_key"),
                "--beta", "-1", "--out", self.out("beta"))
        self.assertEqual(r.returncode, 2)

    def test_rank(self):
        r = run("rank", os.path.join(DATA, "corpus"), "--profile",
                os.path.join(DATA, "profiles", "accountant.tsv"))
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = r.stdout.splitlines()
        self.assertEqual(len(lines), 30)
        scores = [float(line.split("\t")[2]) for line in lines]
        self.assertEqual(scores, sorted(scores, reverse=True))
        self.assertEqual([line.split("\t")[0] for line in lines],
                         [str(i) for i in range(1, 31)])

    def test_bench(self):
        r = run("bench", os.path.join(DATA, "corpus"), "--sizes", "1", "10",
                "--repeat", "1")
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = r.stdout.splitlines()
        self.assertEqual(lines[0], "n_docs\twall_s\tmarginal_per_doc_s")
        self.assertEqual([line.split("\t")[0] for line in lines[1:]], ["1", "10"])


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)

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

"""Regenerates the bundled corpus and checks it matches data/ byte for byte.

usage: corpus_gold_test.py <gen_corpus.py> <data dir>
"""

import filecmp
import os
import subprocess
import sys
import tempfile


def main():
    generator, data = sys.argv[1], sys.argv[2]
    with tempfile.TemporaryDirectory() as out:
        subprocess.run([sys.executable, generator, "--count", "30", "--seed", "2026",
                        "--ontology", os.path.join(data, "ontology", "ereco.onto"),
                        "--out", out], check=True)
        failures = 0
        for sub in ("corpus", "gold"):
            bundled = sorted(os.listdir(os.path.join(data, sub)))
            fresh = sorted(os.listdir(os.path.join(out, sub)))
            if bundled != fresh:
                print(f"FAIL {sub}: file lists differ")
                failures += 1
                continue
            _, mismatch, errors = filecmp.cmpfiles(
                os.path.join(data, sub), os.path.join(out, sub), bundled, shallow=False)
            for name in mismatch + errors:
                print(f"FAIL {sub}/{name} differs from regenerated copy")
                failures += 1
            print(f"{sub}: {len(bundled)} files compared")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

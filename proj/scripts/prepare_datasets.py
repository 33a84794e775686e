#!/usr/bin/env python3
# Copyright 2026 The kmsmote Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/uci/*.csv from locally available dataset packages.

Sources: the KEEL files shipped inside the `imbalanced-databases` wheel and
the wine table bundled with scikit-learn. Output is comma separated, header
first, label in the last column named `class`, floats written with Python's
shortest round-trip repr so the C++ writer reproduces the files byte for byte.
"""
import argparse
import io
import os
import sys
import zipfile

KEEL = {
    "ecoli": "ecoli2",
    "glass": "glass0",
    "haberman": "haberman",
    "iris": "iris0",
    "pima": "pima",
    "segment": "segment0",
    "vehicle": "vehicle0",
}


def fmt(value):
    v = float(value)
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def read_keel(text):
    names, rows = [], []
    in_data = False
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if in_data:
            fields = [f.strip() for f in line.split(",")]
            rows.append(fields)
        elif line.lower().startswith("@attribute"):
            names.append(line.split()[1])
        elif line.lower().startswith("@data"):
            in_data = True
    return names[:-1], rows


def write_csv(path, header, rows):
    with open(path, "w", newline="\n") as out:
        out.write(",".join(header) + "\n")
        for features, label in rows:
            out.write(",".join(fmt(v) for v in features) + "," + label + "\n")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--wheel", required=True,
                        help="path to imbalanced_databases-*.whl")
    parser.add_argument("--out", default=os.path.join(
        os.path.dirname(__file__), "..", "data", "uci"))
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)

    with zipfile.ZipFile(args.wheel) as wheel:
        for name, keel in KEEL.items():
            member = f"imbalanced_databases/data/{keel}/{keel}.dat"
            names, rows = read_keel(wheel.read(member).decode("utf-8"))
            write_csv(os.path.join(args.out, f"{name}.csv"), names + ["class"],
                      [(r[:-1], r[-1]) for r in rows])

    import sklearn.datasets
    wine = sklearn.datasets.load_wine()
    # class_1 (71 rows) against the rest gives the 71/107 split used in the
    # benchmark tables.
    rows = [(x, "positive" if t == 1 else "negative")
            for x, t in zip(wine.data.tolist(), wine.target.tolist())]
    write_csv(os.path.join(args.out, "wine.csv"),
              list(wine.feature_names) + ["class"], rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())

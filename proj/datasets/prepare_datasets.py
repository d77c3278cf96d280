# Copyright 2026 The qnnbench Authors.
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
"""Materialize the three benchmark CSVs from offline package sources.

Writes iris.csv, breast_cancer.csv and diabetes.csv next to this script.
See README.md in this directory for provenance and the equivalent manual
preparation steps from the original UCI files.
"""
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))


def write_csv(name, header, rows):
    path = os.path.join(HERE, name)
    with open(path, "w", newline="\n") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(row) + "\n")
    print(f"wrote {path} ({len(rows)} rows)")


def fmt_int(v):
    return str(int(v))


def prepare_iris():
    from sklearn.datasets import load_iris

    d = load_iris()
    names = ["setosa", "versicolor", "virginica"]
    rows = [
        [f"{x:.1f}" for x in feat] + [names[label]]
        for feat, label in zip(d.data, d.target)
    ]
    write_csv(
        "iris.csv",
        ["sepal_length", "sepal_width", "petal_length", "petal_width", "species"],
        rows,
    )


def prepare_breast_cancer():
    # MASS `biopsy` is the Wisconsin (original) set: 699 rows, 9 features,
    # 16 rows with a missing bare-nuclei value. Missing cells are written
    # empty; the loader drops those rows, yielding the usual 683 samples.
    from pydataset import data

    b = data("biopsy")
    rows = []
    for _, r in b.iterrows():
        cells = [fmt_int(r[f"V{i}"]) if r.notna()[f"V{i}"] else "" for i in range(1, 10)]
        rows.append(cells + [str(r["class"])])
    write_csv(
        "breast_cancer.csv",
        [
            "clump_thickness",
            "uniformity_cell_size",
            "uniformity_cell_shape",
            "marginal_adhesion",
            "single_epithelial_cell_size",
            "bare_nuclei",
            "bland_chromatin",
            "normal_nucleoli",
            "mitoses",
            "class",
        ],
        rows,
    )


def prepare_diabetes():
    # The Pima Indians Diabetes set (768 rows, 8 features) as shipped in the
    # KEEL repository copy inside the `common-datasets` package; values and
    # row order match the original UCI file.
    import common_datasets

    dat = os.path.join(
        os.path.dirname(common_datasets.__file__),
        "data",
        "classification",
        "pima",
        "pima.dat",
    )
    rows = []
    with open(dat) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("@"):
                continue
            cells = [c.strip() for c in line.split(",")]
            rows.append(cells)
    write_csv(
        "diabetes.csv",
        [
            "pregnancies",
            "plasma_glucose",
            "blood_pressure",
            "skin_thickness",
            "serum_insulin",
            "bmi",
            "pedigree",
            "age",
            "outcome",
        ],
        rows,
    )


def main():
    failures = []
    for fn in (prepare_iris, prepare_breast_cancer, prepare_diabetes):
        try:
            fn()
        except ImportError as e:
            failures.append(f"{fn.__name__}: missing package ({e})")
    if failures:
        print("some datasets were not prepared:", file=sys.stderr)
        for f in failures:
            print("  " + f, file=sys.stderr)
        print("see datasets/README.md for manual preparation steps", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

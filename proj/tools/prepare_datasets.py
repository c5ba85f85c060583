#!/usr/bin/env python3
# Copyright 2026 The Authors.
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
"""Converts the raw UCI Mushroom and Adult tables into sparse-binary files.

Output lines look like "label idx:1 idx:1 ..." with 1-based feature indices.
A sidecar file <output>.groups lists "idx attribute" for every feature, so
that indicators derived from one attribute can be modeled jointly.

Mushroom (agaricus-lepiota.data, 8124 rows, 22 categorical attributes):
attributes with at most two observed values become a single indicator,
all others are one-hot encoded over their observed values. This yields 112
binary features.

Adult (adult.data, 32561 training rows, 14 attributes): categorical
attributes are one-hot encoded (the '?' missing marker gets no indicator),
age / fnlwgt / education-num / hours-per-week are split into 5 quantile bins
and capital-gain / capital-loss into zero vs. nonzero. This yields 121
binary features (bins with duplicate quantile edges collapse). A csv with a header row is also accepted; absent columns
are skipped.

Usage:
  prepare_datasets.py mushroom agaricus-lepiota.data data/mushroom.svm
  prepare_datasets.py adult adult.data data/adult.svm
"""

import csv
import sys


def write_sparse(path, labels, rows, index):
    with open(path, "w") as out:
        for label, feats in zip(labels, rows):
            cells = " ".join(f"{j}:1" for j in sorted(feats))
            out.write(f"{label} {cells}\n")
    with open(path + ".groups", "w") as out:
        for (attribute, _), j in sorted(index.items(), key=lambda kv: kv[1]):
            out.write(f"{j} {attribute}\n")


def mushroom(src, dst):
    records = [line.strip().split(",") for line in open(src) if line.strip()]
    n_attr = len(records[0]) - 1
    index = {}
    next_id = 1
    for a in range(1, n_attr + 1):
        values = sorted({r[a] for r in records})
        if len(values) <= 2:
            index[(a, values[-1])] = next_id
            next_id += 1
        else:
            for v in values:
                index[(a, v)] = next_id
                next_id += 1
    labels = ["1" if r[0] == "e" else "2" for r in records]
    rows = []
    for r in records:
        rows.append([index[(a, r[a])] for a in range(1, n_attr + 1)
                     if (a, r[a]) in index])
    write_sparse(dst, labels, rows, index)
    print(f"mushroom: {len(records)} rows, {next_id - 1} features")


def quantile_edges(values, bins):
    ordered = sorted(values)
    edges = []
    for b in range(1, bins):
        edges.append(ordered[(len(ordered) * b) // bins])
    return edges


def bin_of(x, edges):
    k = 0
    while k < len(edges) and x >= edges[k]:
        k += 1
    return k


ADULT_COLUMNS = [
    "age", "workclass", "fnlwgt", "education", "education-num",
    "marital-status", "occupation", "relationship", "race", "sex",
    "capital-gain", "capital-loss", "hours-per-week", "native-country",
    "income",
]


def adult(src, dst):
    rows_in = [[c.strip() for c in r] for r in csv.reader(open(src)) if r]
    if rows_in[0][0].isdigit():
        header, records = ADULT_COLUMNS, rows_in
    else:
        header, records = rows_in[0], rows_in[1:]
    col = {name: i for i, name in enumerate(header)}
    label_col = "loan" if "loan" in col else "income"
    binned = {"age": 5, "fnlwgt": 5, "education-num": 5, "hours-per-week": 5}
    zero_split = ["capital-gain", "capital-loss"]
    skip = {"", label_col}
    edges = {name: quantile_edges([float(r[col[name]]) for r in records], b)
             for name, b in binned.items()}
    index = {}
    next_id = 1
    for name in header:
        if name in skip:
            continue
        if name in binned:
            for k in sorted({bin_of(float(r[col[name]]), edges[name])
                             for r in records}):
                index[(name, k)] = next_id
                next_id += 1
        elif name in zero_split:
            for k in (0, 1):
                index[(name, k)] = next_id
                next_id += 1
        else:
            for v in sorted({r[col[name]] for r in records} - {"?"}):
                index[(name, v)] = next_id
                next_id += 1
    labels, rows = [], []
    for r in records:
        feats = []
        for name in header:
            if name in skip:
                continue
            if name in binned:
                key = (name, bin_of(float(r[col[name]]), edges[name]))
            elif name in zero_split:
                key = (name, 0 if float(r[col[name]]) == 0 else 1)
            else:
                key = (name, r[col[name]])
            if key in index:
                feats.append(index[key])
        rows.append(feats)
        labels.append("+1" if r[col[label_col]].startswith(">50K") else "-1")
    write_sparse(dst, labels, rows, index)
    print(f"adult: {len(records)} rows, {next_id - 1} features")


if __name__ == "__main__":
    if len(sys.argv) != 4 or sys.argv[1] not in ("mushroom", "adult"):
        sys.exit(__doc__)
    {"mushroom": mushroom, "adult": adult}[sys.argv[1]](sys.argv[2], sys.argv[3])

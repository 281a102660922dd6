#!/usr/bin/env python3
"""Regenerates the fixture instance files in this directory.

The z12modH tables are entered literally (row by row) and cross-checked
against the congruence-class arithmetic they came from; the other
fixtures are generated from modular arithmetic.
"""
import json
import os
from itertools import combinations_with_replacement

HERE = os.path.dirname(os.path.abspath(__file__))


def write(name, doc):
    path = os.path.join(HERE, name)
    with open(path, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
    print("wrote", path)


def trivial_ring(d, ideals=None, expansions=None, label=str):
    labels = [label(i) for i in range(d)]
    h = {}
    k = {}
    for a, b in combinations_with_replacement(range(d), 2):
        key = f"{labels[a]},{labels[b]}"
        h[key] = [labels[(a + b) % d]]
        k[key] = labels[(a * b) % d]
    doc = {
        "m": 2,
        "n": 2,
        "carrier": labels,
        "zero": labels[0],
        "one": labels[1 % d],
        "h": h,
        "k": k,
    }
    if ideals:
        doc["ideals"] = {n: [labels[i] for i in v] for n, v in ideals.items()}
    if expansions:
        doc["expansions"] = expansions
    return doc


# ---------------------------------------------------------------------------
# z12modH: congruence classes of Z_12 modulo the unit subgroup {1,5,7,11}.

CLASSES = {0: [0], 1: [1, 5, 7, 11], 2: [2, 10], 3: [3, 9], 4: [4, 8], 6: [6]}
CLASS_OF = {m: c for c, ms in CLASSES.items() for m in ms}
ORDER = [0, 1, 2, 3, 4, 6]

# The hyperaddition table, one row per class, entered literally.
OPLUS = {
    (0, 0): [0], (0, 1): [1], (0, 2): [2], (0, 3): [3], (0, 4): [4], (0, 6): [6],
    (1, 1): [0, 2, 4, 6], (1, 2): [1, 3], (1, 3): [2, 4], (1, 4): [1, 3], (1, 6): [1],
    (2, 2): [0, 4], (2, 3): [1], (2, 4): [2, 6], (2, 6): [4],
    (3, 3): [0, 6], (3, 4): [1], (3, 6): [3],
    (4, 4): [0, 4], (4, 6): [2],
    (6, 6): [0],
}


def check_z12modH():
    for (a, b), cell in OPLUS.items():
        derived = sorted({CLASS_OF[(x + y) % 12] for x in CLASSES[a] for y in CLASSES[b]})
        assert derived == sorted(cell), f"table cell {a}+{b}: {cell} vs derived {derived}"


def z12modH():
    check_z12modH()
    labels = [str(c) for c in ORDER]
    h = {}
    k = {}
    for i, j in combinations_with_replacement(range(6), 2):
        a, b = ORDER[i], ORDER[j]
        key = f"{a},{b}"
        h[key] = [str(c) for c in sorted(OPLUS[(a, b)])]
        k[key] = str(CLASS_OF[(a * b) % 12])
    return {
        "m": 2,
        "n": 2,
        "carrier": labels,
        "zero": "0",
        "one": "1",
        "h": h,
        "k": k,
        "ideals": {
            "Q": ["0", "2", "4", "6"],
            "P3": ["0", "3", "6"],
            "I6": ["0", "6"],
            "I4": ["0", "4"],
        },
    }


def rng2z8():
    labels = ["0", "2", "4", "6"]
    values = [0, 2, 4, 6]
    h = {}
    k = {}
    for i, j in combinations_with_replacement(range(4), 2):
        key = f"{labels[i]},{labels[j]}"
        h[key] = [str((values[i] + values[j]) % 8)]
        k[key] = str((values[i] * values[j]) % 8)
    return {"m": 2, "n": 2, "carrier": labels, "zero": "0", "h": h, "k": k}


def z4n3():
    labels = [str(i) for i in range(4)]
    h = {}
    for a, b in combinations_with_replacement(range(4), 2):
        h[f"{a},{b}"] = [str((a + b) % 4)]
    k = {}
    for a, b, c in combinations_with_replacement(range(4), 3):
        k[f"{a},{b},{c}"] = str((a * b * c) % 4)
    return {"m": 2, "n": 3, "carrier": labels, "zero": "0", "one": "1", "h": h, "k": k,
            "ideals": {"M": ["0", "2"]}}


def z9m3():
    labels = [str(i) for i in range(9)]
    h = {}
    for a, b, c in combinations_with_replacement(range(9), 3):
        h[f"{a},{b},{c}"] = [str((a + b + c) % 9)]
    k = {}
    for a, b in combinations_with_replacement(range(9), 2):
        k[f"{a},{b}"] = str((a * b) % 9)
    return {"m": 3, "n": 2, "carrier": labels, "zero": "0", "one": "1", "h": h, "k": k,
            "ideals": {"M": ["0", "3", "6"]}}


def main():
    write("z12modH.json", z12modH())
    write("z2.json", trivial_ring(2))
    write("z3.json", trivial_ring(3))
    write("z4.json", trivial_ring(
        4,
        ideals={"M": [0, 2], "Z": [0]},
        expansions={"toward_m": [[["0"], ["0", "2"]], [["0", "2"], ["0", "2"]],
                                 [["0", "1", "2", "3"], ["0", "1", "2", "3"]]]},
    ))
    write("z6.json", trivial_ring(6, ideals={"P2": [0, 2, 4], "P3": [0, 3]}))
    write("z8.json", trivial_ring(8, ideals={"M": [0, 2, 4, 6], "I4": [0, 4], "Z": [0]}))
    write("z12.json", trivial_ring(
        12, ideals={"P2": [0, 2, 4, 6, 8, 10], "P3": [0, 3, 6, 9], "I4": [0, 4, 8], "I6": [0, 6]}))
    write("zero.json", {"m": 2, "n": 2, "carrier": ["0"], "zero": "0", "one": "0",
                        "h": {"0,0": ["0"]}, "k": {"0,0": "0"}})
    write("rng2z8.json", rng2z8())
    write("z4n3.json", z4n3())
    write("z9m3.json", z9m3())


if __name__ == "__main__":
    main()

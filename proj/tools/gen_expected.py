#!/usr/bin/env python3
"""Writes data/expected_tables.json and data/centralizer_names.json.

The expected values are transcribed by hand below (closed-form rules for the
classical families, explicit rows for the exceptional groups). Nothing here
calls into the C++ library.
"""

import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
RANK = {"G2": 2, "F4": 4, "E6": 6, "E6*": 6, "E7": 7, "E7*": 7, "E8": 8}


def half(n, *ks, whole=()):
    c = ["0"] * n
    for k in ks:
        c[k - 1] = "1/2"
    for k in whole:
        c[k - 1] = "1"
    return ",".join(c)


def w(*ks):
    return ["w%d" % k for k in ks]


# (group, coefficient key, semisimple type, torus rank, components, centralizer, orbit)
ROWS = [
    ("G2", half(2, 1), "A1+A1", 0, 1, "SO(4)", True),
    ("F4", half(4, 1), "C4", 0, 1, "Spin(9)", True),
    ("F4", half(4, 4), "B3+A1", 0, 1, "(Sp(3) x Sp(1))/Z2", True),
    ("E6", half(6, 2), "A5+A1", 0, 1, "(SU(2) x SU(6))/Z2", True),
    ("E6", half(6, 1, 6), "D5", 1, 1, "(Spin(10) x S^1)/Z4", True),
    ("E6*", half(6, 1), "D5", 1, 1, "(Spin(10) x S^1)/Z4", True),
    ("E6*", half(6, 2), "A5+A1", 0, 1, "(SU(2) x SU(6)/Z3)/Z2", True),
    ("E6*", half(6, 3), "A5+A1", 0, 1, "(SU(2) x SU(6)/Z3)/Z2", False),
    ("E6*", half(6, 5), "A5+A1", 0, 1, "(SU(2) x SU(6)/Z3)/Z2", False),
    ("E6*", half(6, 6), "D5", 1, 1, "(Spin(10) x S^1)/Z4", False),
    ("E7", half(7, 1), "D6+A1", 0, 1, "(Spin(12) x SU(2))/Z2", True),
    ("E7", half(7, 6), "D6+A1", 0, 1, "(Spin(12) x SU(2))/Z2", True),
    ("E7", half(7, whole=(7,)), "E7", 0, 1, "E7", True),
    ("E7*", half(7, 1), "D6+A1", 0, 1, "(Ss(12) x SU(2))/Z2", True),
    ("E7*", half(7, 2), "A7", 0, 2, "[SU(8)/Z4]^2", True),
    ("E7*", half(7, 6), "D6+A1", 0, 1, "(Ss(12) x SU(2))/Z2", False),
    ("E7*", half(7, 7), "E6", 1, 2, "[(E6 x S^1)/Z3]^2", True),
    ("E8", half(8, 1), "D8", 0, 1, "Ss(16)", True),
    ("E8", half(8, 8), "E7+A1", 0, 1, "(E7 x SU(2))/Z2", True),
]

# order of F_G as listed in the first table
TABLE1_ORDER = {
    "G2": [half(2, 1)],
    "F4": [half(4, 1), half(4, 4)],
    "E6": [half(6, 2), half(6, 1, 6)],
    "E6*": [half(6, 1), half(6, 2)],
    "E7": [half(7, 1), half(7, 6), half(7, whole=(7,))],
    "E7*": [half(7, 1), half(7, 2), half(7, 7)],
    "E8": [half(8, 1), half(8, 8)],
}

# Voronoi survivors and merged pairs (kept, dropped)
K_SETS = {
    "E6*": [half(6, 1), half(6, 2), half(6, 6)],
    "E7*": [half(7, 1), half(7, 2), half(7, 7)],
}
MERGES = {"E6*": [[half(6, 1), half(6, 6)]]}


def orbit_name(group, key, centralizer):
    if group == "E7" and key == half(7, whole=(7,)):
        return "exp(w7)"
    if " " in centralizer and not centralizer.startswith("["):
        return "%s/(%s)" % (group, centralizer)
    return "%s/%s" % (group, centralizer)


def ex26(family, n):
    if family == "A":
        o1 = []
    elif family == "C":  # Sp(n)
        o1 = list(range(1, n))
    elif family == "B":  # Spin(2n+1)
        o1 = [i for i in range(1, n + 1) if i % 2 == 0]
    elif family == "D":  # Spin(2n)
        o1 = [i for i in range(1, n - 1) if i % 2 == 0]
    o2 = [i for i in range(1, n + 1) if i not in o1]
    return o1, o2


def ex28(family, n):
    if family == "A":
        pi = list(range(1, n + 1))
        tr = {k: n + 1 - k for k in range(1, n + 1)}
    elif family == "C":
        pi = [n]
        tr = {n: n}
    elif family == "B":
        pi = [1]
        tr = {k: 1 for k in range(1, n + 1, 2)}
    elif family == "D":
        pi = [1, n - 1, n]
        tr = {k: 1 for k in range(1, n - 1, 2)}
        if n % 2:
            tr[n - 1], tr[n] = n, n - 1
        else:
            tr[n], tr[n - 1] = n, n - 1
    return pi, tr


def main():
    groups = {}
    for g, key, typ, torus, comps, cname, _ in ROWS:
        groups.setdefault(g, {})[key] = {"centralizer": cname, "orbit": orbit_name(g, key, cname)}
    names = {"version": 1, "groups": groups}

    table2 = []
    for g in RANK:
        rows = [r for r in ROWS if r[0] == g]
        kprime = [r[1] for r in rows]
        table2.append({
            "group": g,
            "k_prime": [{"u": r[1], "type": r[2], "torus_rank": r[3], "centralizer": r[5]} for r in rows],
            "k": K_SETS.get(g, kprime),
            "merges": MERGES.get(g, []),
        })

    table1 = []
    for g, order in TABLE1_ORDER.items():
        by_key = {r[1]: r for r in ROWS if r[0] == g}
        table1.append({
            "group": g,
            "orbits": [{
                "u": k,
                "type": by_key[k][2],
                "torus_rank": by_key[k][3],
                "components": by_key[k][4],
                "centralizer": by_key[k][5],
                "orbit": orbit_name(g, k, by_key[k][5]),
            } for k in order],
        })

    ex26_rows, ex28_rows = [], []
    for fam in "ABCD":
        for n in range(3 if fam == "D" else 2, 9):
            o1, o2 = ex26(fam, n)
            ex26_rows.append({"group": "%s%d" % (fam, n), "omega1": w(*o1), "omega2": w(*o2)})
            pi, tr = ex28(fam, n)
            ex28_rows.append({"group": "%s%d" % (fam, n), "pi": w(*pi),
                              "tau_r": {"w%d" % k: "w%d" % v for k, v in sorted(tr.items())}})
    ex26_rows.append({"group": "E6", "omega1": w(2, 4), "omega2": w(1, 3, 5, 6)})
    ex26_rows.append({"group": "E7", "omega1": w(1, 3, 4, 6), "omega2": w(2, 5, 7)})
    for g in ("G2", "F4", "E8"):
        ex26_rows.append({"group": g, "omega1": w(*range(1, RANK[g] + 1)), "omega2": []})
    ex28_rows.append({"group": "E6", "pi": w(1, 6),
                      "tau_r": {"w1": "w6", "w3": "w1", "w5": "w6", "w6": "w1"}})
    ex28_rows.append({"group": "E7", "pi": w(7), "tau_r": {"w2": "w7", "w5": "w7", "w7": "w7"}})
    for g in ("G2", "F4", "E8"):
        ex28_rows.append({"group": g, "pi": [], "tau_r": {}})

    expected = {"version": 1, "table1": table1, "table2": table2, "ex26": ex26_rows, "ex28": ex28_rows}
    out = {"centralizer_names.json": names, "expected_tables.json": expected}
    for fname, doc in out.items():
        (ROOT / "data" / fname).write_text(json.dumps(doc, indent=2, sort_keys=False) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())

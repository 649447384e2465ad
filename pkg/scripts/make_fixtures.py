"""Regenerate the JSON fixtures under src/omk/data/.

Group files are written verbatim; the conjugated cyclic group and the
binary icosahedral generators are computed here with exact arithmetic.
Pair files hold the strata of minimal resolutions: for a tree of n
exceptional P^1's, E_i^o = L + 1 - deg(i), each edge contributes a point and
the complement of the exceptional locus is (C^2 - 0)/G with class L^2 - 1.

    python scripts/make_fixtures.py
"""

import json
import random
from fractions import Fraction
from pathlib import Path

from omk.exactnum import Cyclotomic, format_rational, parse_cyclotomic
from omk.matgroup import CycMatrix, determinant

DATA = Path(__file__).resolve().parents[1] / "src" / "omk" / "data"


def write(path, doc):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2) + "\n")


def preset(name, r, weights):
    return {"schema": "omk/1", "name": name, "degree": len(weights),
            "preset": {"kind": "cyclic", "r": r, "weights": list(weights)}}


def explicit(name, order, gens):
    return {"schema": "omk/1", "name": name, "degree": len(gens[0]),
            "cyclotomic_order": order, "generators": gens}


def binary_icosahedral():
    # Klein's generators over Q(zeta_5); sqrt5 = z - z^2 - z^3 + z^4
    inv5 = parse_cyclotomic("z - z^2 - z^3 + z^4", 5).inverse()
    a = parse_cyclotomic("z - z^4", 5) * inv5
    b = parse_cyclotomic("z^2 - z^3", 5) * inv5
    T = CycMatrix([[-a, b], [b, a]])
    return [[["z^3", "0"], ["0", "z^2"]], T.to_strings()]


def conjugated_cyclic(seed=7):
    rng = random.Random(seed)
    n = 7
    D = CycMatrix.diagonal([Cyclotomic.zeta(n, k) for k in (1, 2, 4)])
    while True:
        P = CycMatrix([[Cyclotomic.rational(n, rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)])
        if determinant(P).is_zero():
            continue
        g = P * D * P.inverse()
        off = [g.rows[i][j] for i in range(3) for j in range(3) if i != j]
        if all(not e.is_zero() for e in off):
            return [g.to_strings()]


GROUPS = {
    "trivial_2": explicit("trivial group in degree 2", 1, [[["1", "0"], ["0", "1"]]]),
    "z2_11": preset("1/2(1,1), A1", 2, [1, 1]),
    "z3_11": preset("1/3(1,1)", 3, [1, 1]),
    "z4_11": preset("1/4(1,1)", 4, [1, 1]),
    "z5_11": preset("1/5(1,1)", 5, [1, 1]),
    "z6_11": preset("1/6(1,1)", 6, [1, 1]),
    "z3_12": preset("1/3(1,2), A2", 3, [1, 2]),
    "z5_12": preset("1/5(1,2)", 5, [1, 2]),
    "z3_111": preset("1/3(1,1,1)", 3, [1, 1, 1]),
    "q8": explicit("quaternion group Q8, D4", 4, [
        [["0", "-1"], ["1", "0"]],
        [["z", "0"], ["0", "-z"]],
    ]),
    "binary_dihedral_12": explicit("binary dihedral group of order 12, D5", 6, [
        [["z", "0"], ["0", "z^5"]],
        [["0", "1"], ["-1", "0"]],
    ]),
    "binary_tetrahedral": explicit("binary tetrahedral group, E6", 4, [
        [["-1/2 + 1/2*z", "1/2 + 1/2*z"], ["-1/2 + 1/2*z", "-1/2 - 1/2*z"]],
        [["z", "0"], ["0", "-z"]],
    ]),
    "binary_octahedral": explicit("binary octahedral group, E7", 8, [
        [["-1/2 + 1/2*z^2", "1/2 + 1/2*z^2"], ["-1/2 + 1/2*z^2", "-1/2 - 1/2*z^2"]],
        [["z", "0"], ["0", "z^7"]],
    ]),
    "binary_icosahedral": explicit("binary icosahedral group, E8", 5, binary_icosahedral()),
    "z12xz12": explicit("Z/12 x Z/12 in SL3", 12, [
        [["z", "0", "0"], ["0", "z^11", "0"], ["0", "0", "1"]],
        [["1", "0", "0"], ["0", "z", "0"], ["0", "0", "z^11"]],
    ]),
    "z10xz10": explicit("Z/10 x Z/10 in SL3", 10, [
        [["z", "0", "0"], ["0", "z^9", "0"], ["0", "0", "1"]],
        [["1", "0", "0"], ["0", "z", "0"], ["0", "0", "z^9"]],
    ]),
    "frobenius21": explicit("Frobenius group of order 21 in SL3", 7, [
        [["z", "0", "0"], ["0", "z^2", "0"], ["0", "0", "z^4"]],
        [["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]],
    ]),
    "z7_conjugated": explicit("1/7(1,2,4) conjugated by a random integer matrix", 7, conjugated_cyclic()),
    "s3_reflection": explicit("S3 reflection representation", 1, [
        [["-1", "1"], ["0", "1"]],
        [["1", "0"], ["1", "-1"]],
    ]),
}

# Dynkin trees (node count, edges)
TREES = {
    "A1": (1, []),
    "A2": (2, [(1, 2)]),
    "D4": (4, [(1, 2), (1, 3), (1, 4)]),
    "D5": (5, [(1, 2), (2, 3), (3, 4), (3, 5)]),
    "E6": (6, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]),
    "E7": (7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]),
    "E8": (8, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8)]),
}


def weight_str(c0, c1):
    # c1*L + c0
    parts = []
    if c1:
        parts.append("L" if c1 == 1 else f"{c1}*L")
    if c0 or not parts:
        if parts:
            parts.append(f"+ {c0}" if c0 > 0 else f"- {-c0}")
        else:
            parts.append(str(c0))
    return " ".join(parts)


def ade_pair(name, n, edges):
    deg = {i: 0 for i in range(1, n + 1)}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    strata = [{"components": [], "class": "L^2 - 1"}]
    strata += [{"components": [f"E{i}"], "class": weight_str(1 - deg[i], 1)} for i in range(1, n + 1)]
    strata += [{"components": [f"E{a}", f"E{b}"], "class": "1"} for a, b in edges]
    return {
        "schema": "omk/1",
        "name": f"minimal resolution of the {name} singularity",
        "ambient": f"L^2 + {n}*L" if n > 1 else "L^2 + L",
        "components": [{"id": f"E{i}", "coefficient": "0"} for i in range(1, n + 1)],
        "strata": strata,
    }


def cyclic_11_pair(r):
    # one exceptional curve of self-intersection -r, discrepancy 2/r - 1
    e = Fraction(2, r) - 1
    return {
        "schema": "omk/1",
        "name": f"minimal resolution of 1/{r}(1,1)",
        "ambient": "L^2 + L",
        "components": [{"id": "E", "coefficient": format_rational(e)}],
        "strata": [
            {"components": [], "class": "L^2 - 1"},
            {"components": ["E"], "class": "L + 1"},
        ],
    }


PAIRS = {
    **{f"{k.lower()}_resolution": ade_pair(k, *v) for k, v in TREES.items()},
    **{f"z{r}_11_resolution": cyclic_11_pair(r) for r in range(3, 7)},
    "log_canonical_divergent": {
        "schema": "omk/1",
        "name": "one component with coefficient -1 (not KLT)",
        "ambient": "L^2",
        "components": [{"id": "E", "coefficient": "-1"}],
        "strata": [
            {"components": [], "class": "L^2 - L - 1"},
            {"components": ["E"], "class": "L + 1"},
        ],
    },
}


def main():
    for name, doc in GROUPS.items():
        write(DATA / "groups" / f"{name}.json", doc)
    for name, doc in PAIRS.items():
        write(DATA / "pairs" / f"{name}.json", doc)
    print(f"wrote {len(GROUPS)} group files and {len(PAIRS)} pair files to {DATA}")


if __name__ == "__main__":
    main()

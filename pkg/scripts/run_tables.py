#!/usr/bin/env python3
"""Print invariant tables for every shipped fixture.

One row per group: order, class count, SL flag, McKay counts, discrepancy and
orbifold weight. A second table compares each resolution fixture's stringy
invariant with the orbifold weight of its group.

    python3 scripts/run_tables.py
    python3 scripts/run_tables.py --groups q8 binary_icosahedral --json
"""

import argparse
import json
import sys
import warnings
from dataclasses import asdict, dataclass, field
from importlib.resources import files

from omk.cli import build_group, load_group_spec, pair_data_from_dict, _read_json
from omk.errors import OmkError
from omk.invariants import NonSLWarning, klt_nc, mckay_betti, minimal_age_class, orbifold_weight, stringy_nc
from omk.matgroup import DEFAULT_CAP, is_subgroup_of_SL
from omk.motivic import format_weight
from omk.sectors import inertia_decomposition

# resolution fixture -> group whose quotient it resolves
TWO_ROUTE = {
    "a1_resolution": "z2_11",
    "a2_resolution": "z3_12",
    "d4_resolution": "q8",
    "d5_resolution": "binary_dihedral_12",
    "e6_resolution": "binary_tetrahedral",
    "e7_resolution": "binary_octahedral",
    "e8_resolution": "binary_icosahedral",
    "z3_11_resolution": "z3_11",
    "z4_11_resolution": "z4_11",
    "z5_11_resolution": "z5_11",
    "z6_11_resolution": "z6_11",
}


@dataclass
class TableConfig:
    groups: list = field(default_factory=list)  # empty means all fixtures
    cap: int = DEFAULT_CAP
    as_json: bool = False
    two_route: bool = True


def _fixtures(kind):
    root = files("omk") / "data" / kind
    return {p.name[:-5]: p for p in sorted(root.iterdir(), key=lambda p: p.name) if p.name.endswith(".json")}


def group_row(name, path, cap):
    G = build_group(load_group_spec(path), cap)
    sectors = inertia_decomposition(G)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonSLWarning)
        betti = mckay_betti(G, sectors)
    try:
        _, a = minimal_age_class(G, sectors)
        disc = str(a - 1)
    except OmkError as exc:
        disc = exc.code
    return {
        "group": name,
        "order": len(G),
        "classes": G.num_classes,
        "SL": is_subgroup_of_SL(G),
        "mckay": " ".join(f"{i}:{n}" for i, n in betti.items()),
        "discrepancy": disc,
        "orbifold_weight": format_weight(orbifold_weight(G, sectors)),
    }


def two_route_row(pair_name, group_name, cap):
    data = pair_data_from_dict(_read_json(_fixtures("pairs")[pair_name]))[0]
    G = build_group(load_group_spec(_fixtures("groups")[group_name]), cap)
    st, orb = stringy_nc(data), orbifold_weight(G)
    return {
        "pair": pair_name,
        "group": group_name,
        "stringy": format_weight(st),
        "orbifold": format_weight(orb),
        "agree": st == orb,
        "klt": klt_nc(data.as_boundary()),
    }


def print_table(rows):
    if not rows:
        return
    headers = list(rows[0])
    cells = [headers] + [[str(r[h]) for h in headers] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(headers))]
    for k, line in enumerate(cells):
        print("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip())
        if k == 0:
            print("  ".join("-" * w for w in widths))


def run(cfg):
    groups = _fixtures("groups")
    names = cfg.groups or list(groups)
    unknown = [n for n in names if n not in groups]
    if unknown:
        raise SystemExit(f"unknown group fixture(s): {', '.join(unknown)}")
    result = {"config": asdict(cfg), "groups": [group_row(n, groups[n], cfg.cap) for n in names]}
    if cfg.two_route:
        result["two_route"] = [
            two_route_row(p, g, cfg.cap) for p, g in TWO_ROUTE.items() if not cfg.groups or g in cfg.groups
        ]
    return result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="*", default=[])
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--no-two-route", action="store_true")
    a = ap.parse_args(argv)
    cfg = TableConfig(groups=a.groups, cap=a.cap, as_json=a.json, two_route=not a.no_two_route)
    result = run(cfg)
    if cfg.as_json:
        json.dump(result, sys.stdout, indent=2, sort_keys=True)
        print()
        return 0
    print_table(result["groups"])
    if result.get("two_route"):
        print()
        print_table(result["two_route"])
    return 0 if all(r["agree"] for r in result.get("two_route", [])) else 1


if __name__ == "__main__":
    sys.exit(main())

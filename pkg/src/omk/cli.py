"""``omk`` command line front end.

    omk sectors|mckay|discrepancy|orbifold-weight|stringy [--json] [--cap N] FILE

Group files are JSON documents holding either explicit generators (grids of
cyclotomic expressions in ``z``) or a cyclic preset; pair files describe
normal-crossing strata.  With ``--json`` a versioned ``omk/1`` document is
printed; identical inputs always give identical bytes.
"""

import argparse
import hashlib
import json
import math
import os
import sys
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .errors import InputError, NonFaithfulPreset, OmkError, ParseError
from .exactnum import Cyclotomic, format_rational, parse_cyclotomic
from .invariants import (
    Component,
    NCPairData,
    NonSLWarning,
    Stratum,
    klt_nc,
    mckay_betti,
    minimal_age_class,
    orbifold_weight,
    stringy_nc,
)
from .matgroup import DEFAULT_CAP, CycMatrix, close_group, is_subgroup_of_SL
from .motivic import parse_weight
from .sectors import inertia_decomposition

SCHEMA = "omk/1"


@dataclass(frozen=True)
class GroupSpec:
    degree: int
    cyclotomic_order: int
    generators: tuple = None
    preset: dict = None
    name: str = ""


@dataclass
class JobResult:
    command: str
    inputs_digest: str
    outputs: dict
    warnings: list = field(default_factory=list)

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "outputs": self.outputs,
            "warnings": list(self.warnings),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


# --------------------------------------------------------------------------
# input
# --------------------------------------------------------------------------


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}", file=str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}",
            file=str(path), line=exc.lineno, column=exc.colno,
        ) from None


def _positive_int(doc, key, where):
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InputError(f"{where}: '{key}' must be a positive integer", field=key)
    return value


def group_spec_from_dict(doc, where="<input>"):
    if not isinstance(doc, dict):
        raise InputError(f"{where}: group document must be a JSON object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise InputError(f"{where}: unsupported schema {schema!r}", field="schema")
    degree = _positive_int(doc, "degree", where)
    has_gens, has_preset = "generators" in doc, "preset" in doc
    if has_gens == has_preset:
        raise InputError(f"{where}: exactly one of 'generators' and 'preset' is required")
    name = str(doc.get("name", ""))
    if has_preset:
        p = doc["preset"]
        if not isinstance(p, dict) or p.get("kind") != "cyclic":
            raise InputError(f"{where}: preset must be {{'kind': 'cyclic', ...}}", field="preset")
        r = _positive_int(p, "r", where + ": preset")
        weights = p.get("weights")
        if (
            not isinstance(weights, list)
            or len(weights) != degree
            or not all(isinstance(a, int) and not isinstance(a, bool) for a in weights)
        ):
            raise InputError(f"{where}: preset weights must be {degree} integers", field="preset.weights")
        preset = {"kind": "cyclic", "r": r, "weights": tuple(a % r for a in weights)}
        return GroupSpec(degree, r, preset=preset, name=name)
    order = _positive_int(doc, "cyclotomic_order", where)
    gens = doc["generators"]
    if not isinstance(gens, list) or not gens:
        raise InputError(f"{where}: 'generators' must be a nonempty list", field="generators")
    for k, g in enumerate(gens):
        ok = isinstance(g, list) and len(g) == degree and all(
            isinstance(row, list) and len(row) == degree for row in g
        )
        if not ok:
            raise InputError(f"{where}: generators[{k}] must be a {degree}x{degree} grid")
    grids = tuple(tuple(tuple(row) for row in g) for g in gens)
    return GroupSpec(degree, order, generators=grids, name=name)


def load_group_spec(path):
    return group_spec_from_dict(_read_json(path), str(path))


def spec_generators(spec):
    if spec.preset is not None:
        r = spec.preset["r"]
        return [CycMatrix.diagonal([Cyclotomic.zeta(r, a) for a in spec.preset["weights"]])]
    out = []
    for k, grid in enumerate(spec.generators):
        rows = []
        for i, row in enumerate(grid):
            entries = []
            for j, text in enumerate(row):
                loc = f"generators[{k}][{i}][{j}]"
                try:
                    entries.append(parse_cyclotomic(text, spec.cyclotomic_order))
                except ParseError as exc:
                    exc.details["location"] = loc
                    exc.message = f"{loc}: {exc.message}"
                    exc.args = (exc.message,)
                    raise
            rows.append(entries)
        out.append(CycMatrix(rows))
    return out


def build_group(spec, cap=DEFAULT_CAP):
    gens = spec_generators(spec)
    G = close_group(gens, cap=cap)
    if spec.preset is not None and len(G) < spec.preset["r"]:
        raise NonFaithfulPreset(
            f"preset 1/{spec.preset['r']}{tuple(spec.preset['weights'])} generates a group "
            f"of order {len(G)} < {spec.preset['r']}",
            group_order=len(G),
        )
    return G


def group_digest(G):
    payload = {
        "degree": G.degree,
        "cyclotomic_order": G.order,
        "generators": [g.to_strings() for g in G.generators],
    }
    return _digest(payload)


def _digest(payload):
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()


def pair_data_from_dict(doc, where="<input>"):
    if not isinstance(doc, dict):
        raise InputError(f"{where}: pair document must be a JSON object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise InputError(f"{where}: unsupported schema {schema!r}", field="schema")

    def weight(text, loc):
        try:
            return parse_weight(text)
        except ParseError as exc:
            exc.details["location"] = loc
            exc.message = f"{loc}: {exc.message}"
            exc.args = (exc.message,)
            raise

    def rational(value, loc):
        try:
            if isinstance(value, bool) or not isinstance(value, (int, str)):
                raise ValueError
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"{where}: {loc} must be an exact rational ('p/q' or integer)") from None

    if "ambient" not in doc or "strata" not in doc:
        raise InputError(f"{where}: 'ambient' and 'strata' are required")
    ambient = weight(doc["ambient"], "ambient")
    components = []
    for k, c in enumerate(doc.get("components", [])):
        if not isinstance(c, dict) or "id" not in c or "coefficient" not in c:
            raise InputError(f"{where}: components[{k}] needs 'id' and 'coefficient'")
        components.append(Component(
            str(c["id"]),
            rational(c["coefficient"], f"components[{k}].coefficient"),
            bool(c.get("meets_W", True)),
        ))
    strata = []
    for k, s in enumerate(doc["strata"]):
        if not isinstance(s, dict) or "class" not in s:
            raise InputError(f"{where}: strata[{k}] needs 'class'")
        strata.append(Stratum(
            frozenset(str(c) for c in s.get("components", [])),
            weight(s["class"], f"strata[{k}].class"),
        ))
    data = NCPairData(ambient, tuple(components), tuple(strata))
    return data, bool(doc.get("W_restricted", False))


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def _q(x):
    return format_rational(x)


def _dim(d):
    if d == math.inf:
        return "infinity"
    if d == -math.inf:
        return "-infinity"
    return _q(d)


def _group_header(G, sectors):
    return {
        "degree": G.degree,
        "cyclotomic_order": G.order,
        "group_order": len(G),
        "num_classes": len(sectors),
        "is_SL": is_subgroup_of_SL(G),
    }


def cmd_sectors(spec, cap=DEFAULT_CAP):
    G = build_group(spec, cap)
    sectors = inertia_decomposition(G)
    out = _group_header(G, sectors)
    out["sectors"] = [
        {
            "class_index": s.class_index,
            "class_size": s.class_size,
            "representative": G.elements[G.class_reps[s.class_index]].to_strings(),
            "order": s.order,
            "exponent_multiplicities": list(s.exponent_mult),
            "age": _q(s.age),
            "shift": _q(s.shift),
            "fixed_dim": s.fixed_dim,
            "centralizer_order": s.centralizer_order,
        }
        for s in sectors
    ]
    return JobResult("sectors", group_digest(G), out)


def cmd_mckay(spec, cap=DEFAULT_CAP):
    G = build_group(spec, cap)
    sectors = inertia_decomposition(G)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", NonSLWarning)
        betti = mckay_betti(G, sectors)
    out = _group_header(G, sectors)
    out["betti"] = [{"i": _q(i), "n": n} for i, n in betti.items()]
    out["total"] = sum(betti.values())
    msgs = [str(w.message) for w in caught if issubclass(w.category, NonSLWarning)]
    return JobResult("mckay", group_digest(G), out, msgs)


def cmd_discrepancy(spec, cap=DEFAULT_CAP):
    G = build_group(spec, cap)
    sectors = inertia_decomposition(G)
    c, a = minimal_age_class(G, sectors)
    out = _group_header(G, sectors)
    out.update({
        "discrepancy": _q(a - 1),
        "minimizing_class": c,
        "minimizing_age": _q(a),
        "minimizing_representative": G.elements[G.class_reps[c]].to_strings(),
    })
    return JobResult("discrepancy", group_digest(G), out)


def cmd_orbifold_weight(spec, cap=DEFAULT_CAP):
    G = build_group(spec, cap)
    sectors = inertia_decomposition(G)
    w = orbifold_weight(G, sectors)
    out = _group_header(G, sectors)
    out.update({"weight": str(w), "dim": _dim(w.dim()), "euler": _q(w.evaluate(1))})
    return JobResult("orbifold-weight", group_digest(G), out)


def cmd_stringy(data, W_restricted=False, digest=""):
    w = stringy_nc(data)
    out = {
        "weight": str(w),
        "dim": _dim(w.dim()),
        "klt": klt_nc(data.as_boundary(), W_restricted),
        "W_restricted": W_restricted,
        "euler": _q(w.evaluate(1)) if w.is_polynomial() else None,
    }
    return JobResult("stringy", digest, out)


def pair_digest(data, W_restricted):
    payload = {
        "ambient": str(data.ambient_class),
        "components": [
            [c.id, _q(c.coefficient), c.meets_W] for c in sorted(data.components, key=lambda c: c.id)
        ],
        "strata": sorted([sorted(s.components), str(s.open_class)] for s in data.strata),
        "W_restricted": W_restricted,
    }
    return _digest(payload)


GROUP_COMMANDS = {
    "sectors": cmd_sectors,
    "mckay": cmd_mckay,
    "discrepancy": cmd_discrepancy,
    "orbifold-weight": cmd_orbifold_weight,
}


def run(command, path, cap=DEFAULT_CAP):
    if command == "stringy":
        data, restricted = pair_data_from_dict(_read_json(path), str(path))
        return cmd_stringy(data, restricted, pair_digest(data, restricted))
    return GROUP_COMMANDS[command](load_group_spec(path), cap)


# --------------------------------------------------------------------------
# text rendering
# --------------------------------------------------------------------------


def _table(headers, rows):
    cols = [headers] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(headers))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in cols[1:]:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return "\n".join(lines)


def render_text(result):
    o = result.outputs
    lines = []
    if "group_order" in o:
        lines.append(
            f"|G| = {o['group_order']}, degree {o['degree']}, Q(zeta_{o['cyclotomic_order']}), "
            f"{o['num_classes']} classes, in SL: {'yes' if o['is_SL'] else 'no'}"
        )
    if result.command == "sectors":
        rows = [
            [s["class_index"], s["class_size"], s["order"],
             " ".join(map(str, s["exponent_multiplicities"])), s["age"], s["shift"],
             s["fixed_dim"], s["centralizer_order"]]
            for s in o["sectors"]
        ]
        lines.append(_table(["class", "size", "order", "mult", "age", "shift", "fix", "|C_g|"], rows))
    elif result.command == "mckay":
        lines.append(_table(["i", "n_i"], [[b["i"], b["n"]] for b in o["betti"]]))
        lines.append(f"sum n_i = {o['total']}")
    elif result.command == "discrepancy":
        lines.append(f"discrepancy = {o['discrepancy']}")
        lines.append(f"minimizing class {o['minimizing_class']} (age {o['minimizing_age']})")
    elif result.command == "orbifold-weight":
        lines.append(f"weight = {o['weight']}")
        lines.append(f"dim = {o['dim']}, value at L=1: {o['euler']}")
    elif result.command == "stringy":
        lines.append(f"stringy invariant = {o['weight']}")
        lines.append(f"dim = {o['dim']}")
        lines.append(f"KLT: {'true' if o['klt'] else 'false'}")
        if o["euler"] is not None:
            lines.append(f"value at L=1: {o['euler']}")
    for w in result.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------


def _cap_default():
    env = os.environ.get("OMK_CAP")
    if env is None:
        return DEFAULT_CAP
    try:
        cap = int(env)
    except ValueError:
        cap = 0
    if cap < 1:
        raise InputError(f"OMK_CAP must be a positive integer, got {env!r}", field="OMK_CAP")
    return cap


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit an omk/1 JSON document")
    common.add_argument("--cap", type=int, default=None,
                        help=f"group closure cap (default: $OMK_CAP or {DEFAULT_CAP})")
    common.add_argument("file")
    parser = argparse.ArgumentParser(prog="omk", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"omk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("sectors", parents=[common], help="twisted-sector table")
    sub.add_parser("mckay", parents=[common], help="homological McKay counts n_i")
    sub.add_parser("discrepancy", parents=[common], help="discrepancy of C^d/G")
    sub.add_parser("orbifold-weight", parents=[common], help="sum of L^(d - age) over classes")
    sub.add_parser("stringy", parents=[common], help="stringy invariant of a normal-crossing pair")
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        cap = args.cap if args.cap is not None else _cap_default()
        if cap < 1:
            raise InputError("--cap must be positive", field="cap")
        result = run(args.command, args.file, cap)
    except OmkError as exc:
        if args.json:
            doc = {"schema": SCHEMA, "command": args.command, "error": exc.to_dict()}
            stdout.write(json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n")
        else:
            stderr.write(f"omk: error [{exc.code}]: {exc.message}\n")
        return exc.exit_code
    stdout.write(result.to_json() if args.json else render_text(result))
    return 0


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()

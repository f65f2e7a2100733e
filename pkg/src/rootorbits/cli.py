"""Command line entry point: ``rootorbits <classify|orbits|table|verify|plot>``.

Exit status is 0 on success, 1 when a verification or table comparison
fails, and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from .cartan import CartanData, affine_frame, parse_cartan
from .catalog import MIN_RANK, TWISTED_LABELS, builtin_system, from_name
from .errors import RootOrbitsError
from .orbits import classify_orbit, finite_transversal, transversal_inf, upsilon_fin
from .spectral import spectral_summary, gamma_c
from .table import DEFAULT_ROWS, diff_table, golden_table, format_root
from .verify import verify_system
from .weyl import CoxeterWord, make_coxeter, standard_word


class InputError(Exception):
    """Malformed command-line input; exit status 2."""


def _emit(obj, fmt: str, out=None) -> None:
    stream = out or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        stream.write(_text(obj) + "\n")


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in _values(v)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {_inline(x)}" if not isinstance(x, dict) else f"{pad}-\n" + _text(x, indent + 1)
                         for x in obj)
    return pad + _inline(obj)


def _values(v):
    return v.values() if isinstance(v, dict) else v


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_inline(x)}" for k, x in sorted(v.items())) + "}"
    return str(v)


def _parse_word(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"bad --word {text!r}: expected comma-separated integers")


def _parse_range(text: str) -> range:
    try:
        a, b = text.split(":")
        a, b = int(a), int(b)
    except ValueError:
        raise InputError(f"bad --mrange {text!r}: expected A:B")
    if a > b:
        raise InputError(f"bad --mrange {text!r}: empty interval")
    return range(a, b + 1)


def _parse_vector(text: str, n: int, delta=None):
    t = text.strip().lower()
    if t.endswith("delta"):
        if delta is None:
            raise InputError("delta seeds need an affine system")
        m = t[: -len("delta")] or "1"
        m = -1 if m == "-" else int(m)
        return tuple(m * x for x in delta)
    try:
        v = tuple(int(x) for x in t.split(","))
    except ValueError:
        raise InputError(f"bad --seed {text!r}")
    if len(v) != n:
        raise InputError(f"--seed {text!r} has {len(v)} entries, expected {n}")
    return v


def _load_matrix(arg: str) -> CartanData:
    text = arg
    if arg.startswith("@"):
        try:
            with open(arg[1:]) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {arg[1:]}: {exc}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"--matrix is not valid JSON: {exc}")
    label = None
    if isinstance(data, dict):
        label = data.get("label")
        data = data.get("matrix")
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError("--matrix must be a list of rows")
    return parse_cartan(data, label=label)


def _system(args) -> CartanData:
    if args.matrix is not None:
        return _load_matrix(args.matrix)
    if args.type is None:
        raise InputError("give --type or --matrix")
    if args.n is not None:
        label = args.type
        # bare family letters with a rank name the affine family
        if len(label) == 2 and label[0].isalpha() and label[1] in "123":
            label = f"{label[0]}({label[1]})"
        return builtin_system(label, args.n, args.k)
    if args.k is not None:
        raise InputError("--k needs --n")
    return from_name(args.type)


def _word(args, cd: CartanData) -> CoxeterWord:
    w = _parse_word(args.word)
    return standard_word(cd) if w is None else make_coxeter(cd, w)


def _vec(v):
    return [int(x) for x in v]


def cmd_classify(args) -> int:
    cd = _system(args)
    report = cd.to_dict()
    if cd.is_affine:
        report["frame"] = affine_frame(cd, args.aff).to_dict()
    _emit(report, args.format)
    return 0


def cmd_orbits(args) -> int:
    cd = _system(args)
    if not cd.is_affine:
        raise InputError(f"orbits needs an affine matrix, got {cd.typeclass}")
    c = _word(args, cd)
    frame = affine_frame(cd, args.aff)
    gd = gamma_c(cd, frame, c)
    ud = upsilon_fin(cd, frame, c, gd)
    mr = _parse_range(args.mrange)
    report = {
        "system": cd.label or "matrix",
        "word": list(c.order),
        "frame": frame.to_dict(),
        "action": [list(r) for r in c.action],
        "spectral": spectral_summary(cd, c, args.aff),
        "transversal_inf": transversal_inf(cd, c).to_dict(),
        "upsilon": ud.to_dict(),
        "kappa": [[_vec(b), k] for b, k in ud.kappa_of.items()],
        "finite_transversal": [_vec(v) for v in finite_transversal(ud, frame, mr)],
    }
    seeds = []
    for s in args.seed or []:
        v = _parse_vector(s, cd.n, frame.delta)
        seeds.append(classify_orbit(cd, frame, c, gd, v, args.M, ud).to_dict())
    if seeds:
        report["seeds"] = seeds
    _emit(report, args.format)
    return 0


def _read_golden(path: str):
    with open(path) as fh:
        data = json.load(fh)
    out = {}
    for row in data:
        key = (row["family"], row["n"], row.get("k"))
        out[key] = {
            "components": [[{int(i): int(x) for i, x in r.items()} for r in comp] for comp in row["components"]],
            "diagram": row["diagram"],
            "kappa": row["kappa"],
        }
    return out


def golden_to_json(golden) -> list:
    rows = []
    for (fam, n, k), row in golden.items():
        rows.append({
            "family": fam, "n": n, "k": k,
            "components": [[{str(i): x for i, x in sorted(r.items())} for r in comp] for comp in row["components"]],
            "diagram": row["diagram"],
            "kappa": list(row["kappa"]),
        })
    return rows


def _table_rows(args):
    if args.type is None:
        return DEFAULT_ROWS
    fam = args.type if "(" in args.type else f"{args.type[0]}(1)"
    if args.n is None:
        rows = tuple(r for r in DEFAULT_ROWS if r[0] == fam)
        if not rows:
            raise InputError(f"no table row for {args.type!r}")
        return rows
    k = args.k if fam == "A(1)" else None
    return ((fam, args.n, k),)


def cmd_table(args, golden=None) -> int:
    rows = _table_rows(args)
    if golden is None and args.golden:
        golden = _read_golden(args.golden)
    if golden is None:
        golden = golden_table(rows)
    regenerated, diffs = diff_table(golden, rows)
    report = {"rows": [r.to_dict() for r in regenerated], "diffs": diffs, "passed": not diffs}
    if args.format == "text":
        lines = []
        for r in regenerated:
            lines.append(f"{r.name}: {r.diagram}; kappa {r.kappa}")
            for i, b in enumerate(b for comp in r.components for b in comp):
                lines.append(f"  beta{i + 1} = {format_root(b)}")
        for d in diffs:
            lines.append(f"DIFF {d['system']} {d['field']}: expected {d['expected']}, got {d['got']}")
        lines.append("table matches" if not diffs else f"{len(diffs)} difference(s)")
        (args.out_stream or sys.stdout).write("\n".join(lines) + "\n")
    else:
        _emit(report, "json", args.out_stream)
    return 0 if not diffs else 1


def _catalog_systems() -> List[CartanData]:
    systems = [builtin_system(*key) for key in DEFAULT_ROWS]
    systems += [builtin_system(lab, MIN_RANK[lab]) for lab in TWISTED_LABELS]
    systems.append(builtin_system("A(1)", 2))
    return systems


def cmd_verify(args) -> int:
    systems = _catalog_systems() if args.all_catalog else [_system(args)]
    rng = random.Random(args.rng_seed)
    reports = []
    for cd in sorted(systems, key=lambda s: s.label or ""):
        words = [standard_word(cd) if args.all_catalog else _word(args, cd)]
        for _ in range(args.words):
            w = list(range(1, cd.n + 1))
            rng.shuffle(w)
            words.append(make_coxeter(cd, w))
        for c in words:
            rep = verify_system(
                cd, c, M=args.M or 12, m_range=_parse_range(args.mrange), H=args.height,
                aff=None if args.all_catalog else args.aff, Kmax=args.kmax,
            )
            reports.append(rep)
    ok = all(r.passed for r in reports)
    summary = {
        "passed": ok,
        "reports": [r.to_dict() for r in reports],
        "failed": [{"system": r.system, "word": r.word, "checks": r.failed} for r in reports if not r.passed],
    }
    if args.format == "text":
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.system} c={r.word}" + (f" {r.failed}" if r.failed else "")
                 for r in reports]
        lines.append("all checks passed" if ok else "verification FAILED")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        _emit(summary, "json")
    return 0 if ok else 1


def cmd_plot(args) -> int:
    from .plot import render_svg

    cd = _system(args)
    c = _word(args, cd)
    svg = render_svg(cd, c, H=args.height or 9, aff=args.aff)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rootorbits", description="Coxeter-element orbits on affine root systems.")
    p.add_argument("command", choices=["classify", "orbits", "table", "verify", "plot"])
    p.add_argument("--type", help="family label with --n (e.g. D2, A(2)odd), else a type name (e.g. E6(1))")
    p.add_argument("--n", type=int, help="rank (number of nodes)")
    p.add_argument("--k", type=int, help="class of the A(1) cycle labelling")
    p.add_argument("--matrix", help="JSON matrix, {\"matrix\":..., \"label\":...}, or @file")
    p.add_argument("--word", help="Coxeter word, e.g. 1,2,3")
    p.add_argument("--aff", type=int, help="affine node (1-based)")
    p.add_argument("--M", type=int, help="orbit window half-width")
    p.add_argument("--mrange", default="-3:3", help="finite transversal range A:B")
    p.add_argument("--height", type=int, help="height bound for enumerated roots")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--seed", action="append", help="orbit seed: comma vector or mdelta (repeatable)")
    p.add_argument("--words", type=int, default=0, help="extra random words per system for verify")
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--all-catalog", action="store_true")
    p.add_argument("--golden", help="JSON golden table to compare against")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out", help="output path")
    return p


COMMANDS = {
    "classify": cmd_classify,
    "orbits": cmd_orbits,
    "table": cmd_table,
    "verify": cmd_verify,
    "plot": cmd_plot,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.out_stream = None
    for name, val in (("M", args.M), ("height", args.height), ("kmax", args.kmax)):
        if val is not None and val <= 0:
            sys.stderr.write(f"error: --{name} must be positive\n")
            return 2
    try:
        if args.out and args.command not in ("plot",):
            with open(args.out, "w") as fh:
                args.out_stream = fh
                saved, sys.stdout = sys.stdout, fh
                try:
                    return COMMANDS[args.command](args)
                finally:
                    sys.stdout = saved
        return COMMANDS[args.command](args)
    except (InputError, RootOrbitsError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2

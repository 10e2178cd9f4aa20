"""Batch command-line frontend.

    degsl dims --n 3 --mult "1,1:1;1,2:1"
    degsl relations --n 3
    degsl qdim --n 3 --mult "1,1:1;2,2:1"

Exit codes: 0 success, 1 failed check, 2 invalid input, 3 resource cap.
Conjecture checks only fail the process under --assert.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .errors import InvalidInput, ResourceCapExceeded, TheoremCheckFailed
from .roots import (
    MultDegree,
    RootIndex,
    all_multidegrees,
    enumerate_polytope,
    graded_counts,
    positive_roots,
)

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

_ENTRY_RE = re.compile(r"\s*(\d+)\s*,\s*(\d+)\s*:\s*(\d+)\s*$")


def mult_parse(text: str, n: int | None) -> MultDegree:
    """Parse "i,j:m;..." or a path to a MultDegree JSON file."""
    if text is None:
        if n is None:
            raise InvalidInput("--n is required")
        return MultDegree.zero(n)
    if text.endswith(".json") or os.path.isfile(text):
        try:
            with open(text) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"cannot read MultDegree file {text!r}: {exc}") from exc
        m = MultDegree.from_json(data)
        if n is not None and m.n != n:
            raise InvalidInput(f"file declares n={m.n} but --n {n} was given")
        return m
    if n is None:
        raise InvalidInput("--n is required with an inline --mult")
    entries = {}
    offset = 0
    for chunk in text.split(";"):
        if chunk.strip():
            mt = _ENTRY_RE.match(chunk)
            if not mt:
                raise InvalidInput(
                    f"malformed --mult entry {chunk.strip()!r} at position {offset}; expected i,j:m"
                )
            i, j, mult = map(int, mt.groups())
            if not 1 <= i <= j <= n - 1:
                raise InvalidInput(
                    f"--mult entry at position {offset}: ({i},{j}) is not a positive root for n={n}"
                )
            if (i, j) in entries:
                raise InvalidInput(f"--mult entry at position {offset}: duplicate pair ({i},{j})")
            entries[(i, j)] = mult
        offset += len(chunk) + 1
    return MultDegree.from_dict(n, entries)


def _root(text: str, n: int) -> RootIndex:
    mt = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", text or "")
    if not mt:
        raise InvalidInput(f"--root expects 'i,j', got {text!r}")
    i, j = map(int, mt.groups())
    if not 1 <= i <= j <= n - 1:
        raise InvalidInput(f"({i},{j}) is not a positive root for n={n}")
    return RootIndex(i, j)


def _require_n(args) -> int:
    if args.n is None:
        raise InvalidInput("--n is required")
    if args.n < 2:
        raise InvalidInput(f"--n must be >= 2, got {args.n}")
    return args.n


def _read_poly(args, n):
    from .pluecker.variables import parse_xpoly, xpoly_from_json

    if args.expr:
        return parse_xpoly(args.expr, n)
    if not args.input:
        raise InvalidInput("give a polynomial with --expr or --input FILE")
    try:
        with open(args.input) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read polynomial file {args.input!r}: {exc}") from exc
    terms = data["terms"] if isinstance(data, dict) and "terms" in data else data
    return xpoly_from_json(terms, n)


# -- subcommands -------------------------------------------------------------


def cmd_dims(args):
    from .tensormod import build_module

    m = mult_parse(args.mult, args.n)
    mod = build_module(m, args.cap)
    return {"n": m.n, "mult": m.to_json()["mult"], "graded_dims": mod.graded_dims, "dim": mod.dim}, True


def cmd_fundamental(args):
    from .fundmod import fundamental_basis, pbw_degree

    n = _require_n(args)
    i, j = _root(args.root, n)
    basis = fundamental_basis(n, i, j)
    graded = graded_counts((pbw_degree(k),) for k in basis)
    return {
        "n": n, "i": i, "j": j,
        "dim": len(basis),
        "expected_dim": math.comb(i + n - j, i),
        "graded_dims": graded,
        "basis": [str(k) for k in basis],
    }, len(basis) == math.comb(i + n - j, i)


def cmd_polytope(args):
    m = mult_parse(args.mult, args.n)
    pts = enumerate_polytope(m)
    return {
        "n": m.n, "mult": m.to_json()["mult"],
        "coordinates": [f"{r.i},{r.j}" for r in positive_roots(m.n)],
        "size": len(pts), "graded": graded_counts(pts),
        "points": [list(p) for p in pts],
    }, True


def cmd_check_ffl(args):
    from .tensormod import ffl_check

    m = mult_parse(args.mult, args.n)
    rep = ffl_check(m, args.cap)
    # |S_m| >= dim M_m is a theorem; equality is the conjecture
    if rep["polytope_size"] < rep["dim"] or rep["rank"] > rep["dim"]:
        raise TheoremCheckFailed("spanning-set bound violated")
    return rep, (rep["agree"] or not args.assert_)


def cmd_relations(args):
    from .pluecker.relations import enumerate_relations
    from .pluecker.variables import xpoly_str

    n = _require_n(args)
    rejected = []
    rels = list(
        enumerate_relations(n, unique=not args.all, nonzero=not args.all, rejected=rejected)
    )
    return {
        "n": n,
        "count": len(rels),
        "nonzero": sum(1 for r in rels if not r.zero),
        "rejected": len(rejected),
        "relations": [dict(r.to_json(), text=xpoly_str(r.poly), label=str(r.data)) for r in rels],
    }, not rejected


def _verify_chunk(payload):
    n, datas = payload
    from .pluecker.psi import verify_vanishing
    from .pluecker.relations import RelationData, generate_relation

    bad = []
    for d in datas:
        d = RelationData(*d)
        if not verify_vanishing(generate_relation(d, n)):
            bad.append(str(d))
    return bad


def cmd_verify_relations(args):
    from dataclasses import astuple

    from .flaggeo import orbit_point, pluecker_coordinates, random_parameters
    from .pluecker.psi import evaluate_at_orbit
    from .pluecker.relations import enumerate_relations

    n = _require_n(args)
    rels = [r for r in enumerate_relations(n, gate=False) if not r.zero]
    out = {"n": n, "relations": len(rels)}
    ok = True
    if args.mode in ("symbolic", "both"):
        datas = [astuple(r.data) for r in rels]
        workers = max(1, args.threads)
        chunks = [datas[k::workers] for k in range(workers)]
        if workers > 1:
            with ProcessPoolExecutor(workers) as ex:
                bad = [b for part in ex.map(_verify_chunk, [(n, c) for c in chunks]) for b in part]
        else:
            bad = _verify_chunk((n, datas))
        out["symbolic_failures"] = sorted(bad)
        ok &= not bad
    if args.mode in ("random", "both"):
        rng = random.Random(args.seed)
        failures = []
        for t in range(args.trials):
            c = random_parameters(n, rng)
            coords = pluecker_coordinates(orbit_point(c, n), n)
            for r in rels:
                if r.poly.evaluate(coords) != 0 or evaluate_at_orbit(r.poly, c) != 0:
                    failures.append({"trial": t, "relation": str(r.data)})
        out["random_trials"] = args.trials
        out["random_failures"] = failures
        ok &= not failures
    return out, ok


def cmd_psi(args):
    from .pluecker.psi import psi, tzpoly_str, tzpoly_to_json
    from .pluecker.variables import xpoly_str

    n = _require_n(args)
    p = _read_poly(args, n)
    img = psi(p)
    return {
        "n": n, "input": xpoly_str(p),
        "image": tzpoly_str(img), "terms": tzpoly_to_json(img), "zero": img.is_zero(),
    }, True


def cmd_straighten(args):
    from .pluecker.straighten import check_straighten, straighten
    from .pluecker.variables import xpoly_str, xpoly_to_json

    n = _require_n(args)
    F = _read_poly(args, n)
    res = straighten(F, n, certificate=True)
    checks = check_straighten(F, res, n)
    return {
        "n": n, "input": xpoly_str(F),
        "N": res.N.to_json()["mult"],
        "G": xpoly_str(res.G), "G_terms": xpoly_to_json(res.G),
        "steps": res.steps, "checks": checks,
    }, all(checks.values())


def cmd_qdim(args):
    from .pluecker.qmod import qm_dimension
    from .tensormod import build_module

    m = mult_parse(args.mult, args.n)
    q = qm_dimension(m, args.cap)
    d = build_module(m, args.cap).dim
    return {"n": m.n, "mult": m.to_json()["mult"], "q_dim": q, "m_dim": d, "agree": q == d}, q == d


def cmd_check_ideal(args):
    from .ideal import presentation_report

    m = mult_parse(args.mult, args.n)
    rep = presentation_report(m, args.max_degree, args.cap)
    return rep, (rep["agree"] or not args.assert_)


def cmd_orbit(args):
    from .flaggeo import (
        is_fna_member,
        is_rn_member,
        orbit_point,
        parameters_from_json,
        parameters_to_json,
        pluecker_coordinates,
        project_to_flag,
        random_parameters,
        rn_point_to_json,
    )
    from .pluecker.psi import evaluate_orbit
    from .pluecker.relations import enumerate_relations

    if args.input:
        try:
            with open(args.input) as fh:
                n, c = parameters_from_json(json.load(fh))
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"cannot read parameter file {args.input!r}: {exc}") from exc
    else:
        n = _require_n(args)
        c = random_parameters(n, random.Random(args.seed))
    p = orbit_point(c, n)
    rn_ok, violations = is_rn_member(p, n)
    flag = project_to_flag(p, n)
    fna_ok = is_fna_member(flag, n)
    coords = pluecker_coordinates(p, n)
    proportional = all(coords[k] == evaluate_orbit(c, k) for k in coords)
    rel_ok = all(r.poly.evaluate(coords) == 0 for r in enumerate_relations(n, unique=True, nonzero=True))
    base_nonzero = all(coords[k] != 0 for k in coords if k.L == tuple(range(1, k.i + 1)))
    ok = rn_ok and fna_ok and proportional and rel_ok and base_nonzero
    return {
        "parameters": parameters_to_json(c, n),
        "point": rn_point_to_json(p),
        "in_Rn": rn_ok, "violations": violations,
        "flag": [V.to_json() for V in flag], "in_Fna": fna_ok,
        "coordinates": {str(k): str(v) for k, v in sorted(coords.items())},
        "matches_psi": proportional, "relations_vanish": rel_ok,
        "base_coordinates_nonzero": base_nonzero,
    }, ok


def _report_one(payload):
    vec, n, cap = payload
    from .ideal import presentation_report
    from .pluecker.qmod import qm_dimension
    from .tensormod import ffl_check

    m = MultDegree(n, tuple(zip(positive_roots(n), vec)))
    row = {"mult": str(m)}
    try:
        ffl = ffl_check(m, cap)
        row.update(dim=ffl["dim"], graded_dims=ffl["graded_dims"],
                   polytope_size=ffl["polytope_size"], independent=ffl["independent"],
                   ffl_agree=ffl["agree"])
        row["q_dim"] = qm_dimension(m, cap)
        row["q_agree"] = row["q_dim"] == ffl["dim"]
        ide = presentation_report(m, None, cap)
        row["ideal_hilbert"] = ide["ideal_hilbert"]
        row["ideal_agree"] = ide["agree"]
    except ResourceCapExceeded as exc:
        row["skipped"] = str(exc)
    return row


def cmd_report(args):
    n = _require_n(args)
    payloads = [(m.vector(), n, args.cap) for m in all_multidegrees(n, args.max_mult)]
    if args.threads > 1:
        with ProcessPoolExecutor(args.threads) as ex:
            rows = list(ex.map(_report_one, payloads))
    else:
        rows = [_report_one(p) for p in payloads]
    done = [r for r in rows if "skipped" not in r]
    theorem_ok = all(r["q_agree"] for r in done)
    conj_ok = all(r["ffl_agree"] and r["ideal_agree"] for r in done)
    summary = {
        "n": n, "max_mult": args.max_mult, "cases": len(rows), "skipped": len(rows) - len(done),
        "q_agree_all": theorem_ok, "ffl_agree_all": all(r["ffl_agree"] for r in done),
        "ideal_agree_all": all(r["ideal_agree"] for r in done),
    }
    return {"summary": summary, "rows": rows}, theorem_ok and (conj_ok or not args.assert_)


COMMANDS = {
    "dims": (cmd_dims, "graded dimensions of M_m"),
    "fundamental": (cmd_fundamental, "basis of one fundamental module"),
    "polytope": (cmd_polytope, "lattice points of S_m"),
    "check-ffl": (cmd_check_ffl, "monomial basis conjecture check"),
    "relations": (cmd_relations, "generalized Plücker relations"),
    "verify-relations": (cmd_verify_relations, "symbolic / randomized vanishing of relations"),
    "psi": (cmd_psi, "apply Psi to a polynomial"),
    "straighten": (cmd_straighten, "rewrite onto PBW-degree <= 1 variables"),
    "qdim": (cmd_qdim, "dim Q_m against dim M_m"),
    "check-ideal": (cmd_check_ideal, "ideal presentation conjecture check"),
    "orbit": (cmd_orbit, "orbit point, memberships and Plücker coordinates"),
    "report": (cmd_report, "sweep all m up to --max-mult"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--mult", help='"i,j:m;..." or a MultDegree JSON file')
    common.add_argument("--root", help='"i,j"')
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=10)
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--max-mult", type=int, default=1)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--assert", dest="assert_", action="store_true",
                        help="fail (exit 1) when a conjecture check disagrees")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--cap", type=int, default=200_000, help="resource cap")
    common.add_argument("--input", help="input JSON file (polynomial or parameters)")
    common.add_argument("--expr", help="polynomial in text form")
    common.add_argument("--mode", choices=("symbolic", "random", "both"), default="symbolic")
    common.add_argument("--all", action="store_true", help="relations: include zero and duplicate outputs")
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock timing (byte-stable output)")

    parser = argparse.ArgumentParser(prog="degsl", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"degsl {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_)
    return parser


def _config(args) -> dict:
    keys = ("n", "mult", "root", "seed", "trials", "max_degree", "max_mult",
            "format", "assert_", "threads", "cap", "input", "expr", "mode", "all")
    cfg = {k.rstrip("_"): getattr(args, k) for k in keys}
    return cfg


def _flatten_csv(result: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = next((result[k] for k in ("rows", "relations") if result.get(k)), None)
    if rows is not None:
        headers = []
        for r in rows:
            for k in r:
                if k not in headers:
                    headers.append(k)
        writer.writerow(headers)
        for r in rows:
            writer.writerow([json.dumps(r[k]) if isinstance(r.get(k), (list, dict)) else r.get(k, "")
                             for k in headers])
    else:
        writer.writerow(["key", "value"])
        for k, v in result.items():
            writer.writerow([k, json.dumps(v) if isinstance(v, (list, dict)) else v])
    return buf.getvalue()


def _text(result: dict, indent: str = "") -> str:
    lines = []
    for k, v in result.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{k}:")
            for item in v:
                if "text" in item:
                    lines.append(f"{indent}  {item.get('label', '')}: {item['text']}")
                else:
                    lines.append(f"{indent}  " + ", ".join(f"{a}={b}" for a, b in item.items()))
        else:
            lines.append(f"{indent}{k}: {v}")
    return "\n".join(lines)


def render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(envelope, indent=2) + "\n"
    if fmt == "csv":
        return _flatten_csv(envelope["result"])
    return _text(envelope) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    func = COMMANDS[args.command][0]
    start = time.perf_counter()
    try:
        result, ok = func(args)
        status = EXIT_OK if ok else EXIT_CHECK
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapExceeded as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except TheoremCheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    envelope = {
        "command": args.command,
        "version": __version__,
        "config": _config(args),
        "ok": status == EXIT_OK,
        "result": result,
    }
    if not args.no_timing:
        envelope["timing_s"] = round(time.perf_counter() - start, 6)
    text = render(envelope, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

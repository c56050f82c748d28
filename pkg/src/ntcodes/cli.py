"""Command-line entry point: construct, analyze, certify, autgroup, evidence."""

from __future__ import annotations

import argparse
import sys

from ntcodes.certification import design_lambda, entry_faithful_certificate, is_s_regular, weight_class
from ntcodes.constructions import binary_code_autgroup, parse_construction
from ntcodes.errors import NTCodesError, UndefinedMetricError
from ntcodes.evidence import SELECTORS, run_evidence
from ntcodes.hamming import Code, distance_partition
from ntcodes.io import dumps, read_code, read_group, write_code, write_group
from ntcodes.perm import entry_faithful, group_order, is_k_transitive, orbit
from ntcodes.spectra import distance_distribution, is_prime_power, macwilliams_transform, singleton_bound


def _emit(doc: dict, fmt: str, text: str | None = None) -> None:
    if fmt == "json" or text is None:
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    obj = parse_construction(args.name)
    if isinstance(obj, Code):
        write_code(obj, args.output)
        print(f"wrote {args.name}: m={obj.m} q={obj.q} |C|={len(obj)} -> {args.output}")
    else:
        write_group(obj, args.output, group_order(obj, "vertices"))
        print(f"wrote {args.name}: {len(obj)} generators on H({obj.m},{obj.q}) -> {args.output}")
    return 0


def analyze_code(code: Code) -> dict:
    doc = {"m": code.m, "q": code.q, "size": len(code)}
    try:
        delta = code.min_distance
    except UndefinedMetricError:
        delta = None
    doc["min_distance"] = delta
    doc["covering_radius"] = distance_partition(code).rho
    dist = distance_distribution(code)
    doc["distance_distribution"] = dist.to_strings()
    if is_prime_power(code.q):
        t = macwilliams_transform(dist)
        doc["macwilliams_transform"] = {"values": t.to_strings(), "nonnegative": t.nonnegative}
    else:
        doc["macwilliams_transform"] = {"skipped": f"q = {code.q} is not a prime power"}
    if delta is not None:
        bound = singleton_bound(code.m, code.q, delta)
        doc["singleton"] = {"bound": bound, "satisfied": len(code) <= bound}
    doc["weight_census"] = {str(k): v for k, v in sorted(code.weight_census().items())}
    designs = {}
    for k in sorted(code.weight_census()):
        blocks = weight_class(code, k)
        row = {}
        for s in (1, 2, 3):
            if k < s:
                row[str(s)] = "n/a"
                continue
            res = design_lambda(blocks, s, code.m, code.q)
            row[str(s)] = res.lam if res.is_design else "NotDesign"
        designs[str(k)] = row
    doc["design_lambda"] = designs
    if doc["covering_radius"] >= 1:
        doc["regularity"] = is_s_regular(code, "rho").to_dict()
    return doc


def _analyze_text(doc: dict) -> str:
    lines = [
        f"H({doc['m']},{doc['q']})  |C| = {doc['size']}",
        f"delta = {doc['min_distance']}  rho = {doc['covering_radius']}",
        "distance distribution: " + " ".join(doc["distance_distribution"]),
    ]
    mw = doc["macwilliams_transform"]
    if "skipped" in mw:
        lines.append(f"transform: skipped ({mw['skipped']})")
    else:
        lines.append("transform: " + " ".join(mw["values"]) + ("  (nonnegative)" if mw["nonnegative"] else "  (NEGATIVE)"))
    if "singleton" in doc:
        sb = doc["singleton"]
        lines.append(f"singleton bound {sb['bound']}: {'ok' if sb['satisfied'] else 'violated'}")
    lines.append("weight census: " + ", ".join(f"{k}:{v}" for k, v in doc["weight_census"].items()))
    for k, row in doc["design_lambda"].items():
        lines.append(f"weight {k}: " + "  ".join(f"lambda_{s} = {v}" for s, v in row.items()))
    if "regularity" in doc:
        reg = doc["regularity"]
        lines.append(f"completely regular: {reg['completely_regular']}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    doc = analyze_code(read_code(args.file))
    _emit(doc, args.format, _analyze_text(doc))
    return 0


def cmd_certify(args) -> int:
    code = read_code(args.code)
    gens = read_group(args.group)
    if (gens.m, gens.q) != (code.m, code.q):
        raise NTCodesError(f"group acts on H({gens.m},{gens.q}) but the code lives in H({code.m},{code.q})")
    s = "rho" if args.s == "rho" else int(args.s)
    report = entry_faithful_certificate(code, gens, s)
    if args.format == "json":
        _emit(report, "json")
    else:
        tr = report["transitivity"]
        lines = [f"s = {tr['s']}  rho = {tr['rho']}  code group: {tr['code_group']}"]
        for lv in tr["levels"]:
            lines.append(f"  C_{lv['level']}: {lv['cell_size']} vertices, orbit sizes {lv['orbit_sizes']}")
        lines.append(f"entry-faithful: {report['entry_faithful']} (|X| = {report['group_order']})")
        for k, v in report["predicted_consequences"].items():
            lines.append(f"  {k}: {v}")
        lines.append(f"verdict: {report['verdict']}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if report["verdict"] == "pass" else 1


def cmd_autgroup(args) -> int:
    code = read_code(args.file)
    gens = binary_code_autgroup(code)
    order = group_order(gens, "vertices")
    write_group(gens, args.output, order)
    transitive = len(code) > 0 and len(orbit(gens, code.words[0])) == len(code)
    summary = {
        "order": order,
        "generators": len(gens),
        "transitive_on_code": transitive,
        "entry_faithful": entry_faithful(gens),
        "entries_2_transitive": is_k_transitive(gens, "entries", 2),
        "output": str(args.output),
    }
    _emit(summary, args.format, "".join(f"{k}: {v}\n" for k, v in summary.items()))
    return 0


def cmd_evidence(args) -> int:
    report = run_evidence(args.selector)
    doc = report.to_dict()
    if args.format == "json":
        _emit(doc, "json")
    else:
        lines = [f"{c['verdict']:7} {c['name']}" for c in doc["checks"]]
        s = doc["summary"]
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
        sys.stdout.write("\n".join(lines) + "\n")
    for c in report.failures:
        print(f"FAILED {c.name}: computed {c.computed!r}, expected {c.expected!r}", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ntcodes", description="Neighbour-transitive codes in Hamming graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="write a named code or group to a file")
    c.add_argument("name")
    c.add_argument("-o", "--output", required=True)
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="metrics, spectra and design parameters of a code")
    a.add_argument("file")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.set_defaults(func=cmd_analyze)

    ce = sub.add_parser("certify", help="check (X, s)-neighbour transitivity")
    ce.add_argument("--code", required=True)
    ce.add_argument("--group", required=True)
    ce.add_argument("--s", required=True, help="integer level or 'rho'")
    ce.add_argument("--format", choices=("json", "text"), default="json")
    ce.set_defaults(func=cmd_certify)

    g = sub.add_parser("autgroup", help="automorphism group of a binary code")
    g.add_argument("file")
    g.add_argument("-o", "--output", required=True)
    g.add_argument("--format", choices=("json", "text"), default="text")
    g.set_defaults(func=cmd_autgroup)

    e = sub.add_parser("evidence", help="run the table and proof check batteries")
    e.add_argument("selector", choices=("all",) + SELECTORS)
    e.add_argument("--format", choices=("json", "text"), default="json")
    e.set_defaults(func=cmd_evidence)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "s", None) not in (None, "rho"):
        try:
            int(args.s)
        except ValueError:
            print(f"error: --s must be an integer or 'rho', got {args.s!r}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (NTCodesError, ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

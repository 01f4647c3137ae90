"""Command-line interface: ``richfca <command> [options]``.

Exit codes: 0 success, 1 a checked property failed (or no rich pair exists
because the context is full), 2 usage, parse or guard errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from richfca.concepts import count_concepts, enumerate_concepts
from richfca.context import FormalContext, delete_pair
from richfca.cxt import read_cxt
from richfca.edit_ops import (
    FIXED_POINT, OP_CASE, REMOVAL_CASE, contranominal_summand_size, contrast,
    find_rich_pair, nop_run, noncontranominal_kernel, select_object_theorem2,
)
from richfca.errors import CxtParseError, DomainError, GuardError, InvariantViolation
from richfca.mixgen import CLASS_LABELS, build_complete_system, decompose, verify_theorem1
from richfca.verifier import (
    PROPERTIES, SUITES, Scope, check_albano_bound, extremal_search, fig7_resistance,
    run_property_suite,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CASE_NUMBERS = {FIXED_POINT: 1, OP_CASE: 2, REMOVAL_CASE: 3}


class UsageError(Exception):
    pass


# -- helpers ---------------------------------------------------------------------

def _read(path: str) -> FormalContext:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return read_cxt(text)
    except CxtParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _attr(K: FormalContext, name: str) -> int:
    try:
        return K.attribute_index(name)
    except (KeyError, ValueError):
        raise UsageError(f"unknown attribute {name!r}") from None


def _obj(K: FormalContext, name: str) -> int:
    try:
        return K.object_index(name)
    except (KeyError, ValueError):
        raise UsageError(f"unknown object {name!r}") from None


def _set_text(names: Sequence[str]) -> str:
    return "{" + ",".join(names) + "}"


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# -- commands ---------------------------------------------------------------------

def cmd_concepts(args) -> int:
    K = _read(args.file)
    if args.list:
        concepts = [{"extent": K.object_labels(c.extent.bits),
                     "intent": K.attribute_labels(c.intent.bits)}
                    for c in enumerate_concepts(K)]
        lines = [f"{_set_text(c['extent'])} | {_set_text(c['intent'])}" for c in concepts]
        _emit(args, {"count": len(concepts), "concepts": concepts}, "\n".join(lines))
    else:
        n = count_concepts(K)
        _emit(args, {"count": n}, str(n))
    return EXIT_OK


def cmd_rich_pair(args) -> int:
    K = _read(args.file)
    pair = find_rich_pair(K)
    if pair is None:
        _emit(args, {"rich_pair": None, "message": "full context"}, "full context")
        return EXIT_FAIL
    g, m = pair
    before = count_concepts(K)
    after = count_concepts(delete_pair(K, g, m))
    payload = {"object": K.object_names[g], "attribute": K.attribute_names[m],
               "count_before": before, "count_after_deletion": after,
               "rich": 2 * after >= before}
    text = (f"pair: ({K.object_names[g]}, {K.attribute_names[m]})\n"
            f"concepts before: {before}\n"
            f"concepts after deletion: {after}\n"
            f"rich: 2*{after} >= {before}")
    _emit(args, payload, text)
    return EXIT_OK if payload["rich"] else EXIT_FAIL


def cmd_decompose(args) -> int:
    K = _read(args.file)
    m = _attr(K, args.attr)
    system = build_complete_system(K, m)
    if not system.R.bits:
        raise UsageError(f"attribute {args.attr!r} is a full column")
    if args.obj is None:
        g = select_object_theorem2(K, m, system).selected
    else:
        g = _obj(K, args.obj)
        if K.incident(g, m):
            raise UsageError(f"object {args.obj!r} has attribute {args.attr!r}")
    d = decompose(system, g)
    report = verify_theorem1(d)
    classes = {lab: [K.object_labels(s) for s in d.masks(lab)] for lab in CLASS_LABELS}
    payload = {"attribute": args.attr, "object": K.object_names[g],
               "R": K.object_labels(system.R.bits), "classes": classes,
               "count_original": report.count_original, "count_op": report.count_op,
               "bound": report.bound_line(), "bound_checked": report.bound_checked,
               "passed": report.passed, "failure": report.failure}
    lines = [f"attribute {args.attr}, object {K.object_names[g]}, "
             f"R = {_set_text(payload['R'])}"]
    for lab in CLASS_LABELS:
        members = " ".join(_set_text(s) for s in classes[lab]) or "-"
        lines.append(f"  {lab:<8} {members}")
    lines.append(f"bound: {report.bound_line()}")
    if not report.passed:
        lines.append(f"FAILED: {report.failure}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_mixgens(args) -> int:
    K = _read(args.file)
    m = _attr(K, args.attr)
    system = build_complete_system(K, m)
    gens = [K.object_labels(s) for s in system.masks]
    payload = {"attribute": args.attr, "R": K.object_labels(system.R.bits),
               "generators": gens, "complete": system.complete,
               "semidownset": system.semidownset}
    text = "\n".join(_set_text(s) for s in gens)
    _emit(args, payload, text)
    return EXIT_OK


def _report_table(reports) -> str:
    width = max([len(r.property) for r in reports] + [8])
    lines = [f"{'property':<{width}}  result  checked  failures"]
    for r in reports:
        lines.append(f"{r.property:<{width}}  {'pass' if r.passed else 'FAIL':<6}  "
                     f"{r.checked:>7}  {r.failures:>8}")
        if not r.passed:
            lines.append(f"  {r.message}")
            lines += ["  " + ln for ln in (r.counterexample or "").splitlines()]
    return "\n".join(lines)


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "fig7-resistance":
        reports = [fig7_resistance()]
    elif suite == "albano":
        a_values = [args.albano[0]] if args.albano else range(0, 5)
        c_values = [args.albano[1]] if args.albano else range(1, 4)
        reports = [check_albano_bound(a, c, jobs=args.jobs) for a in a_values for c in c_values]
    elif suite == "extremal":
        a, b, c = args.extremal or (4, 4, 3)
        rep = extremal_search(a, b, c, jobs=args.jobs)
        payload = json.loads(rep.to_json())
        text = (f"extremal search a={a} b={b} c={c}\n"
                f"class size: {rep.class_size}\n"
                f"max concepts: {rep.max_count} ({rep.extremal_count} extremal contexts)\n"
                f"extremal context with CN({c - 1}): {'yes' if rep.has_cn_witness else 'no'}\n"
                f"bound {rep.bound}: {'holds' if rep.bound_ok else 'VIOLATED'}\n"
                f"witness:\n{rep.witness}")
        _emit(args, payload, text.rstrip())
        return EXIT_OK if rep.has_cn_witness and rep.bound_ok else EXIT_FAIL
    else:
        if args.max_size is None and not args.samples:
            args.max_size = (3, 3)
        a, b = args.max_size if args.max_size is not None else (-1, -1)
        if args.max_size is not None and (a < 0 or b < 0):
            raise UsageError("--max-size values must be non-negative")
        scope = Scope(max_objects=a, max_attributes=b, samples=args.samples,
                      seed=args.seed)
        names = SUITES.get(args.properties, None)
        if names is None:
            names = tuple(args.properties.split(","))
            unknown = [n for n in names if n not in PROPERTIES]
            if unknown:
                raise UsageError(f"unknown properties: {', '.join(unknown)}")
        reports = run_property_suite(scope, names, jobs=args.jobs)
    if args.jsonl:
        with open(args.jsonl, "w", encoding="utf-8") as fh:
            for r in reports:
                fh.write(r.to_json() + "\n")
    ok = all(r.passed for r in reports)
    payload = {"passed": ok, "reports": [json.loads(r.to_json()) for r in reports]}
    _emit(args, payload, _report_table(reports))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_analyze(args) -> int:
    K = _read(args.file)
    dec = noncontranominal_kernel(K)
    trace = nop_run(K, args.nop_steps)
    steps = []
    for i, st in enumerate(trace.steps):
        C = st.context
        pair = None
        if st.pair is not None:
            pair = [C.object_names[st.pair[0]], C.attribute_names[st.pair[1]]]
        steps.append({"step": i, "concepts": st.concepts, "contrast": st.contrast,
                      "summand": st.summand, "next_case": CASE_NUMBERS[st.case],
                      "next_case_name": st.case, "next_pair": pair})
    payload = {"objects": K.n_objects, "attributes": K.n_attributes,
               "concepts": count_concepts(K), "contrast": contrast(K),
               "summand": contranominal_summand_size(K),
               "kernel": {"objects": list(dec.kernel.object_names),
                          "attributes": list(dec.kernel.attribute_names)},
               "nop_trace": steps if args.nop_steps else []}
    kern = dec.kernel
    lines = [f"size: {K.n_objects} x {K.n_attributes}",
             f"concepts: {payload['concepts']}",
             f"contrast: {payload['contrast']}",
             f"contranominal summand: {payload['summand']}",
             f"kernel: {kern.n_objects} x {kern.n_attributes} "
             f"objects {_set_text(kern.object_names)} "
             f"attributes {_set_text(kern.attribute_names)}"]
    for st in payload["nop_trace"]:
        nxt = st["next_case_name"]
        if st["next_pair"]:
            nxt += f" at ({st['next_pair'][0]}, {st['next_pair'][1]})"
        lines.append(f"step {st['step']}: concepts {st['concepts']}, contrast "
                     f"{st['contrast']}, summand {st['summand']}; next: case "
                     f"{st['next_case']} {nxt}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json"), default=default("text"))
    parser.add_argument("--jobs", type=_positive, default=default(os.cpu_count() or 1),
                        help="worker processes for verify (default: CPU count)")
    parser.add_argument("--seed", type=int, default=default(0),
                        help="seed for sampled checks (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="richfca", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        _global_flags(p, suppress=True)
        return p

    p = command("concepts", "count or list the concepts of a context")
    p.add_argument("file", help=".cxt path, or - for standard input")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the number (default)")
    mode.add_argument("--list", action="store_true", help="print every concept")
    p.set_defaults(func=cmd_concepts)

    p = command("rich-pair", "find a pair whose deletion keeps half the concepts")
    p.add_argument("file")
    p.set_defaults(func=cmd_rich_pair)

    p = command("decompose", "seven-class decomposition of the lex-minimal system")
    p.add_argument("file")
    p.add_argument("--attr", required=True, help="attribute name m")
    p.add_argument("--obj", help="object name g lacking m (default: selected automatically)")
    p.set_defaults(func=cmd_decompose)

    p = command("mixgens", "complete lex-minimal system of mixed generators")
    p.add_argument("file")
    p.add_argument("--attr", required=True)
    p.set_defaults(func=cmd_mixgens)

    p = command("verify", "run property campaigns and targeted checks")
    p.add_argument("--max-size", nargs=2, type=int, metavar=("A", "B"),
                   help="check every context with at most A objects and B attributes")
    p.add_argument("--samples", type=int, default=0, metavar="N",
                   help="also check N seeded random 5x5 contexts")
    p.add_argument("--suite", default="properties",
                   choices=("properties", "fig7-resistance", "extremal", "albano"))
    p.add_argument("--properties", default="all",
                   help="'all', 'core' or a comma-separated list of property names")
    p.add_argument("--extremal", nargs=3, type=int, metavar=("A", "B", "C"))
    p.add_argument("--albano", nargs=2, type=int, metavar=("A", "C"))
    p.add_argument("--jsonl", metavar="PATH", help="also write one JSON report per line")
    p.set_defaults(func=cmd_verify)

    p = command("analyze", "contrast, contranominal summand, kernel and nop trace")
    p.add_argument("file")
    p.add_argument("--nop-steps", type=int, default=0, metavar="K")
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, GuardError) as exc:
        print(f"richfca: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"richfca: invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

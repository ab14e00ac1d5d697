"""Command-line entry point.

    twofrob info <spec>
    twofrob delta <spec> [--method formula|brute|auto]
    twofrob gamma <spec> [--method formula|brute|auto]
    twofrob verify <spec>
    twofrob export-dot <spec> --graph cyclic|commuting --out PATH

<spec> is a path to a JSON group spec or the JSON text itself. Exit codes:
0 success, 1 mismatch (verify) or no applicable formula, 2 invalid spec,
3 cap exceeded with no formula fallback.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .fields import AffineGroupSpec, InvalidFamily, build_affine_spec, to_permutation_group
from .fixtures import NAMED_FIXTURES
from .formulas import (
    Uncomputable,
    delta_count_frobenius,
    delta_count_two_frobenius,
    gamma_count_two_frobenius,
    verify,
)
from .graphs import DEFAULT_PAIR_CAP, EmptyVertexSet, delta_components, export_dot, gamma_components
from .group import DEFAULT_ENUM_CAP, DEFAULT_MAX_CELLS, CapExceeded, EnumeratedGroup, enumerate_group
from .groups import symmetric
from .perm import Permutation
from .structure import detect_frobenius, detect_two_frobenius

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3


class InvalidSpec(ValueError):
    pass


@dataclass
class ParsedSpec:
    document: dict
    generators: list[Permutation] | None = None
    degree: int | None = None
    affine: AffineGroupSpec | None = None

    def enumerate(self, cap: int, max_cells: int = DEFAULT_MAX_CELLS) -> EnumeratedGroup:
        if self.affine is not None:
            if self.affine.group_order > cap:
                raise CapExceeded(cap)
            gens = to_permutation_group(self.affine)
            return enumerate_group(gens, cap=cap, max_cells=max_cells)
        return enumerate_group(self.generators, cap=cap, degree=self.degree, max_cells=max_cells)

    @property
    def source_order(self) -> int | None:
        return self.affine.group_order if self.affine is not None else None


def _positive_int(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise InvalidSpec(f"{key!r} must be a positive integer")
    return v


def parse_spec(doc: Any) -> ParsedSpec:
    if not isinstance(doc, dict):
        raise InvalidSpec("group spec must be a JSON object")
    kind = doc.get("kind")
    if kind == "named-fixture":
        name = doc.get("name")
        if name not in NAMED_FIXTURES:
            raise InvalidSpec(f"unknown fixture {name!r}; known: {', '.join(NAMED_FIXTURES)}")
        inner = parse_spec(NAMED_FIXTURES[name])
        inner.document = doc
        return inner
    if kind == "sym":
        n = _positive_int(doc, "n")
        return ParsedSpec(doc, symmetric(n), n)
    if kind == "perm":
        degree = _positive_int(doc, "degree")
        raw = doc.get("generators")
        if not isinstance(raw, list):
            raise InvalidSpec("'generators' must be a list of cycle lists")
        gens = []
        try:
            for cycles in raw:
                if not isinstance(cycles, list) or not all(
                    isinstance(c, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in c)
                    for c in cycles
                ):
                    raise InvalidSpec("each generator is a list of cycles of integers")
                gens.append(Permutation.from_cycles(cycles, degree))
        except ValueError as exc:
            raise InvalidSpec(str(exc)) from exc
        return ParsedSpec(doc, gens, degree)
    if kind == "affine":
        comps = doc.get("components")
        if not isinstance(comps, list) or not comps:
            raise InvalidSpec("'components' must be a nonempty list of [p, n]")
        fields = []
        for c in comps:
            if isinstance(c, dict):
                c = [c.get("p"), c.get("n")]
            if not (isinstance(c, list) and len(c) == 2 and all(isinstance(v, int) and v > 0 for v in c)):
                raise InvalidSpec(f"bad component {c!r}")
            fields.append((c[0], c[1]))
        try:
            spec = build_affine_spec(fields, _positive_int(doc, "d"), _positive_int(doc, "e"))
        except InvalidFamily as exc:
            raise InvalidSpec(str(exc)) from exc
        return ParsedSpec(doc, affine=spec)
    raise InvalidSpec(f"unknown kind {kind!r}")


def load_spec(arg: str) -> ParsedSpec:
    text = arg
    if not arg.lstrip().startswith("{"):
        path = Path(arg)
        if not path.exists():
            raise InvalidSpec(f"no such spec file: {arg}")
        text = path.read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"invalid JSON: {exc}") from exc
    return parse_spec(doc)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _report_lines(rep: dict) -> list[str]:
    det = rep["detection"]
    lines = [f"order: {rep['order']}"]
    if det.get("found"):
        desc = f"detected: {det['kind']}"
        if det.get("case"):
            desc += f", case {det['case']}"
        desc += f", |K| = {det['K_order']}"
        if "H_order" in det:
            desc += f", |H| = {det['H_order']}, |G:L| = {det['index_G_L']}"
        lines.append(desc)
    else:
        lines.append("detected: neither Frobenius nor 2-Frobenius")
    for c in rep["checks"]:
        lines.append(f"  check {'PASS' if c['pass'] else 'FAIL'}: {c['name']}")
    for c in rep["counts"]:
        lines.append(f"  {c['graph']} components ({c['method']}): {c['value']}")
    for c in rep["comparisons"]:
        if c["skipped"]:
            status = f"skipped: {c['skipped']}"
        else:
            status = "match" if c["match"] else "MISMATCH"
        lines.append(f"  compare {c['name']}: formula {c['formula']} vs brute {c['brute']} -> {status}")
    return lines


def _verify(parsed: ParsedSpec, args, gamma_brute: bool = True):
    source = parsed.affine if parsed.affine is not None else parsed.enumerate(args.enum_cap)
    pair_cap = args.pair_cap if gamma_brute else 0
    return verify(source, spec=parsed.document, enum_cap=args.enum_cap, pair_cap=pair_cap)


def cmd_info(parsed: ParsedSpec, args) -> int:
    rep = _verify(parsed, args, gamma_brute=False).to_dict()
    _emit(args, rep, _report_lines(rep))
    return EXIT_OK


def cmd_verify(parsed: ParsedSpec, args) -> int:
    rep = _verify(parsed, args)
    d = rep.to_dict()
    _emit(args, d, _report_lines(d) + [f"result: {'OK' if rep.ok else 'MISMATCH'}"])
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def _formula_count(parsed: ParsedSpec, graph: str, args) -> dict:
    """Formula-path count for either graph; raises Uncomputable if none applies."""
    if parsed.affine is not None and parsed.affine.group_order > args.enum_cap:
        aff = parsed.affine
        if graph == "commuting":
            res = gamma_count_two_frobenius(aff.K_order)
            method, vertices = "formula", aff.group_order - 1
        else:
            res = delta_count_two_frobenius(aff, enum_cap=args.enum_cap)
            method, vertices = res.method, aff.group_order - 1
        return _formula_payload(graph, method, res, vertices)
    G = parsed.enumerate(args.enum_cap)
    dec = detect_two_frobenius(G)
    if dec is not None:
        res = delta_count_two_frobenius(G, dec) if graph == "cyclic" else gamma_count_two_frobenius(dec)
        return _formula_payload(graph, "formula", res, G.order - 1)
    if graph == "cyclic":
        fdec = detect_frobenius(G)
        if fdec is not None:
            return _formula_payload(graph, "formula", delta_count_frobenius(G, fdec), G.order - 1)
    raise Uncomputable(f"no closed formula for the {graph} graph of this group")


def _formula_payload(graph: str, method: str, res, vertices: int) -> dict:
    return {
        "graph_kind": graph,
        "method": method,
        "component_count": res.value,
        "component_sizes": None,
        "vertex_count": vertices,
        "formula_name": res.formula_name,
        "inputs": res.inputs,
    }


def _graph_cmd(graph: str):
    def run(parsed: ParsedSpec, args) -> int:
        method = args.method
        payload = None
        if method in ("brute", "auto"):
            try:
                G = parsed.enumerate(args.enum_cap)
                rep = delta_components(G) if graph == "cyclic" else gamma_components(G, args.pair_cap)
                payload = rep.to_dict()
            except CapExceeded:
                if method == "brute":
                    raise
        if payload is None:
            payload = _formula_count(parsed, graph, args)
        lines = [f"{graph} graph: {payload['component_count']} components ({payload['method']})"]
        if payload.get("component_sizes"):
            lines.append(f"  sizes: {payload['component_sizes']}")
        _emit(args, payload, lines)
        return EXIT_OK

    return run


def cmd_export_dot(parsed: ParsedSpec, args) -> int:
    G = parsed.enumerate(args.enum_cap)
    text = export_dot(G, args.graph, labels=args.labels, pair_cap=args.pair_cap)
    Path(args.out).write_text(text)
    _emit(args, {"out": str(args.out), "graph": args.graph, "order": G.order}, [f"wrote {args.out}"])
    return EXIT_OK


def _add_global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    # subcommand copies use SUPPRESS so they only override when given
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--enum-cap", type=int, default=dflt(DEFAULT_ENUM_CAP), help="max elements to enumerate")
    p.add_argument("--pair-cap", type=int, default=dflt(DEFAULT_PAIR_CAP), help="max vertex pairs for the commuting graph")
    p.add_argument("--json", action="store_true", default=dflt(False), help="emit JSON")
    p.add_argument("-v", "--verbose", action="store_true", default=dflt(False))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)

    parser = argparse.ArgumentParser(prog="twofrob", description="Cyclic and commuting graph components of (2-)Frobenius groups.")
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("spec", help="JSON group spec: a file path or inline JSON")
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "order, detection, case label, structural checks")
    for graph, name in (("cyclic", "delta"), ("commuting", "gamma")):
        p = add(name, _graph_cmd(graph), f"component report for the {graph} graph")
        p.add_argument("--method", choices=["formula", "brute", "auto"], default="auto")
    add("verify", cmd_verify, "cross-check formulas against brute force")
    p = add("export-dot", cmd_export_dot, "write the graph as DOT")
    p.add_argument("--graph", choices=["cyclic", "commuting"], required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--labels", action="store_true", help="label vertices in cycle notation")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        parsed = load_spec(args.spec)
        return args.func(parsed, args)
    except InvalidSpec as exc:
        print(f"invalid spec: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (Uncomputable, EmptyVertexSet) as exc:
        print(f"cannot compute: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())

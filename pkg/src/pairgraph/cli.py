"""Command-line front end.

Commands: ``build``, ``analyze``, ``spectrum``, ``ramanujan``, ``search`` and
``verify``.  Exit codes: 0 success, 2 validation error, 3 eigensolver
non-convergence, 4 reference-case mismatch.  Every random operation requires
an explicit ``--seed`` so runs are reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .actions import SearchConfig, random_candidate, search_ramanujan
from .descriptors import group_from_descriptor, set_from_descriptor, subgroup_from_descriptor
from .errors import EigensolverError, PairGraphError, ValidationError
from .graphs import (
    PairGraph,
    build_pair_graph,
    degree_profile,
    graph_to_dot,
    graph_to_json,
    isolated_vertices,
    regularity_check,
)
from .groups import FiniteGroup, Subgroup, validate_generating_set
from .reference_cases import run_all
from .spectral import (
    DEFAULT_TOLERANCE,
    compute_spectrum,
    is_ramanujan,
    ramanujan_size_bound,
    trivial_eigenvalues,
    zero_multiplicity_lower_bound,
)
from .structure import (
    component_count_by_formula,
    connected_components,
    is_bipartite,
    is_connected,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_EIGENSOLVER = 3
EXIT_MISMATCH = 4


def _add_instance_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--group", required=True, help="group descriptor, e.g. cyclic:12 or gl2:3 or JSON")
    parser.add_argument("--subgroup", help="subgroup: element list '0,3,6,9', builtin name, or JSON")
    parser.add_argument("--subgroup-gen", help="comma list of generators for the subgroup")
    parser.add_argument("--set", dest="set_elements", help="generating set as a comma list of element indices")
    parser.add_argument("--set-norm-preimage", help="comma list of prime-field values (field groups only)")
    parser.add_argument("--set-random", type=int, metavar="K", help="seeded random K-subset of G-H")
    parser.add_argument("--seed", type=int, help="seed for random choices (required with --set-random)")
    parser.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE, help="eigenvalue tolerance")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--out", help="write the report here instead of stdout")


def _resolve_instance(args) -> tuple[FiniteGroup, Subgroup, tuple[int, ...]]:
    group = group_from_descriptor(args.group)
    if args.subgroup_gen:
        from .groups import subgroup_generated

        subgroup = subgroup_generated(group, [int(v) for v in args.subgroup_gen.split(",") if v != ""])
    elif args.subgroup:
        subgroup = subgroup_from_descriptor(group, args.subgroup)
    else:
        raise ValidationError("one of --subgroup / --subgroup-gen is required")
    chosen = [
        name
        for name, value in (
            ("--set", args.set_elements),
            ("--set-norm-preimage", args.set_norm_preimage),
            ("--set-random", args.set_random),
        )
        if value is not None
    ]
    if len(chosen) != 1:
        raise ValidationError(f"exactly one of --set / --set-norm-preimage / --set-random is required, got {chosen}")
    if args.set_elements is not None:
        s = set_from_descriptor(group, args.set_elements)
    elif args.set_norm_preimage is not None:
        s = set_from_descriptor(
            group, {"norm_preimage": [int(v) for v in args.set_norm_preimage.split(",") if v != ""]}
        )
    else:
        if args.seed is None:
            raise ValidationError("--set-random requires an explicit --seed")
        s = random_candidate(subgroup.outside(), args.set_random, args.seed, 0)
    return group, subgroup, tuple(s)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_graph(args) -> PairGraph:
    _, subgroup, s = _resolve_instance(args)
    gen = validate_generating_set(subgroup, s)
    if not gen.elements:
        print("warning: empty generating set, the graph has no edges", file=sys.stderr)
    return build_pair_graph(subgroup, gen)


def cmd_build(args) -> int:
    graph = _build_graph(args)
    payload = graph_to_json(graph)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(graph_to_dot(graph))
    if args.format == "text":
        text = (
            f"pair graph on {graph.order} vertices, {graph.edge_count()} edges\n"
            f"degree profile: {degree_profile(graph)}\n"
        )
    else:
        text = json.dumps(payload, sort_keys=True) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _analysis_payload(graph: PairGraph) -> dict:
    comp = connected_components(graph)
    formula = component_count_by_formula(graph.gen)
    conn = is_connected(graph.gen)
    bip = is_bipartite(graph)
    reg = regularity_check(graph)
    return {
        "components": comp.count,
        "formula_components": formula.total,
        "connected": conn.connected,
        "connectivity_witness": conn.witness,
        "bipartite": bip.bipartite,
        "isolated": list(isolated_vertices(graph)),
        "degree_profile": [list(entry) for entry in degree_profile(graph)],
        "regular": reg.regular,
        "degree": reg.degree,
    }


def cmd_analyze(args) -> int:
    graph = _build_graph(args)
    payload = _analysis_payload(graph)
    if args.format == "json":
        text = json.dumps(payload, sort_keys=True) + "\n"
    else:
        lines = [f"{key}: {payload[key]}" for key in sorted(payload)]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    graph = _build_graph(args)
    spectrum = compute_spectrum(graph, args.tolerance)
    if args.format == "csv":
        rows = ["value,multiplicity"]
        rows += [f"{value:.12g},{count}" for value, count in spectrum.clusters]
        text = "\n".join(rows) + "\n"
    elif args.format == "json":
        payload = {
            "clusters": [[value, count] for value, count in spectrum.clusters],
            "tolerance": spectrum.tolerance,
        }
        if graph.gen.elements:
            te = trivial_eigenvalues(graph.gen)
            payload["trivial_upper"] = te.upper
            payload["trivial_lower"] = te.lower
            payload["zero_multiplicity_lower_bound"] = zero_multiplicity_lower_bound(graph.gen)
        text = json.dumps(payload, sort_keys=True) + "\n"
    else:
        lines = [f"{value:>14.8f}  x{count}" for value, count in spectrum.clusters]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_ramanujan(args) -> int:
    graph = _build_graph(args)
    report = is_ramanujan(graph, tolerance=args.tolerance)
    payload = {
        "ramanujan": report.ramanujan,
        "degree": report.degree,
        "worst_nontrivial": report.worst_nontrivial,
        "bound": report.bound,
        "margin": report.margin,
    }
    if graph.subgroup.index == 2 and not graph.gen.inside:
        size_bound = ramanujan_size_bound(graph.gen)
        payload["size_bound"] = size_bound.bound
        payload["size_bound_satisfied"] = size_bound.satisfied
    if args.format == "json":
        text = json.dumps(payload, sort_keys=True) + "\n"
    else:
        text = "\n".join(f"{key}: {payload[key]}" for key in sorted(payload)) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    group = group_from_descriptor(args.group)
    if args.subgroup_gen:
        from .groups import subgroup_generated

        subgroup = subgroup_generated(group, [int(v) for v in args.subgroup_gen.split(",") if v != ""])
    elif args.subgroup:
        subgroup = subgroup_from_descriptor(group, args.subgroup)
    else:
        raise ValidationError("one of --subgroup / --subgroup-gen is required")
    if args.mode == "random" and args.seed is None:
        raise ValidationError("random search requires an explicit --seed")
    config = SearchConfig(
        subgroup=subgroup,
        size=args.k,
        mode=args.mode,
        trials=args.trials,
        seed=args.seed if args.seed is not None else 0,
        certify=not args.no_certify,
        tolerance=args.tolerance,
    )
    results = search_ramanujan(config)
    lines = [json.dumps(r.to_json_dict(), sort_keys=True) for r in results]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    all_ok, results = run_all(args.only)
    for case_id, checks in results:
        case_ok = all(ok for _, ok, _ in checks)
        print(f"[{'PASS' if case_ok else 'FAIL'}] {case_id}")
        for name, ok, detail in checks:
            if args.verbose or not ok:
                suffix = f"  ({detail})" if detail else ""
                print(f"    [{'ok' if ok else 'MISMATCH'}] {name}{suffix}")
    return EXIT_OK if all_ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairgraph",
        description="Group-subgroup pair graphs: build, analyze, certify, search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a pair graph and export it")
    _add_instance_flags(p_build)
    p_build.add_argument("--dot", help="also write a DOT rendering here")
    p_build.set_defaults(fn=cmd_build)

    p_analyze = sub.add_parser("analyze", help="degrees, components, connectivity, bipartiteness")
    _add_instance_flags(p_analyze)
    p_analyze.set_defaults(fn=cmd_analyze)

    p_spec = sub.add_parser("spectrum", help="full adjacency spectrum, clustered")
    _add_instance_flags(p_spec)
    p_spec.set_defaults(fn=cmd_spectrum)

    p_ram = sub.add_parser("ramanujan", help="certify the Ramanujan property")
    _add_instance_flags(p_ram)
    p_ram.set_defaults(fn=cmd_ramanujan)

    p_search = sub.add_parser("search", help="search size-k generating sets for Ramanujan graphs")
    p_search.add_argument("--group", required=True)
    p_search.add_argument("--subgroup")
    p_search.add_argument("--subgroup-gen")
    p_search.add_argument("--k", type=int, required=True, help="generating-set size")
    p_search.add_argument("--mode", choices=("random", "exhaustive"), default="random")
    p_search.add_argument("--trials", type=int, default=10)
    p_search.add_argument("--seed", type=int)
    p_search.add_argument("--no-certify", action="store_true", help="skip the spectral certification")
    p_search.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p_search.add_argument("--out")
    p_search.set_defaults(fn=cmd_search)

    p_verify = sub.add_parser("verify", help="re-run the bundled reference cases")
    p_verify.add_argument("--only", help="run a single case by id")
    p_verify.add_argument("--verbose", action="store_true", help="print every check, not just failures")
    p_verify.set_defaults(fn=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except EigensolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EIGENSOLVER
    except (ValidationError, PairGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface.

Every subcommand works on either a built-in construction (``--group
cyclic:3``) or a space loaded from JSON (``--space-file``).  Output goes to
stdout unless ``--out`` is given; ``--json`` switches the machine format.
The process exits 0 when everything requested succeeded, 1 when a
verification reported failures, and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .complexes import (
    chain_complex,
    cycle_basis,
    h1_action_matrix,
    hasse_undirected,
    homology_summary,
    order_complex,
)
from .errors import PosetError, SizeLimitExceeded
from .groups import FiniteGroup, builtin_group, standard_generator_labels
from .homotopy import (
    DEFAULT_MAP_BUDGET,
    DEFAULT_MAP_POINTS,
    AutomorphismGroup,
    core,
    enumerate_selfmaps,
    homotopy_classes,
)
from .labels import label_id
from .posets import FinitePoset
from .search import DEFAULT_AUT_BUDGET
from .serialize import export_dot, group_from_json, poset_from_json, poset_to_doc
from .spaces import ConstructionSpec, build_space, spec_for
from .verify import CHECK_NAMES, VerifyOptions, verify_all, verify_one


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else fallback


def _add_construction_args(parser: argparse.ArgumentParser, *, with_space_file=False):
    parser.add_argument(
        "--group",
        help="builtin group, e.g. cyclic:5, klein4, dihedral:4, symmetric:3, quaternion8",
    )
    parser.add_argument("--group-file", help="JSON file with a multiplication table")
    parser.add_argument(
        "--gens",
        help="comma-separated generator labels (default: the builtin family's standard set)",
    )
    parser.add_argument(
        "--mode",
        default="sandt",
        help="attachment mode: none, sonly, sandt, or sandt:N for fence size N",
    )
    parser.add_argument("--pointed", action="store_true", help="add the fixed basepoint")
    parser.add_argument(
        "--allow-non-generating",
        action="store_true",
        help="accept generator lists that only span a subgroup",
    )
    if with_space_file:
        parser.add_argument(
            "--space-file", help="operate on a JSON space instead of a construction"
        )


def _resolve_group(args) -> tuple[FiniteGroup, list[str]]:
    if args.group and args.group_file:
        raise PosetError("pass either --group or --group-file, not both")
    if args.group:
        group = builtin_group(args.group)
        default_gens = standard_generator_labels(args.group)
    elif args.group_file:
        with open(args.group_file, encoding="utf-8") as fh:
            group = group_from_json(fh.read())
        default_gens = None
    else:
        raise PosetError("a group is required: pass --group or --group-file")
    if args.gens is not None:
        gens = [g.strip() for g in args.gens.split(",") if g.strip()]
    elif default_gens is not None:
        gens = default_gens
    else:
        raise PosetError("--group-file needs an explicit --gens list")
    return group, gens


def _resolve_spec(args) -> ConstructionSpec:
    group, gens = _resolve_group(args)
    return spec_for(
        group,
        gens,
        mode=args.mode,
        pointed=args.pointed,
        require_generating=not args.allow_non_generating,
    )


def _resolve_space(args) -> FinitePoset:
    if getattr(args, "space_file", None):
        if args.group or args.group_file:
            raise PosetError("pass either --space-file or construction flags, not both")
        with open(args.space_file, encoding="utf-8") as fh:
            return poset_from_json(fh.read())
    return build_space(_resolve_spec(args))


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_build(args) -> int:
    space = _resolve_space(args)
    if args.json:
        _emit(json.dumps(poset_to_doc(space), indent=2), args)
        return 0
    beats = space.beat_points()
    lines = [
        f"points: {len(space)}",
        f"cover relations: {len(space.hasse)}",
        f"components: {len(space.components())}",
        f"beat points: {len(beats)}",
    ]
    _emit("\n".join(lines), args)
    return 0


def _cmd_aut(args) -> int:
    space = _resolve_space(args)
    auts = AutomorphismGroup.of(space, budget=args.budget_aut)
    if args.json:
        doc = {
            "order": auts.order,
            "acts_freely": auts.acts_freely(),
            "maps": [list(m.images) for m in auts.maps],
            "table": [list(row) for row in auts.table],
        }
        _emit(json.dumps(doc, indent=2), args)
        return 0
    lines = [
        f"automorphisms: {auts.order}",
        f"acts freely: {'yes' if auts.acts_freely() else 'no'}",
    ]
    for k, m in enumerate(auts.maps):
        moved = [
            f"{label_id(space.labels[i])}->{label_id(space.labels[m.images[i]])}"
            for i in range(len(space))
            if m.images[i] != i
        ]
        lines.append(f"f{k}: " + (" ".join(moved) if moved else "identity"))
    _emit("\n".join(lines), args)
    return 0


def _cmd_core(args) -> int:
    space = _resolve_space(args)
    result = core(space)
    if args.json:
        doc = {
            "core": poset_to_doc(result.poset),
            "trace": [[label_id(lab), kind] for lab, kind in result.trace],
        }
        _emit(json.dumps(doc, indent=2), args)
        return 0
    lines = [
        f"points: {len(space)} -> core {len(result.poset)}",
        f"beat points removed: {len(result.trace)}",
    ]
    for lab, kind in result.trace:
        lines.append(f"  removed {label_id(lab)} ({kind})")
    _emit("\n".join(lines), args)
    return 0


def _cmd_selfmaps(args) -> int:
    space = _resolve_space(args)
    maps = enumerate_selfmaps(space, max_points=args.max_points, budget=args.budget_maps)
    classes = homotopy_classes(maps)
    if args.json:
        doc = {
            "selfmaps": len(maps),
            "homotopy_classes": classes.class_count,
            "invertible_maps": len(classes.equivalences),
            "maps": [list(m.images) for m in maps],
            "class_ids": list(classes.class_ids),
        }
        _emit(json.dumps(doc, indent=2), args)
        return 0
    lines = [
        f"continuous self-maps: {len(maps)}",
        f"homotopy classes: {classes.class_count}",
        f"maps with a homotopy inverse: {len(classes.equivalences)}",
        f"equivalence-class group order: {classes.group.order}",
    ]
    _emit("\n".join(lines), args)
    return 0


def _cmd_homology(args) -> int:
    space = _resolve_space(args)
    cx = order_complex(space)
    cc = chain_complex(cx)
    hs = homology_summary(cx)
    graph = hasse_undirected(space)
    if args.json:
        doc = {
            "simplex_counts": list(cc.counts),
            "b0": hs.b0,
            "b1": hs.b1,
            "h1_torsion": list(hs.h1_torsion),
            "covering_graph_cycle_rank": graph.cycle_rank,
        }
        _emit(json.dumps(doc, indent=2), args)
        return 0
    lines = [
        "simplices by dimension: " + ", ".join(map(str, cc.counts)),
        f"b0 = {hs.b0}",
        f"b1 = {hs.b1}",
        f"H1 torsion: {list(hs.h1_torsion) if hs.h1_torsion else 'none'}",
        f"covering-graph cycle rank: {graph.cycle_rank}",
    ]
    _emit("\n".join(lines), args)
    return 0


def _cmd_h1_action(args) -> int:
    space = _resolve_space(args)
    basis = cycle_basis(order_complex(space))
    auts = AutomorphismGroup.of(space, budget=args.budget_aut)
    matrices = [h1_action_matrix(basis, m) for m in auts.maps]
    if args.json:
        doc = {
            "betti": basis.betti,
            "order": auts.order,
            "matrices": [[list(row) for row in mat] for mat in matrices],
            "distinct": len(set(matrices)) == len(matrices),
        }
        _emit(json.dumps(doc, indent=2), args)
        return 0
    lines = [f"rank of first homology: {basis.betti}", f"automorphisms: {auts.order}"]
    for k, mat in enumerate(matrices):
        lines.append(f"f{k}:")
        lines.extend("  " + " ".join(f"{v:3d}" for v in row) for row in mat)
    lines.append(
        "matrices pairwise distinct: "
        + ("yes" if len(set(matrices)) == len(matrices) else "no")
    )
    _emit("\n".join(lines), args)
    return 0


def _cmd_export_dot(args) -> int:
    space = _resolve_space(args)
    _emit(export_dot(space), args)
    return 0


def _verify_options(args) -> VerifyOptions:
    fences = tuple(int(f) for f in args.fences.split(",") if f.strip())
    return VerifyOptions(
        fence_range=fences,
        budget_aut=args.budget_aut,
        skip=frozenset(args.skip or ()),
    )


def _report_exit(report, args) -> int:
    _emit(report.to_json() if args.json else report.to_text(), args)
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    spec = _resolve_spec(args)
    return _report_exit(verify_one(spec, args.check, _verify_options(args)), args)


def _cmd_verify_all(args) -> int:
    spec = _resolve_spec(args)
    return _report_exit(verify_all(spec, _verify_options(args)), args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetgroups",
        description="finite spaces whose symmetries realize a chosen finite group",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, *, space_file=False, aut_budget=False):
        p = sub.add_parser(name, help=help_text)
        _add_construction_args(p, with_space_file=space_file)
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--json", action="store_true", help="emit JSON")
        if aut_budget:
            p.add_argument(
                "--budget-aut",
                type=int,
                default=_env_int("POSETGROUPS_BUDGET_AUT", DEFAULT_AUT_BUDGET),
                help="search-node budget for automorphism/isomorphism search",
            )
        p.set_defaults(handler=handler)
        return p

    add("build", _cmd_build, "construct a space and summarize or dump it", space_file=True)
    add("aut", _cmd_aut, "enumerate automorphisms", space_file=True, aut_budget=True)
    add("core", _cmd_core, "strip beat points down to the core", space_file=True)
    p = add(
        "selfmaps",
        _cmd_selfmaps,
        "enumerate continuous self-maps and homotopy classes (small spaces)",
        space_file=True,
    )
    p.add_argument(
        "--max-points",
        type=int,
        default=DEFAULT_MAP_POINTS,
        help="refuse spaces larger than this (exhaustive search guard)",
    )
    p.add_argument(
        "--budget-maps",
        type=int,
        default=_env_int("POSETGROUPS_BUDGET_MAPS", DEFAULT_MAP_BUDGET),
        help="search-node budget for self-map enumeration",
    )
    add("homology", _cmd_homology, "Betti numbers and torsion of the order complex",
        space_file=True)
    add("h1-action", _cmd_h1_action, "matrices of automorphisms on first homology",
        space_file=True, aut_budget=True)
    add("export-dot", _cmd_export_dot, "Graphviz DOT of the cover relations",
        space_file=True)

    p = add("verify", _cmd_verify, "run a single named check", aut_budget=True)
    p.add_argument("--check", required=True, choices=CHECK_NAMES)
    p.add_argument("--fences", default="1,2,3", help="fence sizes for variant checks")
    p.add_argument("--skip", action="append", help=argparse.SUPPRESS)

    p = add("verify-all", _cmd_verify_all, "run the full verification registry",
            aut_budget=True)
    p.add_argument("--fences", default="1,2,3", help="fence sizes for variant checks")
    p.add_argument(
        "--skip", action="append", choices=CHECK_NAMES, help="skip a named check"
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (PosetError, SizeLimitExceeded, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

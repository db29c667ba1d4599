"""Command line front end.

Every subcommand reads and writes canonical JSON so reruns on the same
inputs are byte-identical. Output documents embed the hashes of their
inputs and the tool version. Exit status: 0 on success, 1 on a failed
check or bad input data (with a machine-readable report on stdout), 2
on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Tuple

from .accessibility import SYSTEM_RECIPES, profile, stability_sweep
from .boolean_ring import complement
from .cone_off import build_cone_off
from .cut_search import DEFAULT_BUDGET, enumerate_tight_cuts
from .cycle_space import CycleVector, dagger_check
from .errors import BadParams, CutlabError
from .graph_core import Window, cayley_window
from .peripheral import (
    PeripheralSystem,
    ball_peripheral,
    consolidate,
    coset_system,
    elliptic_pool,
    empty_system,
    level_system,
    minimise,
    tameness_check,
    thinness_report,
    whole_system,
)
from .serialize import (
    __version__,
    canonical_dumps,
    cone_to_dict,
    content_hash,
    cuts_from_dict,
    cuts_to_dict,
    profile_to_dict,
    read_json,
    system_from_dict,
    system_to_dict,
    tree_to_dict,
    tree_to_dot,
    window_from_dict,
    window_to_dict,
    window_to_dot,
    write_json,
)
from .structure_tree import build_structure_tree, validate_nested_family
from .verify import DEFAULT_SEED, SUITES, format_result, run_suite

__all__ = ["main", "build_parser"]

FAMILIES = ("free", "grid_Z", "grid_Z2", "tree", "tree_with_end")


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("CUTLAB_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise BadParams(f"CUTLAB_BUDGET is not an integer: {env!r}")
    return DEFAULT_BUDGET


def _emit(obj, path: Optional[str]) -> None:
    if path is None:
        print(canonical_dumps(obj))
    else:
        write_json(obj, path)


def _load_window(path: str) -> Tuple[Window, str]:
    d = read_json(path)
    return window_from_dict(d), content_hash(d)


def _load_system(path: str, window: Window, graph_hash: str) -> Tuple[PeripheralSystem, str]:
    d = read_json(path)
    return system_from_dict(d, window, expect_hash=graph_hash), content_hash(d)


def _anchor(text: str) -> Tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("anchor must be two ids, like 0,5")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError("anchor ids must be integers")


def _radii(text: str) -> List[int]:
    try:
        return [int(p) for p in text.split(",") if p]
    except ValueError:
        raise argparse.ArgumentTypeError("radii must be integers, like 4,5,6")


def _edge_mask(ids, n_edges: int) -> int:
    mask = 0
    for e in ids:
        if not 0 <= e < n_edges:
            raise BadParams(f"edge id {e} outside 0..{n_edges - 1}")
        mask |= 1 << e
    return mask


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    w = cayley_window(
        args.family,
        radius=args.radius,
        inner_radius=args.inner_radius,
        gens=args.rank,
        degree=args.degree,
    )
    _emit(window_to_dict(w), args.out)
    return 0


def cmd_cuts_enum(args) -> int:
    w, gh = _load_window(args.graph)
    budget = _budget(args)
    if args.tight:
        cuts = enumerate_tight_cuts(w, args.k, anchor=args.anchor, budget=budget)
    else:
        cuts = list(elliptic_pool(w, empty_system(w), args.k, budget=budget).cuts)
        if args.anchor is not None:
            u, v = args.anchor
            picked = []
            for c in cuts:
                su = (c.side >> u) & 1
                sv = (c.side >> v) & 1
                if su == sv:
                    continue
                picked.append(c if su else complement(c))
            cuts = picked
    _emit(cuts_to_dict(cuts, gh, k_max=args.k), args.out)
    return 0


def cmd_periph_gen(args) -> int:
    w, gh = _load_window(args.graph)
    if args.recipe == "cosets":
        sys_ = coset_system(w)
    elif args.recipe == "levels":
        sys_ = level_system(w)
    elif args.recipe == "whole":
        sys_ = whole_system(w)
    elif args.recipe == "ball":
        sys_ = PeripheralSystem(w, [ball_peripheral(w, args.ball_radius)])
    else:
        sys_ = empty_system(w)
    _emit(system_to_dict(sys_, gh), args.out)
    return 0


def cmd_periph_analyze(args) -> int:
    w, gh = _load_window(args.graph)
    sys_, sh = _load_system(args.system, w, gh)
    budget = _budget(args)
    pool = elliptic_pool(w, sys_, args.k, budget=budget)
    tame = tameness_check(sys_, pool)
    report = {
        "thinness": thinness_report(sys_),
        "pool_size": len(pool.cuts),
        "k": args.k,
        "tame": {
            "tame": tame.tame,
            "count": tame.count,
            "threshold": tame.threshold,
            "witness_size": tame.witness.size if tame.witness is not None else None,
        },
        "meta": {"version": __version__, "inputs": {"graph": gh, "system": sh}},
    }
    try:
        mini = minimise(sys_)
        kept = {p.name for p in mini.peripherals}
        report["minimise"] = {
            "kept": sorted(kept),
            "dropped": sorted(p.name for p in sys_.peripherals if p.name not in kept),
            "unstable": sorted(mini.unstable),
        }
    except CutlabError as e:
        report["minimise"] = {"error": str(e)}
    merged = consolidate(sys_, pool)
    report["consolidate"] = {"names": [p.name for p in merged.peripherals]}
    if args.report == "json":
        print(canonical_dumps(report))
    else:
        t = report["tame"]
        print(f"peripherals: {len(sys_)}  thinness: {report['thinness']}")
        print(f"elliptic pool at k={args.k}: {report['pool_size']} cuts")
        verdict = "tame" if t["tame"] else "NOT tame"
        print(f"{verdict}: worst cut meets {t['count']} peripherals "
              f"(threshold {t['threshold']})")
        mi = report["minimise"]
        if "error" in mi:
            print(f"minimise: unavailable ({mi['error']})")
        else:
            print(f"minimise keeps {len(mi['kept'])}, drops {len(mi['dropped'])}, "
                  f"unstable {len(mi['unstable'])}")
        print(f"consolidate: {len(report['consolidate']['names'])} peripherals")
    return 0


def cmd_coneoff(args) -> int:
    w, gh = _load_window(args.graph)
    sys_, sh = _load_system(args.system, w, gh)
    cone = build_cone_off(w, sys_)
    _emit(cone_to_dict(cone, gh, sh), args.out)
    if args.dot is not None:
        highlight = 0
        for h in range(len(sys_.peripherals)):
            highlight |= 1 << cone.cone_vertex(h)
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(window_to_dot(cone.window, highlight=highlight))
    return 0


def cmd_tree_build(args) -> int:
    w, gh = _load_window(args.graph)
    cd = read_json(args.cuts)
    cuts = cuts_from_dict(cd, w, expect_hash=gh)
    fam = validate_nested_family(cuts)
    tree = build_structure_tree(fam)
    _emit(tree_to_dict(tree, content_hash(cd)), args.out)
    if args.dot is not None:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(tree_to_dot(tree))
    return 0


def cmd_cycles_dagger(args) -> int:
    w, gh = _load_window(args.graph)
    g = w.graph
    n_edges = len(g.edges)
    gen_d = read_json(args.gen)
    cyc_d = read_json(args.cycle)
    win_d = read_json(args.window)
    gens = [CycleVector(g, _edge_mask(ids, n_edges)) for ids in gen_d["cycles"]]
    target = CycleVector(g, _edge_mask(cyc_d["edges"], n_edges))
    umask = _edge_mask(win_d["edges"], n_edges)
    ok, combo = dagger_check(gens, target, umask)
    print(canonical_dumps({
        "generated": ok,
        "combo": list(combo) if combo is not None else None,
        "meta": {"version": __version__, "inputs": {"graph": gh}},
    }))
    return 0


def cmd_access_profile(args) -> int:
    w, gh = _load_window(args.graph)
    sys_, sh = _load_system(args.system, w, gh)
    prof = profile(w, sys_, args.kmax, workers=args.workers, budget=_budget(args))
    _emit(profile_to_dict(prof, gh, sh), args.json)
    return 0


def cmd_access_sweep(args) -> int:
    rows, flags = stability_sweep(
        args.family,
        args.recipe,
        args.radii,
        args.kmax,
        gens=args.rank,
        degree=args.degree,
        budget=_budget(args),
    )
    _emit({
        "rows": [r.to_dict() for r in rows],
        "flags": flags,
        "meta": {"version": __version__},
    }, args.json)
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed)
    for r in results:
        print(format_result(r))
    failures = [r for r in results if not r.passed]
    if failures:
        print(canonical_dumps({
            "failures": [{"check": r.ident, "detail": r.detail} for r in failures],
        }))
        return 1
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_budget(p) -> None:
    p.add_argument("--budget", type=int, default=None,
                   help="search step budget (or CUTLAB_BUDGET env)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutlab",
        description="edge-cut calculus on finite windows",
    )
    parser.add_argument("--version", action="version", version=f"cutlab {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("gen", help="emit a stock window instance as JSON")
    gen.add_argument("--family", required=True, choices=FAMILIES)
    gen.add_argument("--rank", type=int, default=2,
                     help="generator count for the free family")
    gen.add_argument("--degree", type=int, default=3,
                     help="branching degree for tree families")
    gen.add_argument("--radius", type=int, required=True)
    gen.add_argument("--inner-radius", type=int, default=None)
    gen.add_argument("-o", "--out", default=None)
    gen.set_defaults(func=cmd_gen)

    cuts = sub.add_parser("cuts", help="cut enumeration")
    csub = cuts.add_subparsers(dest="cuts_cmd", required=True)
    enum = csub.add_parser("enum", help="enumerate admissible cuts up to size k")
    enum.add_argument("graph")
    enum.add_argument("--k", type=int, required=True)
    enum.add_argument("--tight", action="store_true",
                      help="base tight cuts only, no pairwise closure")
    enum.add_argument("--anchor", type=_anchor, default=None,
                      help="inside,outside vertex pair the cuts must separate")
    enum.add_argument("-o", "--out", default=None)
    _add_budget(enum)
    enum.set_defaults(func=cmd_cuts_enum)

    periph = sub.add_parser("periph", help="peripheral system analysis")
    psub = periph.add_subparsers(dest="periph_cmd", required=True)
    pg = psub.add_parser("gen", help="emit a stock peripheral system as JSON")
    pg.add_argument("graph")
    pg.add_argument("--recipe", required=True,
                    choices=("cosets", "levels", "empty", "whole", "ball"))
    pg.add_argument("--ball-radius", type=int, default=1)
    pg.add_argument("-o", "--out", default=None)
    pg.set_defaults(func=cmd_periph_gen)
    an = psub.add_parser("analyze", help="thinness, tameness, normalization")
    an.add_argument("graph")
    an.add_argument("system")
    an.add_argument("--k", type=int, default=3)
    an.add_argument("--report", choices=("text", "json"), default="text")
    _add_budget(an)
    an.set_defaults(func=cmd_periph_analyze)

    cone = sub.add_parser("coneoff", help="cone off a peripheral system")
    cone.add_argument("graph")
    cone.add_argument("system")
    cone.add_argument("-o", "--out", default=None)
    cone.add_argument("--dot", default=None)
    cone.set_defaults(func=cmd_coneoff)

    tree = sub.add_parser("tree", help="structure trees from nested cuts")
    tsub = tree.add_subparsers(dest="tree_cmd", required=True)
    tb = tsub.add_parser("build", help="build the region tree of a nested family")
    tb.add_argument("graph")
    tb.add_argument("cuts")
    tb.add_argument("-o", "--out", default=None)
    tb.add_argument("--dot", default=None)
    tb.set_defaults(func=cmd_tree_build)

    cyc = sub.add_parser("cycles", help="cycle space tests")
    ysub = cyc.add_subparsers(dest="cycles_cmd", required=True)
    dg = ysub.add_parser("dagger", help="windowed generation test")
    dg.add_argument("graph")
    dg.add_argument("--gen", required=True, help="JSON with a cycles list")
    dg.add_argument("--cycle", required=True, help="JSON with a target edge list")
    dg.add_argument("--window", required=True, help="JSON with the edge window")
    dg.set_defaults(func=cmd_cycles_dagger)

    acc = sub.add_parser("access", help="relative accessibility profiling")
    asub = acc.add_subparsers(dest="access_cmd", required=True)
    pr = asub.add_parser("profile", help="classify stable end pairs")
    pr.add_argument("graph")
    pr.add_argument("system")
    pr.add_argument("--kmax", type=int, required=True)
    pr.add_argument("--workers", type=int, default=1)
    pr.add_argument("--json", default=None, help="output path (stdout if omitted)")
    _add_budget(pr)
    pr.set_defaults(func=cmd_access_profile)
    sw = asub.add_parser("sweep", help="profile one family across radii")
    sw.add_argument("--family", required=True, choices=FAMILIES)
    sw.add_argument("--rank", type=int, default=2)
    sw.add_argument("--degree", type=int, default=3)
    sw.add_argument("--radii", type=_radii, required=True)
    sw.add_argument("--recipe", choices=SYSTEM_RECIPES, default="cosets")
    sw.add_argument("--kmax", type=int, default=4)
    sw.add_argument("--json", default=None)
    _add_budget(sw)
    sw.set_defaults(func=cmd_access_sweep)

    ver = sub.add_parser("verify", help="run the acceptance checks")
    ver.add_argument("--suite", choices=sorted(SUITES), default="all")
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CutlabError, OSError, KeyError, json.JSONDecodeError) as e:
        msg = f"missing key {e}" if isinstance(e, KeyError) else str(e)
        print(canonical_dumps({"error": type(e).__name__, "message": msg}))
        return 1


if __name__ == "__main__":
    sys.exit(main())

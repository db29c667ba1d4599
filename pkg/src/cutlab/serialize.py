"""JSON and DOT round trips for windows, pools, systems, cones, trees.

Every file written here is canonical: keys sorted, compact separators,
one trailing newline. Output dictionaries carry the tool version and
the sha256 of each input they were derived from, so a rerun on the same
inputs is byte for byte identical and a mismatch is detectable.
"""

from __future__ import annotations

import hashlib
import json
from typing import Dict, List, Optional, Sequence

from .bitset import bit_list, iter_bits, mask_of
from .boolean_ring import Cut
from .cut_search import CutPool
from .errors import BadParams, GraphMismatch
from .graph_core import Graph, Window, build_graph
from .peripheral import Peripheral, PeripheralSystem

__version__ = "0.1.0"

__all__ = [
    "canonical_dumps",
    "content_hash",
    "file_hash",
    "write_json",
    "read_json",
    "window_to_dict",
    "window_from_dict",
    "cuts_to_dict",
    "cuts_from_dict",
    "system_to_dict",
    "system_from_dict",
    "cone_to_dict",
    "tree_to_dict",
    "profile_to_dict",
    "window_to_dot",
    "tree_to_dot",
    "meta_block",
]


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def content_hash(obj) -> str:
    return hashlib.sha256(canonical_dumps(obj).encode()).hexdigest()


def file_hash(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def write_json(obj, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(canonical_dumps(obj))
        fh.write("\n")


def read_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def meta_block(inputs: Optional[Dict[str, str]] = None) -> Dict:
    return {"version": __version__, "inputs": dict(inputs or {})}


def window_to_dict(window: Window) -> Dict:
    g = window.graph
    d: Dict = {
        "vertex_count": g.n,
        "edges": [[u, v] for (u, v) in g.edges],
        "frontier": bit_list(window.frontier_mask),
        "basepoint": window.basepoint,
        "radius": window.radius,
        "inner_radius": window.inner_radius,
        "family": window.family,
        "labels": {str(i): lab for i, lab in enumerate(g.labels)},
        "dist": list(window.dist),
        "meta": meta_block(),
    }
    if g.edge_labels is not None:
        d["edge_labels"] = list(g.edge_labels)
    if window.levels is not None:
        d["levels"] = list(window.levels)
    if window.params:
        d["params"] = dict(window.params)
    return d


def window_from_dict(d: Dict) -> Window:
    n = d["vertex_count"]
    labels = [d["labels"][str(i)] for i in range(n)] if "labels" in d else None
    graph = build_graph(
        n,
        [tuple(e) for e in d["edges"]],
        labels=labels,
        edge_labels=d.get("edge_labels"),
    )
    window = Window(
        graph,
        d["radius"],
        d["inner_radius"],
        d["dist"],
        family=d.get("family", "finite"),
        basepoint=d.get("basepoint", 0),
        levels=d.get("levels"),
        params=d.get("params"),
    )
    if bit_list(window.frontier_mask) != d.get("frontier", []):
        raise BadParams("frontier list disagrees with distances")
    return window


def cuts_to_dict(
    cuts: Sequence[Cut],
    graph_hash: str,
    k_max: Optional[int] = None,
) -> Dict:
    d: Dict = {
        "graph_hash": graph_hash,
        "cuts": [bit_list(c.side) for c in cuts],
        "meta": meta_block({"graph": graph_hash}),
    }
    if k_max is not None:
        d["k_max"] = k_max
    return d


def cuts_from_dict(d: Dict, window: Window, expect_hash: Optional[str] = None) -> List[Cut]:
    if expect_hash is not None and d.get("graph_hash") != expect_hash:
        raise GraphMismatch("cut file was produced from a different graph")
    return [Cut(window, mask_of(ids)) for ids in d["cuts"]]


def system_to_dict(sys: PeripheralSystem, graph_hash: str) -> Dict:
    return {
        "graph_hash": graph_hash,
        "provenance": sys.provenance,
        "peripherals": [
            {"name": p.name, "vertices": bit_list(p.members)}
            for p in sys.peripherals
        ],
        "meta": meta_block({"graph": graph_hash}),
    }


def system_from_dict(
    d: Dict, window: Window, expect_hash: Optional[str] = None
) -> PeripheralSystem:
    if expect_hash is not None and d.get("graph_hash") != expect_hash:
        raise GraphMismatch("peripheral file was produced from a different graph")
    periphs = [
        Peripheral(p["name"], mask_of(p["vertices"])) for p in d["peripherals"]
    ]
    return PeripheralSystem(window, periphs, provenance=d.get("provenance", "raw"))


def cone_to_dict(cone, graph_hash: str, system_hash: str) -> Dict:
    d = window_to_dict(cone.window)
    d["cone_index"] = {
        cone.system.peripherals[h].name: cone.cone_vertex(h)
        for h in range(len(cone.system.peripherals))
    }
    d["base_vertex_count"] = cone.base.graph.n
    d["meta"] = meta_block({"graph": graph_hash, "system": system_hash})
    return d


def tree_to_dict(tree, cuts_hash: str) -> Dict:
    return {
        "cuts_hash": cuts_hash,
        "n_cuts": len(tree.family.cuts),
        "vertices": [bit_list(u.mask) for u in tree.vertices],
        "edges": [[u, v, rep] for (u, v, rep) in tree.edges],
        "meta": meta_block({"cuts": cuts_hash}),
    }


def profile_to_dict(prof, graph_hash: str, system_hash: str) -> Dict:
    d = prof.to_dict()
    d["meta"] = meta_block({"graph": graph_hash, "system": system_hash})
    return d


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def window_to_dot(window: Window, highlight: int = 0) -> str:
    """DOT text; frontier vertices are squares, highlighted ones filled."""
    g = window.graph
    lines = ["graph window {", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = [f"label={_dot_quote(g.labels[v] or chr(949))}"]
        if (window.frontier_mask >> v) & 1:
            attrs.append("shape=box")
        if (highlight >> v) & 1:
            attrs.append('style=filled fillcolor="gray80"')
        lines.append(f"  v{v} [{' '.join(attrs)}];")
    for (u, v) in g.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(tree) -> str:
    lines = ["graph structure_tree {", "  node [shape=circle];"]
    for t in range(tree.n):
        lines.append(f"  t{t} [label={_dot_quote(str(t))}];")
    for (u, v, rep) in tree.edges:
        lines.append(f"  t{u} -- t{v} [label={_dot_quote(str(rep))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

import pytest

from cutlab.accessibility import profile
from cutlab.boolean_ring import Cut
from cutlab.cone_off import build_cone_off
from cutlab.errors import BadParams, GraphMismatch
from cutlab.graph_core import cayley_window
from cutlab.peripheral import coset_system, elliptic_pool, empty_system
from cutlab.serialize import (
    canonical_dumps,
    content_hash,
    cuts_from_dict,
    cuts_to_dict,
    file_hash,
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
from cutlab.structure_tree import build_structure_tree, validate_nested_family


def test_canonical_dumps_is_order_insensitive():
    a = canonical_dumps({"b": 1, "a": [2, 3]})
    b = canonical_dumps({"a": [2, 3], "b": 1})
    assert a == b == '{"a":[2,3],"b":1}'
    assert content_hash({"b": 1, "a": [2, 3]}) == content_hash({"a": [2, 3], "b": 1})


def test_write_then_hash_is_stable(tmp_path):
    p1 = tmp_path / "one.json"
    p2 = tmp_path / "two.json"
    obj = {"z": list(range(10)), "a": {"nested": True}}
    write_json(obj, str(p1))
    write_json(obj, str(p2))
    assert file_hash(str(p1)) == file_hash(str(p2))
    assert read_json(str(p1)) == obj


def test_window_round_trip():
    w = cayley_window("free", radius=4, gens=2)
    d = window_to_dict(w)
    back = window_from_dict(d)
    assert back.graph.n == w.graph.n
    assert back.graph.edges == w.graph.edges
    assert back.graph.labels == w.graph.labels
    assert back.frontier_mask == w.frontier_mask
    assert back.zone_mask == w.zone_mask
    assert back.inner_radius == w.inner_radius
    assert canonical_dumps(window_to_dict(back)) == canonical_dumps(d)


def test_window_from_dict_checks_frontier():
    w = cayley_window("grid_Z", radius=4)
    d = window_to_dict(w)
    d["frontier"] = d["frontier"][:1]
    with pytest.raises(BadParams):
        window_from_dict(d)


def test_cuts_round_trip_and_hash_guard():
    w = cayley_window("free", radius=4, gens=2)
    gh = content_hash(window_to_dict(w))
    pool = elliptic_pool(w, empty_system(w), 2)
    d = cuts_to_dict(pool.cuts, gh, k_max=2)
    back = cuts_from_dict(d, w, expect_hash=gh)
    assert [c.side for c in back] == [c.side for c in pool.cuts]
    assert [c.cob for c in back] == [c.cob for c in pool.cuts]
    with pytest.raises(GraphMismatch):
        cuts_from_dict(d, w, expect_hash="0" * 64)


def test_system_round_trip_keeps_provenance():
    w = cayley_window("free", radius=4, gens=2)
    gh = content_hash(window_to_dict(w))
    sys = coset_system(w)
    back = system_from_dict(system_to_dict(sys, gh), w, expect_hash=gh)
    assert back.names() == sys.names()
    assert [p.members for p in back] == [p.members for p in sys.peripherals]
    assert back.provenance == sys.provenance


def test_tree_dict_shape():
    w = cayley_window("grid_Z", radius=4)
    side = 0
    for v, lab in enumerate(w.graph.labels):
        if lab.startswith("-"):
            side |= 1 << v
    fam = validate_nested_family([Cut(w, side)])
    tree = build_structure_tree(fam)
    d = tree_to_dict(tree, "deadbeef")
    assert d["cuts_hash"] == "deadbeef"
    assert d["n_cuts"] == 2
    assert len(d["vertices"]) == 2 and len(d["edges"]) == 1


def test_profile_dict_embeds_input_hashes():
    w = cayley_window("grid_Z", radius=5)
    prof = profile(w, empty_system(w), 1)
    d = profile_to_dict(prof, "g" * 8, "s" * 8)
    assert d["meta"]["inputs"] == {"graph": "g" * 8, "system": "s" * 8}
    assert d["K"] == 1


def test_dot_outputs():
    w = cayley_window("free", radius=2, gens=2)
    dot = window_to_dot(w, highlight=0b10)
    assert dot.startswith("graph window {") and dot.rstrip().endswith("}")
    assert chr(949) in dot  # unlabeled basepoint still gets a glyph
    assert dot.count("shape=box") == 12  # frontier sphere of the rank-2 ball
    assert 'style=filled fillcolor="gray80"' in dot
    assert dot.count(" -- ") == len(w.graph.edges)

    wz = cayley_window("grid_Z", radius=4)
    side = 0
    for v, lab in enumerate(wz.graph.labels):
        if lab.startswith("-"):
            side |= 1 << v
    tree = build_structure_tree(validate_nested_family([Cut(wz, side)]))
    tdot = tree_to_dot(tree)
    assert tdot.startswith("graph structure_tree {")
    assert tdot.count(" -- ") == len(tree.edges)


def test_cone_dict_lists_cone_vertices():
    from cutlab.serialize import cone_to_dict

    w = cayley_window("free", radius=4, gens=2)
    sys = coset_system(w)
    cone = build_cone_off(w, sys)
    d = cone_to_dict(cone, "g" * 8, "s" * 8)
    assert d["base_vertex_count"] == w.graph.n
    assert len(d["cone_index"]) == len(sys)
    assert d["cone_index"][sys[0].name] == cone.cone_vertex(0)
    assert d["vertex_count"] == w.graph.n + len(sys)

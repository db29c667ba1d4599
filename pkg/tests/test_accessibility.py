import pytest

from cutlab.accessibility import (
    SYSTEM_RECIPES,
    easy_case_check,
    profile,
    stability_sweep,
)
from cutlab.boolean_ring import Cut
from cutlab.errors import BadParams, GraphMismatch
from cutlab.graph_core import cayley_window, window_ends
from cutlab.peripheral import (
    coset_system,
    elliptic_pool,
    empty_system,
    level_system,
    whole_system,
)
from cutlab.serialize import canonical_dumps


def test_profile_two_ended_line():
    w = cayley_window("grid_Z", radius=6)
    prof = profile(w, empty_system(w), 2)
    assert prof.K == 1
    assert len(prof.records) == 1
    assert prof.records[0].verdict == "SeparatedElliptic"
    assert prof.records[0].min_k == 1
    assert prof.records[0].witness.size == 1
    assert prof.thinness == 0 and prof.system_names == []


def test_profile_line_whole_is_shared():
    w = cayley_window("grid_Z", radius=6)
    prof = profile(w, whole_system(w), 2)
    assert prof.K is None
    assert prof.records[0].verdict == "SharedPeripheral"
    assert prof.records[0].peripheral == "V"


def test_profile_free_cosets_needs_pairs():
    w = cayley_window("free", radius=4, gens=2)
    prof = profile(w, coset_system(w), 2)
    assert prof.K == 2
    verdicts = {r.verdict for r in prof.records}
    assert verdicts == {"SeparatedElliptic", "SharedPeripheral"}
    for r in prof.records:
        if r.verdict == "SeparatedElliptic":
            assert r.min_k == 2 and r.witness is not None
        else:
            assert r.peripheral is not None


def test_profile_levels_all_shared():
    w = cayley_window("tree_with_end", radius=6, degree=3)
    prof = profile(w, level_system(w), 1)
    assert prof.K is None
    assert all(r.verdict == "SharedPeripheral" for r in prof.records)
    # consolidation fused the levels before any was dismissed as thin
    assert len(prof.system_names) == 1 and "+" in prof.system_names[0]


def test_profile_guards():
    w = cayley_window("grid_Z", radius=6)
    other = cayley_window("grid_Z", radius=4)
    with pytest.raises(GraphMismatch):
        profile(w, empty_system(other), 2)
    with pytest.raises(BadParams):
        profile(w, empty_system(w), 0)


def test_profile_worker_count_is_invisible():
    w = cayley_window("free", radius=4, gens=2)
    sys = coset_system(w)
    solo = canonical_dumps(profile(w, sys, 2, workers=1).to_dict())
    multi = canonical_dumps(profile(w, sys, 2, workers=4).to_dict())
    assert solo == multi


def test_profile_rerun_is_identical():
    w = cayley_window("grid_Z", radius=5)
    a = canonical_dumps(profile(w, empty_system(w), 2).to_dict())
    b = canonical_dumps(profile(w, empty_system(w), 2).to_dict())
    assert a == b


def test_easy_case_on_line_pool():
    w = cayley_window("grid_Z", radius=6)
    sys = empty_system(w)
    ok, k = easy_case_check(w, sys, elliptic_pool(w, sys, 1))
    assert ok and k == 1


def test_easy_case_detects_combination_gap():
    """Two one-sided pieces separate the ends only when xored together."""
    w = cayley_window("grid_Z", radius=6)
    la = {lab: v for v, lab in enumerate(w.graph.labels)}
    tail = Cut(w, (1 << la["-6"]) | (1 << la["-5"]))
    joint = Cut(w, 1 << la["-4"])
    for c in (tail, joint):  # neither swallows the left shadow alone
        for e in window_ends(w):
            assert e.shadow & c.side != e.shadow
    ok, k = easy_case_check(w, empty_system(w), [tail, joint])
    assert not ok and k is None

def test_to_dict_shapes():
    w = cayley_window("free", radius=4, gens=2)
    d = profile(w, coset_system(w), 2).to_dict()
    assert d["scale"] == {"radius": 4, "inner_radius": 2, "k_max": 2}
    assert set(d) == {
        "scale", "K", "thinness", "stable_ends", "unstable_ends",
        "system", "unstable_peripherals", "pairs",
    }
    for p in d["pairs"]:
        assert p["verdict"] in ("SeparatedElliptic", "SharedPeripheral")
        if p["verdict"] == "SeparatedElliptic":
            assert isinstance(p["min_k"], int) and p["witness_side"]


def test_sweep_line_rows_and_flags():
    rows, flags = stability_sweep("grid_Z", "empty", [4, 5, 6, 7, 8], 2)
    assert [r.radius for r in rows] == [4, 5, 6, 7, 8]
    assert all(r.K == 1 and r.n_pairs == 1 and r.n_separated == 1 for r in rows)
    assert flags == []


def test_sweep_flags_drift():
    rows, flags = stability_sweep("free", "cosets", [4, 5], 2)
    assert all(r.K == 2 for r in rows)
    assert flags == []
    with pytest.raises(BadParams):
        stability_sweep("grid_Z", "nonsense", [4], 2)
    assert "nonsense" not in SYSTEM_RECIPES

"""Acceptance gate: every top-level guarantee, one pass/fail line each.

Each test runs one check from cutlab.verify at its default scale and
seed, prints the same line the CLI verify command would print, and
fails with the check's own detail string. The checks share cached
windows and pools inside the verify module, so running the whole file
is much cheaper than the sum of cold starts.
"""

from cutlab import verify


def _gate(check):
    r = check()
    print(verify.format_result(r))
    assert r.passed, r.detail
    return r


def test_tight_cut_enumeration_matches_brute_force():
    r = _gate(verify.check_tight_cut_oracle)
    assert r.ident == "tight-cut-oracle"


def test_coset_separation_floor_is_two():
    r = _gate(verify.check_coset_separation_floor)
    assert r.ident == "coset-separation-floor"


def test_level_systems_fail_tameness_with_growing_witnesses():
    r = _gate(verify.check_deep_ray_levels)
    assert r.ident == "deep-ray-levels"


def test_elliptic_cuts_close_under_ring_operations():
    r = _gate(verify.check_elliptic_subring)
    assert r.ident == "elliptic-subring"


def test_normalization_leaves_tame_pools_invariant():
    r = _gate(verify.check_normalization_pools)
    assert r.ident == "normalization-pools"


def test_cone_transfer_is_a_ring_embedding():
    r = _gate(verify.check_cone_transfer)
    assert r.ident == "cone-transfer"


def test_structure_trees_match_ultrafilter_enumeration():
    r = _gate(verify.check_tree_oracle)
    assert r.ident == "tree-oracle"


def test_translation_differences_stay_out_of_the_zone():
    r = _gate(verify.check_translation_windows)
    assert r.ident == "translation-windows"


def test_windowed_generation_matches_subset_search():
    r = _gate(verify.check_dagger_oracle)
    assert r.ident == "dagger-oracle"


def test_chains_ascend_and_walks_alternate():
    r = _gate(verify.check_chain_and_alternation)
    assert r.ident == "chain-and-alternation"


def test_cone_cycle_witnesses_split_by_system():
    r = _gate(verify.check_cone_cycle_witness)
    assert r.ident == "cone-cycle-witness"


def test_profiles_are_stable_and_deterministic():
    r = _gate(verify.check_profile_stability)
    assert r.ident == "profile-stability"

"""Edge-cut calculus on finite graphs and finite windows of infinite ones.

The package revolves around five objects: windows (finite balls with a
marked frontier), cuts (vertex sides with edge coboundaries, forming a
Boolean ring), peripheral systems (named vertex sets cuts may not pull
apart), cone-offs (the window with one apex vertex per peripheral), and
structure trees (region trees of nested cut families). On top of those
sit the cycle-space tests and the end-pair accessibility profiler.
"""

from .accessibility import (
    AccessProfile,
    PairRecord,
    SweepRow,
    easy_case_check,
    profile,
    stability_sweep,
)
from .bitset import bit_list, iter_bits, mask_of, popcount
from .boolean_ring import (
    Cut,
    canonical_side,
    complement,
    corners,
    cut_sort_key,
    intersect,
    is_nested,
    is_nested_family,
    separates,
    sym_diff,
)
from .cone_off import ConeOff, build_cone_off, growth_profile, lift, restrict
from .cut_search import (
    CutPool,
    brute_force_cuts,
    enumerate_tight_cuts,
    make_pool,
    min_separating_coboundary,
    nested_generating_set,
)
from .cycle_space import (
    ChainViolation,
    CycleVector,
    GeneratingSet,
    TamenessWitness,
    algebraic_generates,
    alternating_sequence,
    cone_cycle_tameness_witness,
    cone_generating_set,
    cycle_basis,
    dagger_check,
    hamann_chain,
    simple_cycles_upto,
)
from .errors import (
    BadParams,
    BudgetExceeded,
    ContainsTrivial,
    CutlabError,
    GraphMismatch,
    Inadmissible,
    InadmissibleLift,
    InadmissiblePullback,
    IncompleteNestedSet,
    KMaxExhausted,
    NoFixedVertex,
    NoSequence,
    NotElliptic,
    NotNested,
    ShadowSplit,
    StabilityError,
)
from .gf2 import Gf2Basis, gf2_rank, gf2_span_equal, solve_in_span
from .graph_core import (
    Graph,
    Window,
    WindowEnd,
    build_graph,
    cayley_window,
    components,
    finite_window,
    limit_size_class,
    window_ends,
)
from .peripheral import (
    Peripheral,
    PeripheralSystem,
    TamenessReport,
    ball_peripheral,
    consolidate,
    coset_system,
    dichotomy_check,
    elliptic_pool,
    ellipticity_witness,
    empty_system,
    is_elliptic,
    level_system,
    minimise,
    ray_peripheral,
    rel_escape_ideal,
    tameness_check,
    thicken,
    thinness_report,
    whole_system,
)
from .serialize import __version__, canonical_dumps, content_hash, read_json, write_json
from .structure_tree import (
    NestedFamily,
    StructureTree,
    Ultrafilter,
    build_structure_tree,
    enumerate_ultrafilters,
    peripheral_fixed_vertex,
    pullback,
    translation_difference,
    validate_nested_family,
    vertex_map,
)

__all__ = [name for name in dir() if not name.startswith("_")]

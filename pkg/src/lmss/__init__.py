"""Local maximum stable set families, greedoid checks, graph compositions."""

from .graph import (
    FIXTURE_NAMES,
    EdgeListError,
    Graph,
    Graph6Error,
    closed_neighborhood,
    complement,
    complete,
    cycle,
    edge_count,
    edgeless,
    edges,
    format_vertex_set,
    from_edge_list,
    induced_subgraph,
    is_complete,
    is_connected,
    is_tree,
    labeled_trees,
    named_fixture,
    open_neighborhood,
    parse_edge_list_text,
    parse_graph6,
    parse_vertex_set,
    path,
    pendant_vertices,
    random_graph,
    random_tree,
    to_graph6,
    tree_from_pruefer,
    validate,
)
from .greedoid import (
    ACCESSIBILITY_FAIL,
    EXCHANGE_FAIL,
    GREEDOID,
    GreedoidVerdict,
    accessibility_chain,
    check_accessibility,
    check_exchange,
    is_greedoid,
)
from .ops import (
    CompositeGraph,
    composition,
    corona,
    disjoint_union,
    lexicographic_product,
    restrict,
    zykov_sum,
)
from .stable import (
    SetFamily,
    alpha,
    enumerate_stable_sets,
    is_local_max_stable,
    is_stable,
    min_nonempty_size,
    omega,
    psi,
    psi_min_size,
)
from .theorems import (
    THEOREM_IDS,
    TheoremReport,
    corona_psi_characterization,
    corpus_graphs,
    corpus_upto,
    run_on_instance,
    sweep,
    verify_composition_specializations,
    verify_corona_corollary,
    verify_corona_lemma,
    verify_corona_theorem,
    verify_nemhauser_trotter,
    verify_tree_greedoid,
    verify_union_prop,
    verify_zykov_bound,
    verify_zykov_characterization,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

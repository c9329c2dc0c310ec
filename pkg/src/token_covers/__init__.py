"""Token graphs as covering graphs of combined voltage graphs.

The library constructs token graphs, combined voltage graphs and their
covering lifts, verifies the explicit base-graph construction for 2-token
graphs of even complete graphs, checks edge-transitivity classification
instances, and searches for cyclic quotient bases of star token graphs.
"""

from .algebra import (
    Closure,
    Coset,
    CyclicGroup,
    Permutation,
    Subgroup,
    coset_translate,
    cosets,
    group_closure,
    permutation_order,
)
from .graphs import (
    Multigraph,
    SimpleGraph,
    as_simple,
    complete,
    complete_bipartite,
    connected_components,
    cycle,
    export,
    from_json,
    is_biregular,
    is_connected,
    make_family,
    path,
    srg_parameters,
    star,
    to_dot,
    to_json,
    underlying_simple,
)
from .report import Evidence, VerificationReport
from .search import BACKEND as SEARCH_BACKEND
from .symmetry import (
    ActionSearch,
    AutGroup,
    automorphisms,
    edge_orbits,
    free_cyclic_actions,
    is_automorphism,
    is_edge_transitive,
    is_isomorphic,
    is_vertex_transitive,
    vertex_orbits,
    zz_check,
)
from .tokens import (
    induced_token_permutation,
    inclusion_bigraph,
    johnson,
    ksubsets,
    line_graph,
    subdivision,
    token_graph,
)
from .voltage import (
    CombinedVoltageGraph,
    Cover,
    CoverVertex,
    conjecture_search,
    cover_token,
    lift,
    quotient_cyclic,
    quotient_free,
    theorem1_base,
    verify_theorem1,
)

__version__ = "0.1.0"

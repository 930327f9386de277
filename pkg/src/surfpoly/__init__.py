"""Maps on compact surfaces via permutation triples: structural parameters,
the surface Tutte polynomial with its specializations, and local group-valued
flow and tension counting."""

from .builders import (
    BouquetSpec,
    HalfEdge,
    RotationSystem,
    disjoint_union,
    from_rotation_system,
    standard_bouquet,
)
from .errors import SurfpolyError
from .flows import (
    abelian_flow_count,
    brute_force_flows,
    brute_force_tensions,
    count,
    flow_count_formula,
    flow_count_via_tutte,
    tension_count_closed,
    tension_count_formula,
    tension_count_via_tutte,
)
from .groups import FiniteGroup, catalog, validate_group, zeta
from .invariants import (
    krushkal,
    q_poly,
    quasi_forest_counts,
    quasi_tree_count,
    signed_s_poly,
    surface_tutte,
    tilde_tutte,
    tutte_of_underlying,
)
from .kernel import backend_name
from .ops import contract, delete, dual, minor_pair
from .poly import MultiPoly, Var
from .premap import (
    EdgeKind,
    MapParams,
    Premap,
    canonical_form,
    classify_edge,
    component_params,
    components,
    equivalent,
    map_params,
    validate_premap,
)
from .serialize import parse_map, serialize_map

__version__ = "1.0.0"

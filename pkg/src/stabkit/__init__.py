"""Stabbing numbers of geometric graphs on planar point sets."""

__version__ = "0.1.0"

from .geom_core import (  # noqa: E402
    GeometryError,
    Orientation,
    Point,
    PointSet,
    is_general_position,
    orientation,
    same_order_type,
    segments_properly_cross,
)
from .geom_graph import (  # noqa: E402
    GeometricGraph,
    contract_degree2,
    cut_size,
    reduce_with_specials,
    remove_degree1,
    stabbing_number,
)
from .stab_lines import Bipartition, RepresentativeSet, partition_from_pair, representative_partitions  # noqa: E402
from .search import (  # noqa: E402
    SearchOutcome,
    hamiltonian_paths,
    min_stab_matching,
    min_stab_path,
    min_stab_tree,
    min_stab_triangulation,
    perfect_matchings,
    spanning_trees,
    triangulations,
)
from .constructions import (  # noqa: E402
    ConstructionBundle,
    gen_matching_cex,
    gen_tree_cex,
    gen_tree_cex_9,
    gen_tri_cex,
    validate_tree_cex,
)

__all__ = [
    "Bipartition",
    "ConstructionBundle",
    "GeometricGraph",
    "GeometryError",
    "Orientation",
    "Point",
    "PointSet",
    "RepresentativeSet",
    "SearchOutcome",
    "contract_degree2",
    "cut_size",
    "gen_matching_cex",
    "gen_tree_cex",
    "gen_tree_cex_9",
    "gen_tri_cex",
    "hamiltonian_paths",
    "is_general_position",
    "min_stab_matching",
    "min_stab_path",
    "min_stab_tree",
    "min_stab_triangulation",
    "orientation",
    "partition_from_pair",
    "perfect_matchings",
    "reduce_with_specials",
    "remove_degree1",
    "representative_partitions",
    "same_order_type",
    "segments_properly_cross",
    "spanning_trees",
    "stabbing_number",
    "triangulations",
    "validate_tree_cex",
]

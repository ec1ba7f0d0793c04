"""Rooted trees as excursions, tree metrics, and contour trees of scalar fields."""

from .contour import (
    ComponentRecord,
    MergeStructure,
    QuotientTree,
    ScalarField,
    build_merge,
    component_at,
    contour_distance,
    lambda_,
    level_representative,
    merge_level,
    quotient_tree,
)
from .errors import *  # noqa: F401,F403
from .excursion import (
    Excursion,
    decode,
    encode,
    excursion_distance,
    random_excursion,
    root_degree,
    validate_excursion,
)
from .metric_index import FourPointReport, TreeMetricIndex, build_index, dist, four_point_check, lca
from .newick import canonical_newick, parse_newick, to_newick
from .pathforest import PathForest, insert_path, path_distance, separation, to_tree
from .tree import Relation, RootedTree, build_tree, compare, from_partial_order

"""Homology of unitarizable modules for infinite-rank Lie superalgebra duals."""

from .partitions import Partition, PartitionPair, EventuallyLinearSeq, transpose, dual_partner, is_dual_pair
from .weylgroup import WeylElement, enumerate_w0, length, bar_map, bar_map_inverse, format_element, parse_element
from .weights import AlgebraTag, WeightLabel, WeightVector, in_D, zeta_data, dot_action
from .rootsystem import Root, delta_subsystem, finite_w0
from .homology import (
    HomologyDecomposition,
    NotUnitarizableError,
    OutOfScopeError,
    h_enright_finite,
    h_route_bar,
    h_route_g,
    h_route_relabel,
    kostant_finite,
)

__version__ = "0.1.0"

"""Matching metrics on multisets over a pointed metric space."""
from msmetric.assignment import Assignment, SizeCapError, brute_force_assignment, solve_assignment
from msmetric.ground import GroundSpace, dist, dist_to_set, validate_finite_metric
from msmetric.l1 import DistanceInterval, TruncatedL1Multiset, cauchy_gap_table, l1_distance, truncate
from msmetric.nmultiset import (
    Multiset,
    SpaceMismatchError,
    add,
    canonicalize,
    embed_point,
    matching_distance,
    matching_distance_padded,
)
from msmetric.quotient import QuotientPoint, QuotientSpace, collapse, quotient_distance
from msmetric.zgroup import (
    SignedMultiset,
    embed_multiset,
    group_add,
    group_distance,
    group_neg,
    group_sub,
    neg_part,
    pos_part,
)

__version__ = "0.1.0"

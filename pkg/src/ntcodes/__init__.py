"""Codes in Hamming graphs and their neighbour-transitive automorphism groups."""

from ntcodes.errors import (
    CapacityError,
    DimensionError,
    DomainError,
    FormatError,
    MembershipError,
    NTCodesError,
    PreconditionError,
    UndefinedMetricError,
)
from ntcodes.hamming import (
    Code,
    DistancePartition,
    Vertex,
    diff_class,
    distance_partition,
    hamming_distance,
    min_distance,
    normalize,
    support_and_weight,
)
from ntcodes.kernels import BACKEND

__version__ = "0.1.0"

"""Exact lengths of local cohomology modules of determinantal thickenings.

For the polynomial ring R on a 2 x m matrix of variables and the ideal I of
its 2 x 2 minors, the length of H^3_m(R/I^t) is computed two ways: a closed
product of binomials, and a representation-theoretic decomposition summing
exact Schur functor dimensions. Brute-force oracles (tableau counting,
bounded exhaustive search) back every formula.
"""

from .closed_forms import (
    asymptotic_multiplicity,
    binom,
    catalan,
    cumulative_length,
    identity_holds,
    identity_lhs,
    identity_rhs,
    layer_length_closed,
    ratio_json,
    telescoping_holds,
)
from .cohomology import (
    LengthValue,
    dual_index,
    local_cohomology_length,
    nonvanishing_indices,
)
from .filtration import (
    FiltrationIndex,
    LayerSummand,
    ThickeningInstance,
    contributing_weights,
    cumulative_length_via_decomposition,
    degree_parameters,
    filtration_indices,
    layer_length_via_decomposition,
    layer_summands,
    paired_weight,
)
from .partitions import (
    DominantWeight,
    Partition,
    conjugate,
    contained_in,
    minor_sizes,
    partitions_of,
)
from .schur import schur_dim, shift_normalize, ssyt_count, tensor_pair_dim, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "DominantWeight",
    "FiltrationIndex",
    "LayerSummand",
    "LengthValue",
    "Partition",
    "ThickeningInstance",
    "asymptotic_multiplicity",
    "binom",
    "catalan",
    "conjugate",
    "contained_in",
    "contributing_weights",
    "cumulative_length",
    "cumulative_length_via_decomposition",
    "degree_parameters",
    "dual_index",
    "filtration_indices",
    "identity_holds",
    "identity_lhs",
    "identity_rhs",
    "layer_length_closed",
    "layer_length_via_decomposition",
    "layer_summands",
    "local_cohomology_length",
    "minor_sizes",
    "nonvanishing_indices",
    "paired_weight",
    "partitions_of",
    "ratio_json",
    "schur_dim",
    "shift_normalize",
    "ssyt_count",
    "telescoping_holds",
    "tensor_pair_dim",
    "weyl_dim",
]

"""Rate bounds and Sidon-based constructions for constant-weight binary B2 codes."""

from b2weight.core import (
    BinaryVector,
    BoundResult,
    Codebook,
    CodeParameters,
    Variant,
    WeightFraction,
    weight,
)
from b2weight.entropy_bounds import (
    binary_entropy,
    binom2_entropy,
    bound_diff_entropy,
    bound_sum_entropy,
    ternary_entropy,
)
from b2weight.split_bounds import (
    OptimizerOptions,
    bound_improved,
    bound_prefix_suffix,
)
from b2weight.construction import build_codebook, lower_bound_rate
from b2weight.oracle import exhaustive_max_b2, verify_b2

__all__ = [
    "BinaryVector",
    "BoundResult",
    "Codebook",
    "CodeParameters",
    "OptimizerOptions",
    "Variant",
    "WeightFraction",
    "binary_entropy",
    "binom2_entropy",
    "bound_diff_entropy",
    "bound_improved",
    "bound_prefix_suffix",
    "bound_sum_entropy",
    "build_codebook",
    "exhaustive_max_b2",
    "lower_bound_rate",
    "ternary_entropy",
    "verify_b2",
    "weight",
]

__version__ = "0.1.0"

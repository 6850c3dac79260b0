"""Fast Hough transform over dyadic line patterns, with exact error analysis.

The package provides:

* three equivalent constructions of dyadic patterns (:mod:`.patterns`);
* the O(n^2 log n) butterfly transform with a brute-force oracle
  (:mod:`.transform`);
* the exact line-approximation error, its scans and histogram
  (:mod:`.errors`);
* the cyclic-shift table search for the peak error (:mod:`.maximizer`);
* the equivalent ring-antiferromagnet formulation (:mod:`.ising`).

Hot kernels run on a compiled extension when built, with a numpy fallback
selected at import time (``fasthough.kernel_backend`` names the active
one); ``python -m fasthough.bench`` compares the two.
"""

from .errors import (
    CapExceededError,
    ErrorHistogram,
    ErrorProfile,
    GlobalMaxError,
    SlopeMax,
    error_at,
    error_histogram,
    exhaustive_cap,
    global_max_error,
    interchange_residual,
    max_error_for_slope,
    per_slope_profile,
    symmetry_residual,
)
from .ising import (
    PairPotential,
    SpinConfig,
    affine_bridge_residual,
    cyclic_distances,
    pair_energy,
    spin_quadratic,
    spins_from_word,
    table_functional,
)
from .kernels import BACKEND as kernel_backend
from .maximizer import (
    CyclicTable,
    IdentityResiduals,
    MaximizerReport,
    cyclic_table,
    prune_predicates,
    search_maximizers,
    table_identity_residuals,
    table_sum,
    table_sum_word,
)
from .patterns import (
    DyadicPattern,
    PatternParams,
    ShiftSet,
    basis_line,
    cumulative_build,
    pattern_recursive,
    pattern_sum,
    patterns_equal,
    shift_set,
)
from .rational import ExactRational
from .transform import (
    HoughAccumulator,
    ImageGrid,
    Quadrant,
    fht_full,
    fht_quadrant,
    hough_brute,
    merge_add_count,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError", "CyclicTable", "DyadicPattern", "ErrorHistogram",
    "ErrorProfile", "ExactRational", "GlobalMaxError", "HoughAccumulator",
    "IdentityResiduals", "ImageGrid", "MaximizerReport", "PairPotential",
    "PatternParams", "Quadrant", "ShiftSet", "SlopeMax", "SpinConfig",
    "affine_bridge_residual", "basis_line", "cumulative_build",
    "cyclic_distances", "cyclic_table", "error_at", "error_histogram",
    "exhaustive_cap", "fht_full", "fht_quadrant", "global_max_error",
    "hough_brute", "interchange_residual", "kernel_backend",
    "max_error_for_slope", "merge_add_count", "pair_energy",
    "pattern_recursive", "pattern_sum", "patterns_equal", "per_slope_profile",
    "prune_predicates", "search_maximizers", "shift_set", "spin_quadratic",
    "spins_from_word", "symmetry_residual", "table_functional",
    "table_identity_residuals", "table_sum", "table_sum_word",
]

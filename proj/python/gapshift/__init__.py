"""Gap-constrained subshifts: exact language counts, shadowing witnesses,
periodic censuses and ergodic optimization."""

from gapshift._gapshift import (
    BaseSubshift,
    ConfigError,
    GappedSubshift,
    InfeasibleError,
    ResourceCapError,
    birkhoff_average,
    contains,
    cyclic_admissible,
    enumerate_language,
    ergodic_optimum,
    full_shift,
    gap_function,
    gapped,
    glue,
    language_count,
    min_gap_witness,
    oscillating_point,
    oscillation,
    periodic_points,
    required_zero_run,
    sft,
    substitution,
    union_of_copies,
    wasserstein_uniform,
    zero_density,
)

__all__ = [
    "BaseSubshift",
    "ConfigError",
    "GappedSubshift",
    "InfeasibleError",
    "ResourceCapError",
    "birkhoff_average",
    "contains",
    "cyclic_admissible",
    "enumerate_language",
    "ergodic_optimum",
    "full_shift",
    "gap_function",
    "gapped",
    "glue",
    "language_count",
    "min_gap_witness",
    "oscillating_point",
    "oscillation",
    "periodic_points",
    "required_zero_run",
    "sft",
    "substitution",
    "union_of_copies",
    "wasserstein_uniform",
    "zero_density",
]

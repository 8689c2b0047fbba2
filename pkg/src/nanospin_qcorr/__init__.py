"""Quantum correlations of spin-1/2 pairs in a nanopore spin gas.

Closed-form entanglement (concurrence, entanglement of formation),
quantum discord and geometric discord for the centrosymmetric reduced
states of the nanopore model, together with a dense brute-force engine
that validates every closed form.
"""

from .cs_matrix import (
    BlochDecomposition,
    CSDensityMatrix,
    ValidationReport,
    bloch_decompose,
    cs_eigenvalues,
    cs_eigenvalues_sorted,
    cs_from_json,
    cs_from_matrix,
    cs_from_params,
    cs_from_vector,
    cs_to_json,
    is_centrosymmetric,
    validate_density,
)
from .discord import (
    DiscordResult,
    MeasurementBasis,
    discord_bell_diagonal,
    discord_high_t_asymptotic,
    discord_low_t_asymptotic,
    discord_numeric,
    measurement_conditional_entropy,
)
from .entanglement import (
    ConcurrenceResult,
    concurrence_cs,
    concurrence_numeric,
    cs_block_diagonalize,
    entanglement_of_formation,
    spin_flip,
)
from .exact_oracle import (
    CollectiveOperators,
    DenseState,
    ResourceLimitError,
    build_operators,
    dipolar_hamiltonian,
    evolve,
    measure_correlations,
    partial_trace_pair,
    thermal_initial,
)
from .geometric_discord import (
    KMatrixSpectrum,
    geometric_discord_cs,
    geometric_discord_generic,
    geometric_discord_high_t_asymptotic,
    k_spectrum_cs,
)
from .nanopore import (
    CorrelationSet,
    NanoporeParams,
    beta_from_temperature,
    concurrence_nanopore,
    correlations,
    cs_from_correlations,
    reduced_density,
    special_time_correlations,
    tau_special,
    temperature_from_beta,
)
from .states import (
    InvalidStateError,
    bloch_data,
    check_density_matrix,
    density_from_json,
    density_to_json,
)
from ._kernels import kernel_backend
from .verification import (
    DEFAULT_TOLERANCES,
    VerificationReport,
    format_report,
    run_verification,
)

__version__ = "0.1.0"

"""Thermal quantum discord and concurrence of two-qubit XXZ chains with DM interaction."""

__version__ = "0.1.0"

from .correlations import (
    CorrelationReport,
    MeasurementBasis,
    classical_correlation,
    concurrence_wootters,
    conditional_entropy,
    correlation_report,
    critical_temperature,
    mutual_information,
    quantum_discord,
)
from .errors import DomainError, NumericalError, UsageError, ValidationError
from .linalg import herm_eigen, partial_trace, tensor_product, von_neumann_entropy
from .models import (
    ModelParams,
    concurrence_closed_dz,
    gibbs_oracle,
    hamiltonian,
    hamiltonian_dx,
    hamiltonian_dz,
    thermal_state,
    thermal_state_closed_dx,
    thermal_state_closed_dz,
)
from .sweep import (
    Axis,
    SweepSpec,
    detect_opposite_tendency,
    figure_csv,
    figure_preset,
    figure_table,
    run_sweep,
)

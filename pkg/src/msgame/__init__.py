"""Magic square game on thermal two-spin-chain resources.

The library computes the winning probability of the magic square game
when the shared four-qubit resource is built from two identical thermal
XXZ chains with DM interaction and magnetic fields, together with the
entanglement (logarithmic negativity) of those states, closed-form
cross-checks, and the exact classical bound 8/9.
"""

from .entanglement import Bipartition, log_negativity, negativity
from .formulas import FormulaDomain, pw_formula_b_zero, pw_formula_db_zero
from .game import (
    CellResult,
    ClassicalStrategy,
    StrategySet,
    cell_win_probability,
    classical_optimum,
    ideal_state,
    strategy_operators,
    success_projector,
    win_probability,
)
from .linalg import (
    DimensionMismatch,
    HermEig,
    NotHermitian,
    expm_hermitian,
    herm_eig,
    kron,
    partial_transpose,
    permute_qubits,
    trace_norm,
)
from .model import (
    CHAIN_TO_GAME_PERM,
    ClosedFormElements,
    DensityMatrix,
    ModelParams,
    NonPositiveTemperature,
    build_hamiltonian,
    closed_form_elements,
    closed_form_state,
    effective_state,
    thermal_state,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CHAIN_TO_GAME_PERM",
    "CellResult",
    "ClassicalStrategy",
    "ClosedFormElements",
    "DensityMatrix",
    "DimensionMismatch",
    "FormulaDomain",
    "HermEig",
    "ModelParams",
    "NonPositiveTemperature",
    "NotHermitian",
    "StrategySet",
    "build_hamiltonian",
    "cell_win_probability",
    "classical_optimum",
    "closed_form_elements",
    "closed_form_state",
    "effective_state",
    "expm_hermitian",
    "herm_eig",
    "ideal_state",
    "kron",
    "log_negativity",
    "negativity",
    "partial_transpose",
    "permute_qubits",
    "pw_formula_b_zero",
    "pw_formula_db_zero",
    "strategy_operators",
    "success_projector",
    "thermal_state",
    "trace_norm",
    "win_probability",
]

"""Unitary matrices of any dimension from minimal hyperspherical angles.

The package builds special and general unitary matrices as products of
embedded single-qubit factors driven by normalized complex pairs, maps
pure states to and from first-sector hyperspherical angles, and applies
both to orthonormal basis completion, multiport coherent-state
propagation, and multi-party tensor-product transforms.
"""

from .ck import (
    CKPair,
    CKParameterSet,
    build_su,
    flip,
    gamma_n,
    lower_triangle_indices,
    reposition,
    swap_matrix,
)
from .complexmat import (
    adjoint,
    determinant,
    frobenius,
    identity,
    kron,
    matmul,
    unitarity_residual,
)
from .errors import DegenerateInputError, DomainError, ShapeError
from .essential import (
    EssentialParams,
    GeneralUnitaryParams,
    NaiveParams,
    build_general,
    dof_count,
    essential_to_ck,
    f_element,
    naive_to_ck,
    waste_count,
)
from .hypersphere import (
    HypersphericalPoint,
    HypersphericalState,
    PureState,
    angles_from_state,
    fold_first_sector,
    from_cartesian,
    state_from_angles,
    to_cartesian,
    wrap_phase,
)
from .applications import (
    BasisGenResult,
    CoherentAmplitudes,
    EPSpec,
    FreeParams,
    complete_basis,
    ep_build,
    ep_dof,
    mpi_propagate,
)

__version__ = "0.1.0"

__all__ = [
    "CKPair",
    "CKParameterSet",
    "build_su",
    "flip",
    "gamma_n",
    "lower_triangle_indices",
    "reposition",
    "swap_matrix",
    "adjoint",
    "determinant",
    "frobenius",
    "identity",
    "kron",
    "matmul",
    "unitarity_residual",
    "DegenerateInputError",
    "DomainError",
    "ShapeError",
    "EssentialParams",
    "GeneralUnitaryParams",
    "NaiveParams",
    "build_general",
    "dof_count",
    "essential_to_ck",
    "f_element",
    "naive_to_ck",
    "waste_count",
    "HypersphericalPoint",
    "HypersphericalState",
    "PureState",
    "angles_from_state",
    "fold_first_sector",
    "from_cartesian",
    "state_from_angles",
    "to_cartesian",
    "wrap_phase",
    "BasisGenResult",
    "CoherentAmplitudes",
    "EPSpec",
    "FreeParams",
    "complete_basis",
    "ep_build",
    "ep_dof",
    "mpi_propagate",
]

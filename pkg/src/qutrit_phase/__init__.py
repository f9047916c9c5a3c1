"""Qutrit phases: su(3) algebra, Bloch geometry, phase operators, covariant POVMs and su(3) coherent states."""

from .algebra import GELLMANN, STRUCTURE, StructureTensors, derive_structure_tensors, gellmann_matrices, star, wedge
from .coherent import (
    CoherentLabel,
    QuadratureScheme,
    SymmetricFockState,
    collective_operator,
    coherent_state,
    mean_values,
    measure_weight,
    overlap,
    radial_povm,
    verify_identity_resolution,
)
from .phase_ops import (
    PhaseOperator,
    check_noncommutativity,
    general_E13,
    inversion,
    phase_operator,
    polar_decompose,
    transition,
)
from .povm import (
    PhaseGrid,
    PhasePoint,
    PovmParams,
    delta,
    phase_state,
    probability_density,
    reconstruct_offdiagonals,
    verify_covariance,
    verify_povm_axioms,
)
from .states import (
    Bloch8,
    DensityMatrix,
    PureState,
    bloch_from_density,
    density_from_bloch,
    is_pure_bloch,
    opening_angle,
    pure_from_angles,
)

__version__ = "0.1.0"

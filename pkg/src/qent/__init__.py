"""Global multi-qubit entanglement Q and its swap-test measurement protocol.

Three independent routes to the same quantity: the wedge-product definition,
the average-purity identity, and a simulation of the controlled-SWAP
measurement protocol, plus Ising pulse compilation of the gates involved.
"""

from .measures import (
    ProjectionSplit,
    SchmidtSpectrum,
    q_direct,
    q_purity,
    schmidt_number,
    schmidt_spectrum,
    split_on_qubit,
    wedge_distance,
)
from .protocol import (
    EstimatorStats,
    ProtocolRun,
    SwapTestResult,
    convergence_sweep,
    copy_marginal,
    joint_outcome_distribution,
    minus_probabilities,
    q_protocol_exact,
    q_protocol_sampled,
    sample_outcomes,
    subset_purity_circuit,
    subset_purity_direct,
    subset_purity_exact,
    swap_test_exact,
    swap_test_post_state,
)
from .pulses import (
    CouplingModel,
    IsingCoupling,
    PulseSequence,
    Rotation,
    canonical_cswap,
    canonical_swap,
    cswap_sequence,
    equal_up_to_global_phase,
    interaction_time,
    phase_aligned_deviation,
    pulse_unitary,
    sequence_unitary,
    swap_sequence,
    three_body_sequence,
    zzz_unitary,
)
from .states import (
    DensityMatrix,
    PureState,
    apply_unitary,
    cluster_state,
    ghz_state,
    inner_product,
    load_state,
    product_state,
    purity,
    random_product_state,
    random_state,
    reduced_density,
    save_state,
    w_state,
)

__all__ = [
    "CouplingModel",
    "DensityMatrix",
    "EstimatorStats",
    "IsingCoupling",
    "ProjectionSplit",
    "ProtocolRun",
    "PulseSequence",
    "PureState",
    "Rotation",
    "SchmidtSpectrum",
    "SwapTestResult",
    "apply_unitary",
    "canonical_cswap",
    "canonical_swap",
    "cluster_state",
    "convergence_sweep",
    "copy_marginal",
    "cswap_sequence",
    "equal_up_to_global_phase",
    "ghz_state",
    "inner_product",
    "interaction_time",
    "joint_outcome_distribution",
    "load_state",
    "minus_probabilities",
    "phase_aligned_deviation",
    "product_state",
    "pulse_unitary",
    "purity",
    "q_direct",
    "q_protocol_exact",
    "q_protocol_sampled",
    "q_purity",
    "random_product_state",
    "random_state",
    "reduced_density",
    "sample_outcomes",
    "save_state",
    "schmidt_number",
    "schmidt_spectrum",
    "sequence_unitary",
    "split_on_qubit",
    "subset_purity_circuit",
    "subset_purity_direct",
    "subset_purity_exact",
    "swap_sequence",
    "swap_test_exact",
    "swap_test_post_state",
    "three_body_sequence",
    "w_state",
    "wedge_distance",
    "zzz_unitary",
]

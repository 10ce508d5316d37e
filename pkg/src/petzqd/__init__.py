"""Fragment encoding channels and Petz recovery for one-to-all premeasurement models."""

from .channels import QuantumChannel, encoding_channel, nest_check
from .experiments import ExperimentConfig, SweepResult, run_sweep, verify_suite
from .hilbert import CompositeSpace, Fragment, fragment, qubit_space
from .infotheory import (
    conditional_mutual_information,
    fawzi_renner_check,
    fidelity,
    mutual_information,
    relative_entropy,
    support_inclusion_check,
    vn_entropy,
)
from .model import (
    BlochState,
    BranchRecord,
    EnvironmentSpec,
    SystemObservable,
    evolve_branches,
    gue_environment,
    joint_state,
    prc_defect,
    prc_times,
    reduced_joint_state,
    reduced_system_state,
    sample_gue2,
    zz_environment,
)
from .petz import (
    PetzMap,
    build_m_map,
    build_petz,
    markov_defect,
    markov_recovery,
    prc_fidelity_closed_form,
    r_map_defect,
    recovery_quality,
)
from .version import __version__

__all__ = [
    "BlochState",
    "BranchRecord",
    "CompositeSpace",
    "EnvironmentSpec",
    "ExperimentConfig",
    "Fragment",
    "PetzMap",
    "QuantumChannel",
    "SweepResult",
    "SystemObservable",
    "__version__",
    "build_m_map",
    "build_petz",
    "conditional_mutual_information",
    "encoding_channel",
    "evolve_branches",
    "fawzi_renner_check",
    "fidelity",
    "fragment",
    "gue_environment",
    "joint_state",
    "markov_defect",
    "markov_recovery",
    "mutual_information",
    "nest_check",
    "prc_defect",
    "prc_fidelity_closed_form",
    "prc_times",
    "qubit_space",
    "r_map_defect",
    "recovery_quality",
    "reduced_joint_state",
    "reduced_system_state",
    "relative_entropy",
    "run_sweep",
    "sample_gue2",
    "support_inclusion_check",
    "verify_suite",
    "vn_entropy",
    "zz_environment",
]

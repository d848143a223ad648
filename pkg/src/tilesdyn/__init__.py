"""Unitary entanglement dynamics of the tiles bound entangled two-qutrit state
coupled to an auxiliary qutrit."""

from .dynamics import SweepConfig, SweepResult, amplitude_sensitivity_report, evolve, run_sweep
from .errors import ConfigError, PreconditionError
from .hamiltonians import HamiltonianSpec, Interaction, build_hamiltonian, build_pair_hamiltonian, embed_on_tripartite
from .measures import PAPER_LITERAL, MeasurementConfig, ccnr, diagnostics, negativity
from .operators import Convention, operator_triple
from .states import AuxAmplitudes, aux_state, bennett_state, initial_state
from .tensor import DensityMatrix, hermitian_evolution_operator, kron, partial_trace, partial_transpose, realign, trace_norm

__version__ = "0.1.0"

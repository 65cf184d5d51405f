"""
CableQSim - Configuration

Constants shared by the compute modules and the command-line front end.
All frequencies are ordinary frequencies in GHz, all times in ns.
"""

from scipy import constants

# App name
APP_NAME = "cableqsim"
VERSION = "0.1.0"

# e^2 / (2h) in GHz*fF, so that E_C/h = CHARGING_GHZ_FF / C[fF]
CHARGING_GHZ_FF = constants.e ** 2 / (2 * constants.h) * 1e15 / 1e9

# Hilbert space
DEFAULT_LEVELS_QUBIT = 4   # Fock levels per transmon
DEFAULT_LEVELS_MODE = 3    # Fock levels per cable mode
MAX_HILBERT_DIM = 20000    # refuse bases larger than this
HERMITIAN_TOL = 1e-12      # relative, checked on every assembled Hamiltonian

# Spectrum
LABEL_THRESHOLD = 0.25     # minimum |overlap|^2 for a diabatic label
ROOT_TOL_GHZ = 1e-6        # bisection / golden-section tolerance
SCAN_POINTS = 41           # coarse points for avoided-crossing searches
ZZ_OFF_GHZ = 1e-5          # |xi_ZZ| below 10 kHz counts as ZZ-off

# Perturbation theory
SINGULARITY_GUARD_GHZ = 1e-6   # 1 kHz

# Pulses (third-order Slepian, 450 ns CZ)
SLEPIAN_LAMBDAS = (1.273, 0.550, -0.273)
SLEPIAN_THETA_F = 0.449 * constants.pi
SLEPIAN_TAU_NS = 450.0
HYBRID_TAU_NS = 240.0
PADDING_NS = 2.0           # idle time before and after every gate window
DEFAULT_DT_NS = 0.05       # propagation step for shaped pulses

# Gate calibration
MAX_GATE_DURATION_NS = 2000.0
COARSE_STEP_NS = 1.0
FINE_TOL_NS = 0.01
FIRST_MAX_WINDOW_NS = 10.0     # a fidelity maximum must dominate +-10 ns
MIN_GATE_FIDELITY = 0.5
PHASE_GRID = 64                # virtual-Z coarse grid per axis
PHASE_INDETERMINATE = 1e-6     # matrix elements below this carry no phase

# Published operating points (GHz)
ISWAP_IDLE = (4.684, 4.738)
ISWAP_INT = (4.708, 4.708)
CZ_IDLE = (4.665, 4.758)
CZ_INT = (4.54, 4.75)       # starting point; f1 is tuned onto the |11>-|02> resonance

# CZ interaction tuning
CZ_RESONANCE_HALF_WIDTH_GHZ = 0.03   # f1 window searched for the |11>-|02> crossing
CZ_SLEPIAN_COUPLING_SCALE = 2.0      # Slepian CZ pulses are shaped for the full splitting 2J
TUNE_DT_NS = 0.5                     # propagation step while tuning shaped pulses
TUNE_TOL_GHZ = 1e-5

# Output
CSV_DIGITS = 9
THREADS_ENV = "CABLEQSIM_THREADS"

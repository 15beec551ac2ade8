"""
cavitybell constants
"""
from cavitybell.types import EXCITED, GROUND

# Two-atom basis, first atom is the slow index
BASIS = ((EXCITED, EXCITED), (EXCITED, GROUND), (GROUND, EXCITED), (GROUND, GROUND))
BASIS_INDEX = {label: index for index, label in enumerate(BASIS)}
EE, EG, GE, GG = range(4)

# Branch signs (eigenvalues of the atom-field interaction operator)
PLUS = 1
MINUS = -1
BRANCH_SIGNS = (PLUS, MINUS)

# Density matrix invariants
HERMITIAN_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-12
PSD_TOLERANCE = 1e-10
ORACLE_TRACE_TOLERANCE = 1e-6

# Eigensolver
INPUT_HERMITIAN_TOLERANCE = 1e-10
SYMMETRIC_TOLERANCE = 1e-12
JACOBI_OFF_DIAGONAL_TOLERANCE = 1e-14
JACOBI_MAX_SWEEPS = 100
EIGEN_RESIDUAL_TOLERANCE = 1e-10

# Entanglement
PAULI_IMAGINARY_TOLERANCE = 1e-10
DEGENERACY_TOLERANCE = 1e-9
BELL_BOUND = 1.0

# Models
PROBABILITY_TOLERANCE = 1e-12
# |eg><ge| coherence is bounded by sqrt(denominator) / 4 (Cauchy-Schwarz)
DEGENERATE_Q_DENOMINATOR = 1e-26

# Oracle
MIN_RECOMMENDED_GRID_POINTS = 2 ** 12
GRID_MARGIN_SIGMAS = 8.0
NEGLIGIBLE_BRANCH_NORM = 1e-12

# Verification tolerances
OVERLAP_RELATIVE_TOLERANCE = 1e-8
ORACLE_RHO_TOLERANCE = 1e-6
CLOSED_FORM_PPT_TOLERANCE = 1e-9
JC_LIMIT_TOLERANCE = 1e-12
CONVERGENCE_FLOOR = 1e-12

# Model / initial state names
MODEL_SG = 'sg'
MODEL_JC = 'jc'
MODELS = (MODEL_SG, MODEL_JC)
INITIAL_GG1 = 'gg1'
INITIAL_EG0 = 'eg0'
INITIAL_STATES = (INITIAL_GG1, INITIAL_EG0)

# Sweep schedule in units of T: t1 = T, t2 = 2T, t3 = 3T
SCHEDULE_T1 = 1.0
SCHEDULE_T2 = 2.0
SCHEDULE_T3 = 3.0

# CSV output
SWEEP_COLUMNS = (
    'T_seconds', 'T_rabi', 'nu1', 'nu2', 'nu3', 'm_value', 'ppt_min',
    'damping1', 'damping2', 'separable', 'bell_violated',
)
FIGURE_COLUMNS = ('T_rabi', 'nu1_plus_nu2', 'two_nu2')
FLOAT_FORMAT = '{:.16e}'
CSV_LINE_TERMINATOR = '\n'
META_SUFFIX = '.meta'
SVG_SUFFIX = '.svg'
PANEL_JC_SUFFIX = '_panel_i'
PANEL_SG_SUFFIX = '_panel_ii'

# CLI exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_NUMERIC = 3

"""Constants and configuration for ellipticgw."""

from fractions import Fraction

# Truncation order used when neither --order nor the environment sets one
DEFAULT_ORDER = 64
ORDER_ENV_VAR = 'GWQ_ORDER_DEFAULT'

# Verification suite defaults
DEFAULT_N_MAX = 5
DEFAULT_G_MAX = 4

# Table document format
SCHEMA_VERSION = '1'
TABLE_FORMATS = ['json', 'csv']
REPORT_FORMATS = ['text', 'json']
CSV_HEADER = ['g', 'd', 'value']

# Process exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_CROSS_CHECK_FAILED = 3

# sigma(0) under the extended convention
SIGMA_ZERO = Fraction(-1, 24)

# Eisenstein series: name -> (normaliser, divisor power)
EISENSTEIN_SERIES = {
    'E2': (-24, 1),
    'E4': (240, 3),
    'E6': (-504, 5),
}

# Weights of the quasimodular generators
GENERATOR_WEIGHTS = {
    'E2': 2,
    'E4': 4,
    'E6': 6,
}

# Extra coefficients used when solving for a quasimodular expression
RECOGNITION_MARGIN = 8
MAX_RECOGNITION_WEIGHT = 40

# Mutation hooks for exercising the verification contract
FAULT_HOOKS = ['sigma', 'f0', 'e4']
FAULT_DEGREE = 3
CORRUPTED_E4_NORMALISER = 241

# Number of sample degrees in the relative table export
TABLE_EXPORT_SAMPLES = 9

# Report formatting
REPORT_WIDTH = 80
SECTION_SEPARATOR = "=" * REPORT_WIDTH

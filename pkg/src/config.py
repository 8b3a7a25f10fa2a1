# *****************************************************************************
# Exact Arithmetic
# *****************************************************************************
# power series are kept through t^TRUNCATION_ORDER, every requested
# table index must stay strictly below it.
TRUNCATION_ORDER = 24

# *****************************************************************************
# Table Defaults
# *****************************************************************************
DEFAULT_N_MAX = 12
N_MAX = {
    "gff": DEFAULT_N_MAX,
    "beta": DEFAULT_N_MAX,
    "dimorphic": DEFAULT_N_MAX,
    "mersenne": 20,
    "stirling2": DEFAULT_N_MAX,
    "bell-triangle": DEFAULT_N_MAX,
    "phi": DEFAULT_N_MAX,
    "degenerate-stirling2": DEFAULT_N_MAX,
    "bernoulli": 20,
}

# *****************************************************************************
# Verification
# *****************************************************************************
# Theorems 2 and 3 expand Bell polynomials of every order up to n,
# they get a shorter default range than the other identities.
THEOREM_N_MAX = 10
VERIFY_WORKERS = 1

# *****************************************************************************
# Output
# *****************************************************************************
OUTPUT_FORMAT = "json"
OUTPUT_PATH = None
LOG_LEVEL = "INFO"

# an optional YAML or JSON file with any of
# truncation_order, n_max, output_format, output_path, workers, log_level
CONFIG_ENV = "DEGENERATE_CONF"

# *****************************************************************************
# Exit Codes
# *****************************************************************************
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# *****************************************************************************
# Local Overrides
# *****************************************************************************
# Define in <project_folder>/src/config_local.py, for example:
#   TRUNCATION_ORDER = 32
#   LOG_LEVEL = "DEBUG"
try:
    from config_local import *
except ModuleNotFoundError:
    pass

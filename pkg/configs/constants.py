# Normalisation
DEFAULT_NORM_EPS = 1e-5

# Block structure
BOTTLENECK_GROWTH_FACTOR = 4
TRANSITION_COMPRESSION = 2
POOL_SIZE = 2

# Gradient checks
GRAD_CHECK_EPS = 1e-6
GRAD_CHECK_TOLERANCE_SINGLE = 1e-6
GRAD_CHECK_TOLERANCE_COMPOSITE = 1e-5
RELATIVE_ERROR_FLOOR = 1e-12
PSI_KINK_MARGIN = 1e-3
COMPOSITE_KINK_MARGIN = 1e-4
KINK_MAX_ATTEMPTS = 200

# Training
DEFAULT_LEARNING_RATE = 0.01
DEFAULT_MOMENTUM = 0.9
DEFAULT_BATCH_SIZE = 32

# Toy task
WORKER_POLL_SECONDS = 1.0
DEFAULT_TOY_LENGTH = 64
DEFAULT_TOY_COUNT = 256
MARKER_TWIN_FLOOR = 0.25

# Parameter counting
PARAM_COUNT_TOLERANCE = 0.10

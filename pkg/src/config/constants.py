"""Numerical constants and experiment defaults."""

# Sliced-Wasserstein Monte Carlo
DEFAULT_NUM_PROJECTIONS = 100
DEFAULT_ORDER_P = 2.0
UNIT_NORM_TOLERANCE = 1e-9

# Hilbert sort
HILBERT_BITS = 16
HILBERT_MAX_INDEX_BITS = 62
HILBERT_BOX_MARGIN = 1e-9

# Swapping refinement
SWAP_MAX_SWEEPS = 20

# k-NN KL estimator
KL_DEFAULT_NEIGHBORS = 1
KL_FLOOR_FACTOR = 1e-6

# SMC-ABC
SMC_QUANTILE_ALPHA = 0.5
SMC_KERNEL_SCALE = 2.0
SMC_STAGNATION_TOLERANCE = 1e-4
SMC_DEGENERATE_KERNEL_VARIANCE = 1e-6
WEIGHT_SUM_TOLERANCE = 1e-12

# Proposals evaluated per parallel batch
PROPOSAL_BATCH_SIZE = 64

# Gaussian scale benchmark
SIGMA_STAR_SQ = 4.0
PRIOR_SHAPE = 1.0
PRIOR_RATE = 1.0
GRID_MIN = 0.1
GRID_MAX = 9.0
GRID_SIZE = 100
CURVE_SAMPLES = 1000
BENCH_OBSERVATIONS = 100
BENCH_PARTICLES = 1000
BENCH_DIMENSIONS = (2, 10, 20)
POSTERIOR_REFERENCE_DRAWS = 100_000

# Denoising
PATCH_RADIUS = 3
SEARCH_HALF_WIDTH = 10
DICTIONARY_SIZE = 1000
ABC_ACCEPTED = 10  # T
LOCATION_DRAWS = 10  # S
PATCHES_PER_CLUSTER = 10  # m
PROPOSAL_CAP_FACTOR = 50
PIXEL_MAX = 255.0

# Reference mean PSNR (dB) on the gray CBSD68 corpus, keyed by sigma
REFERENCE_PSNR = {
    "nlmeans": {10: 30.43, 20: 26.32, 30: 24.22, 50: 21.99},
    "swabc": {10: 27.09, 20: 26.26, 30: 24.86, 50: 22.56},
}

# CLI exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

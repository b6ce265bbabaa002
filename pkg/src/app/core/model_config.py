"""
Model Configuration Module
Centralized numerical constants for the thermal model, cost accounting and search space.
"""

# ============================================================================
# EXCHANGER MODEL
# ============================================================================

# |k1 - 1| below this uses the balanced-counterflow limit
BALANCED_FLOW_THRESHOLD = 1e-9

# |dT1 - dT2| <= this * dT1 returns dT1 as the log mean
LMTD_EQUAL_ENDS_RELATIVE = 1e-9

# Hot-side vs cold-side duty agreement required of every exchanger solve
ENERGY_BALANCE_RELATIVE_TOLERANCE = 1e-9

# ============================================================================
# NETWORK SOLVE
# ============================================================================

NETWORK_TOLERANCE_K = 1e-6
NETWORK_MAX_SWEEPS = 500

# ============================================================================
# SCHEDULE GRID & COSTS
# ============================================================================

DEFAULT_HORIZON_MONTHS = 44
SECONDS_PER_MONTH = 30.4375 * 24 * 3600

# Per cleaning action, USD
DEFAULT_CLEANING_COST = 35_200.0

ADDITIVITY_RELATIVE_TOLERANCE = 1e-12

# Negative total energy loss tolerated from network convergence, relative to recovered value
ENERGY_LOSS_RELATIVE_SLACK = 1e-6

# ============================================================================
# SEARCH SPACE
# ============================================================================

INTERVAL_MIN_MONTHS = 0
INTERVAL_MAX_MONTHS = 31

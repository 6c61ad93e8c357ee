# Config module
from .settings import (
    ENUMERATION_BOUND, CONJECTURE_N_BOUND, BRUTE_FORCE_ORDER_BOUND,
    DEFAULT_JOBS, LOG_LEVEL, UINT64_MAX,
)

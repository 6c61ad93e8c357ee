# -*- coding: utf-8 -*-
"""
Application Configuration
Search and enumeration limits, worker count and log level
"""
import os
from dotenv import load_dotenv

load_dotenv()

# Enumeration Limits
ENUMERATION_BOUND = int(os.getenv("ENUMERATION_BOUND", 1_000_000))
CONJECTURE_N_BOUND = int(os.getenv("CONJECTURE_N_BOUND", 512))
BRUTE_FORCE_ORDER_BOUND = int(os.getenv("BRUTE_FORCE_ORDER_BOUND", 64))

# Order tables of groups up to this order are memoised
ORDER_TABLE_CACHE_ORDER = int(os.getenv("ORDER_TABLE_CACHE_ORDER", 4096))

# Sweep Settings
DEFAULT_JOBS = int(os.getenv("DEFAULT_JOBS", 1))

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()

# Every group order and map modulus must fit an unsigned 64-bit word
UINT64_MAX = 2 ** 64 - 1

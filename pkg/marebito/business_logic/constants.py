DEFAULT_SEED = 2024
"""Seed used wherever a run must be reproducible and no seed was given"""

DEFAULT_MIN_SCORE = 0.5
DEFAULT_PAGE_SIZE = 100
DEFAULT_BATCH_CAP = 1000

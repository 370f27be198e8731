"""Size caps for group enumerations.

All caps are explicit: exceeding one raises CapExceededError, never a silent
truncation. Callers may pass their own cap to the enumeration functions; the
values here are the defaults.
"""

import os

# Full symmetric-group enumerations run over S_N with N at most this.
FACTORIAL_CAP = 12

# Young-subgroup sums run over S_k^n with (k!)^n at most this.
YOUNG_SUBGROUP_CAP = 10**7

# Standard-tableaux enumeration caps at this many cells.
TABLEAU_CELL_CAP = 20

# Largest Xi_{n,k} order the scan will build.
XI_ORDER_CAP = 200


def thread_count():
    """Parallelism bound from WREATHDET_THREADS (>= 1)."""
    try:
        return max(1, int(os.environ.get("WREATHDET_THREADS", "1")))
    except ValueError:
        return 1

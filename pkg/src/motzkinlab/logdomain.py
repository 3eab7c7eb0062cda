"""Log-domain magnitude helpers.

Magnitudes are plain floats holding natural logs; ``ZERO`` stands for
magnitude 0.  Sums are anchored at the running maximum so terms spanning
hundreds of orders of magnitude (walk weights scale like t^(n^2/2)) never
cancel catastrophically.
"""

from __future__ import annotations

import math

import numpy as np

ZERO = -math.inf


def log_add(a: float, b: float) -> float:
    """log(e^a + e^b), safe for ZERO operands."""
    return float(np.logaddexp(a, b))


def log_sum_exp(values) -> float:
    """log of the sum of exponentials, anchored at the maximum."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        return ZERO
    hi = arr.max()
    if hi == ZERO:
        return ZERO
    return float(hi + np.log(np.exp(arr - hi).sum()))

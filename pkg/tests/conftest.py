"""Shared brute-force oracles, kept independent of the code paths they check."""

from __future__ import annotations


import pytest


def motzkin_numbers(count: int) -> list[int]:
    """First ``count`` Motzkin numbers via the standard convolution DP
    (independent of the walk enumerator)."""
    m = [1]
    for n in range(1, count):
        total = m[n - 1]
        for k in range(n - 1):
            total += m[k] * m[n - 2 - k]
        m.append(total)
    return m


def brute_force_log_m(n: int, m: int, s: int, t: float) -> float:
    """log M[n, m] summed directly over uncolored half-walks.

    Weight per walk: s^(matched pairs) * t^(area); logs taken at the end,
    so this oracle is only usable at small n.
    """
    import math

    from motzkinlab import walks as W

    total = 0.0
    for walk in W.enumerate_walks(n, 1, end_height=m):
        pairs, _ = W.matched_pairs(walk)
        total += s ** len(pairs) * t ** (W.twice_area(walk) / 2.0)
    if total == 0.0:
        return float("-inf")
    return math.log(total)


@pytest.fixture(scope="session")
def motzkin10():
    return motzkin_numbers(11)

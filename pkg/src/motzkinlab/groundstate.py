"""Exact ground state as a weighted superposition over colored Motzkin walks.

Weights live in the log domain throughout: for the uniform deformation the
weight of a walk is t^area, which already overflows doubles near chain
length 60 at t = 2.  For general tuned angles the weight is computed by
flattening the walk to the all-flat configuration with local two-site
rewrites and multiplying the per-move factors; the tuning relation makes
the result independent of the order of moves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO

import numpy as np

from motzkinlab import walks as W
from motzkinlab.hamiltonian import Angles, ChainSpec, Uniform
from motzkinlab.logdomain import log_sum_exp


class SchmidtGroupingError(RuntimeError):
    """Two analytically distinct Schmidt values landed closer than tolerance."""


def walk_weight_uniform(walk: W.ColoredWalk, t: float) -> float:
    """log of t^area(walk); the walk must be a valid complete walk."""
    if not W.is_valid(walk, require_complete=True):
        raise W.InvalidWalkError(f"not a complete Motzkin walk: {walk.steps}")
    return 0.5 * W.twice_area(walk) * math.log(t)


# --- move calculus for general angles ---------------------------------------
#
# Rewrites toward the flat walk, with the amplitude factor picked up by the
# configuration *after* the move:
#   l0 -> 0l   factor tan(phi_b)    (up step drifts right, area - 1)
#   0r -> r0   factor cot(psi_b)    (down step drifts left, area - 1)
#   lr -> 00   factor tan(theta_b)  (peak removed, area - 1)

_L, _R = 1, 2  # s = 1 digits


def _move_factor_log(kind: str, bond: int, ang: Angles) -> float:
    if kind == "R":
        return math.log(math.tan(ang.phi[bond]))
    if kind == "L":
        return -math.log(math.tan(ang.psi[bond]))
    return math.log(math.tan(ang.theta[bond]))


def _canonical_flatten(steps: list[int], ang: Angles) -> float:
    """Flatten by always attacking the leftmost highest plateau: drag its
    right edge left with L moves, then remove the hill with F.

    Returns the accumulated log-factor of the applied moves.
    """
    log_p = 0.0
    while any(d != W.FLAT for d in steps):
        heights = [0]
        for d in steps:
            heights.append(heights[-1] + (1 if d == _L else -1 if d == _R else 0))
        top = max(heights)
        i = heights.index(top)  # step i-1 is the up step into the peak
        q = i
        while steps[q] == W.FLAT:
            q += 1
        assert steps[q] == _R, "highest plateau must end with a down step"
        for b in range(q - 1, i - 1, -1):
            steps[b], steps[b + 1] = steps[b + 1], steps[b]
            log_p += _move_factor_log("L", b, ang)
        steps[i - 1], steps[i] = W.FLAT, W.FLAT
        log_p += _move_factor_log("F", i - 1, ang)
    return log_p


def _random_flatten(steps: list[int], ang: Angles, rng: np.random.Generator) -> float:
    """Flatten by applying a uniformly random applicable move each round.

    Every forward move lowers the area by one, so this terminates; the
    tuning relation guarantees the same total factor as the canonical
    order.  Used to test order invariance.
    """
    log_p = 0.0
    while True:
        moves = []
        for b in range(len(steps) - 1):
            pair = (steps[b], steps[b + 1])
            if pair == (_L, W.FLAT):
                moves.append(("R", b))
            elif pair == (W.FLAT, _R):
                moves.append(("L", b))
            elif pair == (_L, _R):
                moves.append(("F", b))
        if not moves:
            break
        kind, b = moves[rng.integers(len(moves))]
        if kind == "R":
            steps[b], steps[b + 1] = W.FLAT, _L
        elif kind == "L":
            steps[b], steps[b + 1] = _R, W.FLAT
        else:
            steps[b], steps[b + 1] = W.FLAT, W.FLAT
        log_p += _move_factor_log(kind, b, ang)
    return log_p


def walk_weight_angles(
    walk: W.ColoredWalk,
    spec: ChainSpec,
    rng: np.random.Generator | None = None,
) -> float:
    """log weight of a complete walk relative to the flat walk, under a
    tuned angle set.  ``rng`` switches to a random flattening order."""
    if not isinstance(spec.deformation, Angles):
        raise TypeError("walk_weight_angles needs an angle-mode ChainSpec")
    if walk.s != 1:
        raise ValueError("angle weights are defined for the uncolored chain")
    if len(walk) != spec.two_n:
        raise ValueError(f"walk length {len(walk)} != chain length {spec.two_n}")
    if not W.is_valid(walk, require_complete=True):
        raise W.InvalidWalkError(f"not a complete Motzkin walk: {walk.steps}")
    steps = list(walk.steps)
    ang = spec.deformation
    if rng is None:
        log_p = _canonical_flatten(steps, ang)
    else:
        log_p = _random_flatten(steps, ang, rng)
    return -log_p


# --- the weighted ensemble ---------------------------------------------------

@dataclass(frozen=True)
class WeightedEnsemble:
    """Map from every valid complete walk to its log weight, plus log of
    the L2 normalization N = sqrt(sum of squared weights)."""

    spec: ChainSpec
    entries: dict[W.ColoredWalk, float]
    log_norm: float

    def as_vector(self) -> np.ndarray:
        """Normalized dense state vector in the mixed-radix basis."""
        d = self.spec.local_dim
        vec = np.zeros(self.spec.dim)
        for walk, logw in self.entries.items():
            idx = 0
            for j, digit in enumerate(walk.steps):
                idx += digit * d**j
            vec[idx] = math.exp(logw - self.log_norm)
        return vec

    def dump(self, out: IO[str]) -> None:
        """One 'walk TAB logweight' line per walk, sorted, with a config header."""
        for key, val in self.spec.to_config().items():
            out.write(f"# {key}={val}\n")
        out.write(f"# log_norm={self.log_norm!r}\n")
        for walk in sorted(self.entries, key=W.format_walk):
            out.write(f"{W.format_walk(walk)}\t{self.entries[walk]!r}\n")


def build_ground_state(spec: ChainSpec, cap: int = W.DEFAULT_ENUMERATION_CAP) -> WeightedEnsemble:
    """Enumerate all complete walks of the chain and weigh them."""
    entries: dict[W.ColoredWalk, float] = {}
    for walk in W.enumerate_walks(spec.two_n, spec.s, end_height=0, cap=cap):
        if isinstance(spec.deformation, Uniform):
            entries[walk] = walk_weight_uniform(walk, spec.deformation.t)
        else:
            entries[walk] = walk_weight_angles(walk, spec)
    log_norm = 0.5 * log_sum_exp(np.fromiter(entries.values(), float) * 2.0)
    return WeightedEnsemble(spec, entries, log_norm)


# --- direct Schmidt decomposition --------------------------------------------

@dataclass(frozen=True)
class SchmidtLevel:
    m: int             # excess height across the half-chain cut
    multiplicity: int  # s^m color choices of the unmatched up steps
    p: float           # shared squared Schmidt coefficient


def _left_half_heights(n: int, d: int, s: int) -> np.ndarray:
    """End height of every left-half basis index, -1 where not a valid half-walk."""
    out = np.full(d**n, -1, dtype=int)
    for idx in range(d**n):
        digits = []
        rem = idx
        for _ in range(n):
            digits.append(rem % d)
            rem //= d
        half = W.ColoredWalk(tuple(digits), s)
        if W.is_valid(half, require_complete=False):
            out[idx] = half.final_height()
    return out


def schmidt_by_svd(
    ensemble: WeightedEnsemble,
    sv_tol: float = 1e-12,
    group_tol: float = 1e-9,
) -> list[SchmidtLevel]:
    """Schmidt spectrum of the half-chain cut by direct SVD.

    Levels are labeled by the excess height ``m`` recovered from the
    left-half basis support of each singular vector (robust against
    accidental coincidences of p values).  Within a level the s^m squared
    singular values must agree to ``group_tol`` relative or the grouping
    is reported as ambiguous.
    """
    spec = ensemble.spec
    n = spec.two_n // 2
    d = spec.local_dim
    vec = ensemble.as_vector()
    # row index = right-half digits (high), column = left-half digits (low)
    mat = vec.reshape(d**n, d**n)
    _, sigma, vh = np.linalg.svd(mat)
    m_of_col = _left_half_heights(n, d, spec.s)

    groups: dict[int, list[float]] = {}
    for i, sv in enumerate(sigma):
        if sv <= sv_tol:
            continue
        col = int(np.argmax(np.abs(vh[i])))
        m = int(m_of_col[col])
        if m < 0:
            raise SchmidtGroupingError(
                f"singular vector {i} peaks on an invalid half-walk index {col}"
            )
        groups.setdefault(m, []).append(float(sv**2))

    levels = []
    for m in sorted(groups):
        vals = groups[m]
        lo, hi = min(vals), max(vals)
        if (hi - lo) / hi > group_tol:
            raise SchmidtGroupingError(
                f"Schmidt values at m={m} spread beyond tolerance: {vals}"
            )
        if len(vals) != spec.s**m:
            raise SchmidtGroupingError(
                f"m={m} has {len(vals)} singular values, expected s^m={spec.s**m}"
            )
        levels.append(SchmidtLevel(m, len(vals), sum(vals) / len(vals)))
    return levels

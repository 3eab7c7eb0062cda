"""Half-chain Schmidt spectrum and entanglement entropy at large sizes.

M[n, m] is the weighted sum over half-walks of length n ending at height m,
with weight s^(matched pairs) * t^(area).  It obeys a three-term recurrence
in n that we iterate entirely in the log domain, giving the Schmidt numbers

    p[n, m] = M[n, m]^2 / N_n,   N_n = sum_m s^m M[n, m]^2,

and the half-chain entropy S_n = -sum_m s^m p[n,m] log p[n,m].  The module
also evaluates the closed-form bounds controlling the two entropy phases:
N0 (peak localization for t > 1), and m0 / C(s, t) (entropy bound, t < 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from motzkinlab.logdomain import ZERO, log_sum_exp

# p below this is treated as an exact 0 in entropy sums (-p log p -> 0)
P_FLOOR = 1e-300


def _step(log_m: np.ndarray, s: int, t: float) -> np.ndarray:
    """One recurrence step: the table at half-length k to half-length k+1.

    Rules (log domain; m is the end height):
        new[k+1] = t^(k+1/2) M[k]
        new[k]   = t^k M[k] + t^(k-1/2) M[k-1]
        new[m]   = s t^(m+1/2) M[m+1] + t^m M[m] + t^(m-1/2) M[m-1],  1 <= m < k
        new[0]   = s t^(1/2) M[1] + M[0]
    The interior rule is applied for every 1 <= m <= k-1; this matches the
    brute-force half-walk oracle exactly (see tests).
    """
    k = len(log_m) - 1
    log_t = math.log(t)
    log_s = math.log(s)
    out = np.full(k + 2, ZERO)
    if k >= 2:
        m = np.arange(1, k)
        a = log_s + (m + 0.5) * log_t + log_m[2 : k + 1]
        b = m * log_t + log_m[1:k]
        c = (m - 0.5) * log_t + log_m[0 : k - 1]
        out[1:k] = np.logaddexp(np.logaddexp(a, b), c)
    if k >= 1:
        out[0] = np.logaddexp(log_s + 0.5 * log_t + log_m[1], log_m[0])
        out[k] = np.logaddexp(k * log_t + log_m[k], (k - 0.5) * log_t + log_m[k - 1])
    else:
        out[0] = log_m[0]
    out[k + 1] = (k + 0.5) * log_t + log_m[k]
    return out


def _normalize(log_m: np.ndarray, s: int) -> tuple[float, np.ndarray, float]:
    """(log N, p array, entropy in nats) from a log M table."""
    m = np.arange(len(log_m))
    log_s = math.log(s)
    log_norm = log_sum_exp(m * log_s + 2.0 * log_m)
    log_p = 2.0 * log_m - log_norm
    p = np.exp(log_p)
    weight = np.exp(m * log_s + log_p)  # s^m p_m, sums to 1
    mask = p > P_FLOOR
    entropy = float(-(weight[mask] * log_p[mask]).sum())
    return log_norm, p, entropy


def _argmax_high(arr: np.ndarray) -> int:
    """argmax with ties broken toward the larger index."""
    rev = arr[::-1]
    return len(arr) - 1 - int(np.argmax(rev))


@dataclass(frozen=True)
class SchmidtProfile:
    """The table {m -> log M[n, m]} with derived Schmidt numbers and entropy."""

    n: int
    s: int
    t: float
    log_m: np.ndarray
    log_norm: float
    p: np.ndarray
    entropy: float  # nats

    def mstar(self, mode: str = "M") -> int:
        """Peak location: argmax of M (mode='M') or of s^m p (mode='weight')."""
        if mode == "M":
            return _argmax_high(self.log_m)
        score = np.arange(self.n + 1) * math.log(self.s) + 2.0 * self.log_m
        return _argmax_high(score)


def _profile_from_table(n: int, s: int, t: float, log_m: np.ndarray) -> SchmidtProfile:
    log_norm, p, entropy = _normalize(log_m, s)
    return SchmidtProfile(n, s, t, log_m, log_norm, p, entropy)


def recurrence_step(prof: SchmidtProfile) -> SchmidtProfile:
    """Advance a profile from half-length n to n+1."""
    return _profile_from_table(prof.n + 1, prof.s, prof.t, _step(prof.log_m, prof.s, prof.t))


def profile(n: int, s: int, t: float) -> SchmidtProfile:
    """Iterate the recurrence from the seed M[0, 0] = 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if s < 1 or t <= 0:
        raise ValueError(f"need s >= 1 and t > 0, got s={s}, t={t}")
    log_m = np.zeros(1)
    for _ in range(n):
        log_m = _step(log_m, s, t)
    return _profile_from_table(n, s, t, log_m)


@dataclass(frozen=True)
class CurvePoint:
    n: int
    entropy: float
    mstar: int
    log_norm: float


def entropy_curve(n_max: int, s: int, t: float, stride: int = 1) -> Iterator[CurvePoint]:
    """Single forward pass emitting entropy every ``stride`` steps.

    O(n_max^2) time, O(n_max) memory.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    log_m = np.zeros(1)
    for n in range(1, n_max + 1):
        log_m = _step(log_m, s, t)
        if n % stride == 0 or n == n_max:
            log_norm, p, entropy = _normalize(log_m, s)
            yield CurvePoint(n, entropy, _argmax_high(log_m), log_norm)


# --- closed-form bounds -------------------------------------------------------

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


def peak_offset_bound(s: int, t: float) -> float:
    """N0 such that argmax_m M[n, m] lies in [n - 2 N0, n] for t > 1.

    N0 = 0 when f(s,t) = exp(3 s t^(3/2) / (t^2 - 1)) is below the golden
    ratio, else -log( log(1/f + 1) / log f ) / log t.
    """
    if t <= 1:
        raise ValueError("peak offset bound requires t > 1")
    f = math.exp(3.0 * s * t**1.5 / (t * t - 1.0))
    if f < GOLDEN:
        return 0.0
    return -math.log(math.log(1.0 / f + 1.0) / math.log(f)) / math.log(t)


def entropy_tail_cutoff(s: int, t: float) -> int:
    """m0: above this height the tilde Schmidt numbers drop below 1/e for t < 1."""
    if not 0 < t < 1:
        raise ValueError("tail cutoff requires 0 < t < 1")
    return math.floor(math.log(t / (9.0 * math.e * s)) / (2.0 * math.log(t))) + 1


def entropy_bound(s: int, t: float) -> float:
    """The n-independent entropy bound C(s, t) for 0 < t < 1."""
    if not 0 < t < 1:
        raise ValueError("entropy bound requires 0 < t < 1")
    m0 = entropy_tail_cutoff(s, t)
    t2 = t * t
    c = (m0 + 1) / math.e
    c -= 9.0 * s * t ** (2 * m0 + 1) / (1.0 - t2) * math.log(9.0 * s / t)
    c -= (
        18.0 * s * t ** (2 * m0 + 2) * (m0 * (1.0 - t2) + 1.0) / (t2 - 1.0) ** 2
    ) * math.log(t)
    c += 9.0 * s * t / (t2 - 1.0) ** 2 * math.log(s)
    return c


@dataclass(frozen=True)
class BoundsReport:
    n0: float | None   # defined for t > 1
    m0: int | None     # defined for 0 < t < 1
    c: float | None    # defined for 0 < t < 1
    mstar: int


def bounds(n: int, s: int, t: float, peak_mode: str = "M") -> BoundsReport:
    """Evaluate the closed-form bounds alongside the observed peak location."""
    prof = profile(n, s, t)
    n0 = peak_offset_bound(s, t) if t > 1 else None
    if 0 < t < 1:
        m0 = entropy_tail_cutoff(s, t)
        c = entropy_bound(s, t)
    else:
        m0, c = None, None
    return BoundsReport(n0=n0, m0=m0, c=c, mstar=prof.mstar(mode=peak_mode))


# --- tilde transform ----------------------------------------------------------

@dataclass(frozen=True)
class TildeProfile:
    """s^(m/2)-rescaled table and its derived quantities.

    ``p_tilde[m]`` follows the definition Mt[n+1, m]^2 / sum_m Mt[n+1, m]^2
    (one recurrence step ahead of ``log_m``); ``log_sum_sq`` is
    log sum_m Mt[n, m]^2, strictly increasing in n.
    """

    n: int
    s: int
    t: float
    log_m: np.ndarray
    log_sum_sq: float
    p_tilde: np.ndarray


def _tilde(log_m: np.ndarray, s: int) -> np.ndarray:
    return log_m + 0.5 * np.arange(len(log_m)) * math.log(s)


def tilde_profile(n: int, s: int, t: float) -> TildeProfile:
    prof = profile(n, s, t)
    log_mt = _tilde(prof.log_m, s)
    log_mt_next = _tilde(_step(prof.log_m, s, t), s)
    log_denom = log_sum_exp(2.0 * log_mt_next)
    return TildeProfile(
        n=n,
        s=s,
        t=t,
        log_m=log_mt,
        log_sum_sq=log_sum_exp(2.0 * log_mt),
        p_tilde=np.exp(2.0 * log_mt_next - log_denom),
    )


def profile_csv(prof: SchmidtProfile) -> str:
    """CSV rows 'm,logM,p' for one profile, 17-significant-digit floats."""
    lines = ["m,logM,p"]
    for m in range(prof.n + 1):
        lines.append(f"{m},{float(prof.log_m[m])!r},{float(prof.p[m])!r}")
    return "\n".join(lines) + "\n"

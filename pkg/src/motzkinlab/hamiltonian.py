"""Sparse assembly and spectral checks of the deformed Motzkin Hamiltonian.

Two deformation modes are supported: a translation-invariant one-parameter
family (any number of colors ``s``, parameter ``t``) and a general
bond-resolved angle family (uncolored chain only) constrained by the
tuning relation

    tan(theta_i) * cot(phi_i) = tan(theta_{i+1}) * tan(psi_{i+1})

between neighboring bonds, which is what keeps the chain frustration-free.
"""

from __future__ import annotations

import hashlib
import math
import os
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

DEFAULT_DIM_CAP = 2**20
TUNING_TOL = 1e-12
DENSE_CUTOFF = 1300  # below this dimension a dense eigh is faster and exact


class DimensionCapError(ValueError):
    """Hilbert-space dimension exceeds the configured cap."""


class TuningError(ValueError):
    """Angle set violates the neighboring-bond tuning relation."""


def dimension_cap() -> int:
    """Configured dimension cap; MOTZKIN_DIM_CAP overrides the default."""
    env = os.environ.get("MOTZKIN_DIM_CAP")
    return int(env) if env else DEFAULT_DIM_CAP


@dataclass(frozen=True)
class Uniform:
    """Translation-invariant deformation: cot(phi) = tan(psi) = cot(theta) = t."""

    t: float

    def __post_init__(self):
        if not self.t > 0:
            raise ValueError(f"deformation parameter t must be positive, got {self.t}")


@dataclass(frozen=True)
class Angles:
    """Per-bond mixing angles, one triple per bond (2n-1 bonds).

    Only defined for the uncolored chain.  Angles must lie strictly inside
    (0, pi/2); the degenerate endpoint values are rejected because they can
    make the ground state degenerate.
    """

    phi: tuple[float, ...]
    psi: tuple[float, ...]
    theta: tuple[float, ...]

    def __post_init__(self):
        nb = len(self.phi)
        if len(self.psi) != nb or len(self.theta) != nb:
            raise ValueError("phi, psi, theta must have equal length (one per bond)")
        for name, arr in (("phi", self.phi), ("psi", self.psi), ("theta", self.theta)):
            for a in arr:
                if not 0.0 < a < math.pi / 2:
                    raise ValueError(f"{name} angle {a} outside open interval (0, pi/2)")

    def tuning_residual(self) -> float:
        """Largest relative violation of the neighboring-bond relation."""
        worst = 0.0
        for i in range(len(self.phi) - 1):
            lhs = math.tan(self.theta[i]) / math.tan(self.phi[i])
            rhs = math.tan(self.theta[i + 1]) * math.tan(self.psi[i + 1])
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))
        return worst

    def short_hash(self) -> str:
        h = hashlib.sha256()
        h.update(np.asarray(self.phi + self.psi + self.theta).tobytes())
        return h.hexdigest()[:12]


@dataclass(frozen=True)
class ChainSpec:
    """Even-length chain of 2n spins with ``s`` colors and a deformation.

    ``enforce_tuning=False`` admits a detuned angle set; the resulting
    Hamiltonian is generically frustrated (useful for negative tests).
    """

    two_n: int
    s: int
    deformation: Uniform | Angles
    enforce_tuning: bool = True

    def __post_init__(self):
        if self.two_n < 2 or self.two_n % 2:
            raise ValueError(f"two_n must be even and >= 2, got {self.two_n}")
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")
        if isinstance(self.deformation, Angles):
            if self.s != 1:
                raise ValueError("angle deformations are defined for s=1 only")
            if len(self.deformation.phi) != self.two_n - 1:
                raise ValueError(
                    f"need {self.two_n - 1} bond angles, got {len(self.deformation.phi)}"
                )
            if self.enforce_tuning:
                res = self.deformation.tuning_residual()
                if res > TUNING_TOL:
                    raise TuningError(f"tuning relation violated, residual {res:.3e}")

    @property
    def local_dim(self) -> int:
        return 2 * self.s + 1

    @property
    def dim(self) -> int:
        return self.local_dim**self.two_n

    def deformation_label(self) -> str:
        if isinstance(self.deformation, Uniform):
            return repr(self.deformation.t)
        return self.deformation.short_hash()

    def to_config(self) -> dict:
        """Human-readable config record."""
        cfg = {"two_n": self.two_n, "s": self.s}
        if isinstance(self.deformation, Uniform):
            cfg["deformation.kind"] = "uniform"
            cfg["t"] = self.deformation.t
        else:
            cfg["deformation.kind"] = "angles"
            cfg["phi"] = list(self.deformation.phi)
            cfg["psi"] = list(self.deformation.psi)
            cfg["theta"] = list(self.deformation.theta)
        return cfg


def uniform_spec(two_n: int, s: int, t: float) -> ChainSpec:
    return ChainSpec(two_n, s, Uniform(t))


@dataclass(frozen=True)
class SpectrumReport:
    lowest_eigenvalues: tuple[float, ...]
    gs_residual: float
    null_dim: int
    zero_tol: float
    ground_vector: np.ndarray | None = field(default=None, repr=False, compare=False)

    def csv_row(self, spec: ChainSpec) -> str:
        e = self.lowest_eigenvalues
        return ",".join(
            [
                str(spec.two_n),
                str(spec.s),
                spec.deformation_label(),
                repr(e[0]),
                repr(e[1]) if len(e) > 1 else "",
                repr(self.gs_residual),
                str(self.null_dim),
            ]
        )


# --- operator assembly ------------------------------------------------------

def _pair_projector(d: int, states: list[dict[tuple[int, int], float]]) -> sp.coo_matrix:
    """Sum of |v><v| over two-site states given as {(digit_j, digit_j1): amp}.

    Composite index is digit_{j+1} * d + digit_j (site j is the low digit).
    """
    block = np.zeros((d * d, d * d))
    for coeffs in states:
        v = np.zeros(d * d)
        for (a, b), amp in coeffs.items():
            v[b * d + a] = amp
        v /= np.linalg.norm(v)
        block += np.outer(v, v)
    return sp.coo_matrix(block)


def _embed_pair(block: sp.spmatrix, j: int, two_n: int, d: int) -> sp.csr_matrix:
    """Scatter a two-site block onto sites (j, j+1) of the chain.

    Little-endian mixed-radix indexing: global index = sum digit_k * d^k.
    """
    left = sp.identity(d ** (two_n - j - 2), format="coo")
    right = sp.identity(d**j, format="coo")
    return sp.kron(left, sp.kron(block, right, format="coo"), format="csr")


def _embed_site(block: sp.spmatrix, j: int, two_n: int, d: int) -> sp.csr_matrix:
    left = sp.identity(d ** (two_n - j - 1), format="coo")
    right = sp.identity(d**j, format="coo")
    return sp.kron(left, sp.kron(block, right, format="coo"), format="csr")


def _bond_states(spec: ChainSpec, bond: int) -> list[dict[tuple[int, int], float]]:
    """The projected-out two-site states on a given bond."""
    s = spec.s
    states: list[dict[tuple[int, int], float]] = []
    if isinstance(spec.deformation, Uniform):
        t = spec.deformation.t
        for k in range(1, s + 1):
            l, r = k, s + k
            states.append({(l, 0): 1.0, (0, l): -t})          # up-step hopping
            states.append({(0, r): 1.0, (r, 0): -t})          # down-step hopping
            states.append({(l, r): 1.0, (0, 0): -t})          # peak creation
        # cross-color peaks are forbidden outright
        for k in range(1, s + 1):
            for kp in range(1, s + 1):
                if k != kp:
                    states.append({(k, s + kp): 1.0})
    else:
        ang = spec.deformation
        cph, sph = math.cos(ang.phi[bond]), math.sin(ang.phi[bond])
        cps, sps = math.cos(ang.psi[bond]), math.sin(ang.psi[bond])
        cth, sth = math.cos(ang.theta[bond]), math.sin(ang.theta[bond])
        l, r = 1, 2
        states.append({(0, l): cph, (l, 0): -sph})
        states.append({(0, r): cps, (r, 0): -sps})
        states.append({(0, 0): cth, (l, r): -sth})
    return states


def build_hamiltonian(spec: ChainSpec, dim_cap: int | None = None) -> sp.csr_matrix:
    """Assemble H = boundary + sum_j bulk projectors as a sparse CSR matrix."""
    cap = dimension_cap() if dim_cap is None else dim_cap
    if spec.dim > cap:
        raise DimensionCapError(f"dimension {spec.dim} exceeds cap {cap}")
    d = spec.local_dim
    s = spec.s

    # boundary: penalize a down step on the first site, an up step on the last
    first = np.zeros((d, d))
    last = np.zeros((d, d))
    for k in range(1, s + 1):
        first[s + k, s + k] = 1.0  # |r^k><r^k| on site 1
        last[k, k] = 1.0           # |l^k><l^k| on site 2n
    H = _embed_site(sp.coo_matrix(first), 0, spec.two_n, d)
    H = H + _embed_site(sp.coo_matrix(last), spec.two_n - 1, spec.two_n, d)

    for j in range(spec.two_n - 1):
        block = _pair_projector(d, _bond_states(spec, j))
        H = H + _embed_pair(block, j, spec.two_n, d)
    return H.tocsr()


# --- tuned angle generation -------------------------------------------------

def generate_tuned_angles(
    two_n: int,
    seed: int,
    theta_first: float = math.pi / 4,
    margin: float = 0.1,
) -> ChainSpec:
    """Sample a random angle set satisfying the tuning relation exactly.

    phi and psi are drawn uniformly from (margin, pi/2 - margin); theta is
    propagated bond to bond via tan(theta_{i+1}) = tan(theta_i) * cot(phi_i)
    / tan(psi_{i+1}).  Propagation keeps theta in (0, pi/2) automatically
    (all tangents are positive) but we re-sample psi on the rare numerical
    escape, up to 100 tries.
    """
    if not 0.0 < theta_first < math.pi / 2:
        raise ValueError("theta_first must lie in (0, pi/2)")
    rng = np.random.default_rng(seed)
    nb = two_n - 1
    lo, hi = margin, math.pi / 2 - margin
    phi = rng.uniform(lo, hi, size=nb)
    psi = np.empty(nb)
    psi[0] = rng.uniform(lo, hi)
    theta = np.empty(nb)
    theta[0] = theta_first
    for i in range(nb - 1):
        for attempt in range(100):
            cand = rng.uniform(lo, hi)
            tan_next = math.tan(theta[i]) / math.tan(phi[i]) / math.tan(cand)
            th = math.atan(tan_next)
            if 0.0 < th < math.pi / 2:
                psi[i + 1] = cand
                theta[i + 1] = th
                break
        else:
            raise RuntimeError(f"could not keep theta in range at bond {i + 1}")
    return ChainSpec(two_n, 1, Angles(tuple(phi), tuple(psi), tuple(theta)))


# --- spectral checks --------------------------------------------------------

def operator_norm_proxy(H: sp.spmatrix) -> float:
    """Infinity norm (max absolute row sum); cheap PSD-scale proxy."""
    return float(abs(H).sum(axis=1).max())


def diagonalize_low(
    spec: ChainSpec,
    k: int = 2,
    zero_tol: float | None = None,
    dim_cap: int | None = None,
    maxiter: int | None = None,
) -> SpectrumReport:
    """Smallest ``k`` eigenvalues and the null-space count.

    Small dimensions use a dense solve; larger ones a shift-inverted
    Lanczos around a negative shift (H is PSD, so the eigenvalues nearest
    any negative shift are the smallest ones).
    """
    if k < 2:
        raise ValueError("k must be >= 2 (need the gap above the ground space)")
    H = build_hamiltonian(spec, dim_cap=dim_cap)
    tol = 1e-9 * max(1.0, operator_norm_proxy(H)) if zero_tol is None else zero_tol

    if spec.dim <= DENSE_CUTOFF:
        evals, evecs = np.linalg.eigh(H.toarray())
        evals, evecs = evals[:k], evecs[:, :k]
    else:
        # Request a few extra Ritz pairs: with exactly k of them ARPACK can
        # stall when the k-th and (k+1)-th levels are nearly degenerate.
        k_eff = min(max(k, 6), spec.dim - 1)
        evals, evecs = spla.eigsh(
            H, k=k_eff, sigma=-0.5, which="LM", tol=1e-12, maxiter=maxiter
        )
        order = np.argsort(evals)[:k]
        evals, evecs = evals[order], evecs[:, order]

    v0 = evecs[:, 0]
    gs_res = float(np.linalg.norm(H @ v0) / np.linalg.norm(v0))
    null_dim = int(np.sum(evals < tol))
    return SpectrumReport(
        lowest_eigenvalues=tuple(float(e) for e in evals),
        gs_residual=gs_res,
        null_dim=null_dim,
        zero_tol=tol,
        ground_vector=v0,
    )


def residual(
    spec: ChainSpec,
    state: np.ndarray,
    H: sp.spmatrix | None = None,
    dim_cap: int | None = None,
) -> float:
    """||H state|| / ||state|| for a candidate ground vector."""
    state = np.asarray(state, dtype=float)
    if state.shape != (spec.dim,):
        raise ValueError(f"state has shape {state.shape}, expected ({spec.dim},)")
    if H is None:
        H = build_hamiltonian(spec, dim_cap=dim_cap)
    return float(np.linalg.norm(H @ state) / np.linalg.norm(state))

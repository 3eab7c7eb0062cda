"""Numerical laboratory for area-weighted colored Motzkin spin chains.

Builds the deformed frustration-free Hamiltonian, its exact ground state
as a weighted superposition over colored Motzkin walks, and computes
half-chain entanglement entropy at large sizes via a log-domain recurrence.
"""

from motzkinlab.walks import ColoredWalk, area, enumerate_walks, is_valid, matched_pairs
from motzkinlab.hamiltonian import (
    Angles,
    ChainSpec,
    SpectrumReport,
    Uniform,
    build_hamiltonian,
    diagonalize_low,
    generate_tuned_angles,
    residual,
)
from motzkinlab.groundstate import (
    WeightedEnsemble,
    build_ground_state,
    schmidt_by_svd,
    walk_weight_angles,
    walk_weight_uniform,
)
from motzkinlab.schmidt import (
    BoundsReport,
    SchmidtProfile,
    bounds,
    entropy_curve,
    profile,
    recurrence_step,
    tilde_profile,
)
from motzkinlab.sweep import FitResult, SweepPlan, fit_scaling, run_sweep

__version__ = "0.1.0"

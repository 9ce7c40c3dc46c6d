"""
foldcc: folded Reed-Solomon list decoding and Folded Lagrange Coded Computing.

The package implements FRS encoding and erasure-aware linear-algebraic list
decoding over prime fields, pruning of the candidate subspace with error-free
side information, and the FLCC protocol with a seeded Byzantine/straggler
simulation harness.
"""

# Re-export from modules
from foldcc.codes.bounds import bound_gr2016, bound_ours, bound_saraf
from foldcc.codes.frs import (
    DecodeResult,
    FrsCodeword,
    FrsParams,
    decoding_radius,
    frs_encode,
    guaranteed_errors,
    list_decode,
)
from foldcc.codes.pruning import (
    PruneOutcome,
    PruneStatus,
    SideInfoRequest,
    prune,
    select_points_deterministic,
    select_points_random,
    structured_points,
)
from foldcc.config import ExperimentConfig
from foldcc.core.field import Fe, PrimeField, find_primitive
from foldcc.core.linalg import AffineSolution, null_space, rank, rref, solve_affine, vandermonde
from foldcc.core.poly import interpolate, lagrange_coefficients, lagrange_monomial
from foldcc.exceptions import InvariantViolation, SideInformationMismatch
from foldcc.protocol.decoding import DecodeMode, DecodeStatus, MasterDecodeResult, master_decode
from foldcc.protocol.encoding import FlccEncoding, WorkerReturn, flcc_encode, worker_compute
from foldcc.protocol.jobs import JOBS, PolynomialJob, degree_probe, get_job
from foldcc.protocol.params import FlccParams, MatrixDataset
from foldcc.protocol.thresholds import (
    flcc_threshold_exact,
    flcc_threshold_paper,
    lcc_threshold,
    modified_rate,
    normalized_extra_computation,
    optimal_s,
)
from foldcc.sim.adversary import AdversaryKind, AdversaryModel
from foldcc.sim.harness import CampaignStats, Outcome, TrialReport, run_campaign, run_trial

__version__ = "0.1.0"

__all__ = [
    # Field and algebra
    "PrimeField",
    "Fe",
    "find_primitive",
    "interpolate",
    "lagrange_monomial",
    "lagrange_coefficients",
    "AffineSolution",
    "rref",
    "rank",
    "solve_affine",
    "null_space",
    "vandermonde",
    # Codes
    "FrsParams",
    "FrsCodeword",
    "DecodeResult",
    "frs_encode",
    "list_decode",
    "decoding_radius",
    "guaranteed_errors",
    "SideInfoRequest",
    "PruneOutcome",
    "PruneStatus",
    "select_points_deterministic",
    "select_points_random",
    "structured_points",
    "prune",
    "bound_ours",
    "bound_gr2016",
    "bound_saraf",
    # Protocol
    "FlccParams",
    "MatrixDataset",
    "PolynomialJob",
    "JOBS",
    "get_job",
    "degree_probe",
    "FlccEncoding",
    "WorkerReturn",
    "flcc_encode",
    "worker_compute",
    "DecodeMode",
    "DecodeStatus",
    "MasterDecodeResult",
    "master_decode",
    "lcc_threshold",
    "modified_rate",
    "optimal_s",
    "flcc_threshold_paper",
    "flcc_threshold_exact",
    "normalized_extra_computation",
    # Simulation
    "AdversaryKind",
    "AdversaryModel",
    "TrialReport",
    "CampaignStats",
    "Outcome",
    "run_trial",
    "run_campaign",
    "ExperimentConfig",
    # Errors
    "InvariantViolation",
    "SideInformationMismatch",
]

"""Mutually unbiased bases, entropic uncertainty relations and information locking."""

import json as _json

from ._mubkit import (
    CriterionResult,
    InvalidArgument,
    MubSet,
    avg_entropy,
    avg_entropy_gradient,
    bell_mutual_information,
    fourth_moment,
    latin_square_mubs,
    prime_mubs,
    product_mubs,
    qubit_triple,
    run_criterion,
    two_design_defect,
    unlocked_info,
)
from . import _mubkit

__all__ = [
    "CriterionResult",
    "InvalidArgument",
    "MubSet",
    "avg_entropy",
    "avg_entropy_gradient",
    "bell_mutual_information",
    "check_mub",
    "fourth_moment",
    "iacc_covariant",
    "iacc_latin",
    "iacc_search",
    "latin_square_mubs",
    "locking_gap",
    "minimize_avg_entropy",
    "prime_mubs",
    "product_mubs",
    "qubit_triple",
    "run_criterion",
    "two_design_defect",
    "unlocked_info",
]


def check_mub(mub_set, tol=1e-9):
    """Pairwise unbiasedness report as a dict."""
    return _json.loads(_mubkit._check_mub(mub_set, tol))


def minimize_avg_entropy(mub_set, restarts=64, seed=0):
    """Minimal average Shannon entropy, with its tightness certificate under "certificate"."""
    return _json.loads(_mubkit._minimize(mub_set, restarts, seed))


def iacc_covariant(mub_set, restarts=64, seed=0):
    return _json.loads(_mubkit._iacc_covariant(mub_set, restarts, seed))


def iacc_latin(mub_set):
    return _json.loads(_mubkit._iacc_latin(mub_set))


def iacc_search(mub_set, basis_weights=None, restarts=64, seed=0):
    """Best projective measurement found by local search; prior p_{t,k} = p_t / d."""
    return _json.loads(_mubkit._iacc_search(mub_set, list(basis_weights or []), restarts, seed))


def locking_gap(n, basis_weights=None):
    """Gap chain for the qubit triple on n qubits (n even)."""
    return _json.loads(_mubkit._locking_gap(n, list(basis_weights or [])))

"""Simultaneous rational function reconstruction over prime fields.

The most used entry points are re-exported here; each submodule documents
its own pieces in more detail.
"""

from .codes import EvalParams, encode, inject_errors, plswe_pipeline, srfrwe_solve
from .degrees import generic_pivot_degrees, nice_form, witness_matrix
from .experiments import ExperimentConfig, run_experiment
from .field import PrimeField
from .poly import Polynomial
from .reconstruct import SRFRInstance, rfr, srfr_solve, verify_solution
from .relation import ModuliSet, brute_force_rrp, relation_basis

__version__ = "0.1.0"

__all__ = [
    "EvalParams",
    "ExperimentConfig",
    "ModuliSet",
    "Polynomial",
    "PrimeField",
    "SRFRInstance",
    "brute_force_rrp",
    "encode",
    "generic_pivot_degrees",
    "inject_errors",
    "nice_form",
    "plswe_pipeline",
    "relation_basis",
    "rfr",
    "run_experiment",
    "srfr_solve",
    "srfrwe_solve",
    "verify_solution",
    "witness_matrix",
]

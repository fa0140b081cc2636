"""Spherical twist groups on Dynkin derived categories."""

from ._core import (
    ComputationError,
    HypothesisViolated,
    InsufficientWindow,
    MeshModel,
    ParseError,
    SphericalSequence,
    Twist,
    are_equal,
    builtin_d4_twists,
    check_spherical,
    classify,
    derive_twist,
    detect_exceptional,
    lambda_info,
    normal_form,
    orbit_json,
    picard_equal,
    picard_normal_form,
    run_cli,
    standard_sequences,
    verify_a3,
    verify_d4,
    verify_relation,
)

__all__ = [
    "ComputationError",
    "HypothesisViolated",
    "InsufficientWindow",
    "MeshModel",
    "ParseError",
    "SphericalSequence",
    "Twist",
    "are_equal",
    "builtin_d4_twists",
    "check_spherical",
    "classify",
    "derive_twist",
    "detect_exceptional",
    "lambda_info",
    "normal_form",
    "orbit_json",
    "picard_equal",
    "picard_normal_form",
    "run_cli",
    "standard_sequences",
    "verify_a3",
    "verify_d4",
    "verify_relation",
]

"""Periodic billiard orbits in planar L^p balls via Newton's method."""
from .certifier import Certificate, NewtonConfig, certify, newton_step, polish_and_certify
from .classification import MorseSignature, RotationNumber, morse_signature, rotation_number
from .dynamics import reflection_residual
from .functional import FunctionalEval, evaluate, perimeter
from .geometry import BoundarySpec, boundary_acceleration, boundary_point, boundary_velocity
from .identity import CanonicalForm, canonicalize, coalesce
from .runner import OrbitRecord, RunConfig, RunReport, fit_power_law, generate_seeds, run

__all__ = [
    "BoundarySpec", "boundary_point", "boundary_velocity", "boundary_acceleration",
    "FunctionalEval", "perimeter", "evaluate",
    "Certificate", "NewtonConfig", "newton_step", "certify", "polish_and_certify",
    "CanonicalForm", "canonicalize", "coalesce",
    "MorseSignature", "RotationNumber", "morse_signature", "rotation_number",
    "reflection_residual",
    "OrbitRecord", "RunConfig", "RunReport", "generate_seeds", "run", "fit_power_law",
]

"""Braided Hopf *-algebras over tori: exact presentations, transmutation,
twists, bosonization, and the numerical classification tools for braided
free orthogonal quantum groups."""

from .abgroup import Bicharacter, FgAbelianGroup, SubgroupSpec, TwistData
from .constructions import (bosonize, braided_smash, bs_twist, group_tensor, semidirect,
                            transmute, ubar, verify_theta_iso, verify_thm_main)
from .hopf import (BraidedHopfPresentation, HopfPresentation, from_json, load_presentation,
                   verify_braided_hopf, verify_hopf, verify_morphism)
from .ncalg import Alphabet, NCPolynomial, RewriteSystem
from .scalars import Scalar, ScalarRing

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "Bicharacter", "BraidedHopfPresentation", "FgAbelianGroup", "HopfPresentation",
    "NCPolynomial", "RewriteSystem", "Scalar", "ScalarRing", "SubgroupSpec", "TwistData",
    "bosonize", "braided_smash", "bs_twist", "from_json", "group_tensor", "load_presentation",
    "semidirect", "transmute", "ubar", "verify_braided_hopf", "verify_hopf", "verify_morphism",
    "verify_theta_iso", "verify_thm_main",
]

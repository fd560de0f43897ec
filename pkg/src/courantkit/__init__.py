"""Exact symbolic checks for 2-plectic geometry, Courant algebroids and Lie 2-algebras on R^n."""

from .algebra import Q, Polynomial, RationalFunction
from .atiyah import AtiyahSection, atiyah_bracket, ks_cocycle, phi, poisson, sympl_hamiltonian_vf
from .cocycle import Box, BoxCover, LocalData1, LocalData2, verify_transition_equivariance, verify_triv_2form, verify_triv_3form
from .courant import (GeneralizedSection, SplitCourantModel, SplittingShift, change_splitting, curvature,
                      lie2_of_courant, lie2_of_preserving, pairing_minus, pairing_plus, preserves_splitting,
                      shifted_twist, twisted_courant, twisted_dorfman, verify_courant_axioms)
from .errors import *  # noqa: F401,F403
from .exterior import Chart, DifferentialForm, VectorField, d, iota, lie_derivative, poincare_potential, vf_bracket, wedge
from .extension import CECochain, Jx, PathSegment, ce_delta, ev_morphism, lie2_of_xham, path_cochain
from .lie2 import Lie2AlgebraHandle, Lie2Morphism, check_L2A_axioms, check_morphism
from .morphisms import embed, iso_roundtrip, main_morphism
from .plectic import PlecticStructure, check_nondegenerate, hamiltonian_vf, jacobiator_J, lie2_of_plectic, semi_bracket
from .report import CheckResult, Report

__version__ = "0.1.0"

"""Exact linear algebra over residue rings R/mR and membership in Zelisko groups."""

from .euclid import ZZ, PolynomialsModP
from .group import (
    check_structure,
    construct_witness,
    enumerate_members,
    is_member,
    oracle_is_member,
    sample_member,
)
from .linsolve import compose_generating, generating_solution, is_generating, solution_coset
from .matrix import MatrixRm, build_phi, det, smith_normal_form
from .residue import Modulus, alpha_element, ann_generator, invert_unit, unit_decompose

__version__ = "0.1.0"

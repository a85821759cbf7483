#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Top-level package."""

__author__ = "The liedual developers"
__maintainer__ = "The liedual developers"
__copyright__ = "Copyright (C) 2026"
__license__ = "BSD-3"
__version__ = '0.1.0'  # Use single quotes for bumpversion (see setup.cfg)

from .catalog import FIXTURES, check_fixture, fixture, fixture_suite, witness, witness_data
from .document import dumps, from_document, loads, read, to_document
from .duality import (
    associated_pair,
    associated_triad,
    cartan_twist,
    check_compatibility,
    check_pair_compatibility,
    dual_pair,
    dual_triad,
    fixed_subalgebra_dual,
    normalize,
    phi,
    psi,
    same_object,
)
from .exceptions import ErrorCode, LieDualError
from .ideals import (
    classify_irreducible,
    ideal_correspondence,
    invariant_ideal_lattice,
    irreducible_components,
    minimal_ideals,
    self_properties,
)
from .invol import (
    CompactTriad,
    Involution,
    NoncompactPairC,
    invariant_profile,
    joint_split,
    verify_equivalence_witness,
)
from .keps import grading_from_Z, keps_from_gamma, keps_pair, sigma_Z, theta_sim_witness_check
from .lie import LieAlgebra, Subspace, bracket, killing_form, killing_signature, verify_homomorphism
from .modrep import h_module_analysis, irreducibility_report, is_effective, riemannian_ideal
from .roots import gamma_lattice, restricted_roots, st_basis

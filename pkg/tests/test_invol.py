#!/usr/bin/env pytest
# -*- coding: utf-8 -*-

import pytest

from liedual.catalog import FamilySpec, ad, build, fixture, involution_from_ambient, sl_n_r, so_n, su_n
from liedual.exact import diagonal, identity, matrix
from liedual.exceptions import ErrorCode, LieDualError
from liedual.invol import (
    CompactTriad,
    Involution,
    NoncompactPairC,
    eigensplit,
    find_signed_permutation_witness,
    involution_from_diagonal,
    invariant_profile,
    is_cartan,
    joint_split,
    verify_equivalence_witness,
)

# so(4) basis: E_ij - E_ji for (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
AD_I22 = [1, -1, -1, -1, -1, 1]


def test_involution_checks():
    g = so_n(4)
    theta = involution_from_diagonal(g, AD_I22, "Ad I_{2,2}")
    assert not theta.is_identity()
    (plus, minus) = eigensplit(theta)
    assert (plus.dim, minus.dim) == (2, 4)
    with pytest.raises(LieDualError) as e:
        Involution(g, diagonal([2, 1, 1, 1, 1, 1]))
    assert e.value.code == ErrorCode.NOT_INVOLUTION
    with pytest.raises(LieDualError) as e:
        # Squares to the identity, but [e_01, e_02] = -e_12 is not preserved.
        Involution(g, diagonal([-1, 1, 1, 1, 1, 1]))
    assert e.value.code == ErrorCode.NOT_AUTOMORPHISM
    with pytest.raises(LieDualError) as e:
        Involution(g, identity(3))
    assert e.value.code == ErrorCode.DIM_MISMATCH


def test_compose():
    g = so_n(4)
    a = involution_from_diagonal(g, AD_I22, "a")
    assert a.compose(a).is_identity()


def test_compose_requires_commuting():
    g = so_n(3)
    a = involution_from_ambient(g, ad(diagonal([1, -1, -1])), "Ad diag(1,-1,-1)")
    b = involution_from_ambient(g, ad(matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])), "Ad swap(0,2)")
    assert not a.commutes_with(b)
    with pytest.raises(LieDualError) as e:
        a.compose(b)
    assert e.value.code == ErrorCode.NOT_COMMUTING


def test_joint_split_so4():
    t = fixture("so4-IJ")
    assert joint_split(t.theta1, t.theta2).dims() == (2, 0, 2, 2)
    t = fixture("so4-IJ2")
    assert joint_split(t.theta1, t.theta2).dims() == (1, 1, 3, 1)


def test_triad_requires_compact():
    g = sl_n_r(2)
    ident = Involution.identity(g)
    with pytest.raises(LieDualError) as e:
        CompactTriad(g, ident, ident)
    assert e.value.code == ErrorCode.NOT_COMPACT


def test_is_cartan():
    built = build(FamilySpec("SL_N_R", {"n": 3}, [("NEG_TRANSPOSE", dict())]))
    (theta,) = built.involutions
    assert is_cartan(built.algebra, theta)
    assert not is_cartan(built.algebra, Involution.identity(built.algebra))


def test_pair_requires_cartan():
    g = sl_n_r(2)
    ident = Involution.identity(g)
    with pytest.raises(LieDualError) as e:
        NoncompactPairC(g, ident, ident)
    assert e.value.code == ErrorCode.NOT_CARTAN


def test_profiles_distinguish_so4_triads():
    p1 = invariant_profile(fixture("so4-IJ"))
    p2 = invariant_profile(fixture("so4-IJ2"))
    assert p1.kind == "triad"
    assert p1.minimal_ideal_dims == (3, 3)
    assert dict(p1.fixed)["k1k2"].dim == 2
    assert dict(p2.fixed)["k1k2"].dim == 1
    assert p1 != p2


def test_equivalence_witness():
    t = fixture("so4-IJ")
    assert verify_equivalence_witness(t, t, identity(6))
    assert not verify_equivalence_witness(t, fixture("so4-IJ2"), identity(6))
    with pytest.raises(LieDualError) as e:
        verify_equivalence_witness(t, t, identity(5))
    assert e.value.code == ErrorCode.DIM_MISMATCH


def test_no_signed_permutation_between_inequivalent_triads():
    assert find_signed_permutation_witness(fixture("so4-IJ"), fixture("so4-IJ2")) is None


def test_conjugation_on_su2():
    built = build(FamilySpec("SU_N", {"n": 2}, [("CONJUGATION", dict())]))
    (nu,) = built.involutions
    (plus, minus) = eigensplit(nu)
    assert (plus.dim, minus.dim) == (1, 2)
    assert built.algebra is su_n(2)


def test_matrix_must_be_real():
    from sympy import QQ_I
    g = so_n(3)
    with pytest.raises(LieDualError) as e:
        Involution(g, matrix([[QQ_I(0, 1), 0, 0], [0, 1, 0], [0, 0, 1]], QQ_I))
    assert e.value.code == ErrorCode.NOT_INVOLUTION

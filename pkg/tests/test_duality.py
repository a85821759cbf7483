#!/usr/bin/env pytest
# -*- coding: utf-8 -*-

import pytest

from liedual.catalog import ad, fixture, involution_from_ambient, sl_n_r, so_n
from liedual.duality import (
    DEGENERATE_IDENTITY,
    align,
    associated_pair,
    associated_triad,
    cartan_twist,
    change_basis,
    check_compatibility,
    check_pair_compatibility,
    dual_pair,
    dual_triad,
    fixed_subalgebra_dual,
    joint_normalize,
    normalize,
    phi,
    psi,
    same_object,
)
from liedual.exact import diagonal, equal, identity, matrix
from liedual.exceptions import ErrorCode, LieDualError
from liedual.invol import (
    CompactTriad,
    Involution,
    eigensplit,
    involution_from_diagonal,
    invariant_profile,
    is_cartan,
    joint_split,
)
from liedual.lie import is_compact, killing_signature

AD_I22 = [1, -1, -1, -1, -1, 1]


def test_twist_so4():
    g = so_n(4)
    tau = involution_from_diagonal(g, AD_I22, "Ad I_{2,2}")
    tw = cartan_twist(g, tau, [tau])
    assert tw.n_plus == 2
    # so(2, 2)
    assert killing_signature(tw.algebra) == (4, 2, 0)
    assert is_cartan(tw.algebra, tw.carried[0])
    assert equal(tw.tau.mat, tw.carried[0].mat)


def test_twist_requires_commuting():
    g = so_n(3)
    a = involution_from_ambient(g, ad(diagonal([1, -1, -1])), "a")
    b = involution_from_ambient(g, ad(matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])), "b")
    with pytest.raises(LieDualError) as e:
        cartan_twist(g, a, [b])
    assert e.value.code == ErrorCode.NOT_COMMUTING


@pytest.mark.parametrize("name, location", [("so4-IJ", "k"), ("so4-IJ2", "p")])
def test_phi_so4(name, location):
    p = phi(fixture(name))
    assert p.kind == "pair"
    assert p.g0.dim == 6
    assert killing_signature(p.g0) == (4, 2, 0)
    profile = invariant_profile(p)
    fixed = dict(profile.fixed)
    assert fixed["h0"].dim == 4
    assert fixed["h0"].center_dim == 1
    assert profile.center_location == location
    p.check()


@pytest.mark.parametrize("name", ["so4-IJ", "so4-IJ2", "so5-I23", "su3-CI", "su2-Tb"])
def test_psi_phi_roundtrip(name):
    t = fixture(name)
    back = psi(phi(t))
    assert is_compact(back.g)
    assert same_object(back, normalize(t))
    n = normalize(t)
    assert same_object(psi(phi(n)), n)
    assert equal(psi(phi(n)).basis_record, identity(n.g.dim))


@pytest.mark.parametrize("name", ["sl3-keps", "so21-riem", "sl3-counter"])
def test_phi_psi_roundtrip(name):
    p = fixture(name)
    assert same_object(phi(psi(p)), normalize(p))


def test_phi_theta_theta_is_riemannian():
    t = fixture("so4-IJ")
    riem = phi(CompactTriad(t.g, t.theta1, t.theta1))
    assert riem.is_riemannian()


def test_associated_and_dual():
    t = fixture("so4-IJ")
    at = associated_triad(t)
    assert equal(at.theta2.mat, (t.theta1.compose(t.theta2)).mat)
    assert same_object(associated_triad(at), t)
    dt = dual_triad(t)
    assert equal(dt.theta1.mat, t.theta2.mat)
    assert same_object(dual_triad(dt), t)


def test_associated_pair_of_riemannian_is_degenerate():
    p = fixture("so21-riem")
    a = associated_pair(p)
    assert a.sigma.is_identity()
    assert DEGENERATE_IDENTITY in a.metadata["flags"]
    assert "flags" not in associated_pair(a).metadata


def test_dual_pair_of_riemannian():
    p = fixture("so21-riem")
    d = dual_pair(p)
    # sigma = theta: theta sigma = id, the dual form is g0 itself.
    assert killing_signature(d.g0) == killing_signature(p.g0)
    d.check()


@pytest.mark.parametrize("name", ["so4-IJ", "so4-IJ2", "su2-Tb"])
def test_compatibility(name):
    assert check_compatibility(fixture(name)).passed


@pytest.mark.parametrize("name", ["sl3-keps", "so21-riem"])
def test_pair_compatibility(name):
    assert check_pair_compatibility(fixture(name)).passed


def test_joint_normalize_and_align():
    t = fixture("so4-IJ2")
    jn = joint_normalize(t)
    (plus, minus) = eigensplit(jn.theta1)
    assert plus.dim == 2
    assert joint_split(jn.theta1, jn.theta2).dims() == (1, 1, 3, 1)
    assert same_object(align(jn), align(align(jn)))


def test_change_basis_records_basis():
    t = fixture("so4-IJ")
    p = -identity(6)
    c = change_basis(t, p)
    assert equal(c.basis_record, p)
    assert equal(c.theta1.mat, t.theta1.mat)


@pytest.mark.parametrize("name", ["so4-IJ", "so4-IJ2"])
def test_fixed_subalgebra_dual(name):
    report = fixed_subalgebra_dual(phi(fixture(name)))
    assert report.match
    assert report.compact_after
    assert report.dim == 4
    assert report.center_dim == 1


def test_phi_requires_compact_input():
    g = sl_n_r(2)
    ident = Involution.identity(g)
    t = CompactTriad(g, ident, ident, check=False)
    # Twisting by the identity keeps sl(2, R), on which the identity is not a Cartan involution.
    with pytest.raises(LieDualError) as e:
        phi(t)
    assert e.value.code == ErrorCode.NOT_CARTAN

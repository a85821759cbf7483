#!/usr/bin/env pytest
# -*- coding: utf-8 -*-

import pytest
from sympy import QQ

from liedual.catalog import fixture, grading_element
from liedual.duality import dual_pair
from liedual.exact import column, equal
from liedual.exceptions import ErrorCode, LieDualError
from liedual.ideals import self_properties
from liedual.invol import CompactTriad, Involution, invariant_profile
from liedual.keps import (
    DEGENERATE,
    characteristic_element,
    grading_from_Z,
    is_grade_reversing,
    keps_from_gamma,
    keps_pair,
    search_gamma_witness,
    sigma_Z,
    theta_sim_witness_check,
)
from liedual.roots import gamma_lattice, restricted_roots


def grading_of(name: str):
    p = fixture(name)
    n = p.metadata["params"]["n"]
    z = p.g0.ambient_coordinates(grading_element(n))
    return (p, grading_from_Z(p.g0, z))


@pytest.mark.parametrize("name, dims", [
    ("sl3-keps", (1, 2, 2, 2, 1)),
    ("sl4-keps", (1, 4, 5, 4, 1)),
])
def test_grading_dims(name, dims):
    (_, gd) = grading_of(name)
    assert gd.kind == 2
    assert gd.dims() == dims
    assert not gd.degenerate


def test_characteristic_element():
    (_, gd) = grading_of("sl3-keps")
    assert equal(characteristic_element(gd.g0, gd.components), gd.z)


def test_zero_grading_is_degenerate():
    p = fixture("sl3-keps")
    gd = grading_from_Z(p.g0, column([0] * p.g0.dim))
    assert gd.kind == 0
    assert gd.dims() == (8,)
    assert DEGENERATE in gd.flags
    assert sigma_Z(gd).is_identity()


def test_non_integer_grading():
    p = fixture("sl3-keps")
    z = p.g0.ambient_coordinates(grading_element(3)) * QQ(1, 2)
    with pytest.raises(LieDualError) as e:
        grading_from_Z(p.g0, z)
    assert e.value.code == ErrorCode.NON_INTEGER_GRADING


def test_keps_pair_rebuilds_fixture():
    (p, gd) = grading_of("sl3-keps")
    assert is_grade_reversing(gd, p.theta)
    built = keps_pair(gd, p.theta)
    assert equal(built.sigma.mat, p.sigma.mat)
    assert built.metadata["grading_dims"] == [1, 2, 2, 2, 1]


def test_keps_pair_requires_grade_reversing():
    (p, gd) = grading_of("sl3-keps")
    ident = Involution.identity(p.g0)
    assert not is_grade_reversing(gd, ident)
    with pytest.raises(LieDualError) as e:
        keps_pair(gd, ident)
    assert e.value.code == ErrorCode.NOT_GRADE_REVERSING


@pytest.mark.parametrize("name", ["so4-IJ", "so5-I23"])
def test_keps_from_gamma(name):
    t = fixture(name)
    rd = restricted_roots(t.g, t.theta1)
    for v in gamma_lattice(rd):
        construction = keps_from_gamma(t.g, t.theta1, v, rd)
        gd = construction.grading
        assert gd.kind >= 1
        assert sum(gd.dims()) == t.g.dim
        assert is_grade_reversing(gd, construction.pair.theta)
        assert equal(construction.pair.sigma.mat, sigma_Z(gd).compose(construction.pair.theta).mat)
        assert theta_sim_witness_check(construction.triad, v, rd)
        p = construction.pair
        assert invariant_profile(dual_pair(p)) == invariant_profile(p)
        assert self_properties(p).dual_profile_match


def test_keps_from_gamma_rejects_non_lattice_vectors():
    t = fixture("so4-IJ")
    with pytest.raises(LieDualError) as e:
        keps_from_gamma(t.g, t.theta1, [QQ(1, 2), QQ(0)])
    assert e.value.code == ErrorCode.NOT_IN_GAMMA


def test_search_gamma_witness():
    t = fixture("so4-IJ")
    same = CompactTriad(t.g, t.theta1, t.theta1)
    v = search_gamma_witness(same, 1)
    assert all(row == [0] for row in v.to_list())
    rd = restricted_roots(t.g, t.theta1)
    (v, _) = gamma_lattice(rd)
    construction = keps_from_gamma(t.g, t.theta1, v, rd)
    found = search_gamma_witness(construction.triad, 1)
    assert found is not None
    assert theta_sim_witness_check(construction.triad, found, rd)

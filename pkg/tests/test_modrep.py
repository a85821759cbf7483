#!/usr/bin/env pytest
# -*- coding: utf-8 -*-

import pytest

from liedual.catalog import fixture
from liedual.duality import associated_pair
from liedual.exact import intersect
from liedual.exceptions import ErrorCode, LieDualError
from liedual.ideals import minimal_ideals
from liedual.invol import eigenspace
from liedual.lie import Subspace, is_ideal
from liedual.modrep import (
    IRREDUCIBLE,
    REDUCIBLE_WITNESS,
    UNKNOWN,
    h_module_analysis,
    irreducibility_report,
    is_effective,
    riemannian_ideal,
)


def test_counterexample_is_reducible():
    analysis = h_module_analysis(fixture("sl3-counter"))
    assert analysis.flag == REDUCIBLE_WITNESS
    assert analysis.witness_dim == 2
    assert len(analysis.seed_dims) == 4


def test_riemannian_rank_one_is_irreducible():
    analysis = h_module_analysis(fixture("so21-riem"))
    assert analysis.flag == IRREDUCIBLE
    assert analysis.witness_dim is None
    # The commutant of the rotation action on R^2 is CC.
    assert analysis.commutant_dim == 2


def test_trivial_q0_is_unknown():
    p = associated_pair(fixture("so21-riem"))
    assert h_module_analysis(p).flag == UNKNOWN
    assert not is_effective(p)


@pytest.mark.parametrize("name", ["sl3-counter", "sl3-keps", "so21-riem", "so21x2-riem"])
def test_effective(name):
    assert is_effective(fixture(name))


def test_riemannian_ideal():
    p = fixture("so21x2-riem")
    p0 = eigenspace(p.theta, -1)
    first = minimal_ideals(p.g0).minimal_ideals[0]
    p1 = Subspace(p.g0, intersect(first.basis, p0.basis))
    assert p1.dim == 2
    l0 = riemannian_ideal(p, p1)
    assert l0 == first
    assert is_ideal(p.g0, l0)


def test_riemannian_ideal_checks():
    keps = fixture("sl3-keps")
    with pytest.raises(LieDualError) as e:
        riemannian_ideal(keps, Subspace.zero(keps.g0))
    assert e.value.code == ErrorCode.NOT_RIEMANNIAN
    p = fixture("so21-riem")
    k0 = eigenspace(p.theta, 1)
    with pytest.raises(LieDualError) as e:
        riemannian_ideal(p, k0)
    assert e.value.code == ErrorCode.NOT_INVARIANT


def test_irreducibility_report():
    report = irreducibility_report(fixture("so21x2-riem"))
    assert report.effective
    assert not report.ideal_irreducible
    assert report.module.flag == REDUCIBLE_WITNESS
    assert report.consistent
    report = irreducibility_report(fixture("so21-riem"))
    assert report.ideal_irreducible
    assert report.module.flag == IRREDUCIBLE
    assert report.consistent

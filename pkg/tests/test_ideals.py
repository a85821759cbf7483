#!/usr/bin/env pytest
# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liedual.catalog import fixture, gl_n, so_n, so_pq
from liedual.duality import phi
from liedual.exceptions import ErrorCode, LieDualError
from liedual.ideals import (
    P_A,
    P_B,
    P_D,
    SIMPLE,
    T_A,
    T_B,
    T_C,
    T_D,
    classify_irreducible,
    ideal_correspondence,
    invariant_ideal_lattice,
    irreducible_components,
    is_anti_linear,
    killing_orthogonal,
    minimal_ideals,
    self_properties,
)
from liedual.invol import Involution, signed_permutation
from liedual.lie import Subspace, is_ideal, transform


def test_minimal_ideals():
    d = minimal_ideals(so_n(4))
    assert [s.dim for s in d.minimal_ideals] == [3, 3]
    assert all(is_ideal(so_n(4), s) for s in d.minimal_ideals)
    assert [s.dim for s in minimal_ideals(so_n(5)).minimal_ideals] == [10]
    # sl(2, C) as a real algebra is simple.
    assert len(minimal_ideals(so_pq(3, 1)).minimal_ideals) == 1
    with pytest.raises(LieDualError) as e:
        minimal_ideals(gl_n(2))
    assert e.value.code == ErrorCode.NOT_SEMISIMPLE


def test_minimal_ideals_completeness():
    assert minimal_ideals(so_n(4)).complete
    assert minimal_ideals(so_n(4)).metadata == dict()
    # A complex simple ideal keeps its two-dimensional centroid unsplit.
    assert minimal_ideals(so_pq(3, 1)).complete


def test_unsplit_ideals_are_reported(monkeypatch):
    monkeypatch.setattr("liedual.ideals.commutant", lambda ops, n: None)
    d = minimal_ideals(so_n(3))
    assert [s.dim for s in d.minimal_ideals] == [3]
    assert not d.complete
    assert d.metadata["unsplit_dims"] == [3]


@settings(max_examples=10, deadline=None)
@given(st.permutations(list(range(6))))
def test_minimal_ideals_under_basis_permutation(perm):
    h = transform(so_n(4), signed_permutation(6, tuple(perm), (1,) * 6))
    d = minimal_ideals(h)
    assert [s.dim for s in d.minimal_ideals] == [3, 3]
    assert all(is_ideal(h, s) for s in d.minimal_ideals)


def test_killing_orthogonal():
    g = so_n(4)
    (a, b) = minimal_ideals(g).minimal_ideals
    assert killing_orthogonal(g, a) == b
    assert killing_orthogonal(g, Subspace.zero(g)).dim == 6


def test_invariant_lattice():
    t = fixture("su2-Ta")
    lattice = invariant_ideal_lattice(t.g, [t.theta1, t.theta2])
    assert lattice.permutations == [(1, 0), (1, 0)]
    assert lattice.trivial
    assert [s.dim for s in lattice.ideals] == [0, 6]
    ident = Involution.identity(t.g)
    lattice = invariant_ideal_lattice(t.g, [ident])
    assert not lattice.trivial
    assert [s.dim for s in lattice.ideals] == [0, 3, 3, 6]


def test_irreducible_components():
    t = fixture("so4-IJ")
    components = irreducible_components(t)
    assert [c.g.dim for c in components] == [3, 3]
    for c in components:
        assert c.kind == "triad"
        assert c.basis_record.shape == (6, 3)
        c.check()
    assert len(irreducible_components(fixture("su2-Ta"))) == 1


def test_irreducible_components_of_pair():
    p = fixture("so21x2-riem")
    components = irreducible_components(p)
    assert [c.g0.dim for c in components] == [3, 3]
    for c in components:
        c.check()


@pytest.mark.parametrize("name, tag", [
    ("so5-I23", SIMPLE),
    ("su2-Ta", T_A),
    ("su2-Tb", T_B),
    ("su2-Tc", T_C),
    ("su2-Td", T_D),
])
def test_classify_triads(name, tag):
    assert classify_irreducible(fixture(name)).tag == tag


@pytest.mark.parametrize("name, tag", [
    ("su2-Ta", P_A),
    ("su2-Tb", P_B),
    ("su2-Td", P_D),
])
def test_classify_dual_pairs(name, tag):
    assert classify_irreducible(phi(fixture(name))).tag == tag


def test_classify_requires_irreducible():
    with pytest.raises(LieDualError) as e:
        classify_irreducible(fixture("so4-IJ"))
    assert e.value.code == ErrorCode.NOT_IRREDUCIBLE


def test_anti_linear():
    p = phi(fixture("su2-Ta"))
    assert is_anti_linear(p.g0, p.sigma)
    assert is_anti_linear(so_n(3), Involution.identity(so_n(3))) is None


@pytest.mark.parametrize("name", ["so4-IJ", "su2-Ta", "so21x2-riem"])
def test_ideal_correspondence(name):
    obj = fixture(name)
    p = phi(obj) if obj.kind == "triad" else obj
    report = ideal_correspondence(p)
    assert report.passed
    assert report.pair_lattice_size == report.triad_lattice_size


def test_self_dual_witnesses():
    report = self_properties(fixture("su2-Ta"))
    assert report.self_dual is True
    assert report.witnesses == {"PHI_NU": True}
    report = self_properties(fixture("su2-Tc"))
    assert report.self_dual is True
    assert report.self_associated is True
    report = self_properties(fixture("su2-Td"))
    assert report.self_associated is True


def test_self_properties_without_witness():
    report = self_properties(fixture("so4-IJ"))
    assert report.self_dual is None
    assert report.self_associated is None
    assert report.witnesses == dict()
    report = self_properties(fixture("so21-riem"))
    assert report.self_dual is None
    # theta sigma is the identity: the dual of a Riemannian pair is itself.
    assert report.dual_profile_match

#!/usr/bin/env pytest
# -*- coding: utf-8 -*-

import pytest
from sympy import QQ

from liedual.catalog import gl_n, sl_n_r, so_n, so_pq, su_n
from liedual.catalog import elementary
from liedual.exact import column, equal, identity, matrix, unit
from liedual.exceptions import ErrorCode, LieDualError
from liedual.lie import (
    LieAlgebra,
    Subspace,
    SubalgebraView,
    bracket,
    center,
    centralizer,
    centroid_dim,
    commutant,
    derived_algebra,
    direct_sum,
    from_ambient,
    ideal_closure,
    is_ad_invariant,
    is_compact,
    is_ideal,
    is_semisimple,
    killing_form,
    killing_signature,
    subalgebra_closure,
    transform,
    verify_homomorphism,
)


def test_killing_signatures():
    assert killing_signature(so_n(3)) == (0, 3, 0)
    assert killing_signature(sl_n_r(2)) == (2, 1, 0)
    assert killing_signature(su_n(2)) == (0, 3, 0)
    assert killing_signature(so_pq(2, 2)) == (4, 2, 0)


def test_compact_and_semisimple():
    assert is_compact(so_n(3))
    assert not is_compact(sl_n_r(2))
    assert is_semisimple(sl_n_r(2))
    assert not is_semisimple(gl_n(2))
    assert is_ad_invariant(so_n(4), killing_form(so_n(4)))


def test_bracket_sl2():
    g = sl_n_r(2)
    # Basis: E_01, E_10, E_00 - E_11.
    assert equal(bracket(g, unit(3, 0), unit(3, 1)), unit(3, 2))
    assert equal(bracket(g, unit(3, 2), unit(3, 0)), column([2, 0, 0]))
    with pytest.raises(LieDualError) as e:
        bracket(g, unit(2, 0), unit(3, 0))
    assert e.value.code == ErrorCode.DIM_MISMATCH


def test_jacobi_failure():
    with pytest.raises(LieDualError) as e:
        LieAlgebra(3, {(0, 1, 2): 1, (1, 2, 1): 1})
    assert e.value.code == ErrorCode.NOT_LIE_ALGEBRA


def test_structure_constant_checks():
    with pytest.raises(LieDualError) as e:
        LieAlgebra(2, {(0, 2, 1): 1})
    assert e.value.code == ErrorCode.DIM_MISMATCH
    with pytest.raises(LieDualError) as e:
        LieAlgebra(2, {(1, 1, 0): 1})
    assert e.value.code == ErrorCode.NOT_LIE_ALGEBRA
    # Antisymmetric entries are folded.
    g = LieAlgebra(3, {(1, 0, 2): -1}, check=True)
    assert g.sc == {(0, 1, 2): QQ(1)}


def test_from_ambient_requires_closure():
    with pytest.raises(LieDualError) as e:
        from_ambient([elementary(2, 0, 1), elementary(2, 1, 0)])
    assert e.value.code == ErrorCode.NOT_LIE_ALGEBRA


def test_ambient_coordinates():
    g = so_n(3)
    assert equal(g.ambient_coordinates(g.ambient[1]), unit(3, 1))
    assert g.ambient_coordinates(identity(3)) is None


def test_center_and_derived():
    g = gl_n(2)
    z = center(g)
    assert z.dim == 1
    assert z.contains(column([1, 0, 0, 1]))
    assert derived_algebra(g).dim == 3
    assert center(so_n(3)).dim == 0


def test_closures():
    g = so_n(3)
    assert subalgebra_closure(g, [unit(3, 0), unit(3, 1)]).dim == 3
    assert subalgebra_closure(g, [unit(3, 0)]).dim == 1
    h = gl_n(2)
    s = ideal_closure(h, [column([1, 0, 0, 1])])
    assert s.dim == 1
    assert is_ideal(h, s)
    assert ideal_closure(h, [unit(4, 1)]).dim == 3


def test_centralizer():
    g = so_n(4)
    s = Subspace.span(g, [unit(6, 0)])
    c = centralizer(g, s)
    # so(2) + so(2) in so(4).
    assert c.dim == 2
    assert c.contains(unit(6, 5))


def test_subalgebra_view():
    g = so_n(4)
    view = SubalgebraView(Subspace.span(g, [unit(6, 0), unit(6, 5)]))
    assert view.algebra.dim == 2
    assert view.algebra.sc == dict()
    with pytest.raises(LieDualError) as e:
        SubalgebraView(Subspace.span(g, [unit(6, 0), unit(6, 1)]))
    assert e.value.code == ErrorCode.NOT_IN_SPAN


def test_transform_and_homomorphism():
    g = so_n(3)
    p = matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    h = transform(g, p)
    assert killing_signature(h) == (0, 3, 0)
    assert verify_homomorphism(h, g, p)
    assert verify_homomorphism(g, g, identity(3))
    assert not verify_homomorphism(g, g, -identity(3))
    with pytest.raises(LieDualError):
        verify_homomorphism(g, g, identity(2))


def test_direct_sum():
    g = direct_sum(so_n(3), su_n(2))
    assert g.dim == 6
    assert killing_signature(g) == (0, 6, 0)
    assert g.ambient[0].shape == (5, 5)


def test_commutant_and_centroid():
    g = so_n(3)
    assert len(commutant(g.ad_matrices(), 3)) == 1
    assert centroid_dim(so_n(3)) == 1
    # so(3, 1) is sl(2, C) seen as a real Lie algebra.
    assert centroid_dim(so_pq(3, 1)) == 2
    with pytest.raises(LieDualError) as e:
        centroid_dim(so_n(4))
    assert e.value.code == ErrorCode.NOT_SIMPLE_SUMMAND

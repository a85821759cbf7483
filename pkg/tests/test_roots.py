#!/usr/bin/env pytest
# -*- coding: utf-8 -*-

import pytest
from sympy import QQ

from liedual.catalog import fixture, sl_n_r
from liedual.exact import equal
from liedual.exceptions import ErrorCode, LieDualError
from liedual.invol import Involution
from liedual.roots import (
    f_lambda,
    gamma_box,
    gamma_lattice,
    inner_product,
    is_in_gamma,
    maximal_abelian,
    negate,
    positive_system,
    restricted_roots,
    root_pairing,
    st_basis,
)


@pytest.fixture
def so4_roots():
    t = fixture("so4-IJ")
    return restricted_roots(t.g, t.theta1)


def test_maximal_abelian_so4():
    t = fixture("so4-IJ")
    a1 = maximal_abelian(t.g, t.theta1)
    assert a1.dim == 2
    # E_02 - E_20 and E_13 - E_31.
    assert [v.to_list() for v in a1.vectors()] == [
        [[0], [1], [0], [0], [0], [0]],
        [[0], [0], [0], [0], [1], [0]],
    ]


def test_restricted_roots_so4(so4_roots):
    rd = so4_roots
    assert rd.rank == 2
    assert len(rd.roots) == 4
    assert all(rd.mult[lam] == 1 for lam in rd.roots)
    assert rd.zk.dim == 0
    assert len(rd.positive_roots()) == 2
    for lam in rd.roots:
        assert negate(lam) in rd.roots
        assert all(abs(m) == 1 for m in rd.pairings[lam])
        assert inner_product(rd, lam, lam) == QQ(1, 2)


def test_restricted_roots_so5():
    t = fixture("so5-I23")
    rd = restricted_roots(t.g, t.theta1)
    assert rd.rank == 2
    assert len(rd.roots) == 8
    assert rd.zk.dim == 0
    assert sorted(set(inner_product(rd, lam, lam) for lam in rd.roots)) == [QQ(1, 6), QQ(1, 3)]


def test_root_pairing(so4_roots):
    rd = so4_roots
    (pos, neg, zero) = positive_system(rd, [1, 0])
    assert (len(pos), len(neg), len(zero)) == (2, 2, 0)
    (pos, neg, zero) = positive_system(rd, [1, 1])
    assert (len(pos), len(neg), len(zero)) == (1, 1, 2)
    for lam in pos:
        assert negate(lam) in neg
    with pytest.raises(LieDualError) as e:
        root_pairing(rd, (QQ(1), QQ(1)), [1, 0])
    assert e.value.code == ErrorCode.NOT_IN_V


def test_st_basis(so4_roots):
    rd = so4_roots
    for lam in rd.positive_roots():
        (s, t) = st_basis(rd, lam)
        assert len(s) == len(t) == rd.mult[lam]
        (k_part, p_part) = rd.v_spaces[lam]
        assert all(k_part.contains(v) for v in s)
        assert all(p_part.contains(v) for v in t)
        # f_lambda squares to -1 on V(lambda).
        assert equal(f_lambda(rd, lam, t[0]), s[0] * QQ(-1))


def test_f_lambda_outside_root_space(so4_roots):
    rd = so4_roots
    lam = rd.positive_roots()[0]
    with pytest.raises(LieDualError) as e:
        f_lambda(rd, lam, rd.a1.vectors()[0])
    assert e.value.code == ErrorCode.NOT_IN_V


def test_gamma_lattice(so4_roots):
    rd = so4_roots
    basis = gamma_lattice(rd)
    assert len(basis) == 2
    assert all(is_in_gamma(rd, v) for v in basis)
    assert is_in_gamma(rd, [QQ(1, 2), QQ(1, 2)])
    assert not is_in_gamma(rd, [QQ(1, 2), QQ(0)])
    box = gamma_box(rd, 1)
    assert len(box) == 9
    assert all(row == [0] for row in box[0].to_list())


def test_requires_compact():
    g = sl_n_r(2)
    with pytest.raises(LieDualError) as e:
        restricted_roots(g, Involution.identity(g))
    assert e.value.code == ErrorCode.NOT_COMPACT

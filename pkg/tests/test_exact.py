#!/usr/bin/env pytest
# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ, QQ_I

from liedual.exact import (
    check_dim,
    column,
    diagonal,
    eigenspaces,
    equal,
    gaussian_eigenvalues,
    gram,
    gram_schmidt,
    identity,
    intersect,
    inverse,
    kernel,
    matmul,
    matrix,
    max_dim,
    rank,
    rational_sqrt,
    solve,
    span_basis,
    sum_spaces,
    symmetric_signature,
    unit,
)
from liedual.exceptions import EXIT_MALFORMED, EXIT_UNSUPPORTED, ErrorCode, LieDualError

small_integers = st.integers(min_value=-10, max_value=10)


def test_max_dim(monkeypatch):
    monkeypatch.delenv("LIEDUAL_MAX_DIM", raising=False)
    assert max_dim() == 64
    monkeypatch.setenv("LIEDUAL_MAX_DIM", "5")
    assert max_dim() == 5
    check_dim(5)
    with pytest.raises(LieDualError) as e:
        check_dim(6)
    assert e.value.code == ErrorCode.TOO_LARGE
    assert e.value.exit_code == EXIT_UNSUPPORTED
    monkeypatch.setenv("LIEDUAL_MAX_DIM", "many")
    with pytest.raises(LieDualError) as e:
        max_dim()
    assert e.value.code == ErrorCode.BAD_PARAMS
    assert e.value.exit_code == EXIT_MALFORMED


def test_kernel_and_rank():
    m = matrix([[1, 2, 3], [2, 4, 6]])
    assert rank(m) == 1
    vectors = kernel(m)
    assert len(vectors) == 2
    for v in vectors:
        assert all(a == 0 for row in matmul(m, v).to_list() for a in row)


def test_span_basis_is_canonical():
    a = matrix([[1, 0], [0, 1], [1, 1]])
    b = matrix([[1, 1], [1, 0], [2, 1]])
    assert equal(span_basis(a), span_basis(b))
    assert span_basis(a).shape == (3, 2)


def test_intersect_and_sum():
    a = matrix([[1, 0], [0, 1], [0, 0]])
    b = matrix([[0, 0], [1, 0], [0, 1]])
    assert equal(intersect(a, b), span_basis(column([0, 1, 0])))
    assert sum_spaces(a, b).shape == (3, 3)


def test_solve():
    a = matrix([[1, 1], [0, 2]])
    x = solve(a, column([3, 4]))
    assert equal(x, column([1, 2]))
    assert solve(matrix([[1], [1]]), column([1, 0])) is None


def test_inverse():
    a = matrix([[2, 1], [1, 1]])
    assert equal(matmul(a, inverse(a)), identity(2))
    with pytest.raises(LieDualError):
        inverse(matrix([[1, 1], [1, 1]]))


def test_rational_sqrt():
    assert rational_sqrt(QQ(9, 4)) == QQ(3, 2)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-1) is None


def test_gaussian_eigenvalues():
    rotation = matrix([[0, -1], [1, 0]])
    assert gaussian_eigenvalues(rotation) == [(QQ_I(0, -1), 1), (QQ_I(0, 1), 1)]
    assert gaussian_eigenvalues(diagonal([2, 2, -1])) == [(QQ_I(-1, 0), 1), (QQ_I(2, 0), 2)]
    with pytest.raises(LieDualError) as e:
        gaussian_eigenvalues(matrix([[0, 2], [1, 0]]))
    assert e.value.code == ErrorCode.ROOT_NOT_GAUSSIAN


def test_eigenspaces():
    es = eigenspaces(diagonal([1, -1, 1]), [1, -1])
    assert es.full
    assert es.spaces[QQ(1)].shape == (3, 2)
    es = eigenspaces(matrix([[0, -1], [1, 0]]), [QQ_I(0, 1), QQ_I(0, -1)])
    assert es.full
    assert not eigenspaces(matrix([[0, -1], [1, 0]]), [1, -1]).full


def test_symmetric_signature():
    assert symmetric_signature(diagonal([1, -2, 0])) == (1, 1, 1)
    # No diagonal pivot: the hyperbolic plane.
    assert symmetric_signature(matrix([[0, 1], [1, 0]])) == (1, 1, 0)
    with pytest.raises(LieDualError) as e:
        symmetric_signature(matrix([[0, 1], [0, 0]]))
    assert e.value.code == ErrorCode.NON_SYMMETRIC


@settings(max_examples=25, deadline=None)
@given(st.lists(small_integers, min_size=3, max_size=3))
def test_signature_of_diagonal_forms(values):
    sig = symmetric_signature(diagonal(values))
    assert sig.n_pos == sum(1 for a in values if a > 0)
    assert sig.n_neg == sum(1 for a in values if a < 0)
    assert sig.n_zero == sum(1 for a in values if a == 0)


def test_gram_schmidt():
    form = identity(3)
    basis = matrix([[1, 1], [1, 0], [0, 1]])
    ortho = gram_schmidt(basis, form)
    g = gram(form, ortho)
    assert g.to_list()[0][1] == 0
    assert equal(span_basis(ortho), span_basis(basis))


def test_unit():
    assert equal(unit(3, 1), column([0, 1, 0]))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(small_integers, min_size=4, max_size=4), min_size=3, max_size=3))
def test_kernel_of_random_matrices(rows):
    m = matrix(rows)
    vectors = kernel(m)
    assert len(vectors) + rank(m) == 4
    for v in vectors:
        assert all(a == 0 for row in matmul(m, v).to_list() for a in row)


@settings(max_examples=25, deadline=None)
@given(st.lists(small_integers, min_size=3, max_size=3), st.lists(small_integers, min_size=3, max_size=3))
def test_signature_is_a_congruence_invariant(values, lower):
    p = matrix([[1, 0, 0], [lower[0], 1, 0], [lower[1], lower[2], 1]])
    d = diagonal(values)
    form = matmul(matmul(p.transpose(), d), p)
    assert symmetric_signature(form) == symmetric_signature(d)

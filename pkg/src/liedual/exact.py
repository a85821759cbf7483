#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exact linear algebra over ``QQ`` and ``QQ_I`` built on sympy's
:py:class:`DomainMatrix`.

Conventions:

- every matrix handled by :py:mod:`liedual` is a dense
  :py:class:`DomainMatrix`;
- a vector is a ``(n, 1)`` matrix;
- a *basis* of a subspace of ``K^n`` is a ``(n, k)`` matrix whose columns
  are linearly independent. :py:func:`span_basis` returns the canonical
  (reduced column echelon) basis of a span, so that two equal subspaces
  always get bitwise equal bases.
"""

import logging
import os
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from sympy import QQ, QQ_I, integer_nthroot
from sympy.polys.matrices import DomainMatrix

from .exceptions import ErrorCode, LieDualError, require

logger = logging.getLogger(__name__)

DEFAULT_MAX_DIM = 64


def max_dim() -> int:
    """
    Returns:
        The largest algebra dimension accepted, read from the
        ``LIEDUAL_MAX_DIM`` environment variable (default: 64).
    """
    value = os.environ.get("LIEDUAL_MAX_DIM", str(DEFAULT_MAX_DIM))
    try:
        return int(value)
    except ValueError:
        raise LieDualError(
            ErrorCode.BAD_PARAMS,
            f"LIEDUAL_MAX_DIM must be an integer, got {value!r}"
        )


def check_dim(n: int):
    """
    Raises a ``TOO_LARGE`` :py:class:`LieDualError` if ``n`` exceeds
    :py:func:`max_dim`.
    """
    limit = max_dim()
    require(n <= limit, ErrorCode.TOO_LARGE, f"dimension {n} exceeds LIEDUAL_MAX_DIM={limit}")


class Signature(NamedTuple):
    n_pos: int
    n_neg: int
    n_zero: int


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def matrix(rows: list, domain=QQ, shape: Tuple[int, int] = None) -> DomainMatrix:
    """
    Builds a dense :py:class:`DomainMatrix`.

    Args:
        rows (list): A list of rows. Entries are converted to ``domain``.
        domain: ``QQ`` (default) or ``QQ_I``.
        shape (tuple): The shape, only needed when ``rows`` is empty.

    Returns:
        The corresponding :py:class:`DomainMatrix`.
    """
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    converted = [[domain.convert(a) for a in row] for row in rows]
    return DomainMatrix(converted, shape, domain)


def zeros(m: int, n: int, domain=QQ) -> DomainMatrix:
    return DomainMatrix([[domain.zero] * n for _ in range(m)], (m, n), domain)


def identity(n: int, domain=QQ) -> DomainMatrix:
    return diagonal([domain.one] * n, domain)


def diagonal(values: list, domain=QQ) -> DomainMatrix:
    n = len(values)
    rows = [[domain.zero] * n for _ in range(n)]
    for (i, a) in enumerate(values):
        rows[i][i] = domain.convert(a)
    return DomainMatrix(rows, (n, n), domain)


def column(values: Iterable, domain=QQ) -> DomainMatrix:
    values = [domain.convert(a) for a in values]
    return DomainMatrix([[a] for a in values], (len(values), 1), domain)


def unit(n: int, i: int, domain=QQ) -> DomainMatrix:
    """
    Returns:
        The ``i``-th standard basis vector of ``domain^n``.
    """
    values = [domain.zero] * n
    values[i] = domain.one
    return column(values, domain)


def from_columns(vectors: List[DomainMatrix], n: int, domain=QQ) -> DomainMatrix:
    """
    Stacks column vectors side by side.

    Args:
        vectors (list): ``(n, 1)`` matrices.
        n (int): The ambient dimension (used when ``vectors`` is empty).
        domain: The domain of the result.

    Returns:
        The ``(n, len(vectors))`` matrix.
    """
    rows = [[domain.zero] * len(vectors) for _ in range(n)]
    for (j, v) in enumerate(vectors):
        for (i, a) in enumerate(entries(v)):
            rows[i][j] = domain.convert(a)
    return DomainMatrix(rows, (n, len(vectors)), domain)


def columns(m: DomainMatrix) -> List[DomainMatrix]:
    (n, k) = m.shape
    rows = m.to_list()
    return [
        DomainMatrix([[rows[i][j]] for i in range(n)], (n, 1), m.domain)
        for j in range(k)
    ]


def entries(v: DomainMatrix) -> list:
    """
    Returns:
        The entries of a column vector as a flat list.
    """
    return [row[0] for row in v.to_list()]


def hstack(*blocks: DomainMatrix) -> DomainMatrix:
    """
    Horizontal concatenation tolerating blocks without columns.
    """
    n = blocks[0].shape[0]
    domain = blocks[0].domain
    rows = [[] for _ in range(n)]
    for b in blocks:
        require(b.shape[0] == n, ErrorCode.DIM_MISMATCH, "hstack: row counts differ")
        for (i, row) in enumerate(b.to_list()):
            rows[i].extend(row)
    return DomainMatrix(rows, (n, sum(b.shape[1] for b in blocks)), domain)


def to_gaussian(m: DomainMatrix) -> DomainMatrix:
    if m.domain == QQ_I:
        return m
    return m.convert_to(QQ_I)


def real_part(m: DomainMatrix) -> DomainMatrix:
    if m.domain == QQ:
        return m
    return DomainMatrix([[a.x for a in row] for row in m.to_list()], m.shape, QQ)


def imag_part(m: DomainMatrix) -> DomainMatrix:
    if m.domain == QQ:
        return zeros(*m.shape)
    return DomainMatrix([[a.y for a in row] for row in m.to_list()], m.shape, QQ)


def conjugate(m: DomainMatrix) -> DomainMatrix:
    if m.domain == QQ:
        return m
    return DomainMatrix([[QQ_I(a.x, -a.y) for a in row] for row in m.to_list()], m.shape, QQ_I)


def is_real(m: DomainMatrix) -> bool:
    return m.domain == QQ or all(a.y == 0 for row in m.to_list() for a in row)


# ---------------------------------------------------------------------------
# Comparison and products
# ---------------------------------------------------------------------------

def equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    """
    Exact equality of two matrices, regardless of their internal format.
    ``QQ`` and ``QQ_I`` matrices are compared in ``QQ_I``.
    """
    if a.shape != b.shape:
        return False
    if a.domain != b.domain:
        (a, b) = (to_gaussian(a), to_gaussian(b))
    return a.to_list() == b.to_list()


def is_zero(m: DomainMatrix) -> bool:
    zero = m.domain.zero
    return all(a == zero for row in m.to_list() for a in row)


def matmul(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    """
    Matrix product tolerating empty inner or outer dimensions.
    """
    require(a.shape[1] == b.shape[0], ErrorCode.DIM_MISMATCH, f"cannot multiply {a.shape} by {b.shape}")
    if a.domain != b.domain:
        (a, b) = (to_gaussian(a), to_gaussian(b))
    if 0 in (a.shape[0], a.shape[1], b.shape[1]):
        return zeros(a.shape[0], b.shape[1], a.domain)
    return (a * b).to_dense()


def commutator(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    return (matmul(a, b) - matmul(b, a)).to_dense()


def trace(m: DomainMatrix):
    rows = m.to_list()
    total = m.domain.zero
    for i in range(m.shape[0]):
        total += rows[i][i]
    return total


# ---------------------------------------------------------------------------
# Echelon forms, kernels and subspaces
# ---------------------------------------------------------------------------

def rref(m: DomainMatrix) -> Tuple[list, list]:
    """
    Reduced row echelon form over a field.

    Returns:
        A pair ``(rows, pivots)`` where ``rows`` is the reduced matrix as a
        list of lists and ``pivots`` the list of pivot column indices.
    """
    (nrows, ncols) = m.shape
    if nrows == 0 or ncols == 0:
        return ([list(row) for row in m.to_list()], [])
    (r, pivots) = m.to_dense().rref()
    return (r.to_dense().to_list(), list(pivots))


def rank(m: DomainMatrix) -> int:
    return len(rref(m)[1])


def kernel(m: DomainMatrix) -> List[DomainMatrix]:
    """
    Computes a basis of the kernel of a matrix.

    The basis is deterministic: one vector per non-pivot column ``j`` of the
    reduced row echelon form, with coordinate ``1`` at ``j``.

    Args:
        m (DomainMatrix): A ``(r, n)`` matrix.

    Returns:
        The list of ``(n, 1)`` kernel vectors, ordered by free column.
    """
    (_, n) = m.shape
    domain = m.domain
    (rows, pivots) = rref(m)
    pivot_set = set(pivots)
    result = []
    for j in range(n):
        if j in pivot_set:
            continue
        values = [domain.zero] * n
        values[j] = domain.one
        for (i, p) in enumerate(pivots):
            values[p] = -rows[i][j]
        result.append(column(values, domain))
    return result


def kernel_basis(m: DomainMatrix) -> DomainMatrix:
    return from_columns(kernel(m), m.shape[1], m.domain)


def span_basis(m: DomainMatrix) -> DomainMatrix:
    """
    Canonical basis of the column span of a matrix.

    Args:
        m (DomainMatrix): A ``(n, k)`` matrix whose columns span a subspace.

    Returns:
        The ``(n, r)`` matrix whose columns are the nonzero rows of the
        reduced row echelon form of ``m^T``.
    """
    (n, k) = m.shape
    if k == 0 or n == 0:
        return zeros(n, 0, m.domain)
    (rows, pivots) = rref(m.transpose())
    return DomainMatrix(
        [[rows[i][r] for i in range(len(pivots))] for r in range(n)],
        (n, len(pivots)),
        m.domain
    )


def coordinates(basis: DomainMatrix, v: DomainMatrix) -> Optional[DomainMatrix]:
    """
    Expresses a vector in a basis.

    Args:
        basis (DomainMatrix): A ``(n, k)`` matrix of full column rank.
        v (DomainMatrix): A ``(n, 1)`` vector.

    Returns:
        The ``(k, 1)`` coordinates ``c`` such that ``basis * c == v``,
        or ``None`` if ``v`` is not in the span of ``basis``.
    """
    return solve(basis, v)


def solve(a: DomainMatrix, b: DomainMatrix) -> Optional[DomainMatrix]:
    """
    Solves ``a * x == b`` exactly.

    Args:
        a (DomainMatrix): A ``(m, n)`` matrix.
        b (DomainMatrix): A ``(m, p)`` right-hand side.

    Returns:
        A ``(n, p)`` solution (free variables set to zero), or ``None`` if the
        system is inconsistent.
    """
    (m, n) = a.shape
    p = b.shape[1]
    if a.domain != b.domain:
        (a, b) = (to_gaussian(a), to_gaussian(b))
    domain = a.domain
    if m == 0:
        return zeros(n, p, domain)
    (rows, pivots) = rref(hstack(a, b))
    if any(pivot >= n for pivot in pivots):
        return None
    x = [[domain.zero] * p for _ in range(n)]
    for (i, pivot) in enumerate(pivots):
        for j in range(p):
            x[pivot][j] = rows[i][n + j]
    return DomainMatrix(x, (n, p), domain)


def in_span(basis: DomainMatrix, v: DomainMatrix) -> bool:
    return solve(basis, v) is not None


def contains(big: DomainMatrix, small: DomainMatrix) -> bool:
    """
    Returns:
        ``True`` iff the span of ``small`` is included in the span of ``big``.
    """
    if small.shape[1] == 0:
        return True
    return solve(big, small) is not None


def same_span(a: DomainMatrix, b: DomainMatrix) -> bool:
    return equal(span_basis(a), span_basis(b))


def sum_spaces(*bases: DomainMatrix) -> DomainMatrix:
    return span_basis(hstack(*bases))


def intersect(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    """
    Intersection of the spans of two bases.

    Returns:
        The canonical basis of ``span(a) ∩ span(b)``.
    """
    (n, ka) = a.shape
    if ka == 0 or b.shape[1] == 0:
        return zeros(n, 0, a.domain)
    vectors = []
    for c in kernel(hstack(a, -b)):
        coeffs = column(entries(c)[:ka], c.domain)
        vectors.append(matmul(a, coeffs))
    return span_basis(from_columns(vectors, n, a.domain))


def complement_basis(basis: DomainMatrix) -> DomainMatrix:
    """
    Returns:
        The standard basis vectors completing ``basis`` (non-pivot
        directions of its canonical form), as a ``(n, n - k)`` matrix.
    """
    n = basis.shape[0]
    pivots = set(rref(basis.transpose())[1]) if basis.shape[1] else set()
    return from_columns(
        [unit(n, j, basis.domain) for j in range(n) if j not in pivots],
        n, basis.domain
    )


def inverse(m: DomainMatrix) -> DomainMatrix:
    require(
        m.shape[0] == m.shape[1] and rank(m) == m.shape[0],
        ErrorCode.NOT_IN_SPAN,
        "matrix is not invertible"
    )
    if m.shape[0] == 0:
        return m
    return m.to_dense().inv().to_dense()


# ---------------------------------------------------------------------------
# Eigenspaces
# ---------------------------------------------------------------------------

class Eigenspaces(NamedTuple):
    spaces: Dict[object, DomainMatrix]  # eigenvalue -> basis of its eigenspace (nonempty only)
    full: bool                          # True iff the eigenspaces span the whole space


def eigenspaces(m: DomainMatrix, candidates: list) -> Eigenspaces:
    """
    Computes the eigenspaces of a square matrix for a list of candidate
    eigenvalues.

    Args:
        m (DomainMatrix): A square matrix over ``QQ`` or ``QQ_I``.
        candidates (list): Candidate eigenvalues. If one of them is not real,
            the computation happens over ``QQ_I``.

    Returns:
        The :py:class:`Eigenspaces` of ``m``. Candidates with a trivial
        eigenspace are absent from ``spaces``.
    """
    n = m.shape[0]
    require(m.shape == (n, n), ErrorCode.DIM_MISMATCH, "eigenspaces requires a square matrix")
    domain = m.domain
    if any(hasattr(c, "y") for c in candidates):
        domain = QQ_I
        m = to_gaussian(m)
    spaces = {}
    total = 0
    for c in candidates:
        c = domain.convert(c)
        shifted = m - diagonal([c] * n, domain)
        basis = kernel_basis(shifted.to_dense())
        if basis.shape[1]:
            spaces[c] = basis
            total += basis.shape[1]
    return Eigenspaces(spaces, total == n)


def rational_sqrt(q) -> Optional[object]:
    """
    Returns:
        The nonnegative rational square root of ``q`` if ``q`` is the square
        of a rational number, ``None`` otherwise.
    """
    q = QQ.convert(q)
    if q < 0:
        return None
    (num, den) = (int(QQ.numer(q)), int(QQ.denom(q)))
    (rn, exact_n) = integer_nthroot(num, 2)
    (rd, exact_d) = integer_nthroot(den, 2)
    if exact_n and exact_d:
        return QQ(rn, rd)
    return None


def gaussian_eigenvalues(m: DomainMatrix) -> List[Tuple[object, int]]:
    """
    Computes the eigenvalues of a rational matrix, all of which must lie in
    ``QQ_I``.

    Args:
        m (DomainMatrix): A square matrix over ``QQ``.

    Raises:
        LieDualError: ``ROOT_NOT_GAUSSIAN`` if the characteristic polynomial
            has an irreducible factor whose roots are not Gaussian rationals.

    Returns:
        A list of pairs ``(eigenvalue, multiplicity)``, eigenvalues being
        ``QQ_I`` elements, sorted by (imaginary part, real part).
    """
    if m.shape[0] == 0:
        return []
    result = {}
    for (coeffs, mult) in m.to_dense().charpoly_factor_list():
        coeffs = [QQ.convert(c) for c in coeffs]
        if len(coeffs) == 2:
            (a, b) = coeffs
            roots = [QQ_I(-b / a, 0)]
        elif len(coeffs) == 3:
            (a, b, c) = coeffs
            disc = b * b - 4 * a * c
            s = rational_sqrt(-disc)
            if disc >= 0 or s is None:
                raise LieDualError(
                    ErrorCode.ROOT_NOT_GAUSSIAN,
                    f"characteristic factor {coeffs} has roots outside QQ(i)"
                )
            re = -b / (2 * a)
            im = s / (2 * a)
            roots = [QQ_I(re, im), QQ_I(re, -im)]
        else:
            raise LieDualError(
                ErrorCode.ROOT_NOT_GAUSSIAN,
                f"characteristic factor of degree {len(coeffs) - 1} is not supported"
            )
        for r in roots:
            result[r] = result.get(r, 0) + mult
    return sorted(result.items(), key=lambda item: (item[0].y, item[0].x))


# ---------------------------------------------------------------------------
# Symmetric forms
# ---------------------------------------------------------------------------

def is_symmetric(m: DomainMatrix) -> bool:
    return equal(m, m.transpose())


def symmetric_signature(form: DomainMatrix) -> Signature:
    """
    Computes the Sylvester signature of a symmetric rational form by exact
    congruence diagonalization.

    Args:
        form (DomainMatrix): A symmetric ``(n, n)`` matrix over ``QQ``.

    Raises:
        LieDualError: ``NON_SYMMETRIC`` if ``form`` is not symmetric.

    Returns:
        The :py:class:`Signature` ``(n_pos, n_neg, n_zero)``.
    """
    require(is_symmetric(form), ErrorCode.NON_SYMMETRIC, "the form is not symmetric")
    n = form.shape[0]
    a = [list(row) for row in real_part(form).to_list()]
    (n_pos, n_neg) = (0, 0)
    active = list(range(n))
    while active:
        pivot = next((i for i in active if a[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and a[i][j] != 0),
                None
            )
            if pair is None:
                break
            # Row/column operation e_i <- e_i + e_j makes a[i][i] = 2 a[i][j] != 0.
            (i, j) = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            pivot = i
        d = a[pivot][pivot]
        if d > 0:
            n_pos += 1
        else:
            n_neg += 1
        active.remove(pivot)
        for i in active:
            f = a[i][pivot] / d
            if f == 0:
                continue
            for k in range(n):
                a[i][k] -= f * a[pivot][k]
            for k in range(n):
                a[k][i] -= f * a[k][pivot]
    return Signature(n_pos, n_neg, n - n_pos - n_neg)


def bilinear(form: DomainMatrix, x: DomainMatrix, y: DomainMatrix):
    """
    Returns:
        The scalar ``x^T form y``.
    """
    if x.shape[0] == 0:
        return form.domain.zero
    return matmul(matmul(x.transpose(), form), y).to_list()[0][0]


def gram(form: DomainMatrix, basis: DomainMatrix) -> DomainMatrix:
    """
    Returns:
        The Gram matrix ``basis^T form basis``.
    """
    return matmul(matmul(basis.transpose(), form), basis)


def gram_schmidt(basis: DomainMatrix, form: DomainMatrix) -> DomainMatrix:
    """
    Orthogonalizes a basis with respect to a definite form, without
    normalization (no square roots).

    Args:
        basis (DomainMatrix): A ``(n, k)`` basis.
        form (DomainMatrix): A definite symmetric ``(n, n)`` form.

    Returns:
        A ``(n, k)`` basis, pairwise orthogonal, spanning the same subspace
        and such that the ``i``-th vector only involves the ``i`` first ones.
    """
    done = []
    for v in columns(basis):
        w = v
        for u in done:
            w = w - u * (bilinear(form, v, u) / bilinear(form, u, u))
        done.append(w.to_dense())
    return from_columns(done, basis.shape[0], basis.domain)

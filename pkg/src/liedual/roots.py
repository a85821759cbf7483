#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Restricted roots of a compact symmetric pair ``(g, theta1)``.

For a maximal abelian subspace ``a1`` of ``p1``, every restricted root
``lambda`` satisfies ``(ad A)^2 X = -<lambda, A>^2 X`` on ``V(lambda)``,
where ``<x, y> = -B(x, y)``. The root spaces are computed over ``QQ`` as the
joint eigenspaces of the commuting operators ``(ad A)^2``, ``A`` running
over the basis of ``a1`` and the sums of two basis vectors (the latter fix
the relative signs of the pairings).
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from math import lcm
from typing import Dict, List, Tuple

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from .exact import (
    column,
    diagonal,
    entries,
    equal,
    from_columns,
    gaussian_eigenvalues,
    gram,
    gram_schmidt,
    identity,
    intersect,
    inverse,
    kernel_basis,
    matmul,
    rational_sqrt,
    solve,
)
from .exceptions import ErrorCode, LieDualError, require
from .invol import Involution, eigenspace
from .lie import LieAlgebra, Subspace, centralizer, is_compact

logger = logging.getLogger(__name__)

Root = Tuple  # Coordinates of a root in the basis of a1, as a tuple of QQ elements.


@dataclass
class RootDatum:
    g: LieAlgebra
    theta1: Involution
    a1: Subspace
    gram: DomainMatrix                      # <A_i, A_j> = -B(A_i, A_j) on the basis of a1
    roots: List[Root]                       # Both signs, sorted
    pairings: Dict[Root, Tuple]             # lambda -> (<lambda, A_1>, ..., <lambda, A_r>)
    mult: Dict[Root, int]                   # d_lambda, for every root
    v_spaces: Dict[Root, Tuple[Subspace, Subspace]] = field(default_factory=dict)  # Positive root -> (k1(lambda), p1(lambda))
    zk: Subspace = None                     # Centralizer of a1 in k1
    metadata: Dict[str, object] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return self.a1.dim

    def positive_roots(self) -> List[Root]:
        return sorted(self.v_spaces)

    def representative(self, lam: Root) -> Root:
        """
        Returns:
            The root among ``lam`` and ``-lam`` indexing ``v_spaces``.
        """
        require(lam in self.pairings, ErrorCode.NOT_IN_V, f"{_show(lam)} is not a restricted root")
        return lam if lam in self.v_spaces else negate(lam)

    def v_space(self, lam: Root) -> Subspace:
        (k, p) = self.v_spaces[self.representative(lam)]
        return Subspace(self.g, from_columns(k.vectors() + p.vectors(), self.g.dim))

    def element(self, v) -> DomainMatrix:
        """
        Returns:
            The vector of ``g`` with coordinates ``v`` in the basis of
            ``a1``.
        """
        return matmul(self.a1.basis, _as_column(v))


def negate(lam: Root) -> Root:
    return tuple(-a for a in lam)


def _show(lam: Root) -> str:
    return "(" + ", ".join(str(a) for a in lam) + ")"


def _as_column(v) -> DomainMatrix:
    if isinstance(v, DomainMatrix):
        return v
    return column(v)


# ---------------------------------------------------------------------------
# Maximal abelian subspace
# ---------------------------------------------------------------------------

def maximal_abelian(g: LieAlgebra, theta1: Involution) -> Subspace:
    """
    Greedily builds a maximal abelian subspace of ``p1``.

    Starting from the first canonical basis vector of ``p1``, the current
    subspace is extended by the first canonical basis vector of its
    centralizer in ``p1`` that it does not contain yet.

    Returns:
        The :py:class:`Subspace` ``a1``, equal to its centralizer in ``p1``.
    """
    p1 = eigenspace(theta1, -1)
    if p1.dim == 0:
        return p1
    current = [p1.vectors()[0]]
    while True:
        a = Subspace.span(g, current)
        c = centralizer(g, a, within=p1)
        extra = [v for v in c.vectors() if not a.contains(v)]
        if not extra:
            logger.debug("maximal abelian subspace of dimension %d in p1 of dimension %d", a.dim, p1.dim)
            return a
        current.append(extra[0])


# ---------------------------------------------------------------------------
# Restricted roots
# ---------------------------------------------------------------------------

def _square_root(mu, where: str):
    # mu = -m^2 must hold with m rational.
    s = rational_sqrt(-mu)
    if s is None:
        raise LieDualError(ErrorCode.ROOT_NOT_GAUSSIAN, f"eigenvalue {mu} of {where} is not minus a rational square")
    return s


def _joint_spaces(g: LieAlgebra, ops: List[DomainMatrix]) -> Dict[tuple, DomainMatrix]:
    spaces = {(): identity(g.dim)}
    for op in ops:
        refined = dict()
        for (tag, w) in spaces.items():
            restricted = solve(w, matmul(op, w))
            require(restricted is not None, ErrorCode.NOT_IN_SPAN, "root space is not stable")
            for (mu, _) in gaussian_eigenvalues(restricted):
                if mu.y != 0:
                    raise LieDualError(ErrorCode.ROOT_NOT_GAUSSIAN, f"(ad A)^2 has the non real eigenvalue {mu}")
                shift = (restricted - diagonal([mu.x] * w.shape[1])).to_dense()
                refined[tag + (mu.x,)] = matmul(w, kernel_basis(shift))
        spaces = refined
    return spaces


def restricted_roots(g: LieAlgebra, theta1: Involution, a1: Subspace = None) -> RootDatum:
    """
    Computes the restricted root datum of ``(g, theta1)``.

    Args:
        g (LieAlgebra): A compact semisimple Lie algebra.
        theta1 (Involution): An involution of ``g``.
        a1 (Subspace): A maximal abelian subspace of ``p1`` (default:
            :py:func:`maximal_abelian`).

    Raises:
        LieDualError: ``ROOT_NOT_GAUSSIAN`` if some ``ad A`` has eigenvalues
            outside ``i QQ``, ``NOT_COMPACT`` if ``g`` is not compact.

    Returns:
        The :py:class:`RootDatum`.
    """
    require(is_compact(g), ErrorCode.NOT_COMPACT, f"{g!r} is not compact")
    if a1 is None:
        a1 = maximal_abelian(g, theta1)
    r = a1.dim
    basis = a1.vectors()
    form = -g.killing_form()
    gram_a = gram(form, a1.basis)
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    ops = [g.ad_vector(a) for a in basis]
    ops += [g.ad_vector((basis[i] + basis[j]).to_dense()) for (i, j) in pairs]
    spaces = _joint_spaces(g, [matmul(a, a) for a in ops])

    (k1, p1) = (eigenspace(theta1, 1), eigenspace(theta1, -1))
    pairings = dict()
    mult = dict()
    v_spaces = dict()
    zero_space = None
    gram_inv = inverse(gram_a) if r else gram_a
    for (tag, w) in sorted(spaces.items(), key=lambda item: item[0]):
        squares = [-mu for mu in tag[:r]]
        if all(s == 0 for s in squares):
            zero_space = Subspace(g, w)
            continue
        m = [_square_root(mu, f"(ad A_{i})^2") for (i, mu) in enumerate(tag[:r])]
        first = next(i for i in range(r) if m[i] != 0)
        for (index, (i, j)) in enumerate(pairs):
            if i != first or m[j] == 0:
                continue
            # m_i m_j = ((m_i + m_j)^2 - m_i^2 - m_j^2) / 2
            cross = (-tag[r + index] - squares[i] - squares[j]) / 2
            if cross < 0:
                m[j] = -m[j]
        lam = tuple(entries(matmul(gram_inv, column(m))))
        space = Subspace(g, w)
        k_part = Subspace(g, intersect(space.basis, k1.basis))
        p_part = Subspace(g, intersect(space.basis, p1.basis))
        require(
            k_part.dim == p_part.dim and 2 * k_part.dim == space.dim,
            ErrorCode.ROOT_NOT_GAUSSIAN,
            f"root space of {_show(lam)} does not split evenly between k1 and p1"
        )
        v_spaces[lam] = (k_part, p_part)
        for (sign, root) in ((1, lam), (-1, negate(lam))):
            pairings[root] = tuple(sign * a for a in m)
            mult[root] = k_part.dim
    require(zero_space is not None, ErrorCode.NOT_IN_SPAN, "a1 has no centralizer")
    zk = Subspace(g, intersect(zero_space.basis, k1.basis))
    rd = RootDatum(
        g=g,
        theta1=theta1,
        a1=a1,
        gram=gram_a,
        roots=sorted(pairings),
        pairings=pairings,
        mult=mult,
        v_spaces=v_spaces,
        zk=zk,
        metadata={"a1": "greedy canonical basis choice", "inner_product": "-Killing"},
    )
    check_root_datum(rd)
    logger.debug("%r: %d restricted roots on a1 of dimension %d", g, len(rd.roots), r)
    return rd


def check_root_datum(rd: RootDatum):
    """
    Verifies the decomposition ``g = zk + a1 + sum V(lambda)`` and the
    eigenvalue relation on every root space.

    Raises:
        LieDualError: ``NOT_IN_V`` if a check fails.
    """
    g = rd.g
    total = rd.zk.dim + rd.a1.dim + sum(2 * rd.mult[lam] for lam in rd.v_spaces)
    require(total == g.dim, ErrorCode.NOT_IN_V, f"root decomposition covers {total} of {g.dim} dimensions")
    basis = rd.a1.vectors()
    for lam in rd.v_spaces:
        w = rd.v_space(lam).basis
        for (i, a) in enumerate(basis):
            ad_a = g.ad_vector(a)
            m = rd.pairings[lam][i]
            require(
                equal(matmul(ad_a, matmul(ad_a, w)), w * (-m * m)),
                ErrorCode.NOT_IN_V,
                f"(ad A_{i})^2 is not -<lambda, A_{i}>^2 on V{_show(lam)}"
            )
    for z in rd.zk.vectors() + rd.a1.vectors():
        for a in basis:
            require(equal(matmul(g.ad_vector(a), z), column([QQ.zero] * g.dim)), ErrorCode.NOT_IN_V, "zk + a1 does not centralize a1")


def inner_product(rd: RootDatum, x, y):
    """
    Returns:
        ``<x, y> = -B(x, y)`` for two vectors given by their coordinates in
        the basis of ``a1``.
    """
    return matmul(matmul(_as_column(x).transpose(), rd.gram), _as_column(y)).to_list()[0][0]


def root_pairing(rd: RootDatum, lam: Root, v) -> object:
    """
    Returns:
        ``<lambda, v>`` for ``v`` given by its coordinates in ``a1``.
    """
    require(lam in rd.pairings, ErrorCode.NOT_IN_V, f"{_show(lam)} is not a restricted root")
    return sum((a * b for (a, b) in zip(rd.pairings[lam], entries(_as_column(v)))), QQ.zero)


def positive_system(rd: RootDatum, v) -> Tuple[List[Root], List[Root], List[Root]]:
    """
    Splits the roots according to the sign of their pairing with ``v``.

    Returns:
        The triple ``(positive, negative, zero)``.
    """
    (pos, neg, zero) = ([], [], [])
    for lam in rd.roots:
        value = root_pairing(rd, lam, v)
        (pos if value > 0 else neg if value < 0 else zero).append(lam)
    return (pos, neg, zero)


# ---------------------------------------------------------------------------
# The maps f_lambda
# ---------------------------------------------------------------------------

def f_lambda(rd: RootDatum, lam: Root, x: DomainMatrix) -> DomainMatrix:
    """
    Computes ``f_lambda(X) = <lambda, lambda>^{-1} (ad lambda)(X)``.

    Args:
        rd (RootDatum): The root datum.
        lam (tuple): A restricted root.
        x (DomainMatrix): A vector of ``V(lambda)``.

    Raises:
        LieDualError: ``NOT_IN_V`` if ``x`` is not in ``V(lambda)``.

    Returns:
        The image, which lies in ``V(lambda)``.
    """
    require(rd.v_space(lam).contains(x), ErrorCode.NOT_IN_V, f"vector is not in V{_show(lam)}")
    norm = inner_product(rd, lam, lam)
    return matmul(rd.g.ad_vector(rd.element(lam)), x) * (QQ.one / norm)


def st_basis(rd: RootDatum, lam: Root) -> Tuple[List[DomainMatrix], List[DomainMatrix]]:
    """
    Builds the bases ``S`` of ``k1(lambda)`` and ``T = f_lambda(S)`` of
    ``p1(lambda)``.

    ``S`` is orthogonal for ``-B`` but not normalized. The relations
    ``(ad A) S_i = <lambda, A> T_i`` and ``(ad A) T_i = -<lambda, A> S_i`` are
    checked for every basis vector ``A`` of ``a1``.

    Raises:
        LieDualError: ``NOT_IN_V`` if a relation fails.

    Returns:
        The pair ``(S, T)``.
    """
    g = rd.g
    (k_part, _) = rd.v_spaces[rd.representative(lam)]
    s = gram_schmidt(k_part.basis, -g.killing_form())
    s_vectors = [column(row) for row in zip(*s.to_list())] if s.shape[1] else []
    t_vectors = [f_lambda(rd, lam, v) for v in s_vectors]
    for (i, a) in enumerate(rd.a1.vectors()):
        ad_a = g.ad_vector(a)
        m = root_pairing(rd, lam, column([QQ.one if k == i else QQ.zero for k in range(rd.rank)]))
        for (sv, tv) in zip(s_vectors, t_vectors):
            require(equal(matmul(ad_a, sv), tv * m), ErrorCode.NOT_IN_V, "(ad A) S != <lambda, A> T")
            require(equal(matmul(ad_a, tv), sv * (-m)), ErrorCode.NOT_IN_V, "(ad A) T != -<lambda, A> S")
    return (s_vectors, t_vectors)


# ---------------------------------------------------------------------------
# Gamma lattice
# ---------------------------------------------------------------------------

def is_in_gamma(rd: RootDatum, v) -> bool:
    return all(QQ.denom(root_pairing(rd, lam, v)) == 1 for lam in rd.roots)


def gamma_lattice(rd: RootDatum) -> List[DomainMatrix]:
    """
    Computes a basis of ``{v : <lambda, v> in ZZ for every root}``, the
    lattice parametrizing ``Gamma`` (the element ``Z1`` of ``a1`` is
    ``(pi / 2) v``).

    The pairing vectors of the roots span a lattice ``L``; its basis is
    obtained from the Hermite normal form of the (scaled) pairings and the
    result is the dual basis.

    Returns:
        The basis vectors, as ``(r, 1)`` columns in ``a1`` coordinates.
    """
    r = rd.rank
    if r == 0 or not rd.roots:
        return []
    vectors = [rd.pairings[lam] for lam in rd.positive_roots()]
    denominator = 1
    for vec in vectors:
        for a in vec:
            d = int(QQ.denom(a))
            denominator = lcm(denominator, d)
    scaled = DomainMatrix(
        [[ZZ(int(QQ.numer(vec[i] * denominator))) for vec in vectors] for i in range(r)],
        (r, len(vectors)),
        ZZ
    )
    hnf = hermite_normal_form(scaled).to_dense()
    require(hnf.shape == (r, r), ErrorCode.NOT_IN_GAMMA, "roots do not span the dual of a1")
    lattice = hnf.convert_to(QQ) * (QQ.one / denominator)
    dual = inverse(lattice.transpose().to_dense())
    basis = [column(row) for row in zip(*dual.to_list())]
    for v in basis:
        require(is_in_gamma(rd, v), ErrorCode.NOT_IN_GAMMA, "dual basis vector fails the integrality check")
    return basis


def gamma_box(rd: RootDatum, bound: int) -> List[DomainMatrix]:
    """
    Returns:
        The lattice vectors ``sum c_i v_i`` with ``|c_i| <= bound``, sorted
        by (max norm of the coefficients, coefficients).
    """
    basis = gamma_lattice(rd)
    result = []
    for coeffs in sorted(product(range(-bound, bound + 1), repeat=len(basis)), key=lambda c: (max((abs(a) for a in c), default=0), c)):
        v = column([QQ.zero] * rd.rank)
        for (c, b) in zip(coeffs, basis):
            v = (v + b * QQ(c)).to_dense()
        result.append(v)
    return result

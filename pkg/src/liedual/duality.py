#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Duality between commutative compact symmetric triads and non-compact
symmetric pairs equipped with a Cartan involution.

Every construction is a *twist*: given an involution ``tau`` with
eigenspaces ``g = g^tau + g^{-tau}``, the real form ``g^tau + i g^{-tau}``
is realized on the basis ``(X_plus, i X_minus)`` where brackets of two
``-1`` vectors change sign (``[iX, iY] = -[X, Y]``). No complex number is
ever materialized except in ambient matrices.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import List, Tuple

from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from .exact import (
    equal,
    hstack,
    identity,
    inverse,
    matmul,
    solve,
    symmetric_signature,
)
from .exceptions import ErrorCode, require
from .invol import (
    CompactTriad,
    Involution,
    NoncompactPairC,
    center_location,
    eigensplit,
    eigenspace,
    fixed_view,
    is_cartan,
    joint_split,
)
from .lie import (
    LieAlgebra,
    Subspace,
    center,
    is_compact,
    killing_signature,
    transform,
    verify_homomorphism,
)

logger = logging.getLogger(__name__)

DEGENERATE_IDENTITY = "DEGENERATE_IDENTITY"


@dataclass
class TwistResult:
    algebra: LieAlgebra
    carried: List[Involution]   # The carried involutions, in adapted coordinates.
    basis_record: DomainMatrix  # Columns: the adapted basis in the input coordinates.
    tau: Involution             # The twisting involution, now diag(+I, -I).
    n_plus: int                 # Size of the +1 block.


def adapted_basis(tau: Involution) -> Tuple[DomainMatrix, int]:
    """
    Returns:
        The pair ``(P, k)`` where ``P = [plus | minus]`` stacks the canonical
        bases of the eigenspaces of ``tau`` and ``k`` is the size of the +1
        block.
    """
    (plus, minus) = eigensplit(tau)
    return (hstack(plus.basis, minus.basis), plus.dim)


def _carry(inv: Involution, g: LieAlgebra, p: DomainMatrix, p_inv: DomainMatrix) -> Involution:
    return Involution(g, matmul(matmul(p_inv, inv.mat), p), inv.name, check=False)


def cartan_twist(g: LieAlgebra, tau: Involution, carried: List[Involution], name: str = None) -> TwistResult:
    """
    Builds the real form ``g^tau + i g^{-tau}``.

    Args:
        g (LieAlgebra): The Lie algebra.
        tau (Involution): The twisting involution.
        carried (list): Involutions commuting with ``tau``, re-expressed in
            the adapted basis of the result.
        name (str): The name of the resulting algebra.

    Raises:
        LieDualError: ``NOT_INVOLUTION`` if ``tau`` is not an involution,
            ``NOT_COMMUTING`` if a carried involution does not commute with it.

    Returns:
        The :py:class:`TwistResult`.
    """
    n = g.dim
    require(equal(matmul(tau.mat, tau.mat), identity(n)), ErrorCode.NOT_INVOLUTION, f"{tau.name} is not an involution")
    for inv in carried:
        require(tau.commutes_with(inv), ErrorCode.NOT_COMMUTING, f"{inv.name} does not commute with {tau.name}")
    (p, k) = adapted_basis(tau)
    p_inv = inverse(p)
    adapted = transform(g, p)
    sc = {
        (i, j, c): (-v if i >= k and j >= k else v)
        for ((i, j, c), v) in adapted.sc.items()
    }
    ambient = None
    if adapted.ambient is not None:
        unit_i = QQ_I(0, 1)
        ambient = [a * unit_i if j >= k else a for (j, a) in enumerate(adapted.ambient)]
    twisted = LieAlgebra(n, sc, ambient, name=name or _twisted_name(g, tau), check=False)
    result = TwistResult(
        algebra=twisted,
        carried=[_carry(inv, twisted, p, p_inv) for inv in carried],
        basis_record=p,
        tau=_carry(tau, twisted, p, p_inv),
        n_plus=k,
    )
    logger.debug("twisted %r by %s: blocks (%d, %d)", g, tau.name, k, n - k)
    return result


def _twisted_name(g: LieAlgebra, tau: Involution) -> str:
    return f"{g.name}^{tau.name}" if g.name else None


def phi(t: CompactTriad) -> NoncompactPairC:
    """
    Maps a commutative compact triad ``(g, theta1, theta2)`` to the pair
    ``(g0, sigma; theta)`` where ``g0 = k1 + i p1``, ``sigma = theta2`` and
    ``theta = theta1``.

    Raises:
        LieDualError: ``NOT_CARTAN`` if ``theta1`` does not become a Cartan
            involution (the input was not compact).

    Returns:
        The :py:class:`NoncompactPairC`, whose ``basis_record`` is the adapted
        basis of ``theta1``.
    """
    tw = cartan_twist(t.g, t.theta1, [t.theta1, t.theta2])
    (theta, sigma) = tw.carried
    (theta.name, sigma.name) = ("theta", "sigma")
    require(is_cartan(tw.algebra, theta), ErrorCode.NOT_CARTAN, "theta1 does not twist into a Cartan involution")
    pair = NoncompactPairC(tw.algebra, sigma, theta, t.metadata, check=False)
    pair.basis_record = tw.basis_record
    return pair


def psi(p: NoncompactPairC) -> CompactTriad:
    """
    Maps a pair ``(g0, sigma; theta)`` to the compact triad
    ``(g, theta1, theta2)`` where ``g = k0 + i p0``, ``theta1 = theta`` and
    ``theta2 = sigma``.

    Raises:
        LieDualError: ``NOT_COMPACT`` if the result is not compact.

    Returns:
        The :py:class:`CompactTriad`, whose ``basis_record`` is the adapted
        basis of ``theta``.
    """
    tw = cartan_twist(p.g0, p.theta, [p.theta, p.sigma])
    (theta1, theta2) = tw.carried
    (theta1.name, theta2.name) = ("theta1", "theta2")
    require(is_compact(tw.algebra), ErrorCode.NOT_COMPACT, "the twisted algebra is not compact")
    triad = CompactTriad(tw.algebra, theta1, theta2, p.metadata, check=False)
    triad.basis_record = tw.basis_record
    return triad


def _degenerate(obj, inv: Involution):
    if inv.is_identity():
        flags = list(obj.metadata.get("flags", []))
        if DEGENERATE_IDENTITY not in flags:
            flags.append(DEGENERATE_IDENTITY)
        obj.metadata["flags"] = flags
        logger.info("%r has an identity involution", obj)
    return obj


def associated_pair(p: NoncompactPairC) -> NoncompactPairC:
    """
    Returns:
        The associated pair ``(g0, theta sigma; theta)``, flagged
        ``DEGENERATE_IDENTITY`` in its metadata when ``theta sigma`` is the
        identity (Riemannian input).
    """
    sigma = p.theta.compose(p.sigma, "sigma")
    result = NoncompactPairC(p.g0, sigma, p.theta, _without_flags(p.metadata), check=False)
    return _degenerate(result, sigma)


def associated_triad(t: CompactTriad) -> CompactTriad:
    """
    Returns:
        The associated triad ``(g, theta1, theta1 theta2)``.
    """
    theta2 = t.theta1.compose(t.theta2, "theta2")
    result = CompactTriad(t.g, t.theta1, theta2, _without_flags(t.metadata), check=False)
    return _degenerate(result, theta2)


def dual_triad(t: CompactTriad) -> CompactTriad:
    """
    Returns:
        The dual triad ``(g, theta2, theta1)``.
    """
    first = Involution(t.g, t.theta2.mat, "theta1", check=False)
    second = Involution(t.g, t.theta1.mat, "theta2", check=False)
    return CompactTriad(t.g, first, second, _without_flags(t.metadata), check=False)


def dual_pair(p: NoncompactPairC) -> NoncompactPairC:
    """
    Computes the dual pair of ``(g0, sigma; theta)``.

    The dual real form is ``k0∩h0 + i k0∩q0 + i p0∩h0 + p0∩q0``, i.e. the
    twist of ``g0`` by ``theta sigma``. On it ``sigma`` becomes the Cartan
    involution and ``theta`` the symmetric involution.

    Raises:
        LieDualError: ``NOT_CARTAN`` if ``sigma`` does not become a Cartan
            involution.

    Returns:
        The dual :py:class:`NoncompactPairC` ``(g0^d, theta; sigma)``.
    """
    tau = p.theta.compose(p.sigma, "theta*sigma")
    tw = cartan_twist(p.g0, tau, [p.sigma, p.theta])
    (new_theta, new_sigma) = tw.carried
    (new_theta.name, new_sigma.name) = ("theta", "sigma")
    require(is_cartan(tw.algebra, new_theta), ErrorCode.NOT_CARTAN, "sigma does not twist into a Cartan involution")
    result = NoncompactPairC(tw.algebra, new_sigma, new_theta, _without_flags(p.metadata), check=False)
    result.basis_record = tw.basis_record
    return result


def _without_flags(metadata: dict) -> dict:
    return {k: v for (k, v) in metadata.items() if k != "flags"}


# ---------------------------------------------------------------------------
# Normal forms
# ---------------------------------------------------------------------------

def change_basis(obj, p: DomainMatrix):
    """
    Rewrites a triad or a pair in a new basis.

    Args:
        obj (CompactTriad | NoncompactPairC): The object.
        p (DomainMatrix): Columns: the new basis in the old coordinates.

    Returns:
        An object of the same kind, with ``basis_record`` set to ``p``.
    """
    p_inv = inverse(p)
    g = transform(obj.algebra, p)
    (first, second) = obj.involutions
    result = obj.rebuild(g, _carry(first, g, p, p_inv), _carry(second, g, p, p_inv))
    result.basis_record = p
    return result


def normalize(obj):
    """
    Returns:
        The object rewritten in the adapted basis of its distinguished
        involution (``theta1`` for triads, ``theta`` for pairs), which then
        reads ``diag(+I, -I)``.
    """
    return change_basis(obj, adapted_basis(obj.involutions[0])[0])


def joint_basis(obj) -> Tuple[DomainMatrix, List[int]]:
    """
    Returns:
        The pair ``(P, sizes)`` where ``P`` stacks the canonical bases of the
        joint eigenspaces ``(+,+), (+,-), (-,+), (-,-)`` of the distinguished
        and the other involution, and ``sizes`` the four block sizes.
    """
    blocks = joint_split(*obj.involutions)
    return (hstack(*(s.basis for s in blocks)), [s.dim for s in blocks])


def joint_normalize(obj):
    """
    Returns:
        The object rewritten in :py:func:`joint_basis`, so that both
        involutions are diagonal.
    """
    return change_basis(obj, joint_basis(obj)[0])


def _block_of(index: int, sizes: List[int]) -> int:
    total = 0
    for (b, size) in enumerate(sizes):
        total += size
        if index < total:
            return b
    raise IndexError(index)


def align(obj):
    """
    Computes the canonical aligned form used for bitwise comparisons.

    The object is first put in joint normal form. Presentations that differ
    by a sign on whole joint blocks are then identified by choosing, among
    the 16 block sign patterns, the one whose structure constants are
    lexicographically smallest.

    Returns:
        An object of the same kind.
    """
    jn = joint_normalize(obj)
    (_, sizes) = joint_basis(jn)
    g = jn.algebra
    blocks = [_block_of(i, sizes) for i in range(g.dim)]
    best = None
    for signs in product((1, -1), repeat=4):
        key = tuple(sorted(
            (i, j, k, v * signs[blocks[i]] * signs[blocks[j]] * signs[blocks[k]])
            for ((i, j, k), v) in g.sc.items()
        ))
        if best is None or key < best[0]:
            best = (key, signs)
    signs = best[1]
    if all(s == 1 for s in signs):
        return jn
    diag = DomainMatrix(
        [[QQ(signs[blocks[i]]) if i == j else QQ.zero for j in range(g.dim)] for i in range(g.dim)],
        (g.dim, g.dim),
        QQ
    )
    return change_basis(jn, diag)


def same_object(a, b) -> bool:
    """
    Returns:
        ``True`` iff both objects are of the same kind, with bitwise equal
        structure constants and involution matrices.
    """
    return (
        a.kind == b.kind
        and a.algebra.same_structure(b.algebra)
        and all(equal(x.mat, y.mat) for (x, y) in zip(a.involutions, b.involutions))
    )


# ---------------------------------------------------------------------------
# Compatibility
# ---------------------------------------------------------------------------

@dataclass
class CompatibilityReport:
    associated: bool  # (x^a)* == (x*)^a
    dual: bool        # (x^d)* == (x*)^d

    @property
    def passed(self) -> bool:
        return self.associated and self.dual


def check_compatibility(t: CompactTriad) -> CompatibilityReport:
    """
    Checks that the duality commutes with the associated and dual
    constructions of a triad, as bitwise equalities of aligned forms.

    Returns:
        The :py:class:`CompatibilityReport`.
    """
    t = joint_normalize(t)
    associated = same_object(align(phi(associated_triad(t))), align(associated_pair(phi(t))))
    dual = same_object(align(phi(dual_triad(t))), align(dual_pair(phi(t))))
    return CompatibilityReport(associated, dual)


def check_pair_compatibility(p: NoncompactPairC) -> CompatibilityReport:
    """
    Pair version of :py:func:`check_compatibility`.

    Returns:
        The :py:class:`CompatibilityReport` comparing ``(p^a)*`` with
        ``(p*)^a`` and ``(p^d)*`` with ``(p*)^d``.
    """
    p = joint_normalize(p)
    associated = same_object(align(psi(associated_pair(p))), align(associated_triad(psi(p))))
    dual = same_object(align(psi(dual_pair(p))), align(dual_triad(psi(p))))
    return CompatibilityReport(associated, dual)


# ---------------------------------------------------------------------------
# Reductive fixed sets
# ---------------------------------------------------------------------------

@dataclass
class FixedDualReport:
    match: bool                # The twisted view is the fixed set of theta2 in psi(p).
    dim: int                   # Dimension of g0^sigma.
    center_dim: int            # Dimension of its center.
    center_location: str       # Location of its center w.r.t. theta ("k", "p", ...).
    compact_after: bool        # The Killing form of psi(p) is negative definite on the image.
    twisted_signature: tuple   # Killing signature of the twisted view.


def fixed_subalgebra_dual(p: NoncompactPairC) -> FixedDualReport:
    """
    Twists the reductive fixed set ``g0^sigma`` by ``theta`` and compares it
    with the fixed set ``g^theta2`` of the dual triad.

    Returns:
        The :py:class:`FixedDualReport`.
    """
    view = fixed_view(p.sigma)
    h = view.algebra
    theta_h = Involution(h, view.restrict(p.theta.mat), "theta", check=False)
    tw = cartan_twist(h, theta_h, [])
    t = psi(p)
    record_inv = inverse(t.basis_record)
    # Adapted basis of the view, first in g0 then in the coordinates of psi(p).
    images = matmul(record_inv, matmul(view.subspace.basis, tw.basis_record))
    target = eigenspace(t.theta2, 1)
    image_space = Subspace(t.g, images)
    match = (
        images.shape[1] == h.dim
        and image_space == target
        and verify_homomorphism(tw.algebra, t.g, images)
    )
    form = t.g.killing_form()
    restricted = matmul(matmul(target.basis.transpose(), form), target.basis)
    compact_after = target.dim == 0 or symmetric_signature(restricted).n_neg == target.dim
    z = center(h)
    return FixedDualReport(
        match=match,
        dim=h.dim,
        center_dim=z.dim,
        center_location=center_location(view, p.theta),
        compact_after=compact_after,
        twisted_signature=tuple(killing_signature(tw.algebra)) if tw.algebra.dim else (0, 0, 0),
    )


def ideal_image(p_record: DomainMatrix, s: Subspace, target: LieAlgebra) -> Subspace:
    """
    Returns:
        The subspace of ``target`` whose coordinates are
        ``P^{-1} basis(s)``, ``P`` being the basis record of a twist.
    """
    coords = solve(p_record, s.basis)
    require(coords is not None, ErrorCode.NOT_IN_SPAN, "basis record is not invertible")
    return Subspace(target, coords)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Effectiveness and the two irreducibility notions of a pair ``(g0, sigma)``:
no non-trivial ``sigma``-invariant ideal (N1), and irreducibility of the
adjoint action of ``h0 = g0^sigma`` on ``q0 = g0^{-sigma}`` (N2).
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from sympy.polys.matrices import DomainMatrix

from .exact import equal, identity, intersect, is_zero, matmul, solve, trace, unit
from .exceptions import ErrorCode, require
from .ideals import invariant_ideal_lattice, killing_orthogonal, minimal_ideals
from .invol import NoncompactPairC, eigenspace
from .lie import LieAlgebra, Subspace, commutant, is_ideal, orbit, traceless_part

logger = logging.getLogger(__name__)

(IRREDUCIBLE, REDUCIBLE_WITNESS, UNKNOWN) = ("IRREDUCIBLE", "REDUCIBLE_WITNESS", "UNKNOWN")


def is_effective(p: NoncompactPairC) -> bool:
    """
    Checks that no nonzero ideal of ``g0`` lies in ``h0``.

    Any such ideal contains a minimal ideal lying in ``h0``, so only the
    minimal ideals are tested.
    """
    h0 = eigenspace(p.sigma, 1)
    inside = [s for s in minimal_ideals(p.g0).minimal_ideals if h0.includes(s)]
    if inside:
        logger.info("%d minimal ideal(s) of %r lie in h0", len(inside), p.g0)
    return not inside


@dataclass
class ModuleAnalysis:
    flag: str
    invariant_subspaces_found: List[Subspace] = field(default_factory=list)
    seed_dims: List[int] = field(default_factory=list)  # Dimension of the closure of each q0 basis vector
    commutant_dim: Optional[int] = None

    @property
    def witness_dim(self) -> Optional[int]:
        if not self.invariant_subspaces_found:
            return None
        return min(s.dim for s in self.invariant_subspaces_found)


def _restricted_action(g0: LieAlgebra, h0: Subspace, q0: Subspace) -> List[DomainMatrix]:
    ops = []
    for h in h0.vectors():
        images = matmul(g0.ad_vector(h), q0.basis)
        coords = solve(q0.basis, images)
        require(coords is not None, ErrorCode.NOT_INVARIANT, "q0 is not stable under ad h0")
        ops.append(coords)
    return ops


def _is_division_algebra(basis: List[DomainMatrix]) -> bool:
    if len(basis) == 1:
        return True
    if len(basis) != 2:
        return False
    j = next((traceless_part(t) for t in basis if not is_zero(traceless_part(t))), None)
    if j is None:
        return False
    n = j.shape[0]
    square = matmul(j, j)
    c = -trace(square) / n
    return c > 0 and equal(square, identity(n) * (-c))


def h_module_analysis(p: NoncompactPairC) -> ModuleAnalysis:
    """
    Looks for ``ad(h0)``-invariant subspaces of ``q0``.

    The closure of every ``q0`` basis vector under the action is computed.
    A proper closure is a witness of reducibility. When every closure is
    ``q0``, the action is declared irreducible only if its commutant is a
    division algebra (``RR`` or ``CC``), otherwise the answer is
    ``UNKNOWN``.

    Returns:
        The :py:class:`ModuleAnalysis`.
    """
    (h0, q0) = (eigenspace(p.sigma, 1), eigenspace(p.sigma, -1))
    k = q0.dim
    if k == 0:
        logger.info("q0 is zero, nothing to analyze")
        return ModuleAnalysis(UNKNOWN)
    ops = _restricted_action(p.g0, h0, q0)
    found = []
    seed_dims = []
    for i in range(k):
        (span, _) = orbit(ops, unit(k, i), k)
        seed_dims.append(span.shape[1])
        if span.shape[1] == k:
            continue
        w = Subspace(p.g0, matmul(q0.basis, span))
        if w not in found:
            found.append(w)
    for w in found:
        require(0 < w.dim < k, ErrorCode.NOT_INVARIANT, "invariant subspace is not proper")
        for h in h0.vectors():
            require(
                all(w.contains(matmul(p.g0.ad_vector(h), x)) for x in w.vectors()),
                ErrorCode.NOT_INVARIANT,
                "closure is not ad(h0)-stable"
            )
    if found:
        logger.debug("%d proper invariant subspace(s) of q0, dims %s", len(found), [w.dim for w in found])
        return ModuleAnalysis(REDUCIBLE_WITNESS, found, seed_dims)
    basis = commutant(ops, k)
    if basis is None:
        logger.warning("no cyclic vector for the action of h0 on q0")
        return ModuleAnalysis(UNKNOWN, [], seed_dims)
    flag = IRREDUCIBLE if _is_division_algebra(basis) else UNKNOWN
    if flag == UNKNOWN:
        logger.warning("every seed closure is q0 but the commutant has dimension %d", len(basis))
    return ModuleAnalysis(flag, [], seed_dims, len(basis))


def riemannian_ideal(p: NoncompactPairC, p1: Subspace) -> Subspace:
    """
    Builds the ideal ``l0 = [p1, p1] + p1`` of a Riemannian pair.

    Args:
        p (NoncompactPairC): A pair with ``sigma = theta``.
        p1 (Subspace): An ``ad(k0)``-stable subspace of ``p0``.

    Raises:
        LieDualError: ``NOT_RIEMANNIAN`` if ``sigma != theta``,
            ``NOT_INVARIANT`` if ``p1`` is not an ``ad(k0)``-stable subspace
            of ``p0``, or if one of the checks on ``l0`` fails.

    Returns:
        The ideal ``l0``, after checking that it is a ``theta``-stable ideal
        and that ``[p1, p2] = 0`` for the Killing-orthogonal complement
        ``p2`` of ``p1`` in ``p0``.
    """
    require(p.is_riemannian(), ErrorCode.NOT_RIEMANNIAN, "sigma and theta differ")
    g0 = p.g0
    (k0, p0) = (eigenspace(p.theta, 1), eigenspace(p.theta, -1))
    require(p0.includes(p1), ErrorCode.NOT_INVARIANT, "p1 is not contained in p0")
    for x in k0.vectors():
        ad_x = g0.ad_vector(x)
        require(all(p1.contains(matmul(ad_x, y)) for y in p1.vectors()), ErrorCode.NOT_INVARIANT, "p1 is not ad(k0)-stable")
    vectors = list(p1.vectors())
    for x in p1.vectors():
        ad_x = g0.ad_vector(x)
        vectors.extend(matmul(ad_x, y) for y in p1.vectors())
    l0 = Subspace.span(g0, vectors)
    require(is_ideal(g0, l0), ErrorCode.NOT_INVARIANT, "[p1, p1] + p1 is not an ideal")
    require(l0 == Subspace(g0, matmul(p.theta.mat, l0.basis)), ErrorCode.NOT_INVARIANT, "[p1, p1] + p1 is not theta-stable")
    p2 = Subspace(g0, intersect(killing_orthogonal(g0, p1).basis, p0.basis))
    for x in p1.vectors():
        ad_x = g0.ad_vector(x)
        require(all(is_zero(matmul(ad_x, y)) for y in p2.vectors()), ErrorCode.NOT_INVARIANT, "[p1, p2] != 0")
    logger.debug("Riemannian ideal of dimension %d from p1 of dimension %d", l0.dim, p1.dim)
    return l0


@dataclass
class IrreducibilityReport:
    effective: bool
    ideal_irreducible: bool   # (N1): no non-trivial sigma-invariant ideal
    module: ModuleAnalysis    # (N2)

    @property
    def consistent(self) -> bool:
        """
        ``False`` only when (N2) holds for an effective pair without (N1).
        """
        return not (self.effective and self.module.flag == IRREDUCIBLE and not self.ideal_irreducible)


def irreducibility_report(p: NoncompactPairC) -> IrreducibilityReport:
    lattice = invariant_ideal_lattice(p.g0, [p.sigma])
    return IrreducibilityReport(
        effective=is_effective(p),
        ideal_irreducible=lattice.trivial,
        module=h_module_analysis(p),
    )

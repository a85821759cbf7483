#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Z-gradings, the parity involution ``sigma_Z`` and pairs of type K_epsilon.

Exponentials never appear: ``sigma_Z = exp(pi i ad Z)`` is the parity map
``(-1)^k`` on ``g0(k)`` and ``exp(ad 2 Z1)`` is the parity map
``(-1)^<lambda, v>`` on ``V(lambda)``.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .duality import phi
from .exact import (
    column,
    diagonal,
    eigenspaces,
    equal,
    entries,
    gaussian_eigenvalues,
    hstack,
    inverse,
    kernel_basis,
    matmul,
    solve,
)
from .exceptions import ErrorCode, LieDualError, require
from .invol import CompactTriad, Involution, NoncompactPairC
from .lie import LieAlgebra, Subspace, is_semisimple
from .roots import RootDatum, gamma_box, is_in_gamma, restricted_roots, root_pairing

logger = logging.getLogger(__name__)

DEGENERATE = "DEGENERATE"


@dataclass
class GradingDatum:
    g0: LieAlgebra
    z: DomainMatrix                      # The characteristic element
    components: Dict[int, Subspace]      # k -> g0(k), nonzero components only
    kind: int                            # Largest k with g0(k) != 0
    flags: List[str] = field(default_factory=list)

    @property
    def degenerate(self) -> bool:
        return DEGENERATE in self.flags

    def dims(self) -> tuple:
        """
        Returns:
            The dimensions of ``g0(-m), ..., g0(m)``.
        """
        return tuple(
            self.components[k].dim if k in self.components else 0
            for k in range(-self.kind, self.kind + 1)
        )

    def component(self, k: int) -> Subspace:
        return self.components.get(k, Subspace.zero(self.g0))


def _integer(a) -> Optional[int]:
    a = QQ.convert(a)
    if QQ.denom(a) != 1:
        return None
    return int(QQ.numer(a))


def _check_grading_law(gd: GradingDatum):
    g0 = gd.g0
    for (k, gk) in gd.components.items():
        for (l, gl) in gd.components.items():
            if l < k:
                continue
            target = gd.component(k + l)
            for x in gk.vectors():
                ad_x = g0.ad_vector(x)
                for y in gl.vectors():
                    require(
                        target.contains(matmul(ad_x, y)),
                        ErrorCode.NON_INTEGER_GRADING,
                        f"[g0({k}), g0({l})] is not contained in g0({k + l})"
                    )


def grading_from_Z(g0: LieAlgebra, z: DomainMatrix) -> GradingDatum:
    """
    Computes the grading ``g0(k) = {X : (ad Z) X = k X}``.

    Args:
        g0 (LieAlgebra): A semisimple Lie algebra.
        z (DomainMatrix): The candidate characteristic element.

    Raises:
        LieDualError: ``NON_INTEGER_GRADING`` if ``ad Z`` is not
            diagonalizable with integer eigenvalues or if the bracket law
            fails, ``NOT_SEMISIMPLE`` if ``g0`` is not semisimple.

    Returns:
        The :py:class:`GradingDatum`. ``Z = 0`` gives a single component and
        the ``DEGENERATE`` flag.
    """
    require(is_semisimple(g0), ErrorCode.NOT_SEMISIMPLE, f"{g0!r} is not semisimple")
    ad_z = g0.ad_vector(z)
    candidates = []
    for (mu, _) in gaussian_eigenvalues(ad_z):
        k = _integer(mu.x) if mu.y == 0 else None
        if k is None:
            raise LieDualError(ErrorCode.NON_INTEGER_GRADING, f"ad Z has the eigenvalue {mu}")
        candidates.append(k)
    spaces = eigenspaces(ad_z, candidates)
    require(spaces.full, ErrorCode.NON_INTEGER_GRADING, "ad Z is not diagonalizable")
    components = {
        _integer(k): Subspace(g0, basis)
        for (k, basis) in spaces.spaces.items()
    }
    kind = max(components)
    require(-kind in components, ErrorCode.NON_INTEGER_GRADING, f"g0({-kind}) vanishes while g0({kind}) does not")
    gd = GradingDatum(g0, z, components, kind)
    require(gd.component(0).contains(z), ErrorCode.NON_INTEGER_GRADING, "Z is not in g0(0)")
    _check_grading_law(gd)
    if kind == 0:
        gd.flags.append(DEGENERATE)
        logger.info("Z = 0 gives the trivial grading of %r", g0)
    logger.debug("grading of %r of kind %d with dims %s", g0, kind, gd.dims())
    return gd


def characteristic_element(g0: LieAlgebra, components: Dict[int, Subspace]) -> DomainMatrix:
    """
    Recomputes the characteristic element of a grading.

    Args:
        g0 (LieAlgebra): A semisimple Lie algebra.
        components (dict): ``k -> g0(k)``.

    Raises:
        LieDualError: ``NON_INTEGER_GRADING`` if no element acts by ``k`` on
            every ``g0(k)`` or if such an element is not unique.

    Returns:
        The unique ``Z`` such that ``(ad Z) X = k X`` on ``g0(k)``.
    """
    rows = []
    rhs = []
    for (k, gk) in sorted(components.items()):
        for x in gk.vectors():
            # [Z, X] = -(ad X) Z = k X
            rows.extend((-g0.ad_vector(x)).to_dense().to_list())
            rhs.extend([[a * k] for a in entries(x)])
    a = DomainMatrix(rows, (len(rows), g0.dim), QQ)
    b = DomainMatrix(rhs, (len(rhs), 1), QQ)
    z = solve(a, b)
    require(z is not None, ErrorCode.NON_INTEGER_GRADING, "no characteristic element")
    require(kernel_basis(a).shape[1] == 0, ErrorCode.NON_INTEGER_GRADING, "the characteristic element is not unique")
    return z


def parity_map(g: LieAlgebra, spaces: Dict[int, DomainMatrix]) -> DomainMatrix:
    """
    Returns:
        The matrix acting as ``(-1)^k`` on the span of ``spaces[k]``, the
        spaces summing to ``g``.
    """
    keys = sorted(spaces)
    basis = hstack(*(spaces[k] for k in keys))
    signs = []
    for k in keys:
        signs.extend([QQ(-1) if k % 2 else QQ(1)] * spaces[k].shape[1])
    require(basis.shape == (g.dim, g.dim), ErrorCode.DIM_MISMATCH, "the spaces do not span the algebra")
    return matmul(matmul(basis, diagonal(signs)), inverse(basis))


def sigma_Z(gd: GradingDatum) -> Involution:
    """
    Returns:
        The involution ``sigma_Z`` acting as ``(-1)^k`` on ``g0(k)``.
    """
    mat = parity_map(gd.g0, {k: s.basis for (k, s) in gd.components.items()})
    return Involution(gd.g0, mat, "sigma_Z")


def is_grade_reversing(gd: GradingDatum, theta: Involution) -> bool:
    """
    Checks ``theta(Z) = -Z`` and ``theta(g0(k)) = g0(-k)`` for every ``k``.

    Returns:
        ``True`` iff both hold. A disagreement between both formulations is
        logged.
    """
    on_z = equal(theta.apply(gd.z), -gd.z)
    on_components = all(
        Subspace(gd.g0, theta.apply(gk.basis)) == gd.component(-k)
        for (k, gk) in gd.components.items()
    )
    if on_z != on_components:
        logger.warning("theta(Z) = -Z is %s but theta(g0(k)) = g0(-k) is %s", on_z, on_components)
    return on_z and on_components


def keps_pair(gd: GradingDatum, theta: Involution) -> NoncompactPairC:
    """
    Builds the pair ``(g0, sigma_Z theta; theta)`` of type K_epsilon.

    Raises:
        LieDualError: ``NOT_GRADE_REVERSING`` if ``theta`` does not reverse
            the grading.

    Returns:
        The :py:class:`NoncompactPairC`.
    """
    require(is_grade_reversing(gd, theta), ErrorCode.NOT_GRADE_REVERSING, f"{theta.name} does not reverse the grading")
    sz = sigma_Z(gd)
    sigma = sz.compose(theta, "sigma")
    require(equal(matmul(sigma.mat, sigma.mat), diagonal([QQ.one] * gd.g0.dim)), ErrorCode.NOT_INVOLUTION, "sigma_Z theta is not an involution")
    return NoncompactPairC(gd.g0, sigma, theta, {"grading_dims": list(gd.dims()), "kind": gd.kind})


# ---------------------------------------------------------------------------
# Construction from the Gamma lattice
# ---------------------------------------------------------------------------

class KepsConstruction(NamedTuple):
    triad: CompactTriad
    pair: NoncompactPairC
    grading: GradingDatum
    z_sign: int  # Sign relating the a1-vector v and Z in the coordinates of the pair.


def gamma_parity(rd: RootDatum, v) -> DomainMatrix:
    """
    Computes ``exp(ad 2 Z1)`` for ``Z1 = (pi / 2) v``.

    Raises:
        LieDualError: ``NOT_IN_GAMMA`` if ``v`` is not in the lattice.

    Returns:
        The matrix acting as ``(-1)^<lambda, v>`` on ``V(lambda)`` and as the
        identity on ``zk + a1``.
    """
    require(is_in_gamma(rd, v), ErrorCode.NOT_IN_GAMMA, "v is not in the Gamma lattice")
    spaces = {0: hstack(rd.zk.basis, rd.a1.basis)}
    for lam in rd.positive_roots():
        k = int(QQ.numer(root_pairing(rd, lam, v)))
        parity = k % 2
        spaces[parity] = hstack(spaces[parity], rd.v_space(lam).basis) if parity in spaces else rd.v_space(lam).basis
    return parity_map(rd.g, spaces)


def _z_candidate(pair: NoncompactPairC, rd: RootDatum, v, sign: int) -> DomainMatrix:
    # v lies in a1, inside p1; phi sends p1 to the i p1 block.
    y = solve(pair.basis_record, rd.element(v))
    return y * QQ(sign)


def keps_from_gamma(g: LieAlgebra, theta1: Involution, v, rd: RootDatum = None) -> KepsConstruction:
    """
    Builds a triad ``(g, theta1, theta2)`` with ``theta2 = exp(ad 2 Z1) theta1``
    and its dual pair, which is of type K_epsilon for the grading of
    ``Z = 2 Z1 / (pi i)``.

    Args:
        g (LieAlgebra): A compact semisimple Lie algebra.
        theta1 (Involution): An involution of ``g``.
        v: A lattice vector in ``a1`` coordinates.
        rd (RootDatum): The root datum of ``(g, theta1)`` (computed if
            missing).

    Raises:
        LieDualError: ``NOT_IN_GAMMA`` if ``v`` is not in the lattice,
            ``NON_INTEGER_GRADING`` if no sign of ``Z`` validates.

    Returns:
        The :py:class:`KepsConstruction`.
    """
    if rd is None:
        rd = restricted_roots(g, theta1)
    v = v if isinstance(v, DomainMatrix) else column(v)
    e = gamma_parity(rd, v)
    theta2 = Involution(g, matmul(e, theta1.mat), "theta2", check=False)
    triad = CompactTriad(g, theta1, theta2, {"gamma": [str(a) for a in entries(v)]})
    pair = phi(triad)
    for sign in (-1, 1):
        z = _z_candidate(pair, rd, v, sign)
        try:
            gd = grading_from_Z(pair.g0, z)
        except LieDualError as err:
            logger.info("Z sign %d rejected: %s", sign, err)
            continue
        if equal(pair.sigma.mat, matmul(sigma_Z(gd).mat, pair.theta.mat)):
            logger.debug("K_epsilon construction: kind %d, dims %s, Z sign %d", gd.kind, gd.dims(), sign)
            return KepsConstruction(triad, pair, gd, sign)
        logger.info("Z sign %d does not satisfy sigma = sigma_Z theta", sign)
    raise LieDualError(ErrorCode.NON_INTEGER_GRADING, "no sign of Z gives sigma = sigma_Z theta")


def theta_sim_witness_check(t: CompactTriad, v, rd: RootDatum = None) -> bool:
    """
    Checks whether ``theta2`` is the parity twist of ``theta1`` by ``v``.

    Raises:
        LieDualError: ``NOT_IN_GAMMA`` if ``v`` is not in the lattice.

    Returns:
        ``True`` iff ``theta2 = exp(ad 2 Z1) theta1``.
    """
    if rd is None:
        rd = restricted_roots(t.g, t.theta1)
    v = v if isinstance(v, DomainMatrix) else column(v)
    return equal(matmul(gamma_parity(rd, v), t.theta1.mat), t.theta2.mat)


def search_gamma_witness(t: CompactTriad, bound: int) -> Optional[DomainMatrix]:
    """
    Searches the lattice vectors whose coefficients are bounded by ``bound``
    for a witness of ``theta1 ~ theta2``.

    Returns:
        The first witness found, or ``None`` (no witness up to ``bound``,
        which does not mean that ``theta1`` and ``theta2`` are not related).
    """
    rd = restricted_roots(t.g, t.theta1)
    for v in gamma_box(rd, bound):
        if theta_sim_witness_check(t, v, rd):
            return v
    logger.info("no Gamma witness with coefficients up to %d", bound)
    return None


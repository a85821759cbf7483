#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exact import (
    Signature,
    diagonal,
    equal,
    identity,
    is_real,
    kernel_basis,
    matmul,
    rank,
    real_part,
    symmetric_signature,
)
from .exceptions import ErrorCode, LieDualError, require
from .lie import (
    LieAlgebra,
    SubalgebraView,
    Subspace,
    center,
    derived_algebra,
    is_compact,
    is_semisimple,
    killing_signature,
    verify_homomorphism,
)

logger = logging.getLogger(__name__)


class Involution:
    """
    An involutive automorphism of a :py:class:`LieAlgebra`, given by its
    rational matrix in the basis of the algebra.
    """
    def __init__(self, parent: LieAlgebra, mat: DomainMatrix, name: str = None, check: bool = True):
        """
        Constructor.

        Args:
            parent (LieAlgebra): The Lie algebra.
            mat (DomainMatrix): A ``(dim, dim)`` matrix over ``QQ``.
            name (str): A label (e.g. ``"theta1"``).
            check (bool): Pass ``True`` to verify ``mat^2 = id`` and the
                automorphism property.

        Raises:
            LieDualError: ``DIM_MISMATCH``, ``NOT_INVOLUTION`` or
                ``NOT_AUTOMORPHISM``.
        """
        n = parent.dim
        require(mat.shape == (n, n), ErrorCode.DIM_MISMATCH, f"involution of shape {mat.shape} on a {n}-dimensional algebra")
        require(is_real(mat), ErrorCode.NOT_INVOLUTION, "involutions must have real rational entries")
        self.parent = parent
        self.mat = real_part(mat.to_dense())
        self.name = name
        if check:
            require(equal(matmul(self.mat, self.mat), identity(n)), ErrorCode.NOT_INVOLUTION, f"{name or 'matrix'} does not square to the identity")
            require(verify_homomorphism(parent, parent, self.mat), ErrorCode.NOT_AUTOMORPHISM, f"{name or 'matrix'} does not preserve brackets")

    @classmethod
    def identity(cls, g: LieAlgebra, name: str = "id") -> "Involution":
        return cls(g, identity(g.dim), name, check=False)

    def is_identity(self) -> bool:
        return equal(self.mat, identity(self.parent.dim))

    def commutes_with(self, other: "Involution") -> bool:
        return equal(matmul(self.mat, other.mat), matmul(other.mat, self.mat))

    def compose(self, other: "Involution", name: str = None) -> "Involution":
        """
        Returns:
            The involution ``self o other``, which requires both to commute.

        Raises:
            LieDualError: ``NOT_COMMUTING`` if they do not commute.
        """
        require(self.commutes_with(other), ErrorCode.NOT_COMMUTING, f"{self.name} and {other.name} do not commute")
        return Involution(self.parent, matmul(self.mat, other.mat), name or f"{self.name}*{other.name}", check=False)

    def apply(self, x: DomainMatrix) -> DomainMatrix:
        return matmul(self.mat, x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Involution):
            return NotImplemented
        return self.parent.dim == other.parent.dim and equal(self.mat, other.mat)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Involution(name={self.name!r}, dim={self.parent.dim})"


def _check_same_parent(g: LieAlgebra, *invs: Involution):
    for inv in invs:
        require(inv.parent is g or inv.parent.dim == g.dim, ErrorCode.DIM_MISMATCH, f"{inv.name} acts on another algebra")


class CompactTriad:
    """
    A commutative compact semisimple symmetric triad ``(g, theta1, theta2)``.
    """
    kind = "triad"

    def __init__(self, g: LieAlgebra, theta1: Involution, theta2: Involution, metadata: dict = None, check: bool = True):
        _check_same_parent(g, theta1, theta2)
        self.g = g
        self.theta1 = theta1
        self.theta2 = theta2
        self.metadata = dict(metadata or dict())
        self.basis_record = None  # Basis change from the object this one was derived from, if any.
        if check:
            self.check()

    def check(self):
        """
        Raises:
            LieDualError: ``NOT_COMPACT`` if ``g`` is not compact semisimple,
                ``NOT_COMMUTING`` if the involutions do not commute.
        """
        require(is_compact(self.g), ErrorCode.NOT_COMPACT, f"{self.g!r} is not compact semisimple")
        require(self.theta1.commutes_with(self.theta2), ErrorCode.NOT_COMMUTING, "theta1 and theta2 do not commute")

    @property
    def algebra(self) -> LieAlgebra:
        return self.g

    @property
    def involutions(self) -> Tuple[Involution, Involution]:
        """
        Returns:
            The distinguished involution first.
        """
        return (self.theta1, self.theta2)

    def rebuild(self, g: LieAlgebra, first: Involution, second: Involution, check: bool = False) -> "CompactTriad":
        return CompactTriad(g, first, second, self.metadata, check=check)

    def __repr__(self) -> str:
        return f"CompactTriad({self.g!r}, {self.theta1.name}, {self.theta2.name})"


class NoncompactPairC:
    """
    A non-compact semisimple symmetric pair ``(g0, sigma)`` equipped with a
    Cartan involution ``theta`` commuting with ``sigma``.
    """
    kind = "pair"

    def __init__(self, g0: LieAlgebra, sigma: Involution, theta: Involution, metadata: dict = None, check: bool = True):
        _check_same_parent(g0, sigma, theta)
        self.g0 = g0
        self.sigma = sigma
        self.theta = theta
        self.metadata = dict(metadata or dict())
        self.basis_record = None  # Basis change from the object this one was derived from, if any.
        if check:
            self.check()

    def check(self):
        """
        Raises:
            LieDualError: ``NOT_SEMISIMPLE``, ``NOT_CARTAN`` or
                ``NOT_COMMUTING``.
        """
        require(is_semisimple(self.g0), ErrorCode.NOT_SEMISIMPLE, f"{self.g0!r} is not semisimple")
        require(is_cartan(self.g0, self.theta), ErrorCode.NOT_CARTAN, "theta is not a Cartan involution")
        require(self.sigma.commutes_with(self.theta), ErrorCode.NOT_COMMUTING, "sigma and theta do not commute")

    @property
    def algebra(self) -> LieAlgebra:
        return self.g0

    @property
    def involutions(self) -> Tuple[Involution, Involution]:
        """
        Returns:
            The distinguished (Cartan) involution first.
        """
        return (self.theta, self.sigma)

    def rebuild(self, g0: LieAlgebra, first: Involution, second: Involution, check: bool = False) -> "NoncompactPairC":
        return NoncompactPairC(g0, second, first, self.metadata, check=check)

    def is_riemannian(self) -> bool:
        return self.sigma == self.theta

    def __repr__(self) -> str:
        return f"NoncompactPairC({self.g0!r}, {self.sigma.name}, {self.theta.name})"


class JointDecomposition(NamedTuple):
    kk: Subspace  # +1 for both involutions
    kp: Subspace  # +1 for the first, -1 for the second
    pk: Subspace  # -1 for the first, +1 for the second
    pp: Subspace  # -1 for both involutions

    def dims(self) -> Tuple[int, int, int, int]:
        return tuple(s.dim for s in self)


def eigenspace(inv: Involution, sign: int) -> Subspace:
    g = inv.parent
    shifted = (inv.mat - identity(g.dim) * QQ(sign)).to_dense()
    return Subspace(g, kernel_basis(shifted))


def eigensplit(inv: Involution) -> Tuple[Subspace, Subspace]:
    """
    Computes the +1 and -1 eigenspaces of an involution.

    Args:
        inv (Involution): The involution.

    Returns:
        The pair ``(plus, minus)`` of :py:class:`Subspace` instances.
    """
    return (eigenspace(inv, 1), eigenspace(inv, -1))


def joint_eigenspace(i1: Involution, i2: Involution, s1: int, s2: int) -> Subspace:
    g = i1.parent
    n = g.dim
    stacked = DomainMatrix(
        (i1.mat - identity(n) * QQ(s1)).to_dense().to_list()
        + (i2.mat - identity(n) * QQ(s2)).to_dense().to_list(),
        (2 * n, n),
        QQ
    )
    return Subspace(g, kernel_basis(stacked))


def joint_split(i1: Involution, i2: Involution) -> JointDecomposition:
    """
    Computes the joint eigenspaces of two commuting involutions.

    Raises:
        LieDualError: ``NOT_COMMUTING`` if they do not commute.

    Returns:
        The :py:class:`JointDecomposition` ``(k∩k, k∩p, p∩k, p∩p)``.
    """
    require(i1.commutes_with(i2), ErrorCode.NOT_COMMUTING, f"{i1.name} and {i2.name} do not commute")
    return JointDecomposition(*(
        joint_eigenspace(i1, i2, s1, s2)
        for (s1, s2) in ((1, 1), (1, -1), (-1, 1), (-1, -1))
    ))


def cartan_form(g0: LieAlgebra, theta: Involution) -> DomainMatrix:
    """
    Returns:
        The matrix of ``(x, y) -> -B(x, theta y)``.
    """
    return -matmul(g0.killing_form(), theta.mat)


def is_cartan(g0: LieAlgebra, theta: Involution) -> bool:
    """
    Returns:
        ``True`` iff ``-B(x, theta y)`` is positive definite.
    """
    form = cartan_form(g0, theta)
    try:
        signature = symmetric_signature(form)
    except LieDualError:
        return False
    return signature.n_pos == g0.dim


def fixed_view(inv: Involution) -> SubalgebraView:
    return SubalgebraView(eigenspace(inv, 1))


def joint_fixed_view(i1: Involution, i2: Involution) -> SubalgebraView:
    return SubalgebraView(joint_eigenspace(i1, i2, 1, 1))


def verify_equivalence_witness(src, dst, phi: DomainMatrix) -> bool:
    """
    Checks an explicit equivalence between two triads or two pairs.

    Args:
        src (CompactTriad | NoncompactPairC): The source object.
        dst (CompactTriad | NoncompactPairC): The target object, of the same
            kind.
        phi (DomainMatrix): The candidate isomorphism from ``src.algebra``
            to ``dst.algebra``.

    Raises:
        LieDualError: ``DIM_MISMATCH`` if dimensions do not match.

    Returns:
        ``True`` iff ``phi`` is an invertible Lie algebra isomorphism
        intertwining the involutions.
    """
    n = src.algebra.dim
    require(
        dst.algebra.dim == n and phi.shape == (n, n),
        ErrorCode.DIM_MISMATCH,
        f"cannot map a {n}-dimensional object to a {dst.algebra.dim}-dimensional one with a {phi.shape} matrix"
    )
    if src.kind != dst.kind or not is_real(phi):
        return False
    phi = real_part(phi.to_dense())
    for (a, b) in zip(src.involutions, dst.involutions):
        if not equal(matmul(phi, a.mat), matmul(b.mat, phi)):
            logger.debug("witness does not intertwine %s and %s", a.name, b.name)
            return False
    return rank(phi) == n and verify_homomorphism(src.algebra, dst.algebra, phi)


@dataclass(frozen=True)
class FixedProfile:
    dim: int
    center_dim: int
    derived_dim: int
    signature: Signature


@dataclass(frozen=True)
class InvariantProfile:
    kind: str
    dim: int
    joint_dims: Tuple[int, int, int, int]
    fixed: Tuple[Tuple[str, FixedProfile], ...]
    center_location: str  # where the center of the second fixed set lies w.r.t. the first involution
    minimal_ideal_dims: Tuple[int, ...] = field(default=())


def _fixed_profile(view: SubalgebraView) -> FixedProfile:
    h = view.algebra
    if h.dim == 0:
        return FixedProfile(0, 0, 0, Signature(0, 0, 0))
    return FixedProfile(h.dim, center(h).dim, derived_algebra(h).dim, killing_signature(h))


def center_location(view: SubalgebraView, inv: Involution) -> str:
    """
    Locates the center of a fixed-point view with respect to another
    involution.

    Returns:
        ``"trivial"`` if the center vanishes, ``"k"`` if it lies in the +1
        eigenspace of ``inv``, ``"p"`` if it lies in the -1 eigenspace,
        ``"mixed"`` otherwise.
    """
    z = center(view.algebra)
    if z.dim == 0:
        return "trivial"
    vectors = [view.lift(v) for v in z.vectors()]
    if all(equal(inv.apply(v), v) for v in vectors):
        return "k"
    if all(equal(inv.apply(v), -v) for v in vectors):
        return "p"
    return "mixed"


def invariant_profile(obj) -> InvariantProfile:
    """
    Computes an equivalence invariant fingerprint of a triad or a pair.

    Args:
        obj (CompactTriad | NoncompactPairC): The object.

    Returns:
        The :py:class:`InvariantProfile`. For triads the fixed sets are
        labelled ``k1``, ``k2``, ``k1k2``; for pairs ``k0``, ``h0``,
        ``k0h0``.
    """
    from .ideals import minimal_ideals
    (first, second) = obj.involutions
    g = obj.algebra
    labels = ("k1", "k2", "k1k2") if obj.kind == "triad" else ("k0", "h0", "k0h0")
    views = (fixed_view(first), fixed_view(second), joint_fixed_view(first, second))
    ideal_dims = ()
    if is_semisimple(g):
        ideal_dims = tuple(sorted(s.dim for s in minimal_ideals(g).minimal_ideals))
    return InvariantProfile(
        kind=obj.kind,
        dim=g.dim,
        joint_dims=joint_split(first, second).dims(),
        fixed=tuple((label, _fixed_profile(view)) for (label, view) in zip(labels, views)),
        center_location=center_location(views[1], first),
        minimal_ideal_dims=ideal_dims,
    )


def signed_permutation(n: int, perm: Tuple[int, ...], signs: Tuple[int, ...]) -> DomainMatrix:
    """
    Returns:
        The matrix sending ``e_j`` to ``signs[j] * e_{perm[j]}``.
    """
    rows = [[QQ.zero] * n for _ in range(n)]
    for (j, (i, s)) in enumerate(zip(perm, signs)):
        rows[i][j] = QQ(s)
    return DomainMatrix(rows, (n, n), QQ)


def involution_from_diagonal(g: LieAlgebra, signs: list, name: str = None) -> Involution:
    return Involution(g, diagonal([QQ(s) for s in signs]), name)


def find_signed_permutation_witness(src, dst, max_dim: int = 6) -> Optional[DomainMatrix]:
    """
    Exhaustive search of an equivalence witness among the signed
    permutations of the basis (only for small algebras).

    Returns:
        A verified witness, or ``None``.
    """
    from itertools import permutations, product
    n = src.algebra.dim
    require(n <= max_dim, ErrorCode.TOO_LARGE, f"signed permutation search limited to dimension {max_dim}")
    if dst.algebra.dim != n:
        return None
    (s1, s2) = (src.involutions, dst.involutions)
    if joint_split(*s1).dims() != joint_split(*s2).dims():
        return None
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            phi = signed_permutation(n, perm, signs)
            if verify_equivalence_witness(src, dst, phi):
                return phi
    return None

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, FrozenSet, List, Optional, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exact import (
    equal,
    identity,
    intersect,
    kernel_basis,
    matmul,
    rank,
    sum_spaces,
    zeros,
)
from .exceptions import ErrorCode, LieDualError, require
from .invol import Involution, NoncompactPairC
from .lie import (
    LieAlgebra,
    SubalgebraView,
    Subspace,
    centroid,
    commutant,
    ideal_closure,
    is_ideal,
    is_semisimple,
    lie_generators,
    traceless_part,
)

logger = logging.getLogger(__name__)

(SIMPLE, P_A, P_B, P_C, P_D, T_A, T_B, T_C, T_D) = (
    "SIMPLE", "P_a", "P_b", "P_c", "P_d", "T_a", "T_b", "T_c", "T_d"
)

TRIAD_TO_PAIR = {SIMPLE: SIMPLE, T_A: P_A, T_B: P_B, T_C: P_C, T_D: P_D}


# ---------------------------------------------------------------------------
# Minimal ideals
# ---------------------------------------------------------------------------

@dataclass
class IdealDecomposition:
    g: LieAlgebra
    minimal_ideals: List[Subspace]
    metadata: Dict[str, object] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        """
        Returns:
            ``False`` if some ideal could not be split along its centroid
            and may not be minimal (see ``metadata["unsplit_dims"]``).
        """
        return not self.metadata.get("unsplit_dims")

    def permutation(self, inv: Involution) -> Tuple[int, ...]:
        """
        Computes how an automorphism permutes the minimal ideals.

        Returns:
            The tuple ``pi`` such that ``inv(I_a) = I_{pi[a]}``.

        Raises:
            LieDualError: ``NOT_AUTOMORPHISM`` if an image is not a minimal
                ideal.
        """
        result = []
        for ideal in self.minimal_ideals:
            image = Subspace(self.g, matmul(inv.mat, ideal.basis))
            match = next((b for (b, other) in enumerate(self.minimal_ideals) if other == image), None)
            require(match is not None, ErrorCode.NOT_AUTOMORPHISM, f"{inv.name} does not permute the minimal ideals")
            result.append(match)
        return tuple(result)

    def sum_of(self, indices) -> Subspace:
        return Subspace(self.g, sum_spaces(zeros(self.g.dim, 0), *(self.minimal_ideals[i].basis for i in sorted(indices))))


def killing_orthogonal(g: LieAlgebra, s: Subspace) -> Subspace:
    """
    Returns:
        ``{x : B(x, s) = 0}``.
    """
    if s.dim == 0:
        return Subspace.whole(g)
    return Subspace(g, kernel_basis(matmul(s.basis.transpose(), g.killing_form())))


def _refine(g: LieAlgebra, ideal: Subspace) -> Subspace:
    # Replace by the smallest single-vector closure until a fixpoint is reached.
    while True:
        best = None
        for v in ideal.vectors():
            closure = ideal_closure(g, [v])
            if closure.dim < ideal.dim and (best is None or closure.dim < best.dim):
                best = closure
        if best is None:
            return ideal
        ideal = best


def _eval_poly(coeffs: list, t: DomainMatrix) -> DomainMatrix:
    n = t.shape[0]
    result = zeros(n, n)
    for c in coeffs:
        result = (matmul(result, t) + identity(n) * QQ.convert(c)).to_dense()
    return result


def _splitting_element(basis: List[DomainMatrix]) -> Optional[Tuple[DomainMatrix, list]]:
    # An element of a commutative semisimple algebra whose characteristic
    # polynomial has two distinct irreducible factors splits the module.
    candidates = list(basis)
    candidates += [basis[a] + basis[b] for a in range(len(basis)) for b in range(a + 1, len(basis))]
    candidates += [basis[a] + basis[b] * QQ(2) for a in range(len(basis)) for b in range(a + 1, len(basis))]
    for t in candidates:
        t = t.to_dense()
        factors = t.charpoly_factor_list()
        if len(factors) >= 2:
            return (t, [coeffs for (coeffs, _) in factors])
    return None


def _split(g: LieAlgebra, ideal: Subspace, unsplit: List[int]) -> List[Subspace]:
    # Splits a sum of simple ideals using idempotents of its centroid.
    # The dimensions of the ideals kept whole without a certificate of
    # simplicity are appended to unsplit.
    view = SubalgebraView(ideal)
    h = view.algebra
    ops = [h.ad_vector(x) for x in lie_generators(h)]
    basis = commutant(ops, h.dim)
    if basis is None:
        logger.warning("no cyclic vector found in an ideal of dimension %d, kept as is", h.dim)
        unsplit.append(h.dim)
        return [ideal]
    if len(basis) == 1:
        return [ideal]
    found = _splitting_element(basis)
    if found is None:
        # A centroid of dimension 2 without rational idempotents is CC.
        if len(basis) > 2:
            logger.warning("centroid of dimension %d could not be split", len(basis))
            unsplit.append(h.dim)
        return [ideal]
    (t, factors) = found
    pieces = []
    for coeffs in factors:
        coords = kernel_basis(_eval_poly(coeffs, t))
        pieces.extend(_split(g, Subspace(g, matmul(ideal.basis, coords)), unsplit))
    return pieces


def _first_pivot(s: Subspace) -> int:
    for (r, row) in enumerate(s.basis.to_list()):
        if any(row):
            return r
    return s.parent.dim


def minimal_ideals(g: LieAlgebra) -> IdealDecomposition:
    """
    Decomposes a semisimple Lie algebra into its minimal ideals.

    Starting from the lowest basis vector not yet covered, the ideal it
    generates is refined to smaller single-vector closures, split along the
    idempotents of its centroid if needed, and removed through its Killing
    orthogonal complement.

    Args:
        g (LieAlgebra): A semisimple Lie algebra.

    Raises:
        LieDualError: ``NOT_SEMISIMPLE`` if the Killing form is degenerate.

    Returns:
        The :py:class:`IdealDecomposition`, ideals sorted by their first
        nonzero coordinate. If an ideal could not be split, its dimension
        is listed in ``metadata["unsplit_dims"]``.
    """
    require(is_semisimple(g), ErrorCode.NOT_SEMISIMPLE, f"{g!r} is not semisimple")
    remaining = Subspace.whole(g)
    found = []
    unsplit = []
    while remaining.dim:
        ideal = _refine(g, ideal_closure(g, [remaining.vectors()[0]]))
        pieces = _split(g, ideal, unsplit)
        found.extend(pieces)
        for piece in pieces:
            remaining = Subspace(g, intersect(remaining.basis, killing_orthogonal(g, piece).basis))
    for ideal in found:
        if not is_ideal(g, ideal):
            raise LieDualError(ErrorCode.NOT_SEMISIMPLE, "a computed summand is not an ideal")
    require(
        sum(s.dim for s in found) == g.dim and rank(sum_spaces(*(s.basis for s in found))) == g.dim,
        ErrorCode.NOT_SEMISIMPLE,
        "minimal ideals do not span the algebra"
    )
    found.sort(key=lambda s: (_first_pivot(s), s.dim))
    logger.debug("%r has minimal ideals of dimensions %s", g, [s.dim for s in found])
    return IdealDecomposition(g, found, {"unsplit_dims": sorted(unsplit)} if unsplit else dict())


# ---------------------------------------------------------------------------
# Invariant ideals
# ---------------------------------------------------------------------------

@dataclass
class InvariantLattice:
    decomposition: IdealDecomposition
    permutations: List[Tuple[int, ...]]
    orbits: List[FrozenSet[int]]
    ideals: List[Subspace] = field(default_factory=list)  # All invariant ideals, zero and g included.

    @property
    def trivial(self) -> bool:
        return len(self.orbits) <= 1


def _orbits(count: int, perms: List[Tuple[int, ...]]) -> List[FrozenSet[int]]:
    parent = list(range(count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for perm in perms:
        for (a, b) in enumerate(perm):
            (ra, rb) = (find(a), find(b))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups = dict()
    for a in range(count):
        groups.setdefault(find(a), set()).add(a)
    return [frozenset(groups[r]) for r in sorted(groups)]


def invariant_ideal_lattice(g: LieAlgebra, invs: List[Involution]) -> InvariantLattice:
    """
    Enumerates the ideals invariant under some involutions.

    Args:
        g (LieAlgebra): A semisimple Lie algebra.
        invs (list): Involutions of ``g``.

    Returns:
        The :py:class:`InvariantLattice`: every invariant ideal is a sum of
        orbits of minimal ideals under the group generated by ``invs``.
    """
    decomposition = minimal_ideals(g)
    perms = [decomposition.permutation(inv) for inv in invs]
    orbits = _orbits(len(decomposition.minimal_ideals), perms)
    ideals = []
    for mask in range(2 ** len(orbits)):
        indices = set()
        for (b, orbit) in enumerate(orbits):
            if mask >> b & 1:
                indices |= orbit
        ideals.append(decomposition.sum_of(indices))
    ideals.sort(key=lambda s: (s.dim, [list(row) for row in s.basis.transpose().to_list()]))
    return InvariantLattice(decomposition, perms, orbits, ideals)


def _lattice_of(obj) -> InvariantLattice:
    if obj.kind == "triad":
        return invariant_ideal_lattice(obj.g, [obj.theta1, obj.theta2])
    return invariant_ideal_lattice(obj.g0, [obj.sigma])


def _restrict(obj, s: Subspace, index: int):
    view = SubalgebraView(s)
    h = view.algebra
    (first, second) = obj.involutions
    f = Involution(h, view.restrict(first.mat), first.name, check=False)
    sc = Involution(h, view.restrict(second.mat), second.name, check=False)
    metadata = dict(obj.metadata)
    metadata["component"] = index
    component = obj.rebuild(h, f, sc)
    component.metadata = metadata
    component.basis_record = s.basis
    return component


def irreducible_components(obj) -> list:
    """
    Decomposes a triad or a pair into irreducible ones.

    Args:
        obj (CompactTriad | NoncompactPairC): The object.

    Raises:
        LieDualError: ``THETA_NOT_STABLE`` if an invariant ideal of a pair is
            not stable under its Cartan involution.

    Returns:
        The list of components (same kind as ``obj``), each one carrying in
        ``basis_record`` the basis of its ideal in ``obj``'s coordinates.
    """
    lattice = _lattice_of(obj)
    decomposition = lattice.decomposition
    first = obj.involutions[0]
    components = []
    for (index, orbit) in enumerate(lattice.orbits):
        s = decomposition.sum_of(orbit)
        require(
            Subspace(obj.algebra, matmul(first.mat, s.basis)) == s,
            ErrorCode.THETA_NOT_STABLE,
            f"invariant ideal of dimension {s.dim} is not stable under {first.name}"
        )
        components.append(_restrict(obj, s, index))
    total = sum_spaces(*(c.basis_record for c in components))
    require(total.shape[1] == obj.algebra.dim, ErrorCode.NOT_SEMISIMPLE, "components do not reconstruct the algebra")
    return components


# ---------------------------------------------------------------------------
# Ideal correspondence
# ---------------------------------------------------------------------------

@dataclass
class CorrespondenceReport:
    pair_lattice_size: int
    triad_lattice_size: int
    bijection: bool        # Psi maps the pair lattice onto the triad lattice, preserving dims.
    roundtrip: bool        # Phi o Psi is the identity on ideals.
    pair_trivial: bool
    triad_trivial: bool

    @property
    def passed(self) -> bool:
        return self.bijection and self.roundtrip and self.pair_trivial == self.triad_trivial


def ideal_correspondence(p: NoncompactPairC) -> CorrespondenceReport:
    """
    Verifies the correspondence between the invariant ideals of a pair and
    those of its dual triad.

    An invariant ideal ``l0 = l0^theta + l0^{-theta}`` of the pair is mapped
    to ``l0^theta + i l0^{-theta}``, which in the coordinates of
    :py:func:`liedual.duality.psi` is the subspace ``P^{-1} l0``.

    Returns:
        The :py:class:`CorrespondenceReport`.
    """
    from .duality import ideal_image, normalize, phi, psi
    pair_lattice = _lattice_of(p)
    for s in pair_lattice.ideals:
        require(
            Subspace(p.g0, matmul(p.theta.mat, s.basis)) == s,
            ErrorCode.THETA_NOT_STABLE,
            f"invariant ideal of dimension {s.dim} is not theta-stable"
        )
    t = psi(p)
    triad_lattice = _lattice_of(t)
    images = [ideal_image(t.basis_record, s, t.g) for s in pair_lattice.ideals]
    targets = set(triad_lattice.ideals)
    bijection = (
        len(images) == len(targets)
        and set(images) == targets
        and all(a.dim == b.dim for (a, b) in zip(pair_lattice.ideals, images))
    )
    back = phi(t)
    reference = normalize(p)
    roundtrip = all(
        ideal_image(back.basis_record, image, back.g0).basis.to_list()
        == ideal_image(reference.basis_record, s, reference.g0).basis.to_list()
        for (s, image) in zip(pair_lattice.ideals, images)
    )
    return CorrespondenceReport(
        pair_lattice_size=len(pair_lattice.ideals),
        triad_lattice_size=len(triad_lattice.ideals),
        bijection=bijection,
        roundtrip=roundtrip,
        pair_trivial=pair_lattice.trivial,
        triad_trivial=triad_lattice.trivial,
    )


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

@dataclass
class IrreducibleType:
    tag: str
    evidence: Dict[str, object] = field(default_factory=dict)


T_C_PATTERN = ((1, 0, 3, 2), (3, 2, 1, 0))


def _is_swap(perm: Tuple[int, ...]) -> bool:
    return perm == (1, 0)


def _matches_t_c(perms: List[Tuple[int, ...]]) -> Optional[Tuple[int, ...]]:
    for relabel in permutations(range(4)):
        # relabel[a] is the new label of ideal a.
        renamed = []
        for perm in perms:
            new = [None] * 4
            for a in range(4):
                new[relabel[a]] = relabel[perm[a]]
            renamed.append(tuple(new))
        if tuple(renamed) == T_C_PATTERN:
            return relabel
    return None


def is_anti_linear(g: LieAlgebra, inv: Involution) -> Optional[bool]:
    """
    Tests an involution against the complex structure of an indecomposable
    algebra with a two-dimensional centroid.

    Returns:
        ``True`` if ``inv`` anticommutes with the traceless centroid
        generator, ``False`` if it commutes with it, ``None`` if the centroid
        is one-dimensional.
    """
    basis = centroid(g)
    if len(basis) < 2:
        return None
    j = traceless_part(basis[1])
    conj = matmul(matmul(inv.mat, j), inv.mat)
    if equal(conj, -j):
        return True
    if equal(conj, j):
        return False
    raise LieDualError(ErrorCode.UNRECOGNIZED_PATTERN, f"{inv.name} neither commutes nor anticommutes with the complex structure")


def classify_irreducible(obj) -> IrreducibleType:
    """
    Classifies an irreducible triad (``SIMPLE``, ``T_a`` ... ``T_d``) or
    pair (``SIMPLE``, ``P_a`` ... ``P_d``).

    Raises:
        LieDualError: ``NOT_IRREDUCIBLE`` if the object has a nontrivial
            invariant ideal, ``UNRECOGNIZED_PATTERN`` if the minimal ideals are
            permuted in an unexpected way.

    Returns:
        The :py:class:`IrreducibleType`.
    """
    lattice = _lattice_of(obj)
    require(lattice.trivial, ErrorCode.NOT_IRREDUCIBLE, f"{obj!r} has {len(lattice.orbits)} invariant summands")
    count = len(lattice.decomposition.minimal_ideals)
    evidence = {
        "ideal_count": count,
        "permutations": [list(p) for p in lattice.permutations],
    }
    if obj.kind == "triad":
        if count == 1:
            return IrreducibleType(SIMPLE, evidence)
        if count == 2:
            (swap1, swap2) = (_is_swap(p) for p in lattice.permutations)
            evidence["swaps"] = [swap1, swap2]
            tag = {(True, True): T_A, (True, False): T_B, (False, True): T_D}[(swap1, swap2)]
            return IrreducibleType(tag, evidence)
        if count == 4:
            relabel = _matches_t_c(lattice.permutations)
            if relabel is not None:
                evidence["relabeling"] = list(relabel)
                return IrreducibleType(T_C, evidence)
        raise LieDualError(ErrorCode.UNRECOGNIZED_PATTERN, f"{count} minimal ideals permuted as {lattice.permutations}")
    g0 = obj.g0
    if count == 1:
        dim = len(centroid(g0))
        evidence["centroid_dim"] = dim
        if dim == 1:
            return IrreducibleType(SIMPLE, evidence)
        anti = is_anti_linear(g0, obj.sigma)
        evidence["anti_linear"] = anti
        return IrreducibleType(P_A if anti else P_B, evidence)
    if count == 2:
        factor = SubalgebraView(lattice.decomposition.minimal_ideals[0]).algebra
        dim = len(centroid(factor))
        evidence["factor_centroid_dim"] = dim
        return IrreducibleType(P_C if dim == 2 else P_D, evidence)
    raise LieDualError(ErrorCode.UNRECOGNIZED_PATTERN, f"irreducible pair with {count} minimal ideals")


# ---------------------------------------------------------------------------
# Self duality
# ---------------------------------------------------------------------------

@dataclass
class SelfReport:
    self_dual: Optional[bool]        # None when only necessary conditions were checked.
    self_associated: Optional[bool]
    dual_profile_match: bool
    associated_profile_match: bool
    witnesses: Dict[str, bool] = field(default_factory=dict)


def self_properties(obj) -> SelfReport:
    """
    Checks whether a triad or a pair is self-dual or self-associated.

    Catalog triads name the explicit witnesses to use in their metadata
    (``"self_dual_witness"``, ``"self_associated_witness"``); these are built
    by :py:func:`liedual.catalog.witness` and verified. Pairs, and triads
    without such metadata, only get their invariant profiles compared.

    Returns:
        The :py:class:`SelfReport`.
    """
    from .catalog import witness
    from .duality import associated_pair, associated_triad, dual_pair, dual_triad
    from .invol import invariant_profile, verify_equivalence_witness
    if obj.kind == "triad":
        (dual, associated) = (dual_triad(obj), associated_triad(obj))
    else:
        (dual, associated) = (dual_pair(obj), associated_pair(obj))
    profile = invariant_profile(obj)
    report = SelfReport(
        self_dual=None,
        self_associated=None,
        dual_profile_match=invariant_profile(dual) == profile,
        associated_profile_match=invariant_profile(associated) == profile,
    )
    for (key, target, attr) in (
        ("self_dual_witness", dual, "self_dual"),
        ("self_associated_witness", associated, "self_associated"),
    ):
        name = obj.metadata.get(key)
        if name is None or obj.kind != "triad" or obj.basis_record is not None:
            continue
        ok = verify_equivalence_witness(obj, target, witness(name))
        report.witnesses[name] = ok
        setattr(report, attr, ok)
    return report

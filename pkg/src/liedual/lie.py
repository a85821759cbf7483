#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from typing import Dict, List, Optional, Tuple

from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from .exact import (
    Signature,
    check_dim,
    column,
    columns,
    commutator,
    entries,
    equal,
    from_columns,
    hstack,
    identity,
    inverse,
    is_zero,
    kernel_basis,
    matmul,
    rank,
    rref,
    solve,
    span_basis,
    symmetric_signature,
    to_gaussian,
    trace,
    unit,
    zeros,
)
from .exceptions import ErrorCode, LieDualError, require

logger = logging.getLogger(__name__)


class LieAlgebra:
    """
    A finite dimensional real Lie algebra given by rational structure
    constants ``[e_i, e_j] = sum_k c_{ij}^k e_k``.

    Only the constants with ``i < j`` are stored; antisymmetry is implied.
    An optional *ambient* realization maps each basis vector to a square
    matrix over ``QQ_I`` whose commutators match the structure constants.
    """
    def __init__(
        self,
        dim: int,
        sc: Dict[Tuple[int, int, int], object],
        ambient: List[DomainMatrix] = None,
        name: str = None,
        check: bool = True
    ):
        """
        Constructor.

        Args:
            dim (int): The dimension of the algebra.
            sc (dict): Maps ``(i, j, k)`` to ``c_{ij}^k``. Entries with
                ``i > j`` are folded using antisymmetry, entries with
                ``i == j`` must vanish.
            ambient (list): Optional list of ``dim`` square matrices.
            name (str): A label used in logs and documents.
            check (bool): Pass ``True`` to verify the Jacobi identity
                (and the ambient realization, if any).
        """
        check_dim(dim)
        self.dim = dim
        self.name = name
        self.sc = dict()  # (i, j, k) with i < j -> nonzero QQ coefficient
        for ((i, j, k), c) in sc.items():
            c = QQ.convert(c)
            if c == 0:
                continue
            require(
                0 <= min(i, j, k) and max(i, j, k) < dim,
                ErrorCode.DIM_MISMATCH,
                f"structure constant index {(i, j, k)} out of range for dim {dim}"
            )
            require(i != j, ErrorCode.NOT_LIE_ALGEBRA, f"[e_{i}, e_{i}] must vanish")
            if i > j:
                (i, j, c) = (j, i, -c)
            key = (i, j, k)
            value = self.sc.get(key, QQ.zero) + c
            if value == 0:
                self.sc.pop(key, None)
            else:
                self.sc[key] = value
        self.ambient = (
            [to_gaussian(a.to_dense()) for a in ambient] if ambient is not None
            else None
        )
        self._table = None
        self._ad = None
        self._killing = None
        self._flat = None
        if check:
            self.check()

    # Basic accessors

    @property
    def table(self) -> Dict[Tuple[int, int], Dict[int, object]]:
        """
        Returns:
            The sparse bracket table ``(i, j) -> {k: c_{ij}^k}`` for ``i < j``.
        """
        if self._table is None:
            table = dict()
            for ((i, j, k), c) in self.sc.items():
                table.setdefault((i, j), dict())[k] = c
            self._table = table
        return self._table

    def basis_bracket(self, i: int, j: int) -> Dict[int, object]:
        if i == j:
            return dict()
        if i < j:
            return self.table.get((i, j), dict())
        return {k: -c for (k, c) in self.table.get((j, i), dict()).items()}

    def bracket_lists(self, x: list, y: list) -> list:
        result = [QQ.zero] * self.dim
        for ((i, j, k), c) in self.sc.items():
            coeff = x[i] * y[j] - x[j] * y[i]
            if coeff:
                result[k] += coeff * c
        return result

    def ad(self, i: int) -> DomainMatrix:
        """
        Returns:
            The matrix of ``ad e_i`` (column ``j`` holds ``[e_i, e_j]``).
        """
        if self._ad is None:
            mats = [[[QQ.zero] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
            for ((i_, j_, k), c) in self.sc.items():
                mats[i_][k][j_] += c
                mats[j_][k][i_] -= c
            self._ad = [DomainMatrix(m, (self.dim, self.dim), QQ) for m in mats]
        return self._ad[i]

    def ad_vector(self, x: DomainMatrix) -> DomainMatrix:
        """
        Returns:
            The matrix of ``ad x``.
        """
        xs = entries(x)
        n = self.dim
        m = [[QQ.zero] * n for _ in range(n)]
        for ((i, j, k), c) in self.sc.items():
            if xs[i]:
                m[k][j] += xs[i] * c
            if xs[j]:
                m[k][i] -= xs[j] * c
        return DomainMatrix(m, (n, n), QQ)

    def ad_matrices(self) -> List[DomainMatrix]:
        return [self.ad(i) for i in range(self.dim)]

    # Checks

    def check(self):
        """
        Verifies the Jacobi identity on every basis triple, and the ambient
        realization if any.

        Raises:
            LieDualError: ``NOT_LIE_ALGEBRA`` if a check fails.
        """
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                bij = self.basis_bracket(i, j)
                for k in range(j + 1, n):
                    total = dict()
                    for (first, third) in (((i, j), k), ((j, k), i), ((k, i), j)):
                        inner = self.basis_bracket(*first) if first != (i, j) else bij
                        for (m, cm) in inner.items():
                            for (l, cl) in self.basis_bracket(m, third).items():
                                total[l] = total.get(l, QQ.zero) + cm * cl
                    if any(v != 0 for v in total.values()):
                        raise LieDualError(
                            ErrorCode.NOT_LIE_ALGEBRA,
                            f"Jacobi identity fails on (e_{i}, e_{j}, e_{k})"
                        )
        if self.ambient is not None:
            require(
                len(self.ambient) == n,
                ErrorCode.DIM_MISMATCH,
                f"{len(self.ambient)} ambient matrices for a {n}-dimensional algebra"
            )
            for i in range(n):
                for j in range(i + 1, n):
                    expected = zeros(*self.ambient[0].shape, QQ_I)
                    for (k, c) in self.basis_bracket(i, j).items():
                        expected = expected + self.ambient[k] * QQ_I.convert(c)
                    if not equal(commutator(self.ambient[i], self.ambient[j]), expected):
                        raise LieDualError(
                            ErrorCode.NOT_LIE_ALGEBRA,
                            f"ambient commutator of e_{i}, e_{j} does not match the structure constants"
                        )

    def same_structure(self, other: "LieAlgebra") -> bool:
        """
        Returns:
            ``True`` iff both algebras have the same dimension and bitwise
            equal structure constants.
        """
        return self.dim == other.dim and self.sc == other.sc

    def ambient_of(self, x: DomainMatrix) -> DomainMatrix:
        """
        Returns:
            The ambient matrix of the vector ``x``.
        """
        require(self.ambient is not None, ErrorCode.BAD_PARAMS, "no ambient realization")
        result = zeros(*self.ambient[0].shape, QQ_I)
        for (a, c) in zip(entries(x), self.ambient):
            if a:
                result = result + c * QQ_I.convert(a)
        return result.to_dense()

    def ambient_coordinates(self, m: DomainMatrix) -> Optional[DomainMatrix]:
        """
        Expresses a matrix in the ambient realization.

        Args:
            m (DomainMatrix): A square matrix over ``QQ`` or ``QQ_I``.

        Returns:
            The ``(dim, 1)`` rational coordinates ``c`` such that
            ``sum_k c_k ambient[k] == m``, or ``None`` if ``m`` is not in the
            real span of the ambient matrices.
        """
        require(self.ambient is not None, ErrorCode.BAD_PARAMS, "no ambient realization")
        if self._flat is None:
            flat = DomainMatrix(
                [list(row) for row in zip(*(_flatten(a) for a in self.ambient))],
                (2 * self.ambient[0].shape[0] ** 2, self.dim),
                QQ
            )
            # Pivot rows select an invertible square subsystem.
            rows = rref(flat.transpose())[1]
            require(len(rows) == self.dim, ErrorCode.DIM_MISMATCH, "ambient matrices are linearly dependent")
            full = flat.to_list()
            square = DomainMatrix([full[r] for r in rows], (self.dim, self.dim), QQ)
            self._flat = (flat, rows, inverse(square))
        (flat, rows, square_inv) = self._flat
        x = _flatten(m)
        c = matmul(square_inv, column([x[r] for r in rows]))
        if not equal(matmul(flat, c), column(x)):
            return None
        return c

    def killing_form(self) -> DomainMatrix:
        if self._killing is None:
            mats = [m.to_list() for m in self.ad_matrices()]
            n = self.dim
            rows = [[QQ.zero] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    (a, b) = (mats[i], mats[j])
                    total = QQ.zero
                    for r in range(n):
                        ar = a[r]
                        for s in range(n):
                            if ar[s] and b[s][r]:
                                total += ar[s] * b[s][r]
                    rows[i][j] = rows[j][i] = total
            self._killing = DomainMatrix(rows, (n, n), QQ)
        return self._killing

    def __repr__(self) -> str:
        return f"LieAlgebra(name={self.name!r}, dim={self.dim})"


# ---------------------------------------------------------------------------
# Subspaces and views
# ---------------------------------------------------------------------------

class Subspace:
    """
    A subspace of a :py:class:`LieAlgebra`, stored by its canonical basis
    (columns of a ``(dim, k)`` matrix in reduced echelon form).
    """
    def __init__(self, parent: LieAlgebra, basis: DomainMatrix):
        self.parent = parent
        self.basis = span_basis(basis) if basis.shape[1] else zeros(parent.dim, 0)

    @classmethod
    def span(cls, parent: LieAlgebra, vectors: List[DomainMatrix]) -> "Subspace":
        return cls(parent, from_columns(vectors, parent.dim))

    @classmethod
    def whole(cls, parent: LieAlgebra) -> "Subspace":
        return cls(parent, identity(parent.dim))

    @classmethod
    def zero(cls, parent: LieAlgebra) -> "Subspace":
        return cls(parent, zeros(parent.dim, 0))

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def vectors(self) -> List[DomainMatrix]:
        return columns(self.basis)

    def contains(self, v: DomainMatrix) -> bool:
        return solve(self.basis, v) is not None if self.dim else is_zero(v)

    def includes(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.parent is other.parent and equal(self.basis, other.basis)

    def __hash__(self) -> int:
        return hash((id(self.parent), tuple(tuple(row) for row in self.basis.to_list())))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, parent={self.parent!r})"


class SubalgebraView:
    """
    A bracket-closed :py:class:`Subspace` together with the
    :py:class:`LieAlgebra` it carries in the coordinates of its basis.
    """
    def __init__(self, subspace: Subspace):
        self.subspace = subspace
        g = subspace.parent
        vectors = subspace.vectors()
        basis = subspace.basis
        sc = dict()
        for a in range(len(vectors)):
            xa = entries(vectors[a])
            for b in range(a + 1, len(vectors)):
                z = column(g.bracket_lists(xa, entries(vectors[b])))
                coords = solve(basis, z)
                if coords is None:
                    raise LieDualError(
                        ErrorCode.NOT_IN_SPAN,
                        f"subspace of dimension {subspace.dim} is not closed under the bracket"
                    )
                for (k, c) in enumerate(entries(coords)):
                    if c:
                        sc[(a, b, k)] = c
        ambient = None
        if g.ambient is not None:
            ambient = [g.ambient_of(v) for v in vectors]
        self.algebra = LieAlgebra(len(vectors), sc, ambient, name=g.name, check=False)

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def lift(self, coords: DomainMatrix) -> DomainMatrix:
        """
        Returns:
            The vector of the parent algebra with the given view coordinates.
        """
        return matmul(self.subspace.basis, coords)

    def restrict(self, m: DomainMatrix) -> DomainMatrix:
        """
        Restricts an endomorphism of the parent preserving the subspace.

        Returns:
            The matrix of ``m`` in the view's basis.
        """
        basis = self.subspace.basis
        image = matmul(m, basis)
        coords = solve(basis, image) if basis.shape[1] else zeros(0, 0)
        require(coords is not None, ErrorCode.NOT_IN_SPAN, "the map does not preserve the subalgebra")
        return coords


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def _check_vector(g: LieAlgebra, x: DomainMatrix):
    require(
        x.shape == (g.dim, 1),
        ErrorCode.DIM_MISMATCH,
        f"expected a vector of length {g.dim}, got shape {x.shape}"
    )


def bracket(g: LieAlgebra, x: DomainMatrix, y: DomainMatrix) -> DomainMatrix:
    """
    Computes the bracket of two vectors of a Lie algebra.

    Args:
        g (LieAlgebra): The Lie algebra.
        x (DomainMatrix): A ``(dim, 1)`` coordinate vector.
        y (DomainMatrix): A ``(dim, 1)`` coordinate vector.

    Raises:
        LieDualError: ``DIM_MISMATCH`` if a vector has the wrong length.

    Returns:
        The coordinate vector of ``[x, y]``.
    """
    _check_vector(g, x)
    _check_vector(g, y)
    return column(g.bracket_lists(entries(x), entries(y)))


def killing_form(g: LieAlgebra) -> DomainMatrix:
    """
    Returns:
        The Killing form ``B(e_i, e_j) = Tr(ad e_i ad e_j)``.
    """
    return g.killing_form()


def killing_signature(g: LieAlgebra) -> Signature:
    return symmetric_signature(g.killing_form())


def is_semisimple(g: LieAlgebra) -> bool:
    return g.dim > 0 and rank(g.killing_form()) == g.dim


def is_compact(g: LieAlgebra) -> bool:
    return g.dim > 0 and killing_signature(g).n_neg == g.dim


def is_ad_invariant(g: LieAlgebra, form: DomainMatrix) -> bool:
    """
    Returns:
        ``True`` iff ``B([x, y], z) + B(y, [x, z]) = 0`` for all basis
        vectors, i.e. ``ad(e_i)^T B + B ad(e_i) = 0``.
    """
    return all(
        is_zero(matmul(m.transpose(), form) + matmul(form, m))
        for m in g.ad_matrices()
    )


def _span_with(basis: DomainMatrix, vectors: List[DomainMatrix]) -> DomainMatrix:
    if not vectors:
        return basis
    return span_basis(hstack(basis, from_columns(vectors, basis.shape[0])))


def subalgebra_closure(g: LieAlgebra, seeds: List[DomainMatrix]) -> SubalgebraView:
    """
    Computes the smallest subalgebra containing some vectors.

    Args:
        g (LieAlgebra): The Lie algebra.
        seeds (list): The generating vectors.

    Returns:
        The :py:class:`SubalgebraView` of the generated subalgebra.
    """
    basis = span_basis(from_columns(seeds, g.dim))
    while True:
        vectors = [entries(v) for v in columns(basis)]
        brackets = []
        for a in range(len(vectors)):
            for b in range(a + 1, len(vectors)):
                z = g.bracket_lists(vectors[a], vectors[b])
                if any(z):
                    brackets.append(column(z))
        extended = _span_with(basis, brackets)
        if extended.shape[1] == basis.shape[1]:
            break
        basis = extended
    return SubalgebraView(Subspace(g, basis))


def ideal_closure(g: LieAlgebra, seeds: List[DomainMatrix]) -> Subspace:
    """
    Computes the smallest ideal containing some vectors.

    Args:
        g (LieAlgebra): The Lie algebra.
        seeds (list): The generating vectors.

    Returns:
        The :py:class:`Subspace` of the generated ideal.
    """
    basis = span_basis(from_columns(seeds, g.dim))
    frontier = columns(basis)
    while frontier:
        images = [
            matmul(g.ad(i), v)
            for v in frontier
            for i in range(g.dim)
        ]
        extended = _span_with(basis, [v for v in images if not is_zero(v)])
        if extended.shape[1] == basis.shape[1]:
            break
        frontier = [v for v in columns(extended) if solve(basis, v) is None] if basis.shape[1] else columns(extended)
        basis = extended
    return Subspace(g, basis)


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    return all(
        s.contains(matmul(g.ad(i), v))
        for v in s.vectors()
        for i in range(g.dim)
    )


def center(g: LieAlgebra) -> Subspace:
    """
    Returns:
        The center of ``g``, i.e. the joint kernel of the ``ad e_i``.
    """
    n = g.dim
    rows = []
    for m in g.ad_matrices():
        rows.extend(m.to_list())
    if not rows:
        return Subspace.whole(g)
    return Subspace(g, kernel_basis(DomainMatrix(rows, (len(rows), n), QQ)))


def derived_algebra(g: LieAlgebra) -> Subspace:
    """
    Returns:
        The derived algebra ``[g, g]``.
    """
    vectors = []
    for (i, j) in g.table:
        values = [QQ.zero] * g.dim
        for (k, c) in g.table[(i, j)].items():
            values[k] = c
        vectors.append(column(values))
    return Subspace.span(g, vectors)


def centralizer(g: LieAlgebra, s: Subspace, within: Subspace = None) -> Subspace:
    """
    Computes the centralizer of a subspace.

    Args:
        g (LieAlgebra): The Lie algebra.
        s (Subspace): The subspace to centralize.
        within (Subspace): If set, restricts the result to this subspace.

    Returns:
        ``{x in within : [x, s] = 0}``.
    """
    domain = within.basis if within is not None else identity(g.dim)
    if domain.shape[1] == 0:
        return Subspace.zero(g)
    rows = []
    for y in s.vectors():
        # [x, y] = -ad(y) x
        rows.extend(matmul(g.ad_vector(y), domain).to_list())
    if not rows:
        return Subspace(g, domain)
    coeffs = kernel_basis(DomainMatrix(rows, (len(rows), domain.shape[1]), QQ))
    return Subspace(g, matmul(domain, coeffs))


def transform(g: LieAlgebra, p: DomainMatrix, name: str = None) -> LieAlgebra:
    """
    Rewrites a Lie algebra in a new basis.

    Args:
        g (LieAlgebra): The Lie algebra.
        p (DomainMatrix): An invertible matrix whose columns are the new basis
            vectors expressed in the old basis.
        name (str): The name of the result (default: the name of ``g``).

    Returns:
        The :py:class:`LieAlgebra` with structure constants
        ``P^{-1} [P e_i, P e_j]`` (and transported ambient matrices).
    """
    n = g.dim
    p_inv = inverse(p)
    vectors = [entries(v) for v in columns(p)]
    sc = dict()
    for i in range(n):
        for j in range(i + 1, n):
            z = g.bracket_lists(vectors[i], vectors[j])
            if not any(z):
                continue
            for (k, c) in enumerate(entries(matmul(p_inv, column(z)))):
                if c:
                    sc[(i, j, k)] = c
    ambient = None
    if g.ambient is not None:
        ambient = [g.ambient_of(v) for v in columns(p)]
    return LieAlgebra(n, sc, ambient, name=name or g.name, check=False)


def _flatten(m: DomainMatrix) -> list:
    values = []
    for row in to_gaussian(m).to_list():
        for a in row:
            values.append(a.x)
            values.append(a.y)
    return values


def from_ambient(matrices: List[DomainMatrix], name: str = None, check: bool = True) -> LieAlgebra:
    """
    Builds a Lie algebra from linearly independent square matrices over
    ``QQ_I`` whose real span is closed under the commutator.

    Args:
        matrices (list): The ambient basis.
        name (str): The name of the algebra.
        check (bool): Pass ``True`` to verify the Jacobi identity and the
            realization.

    Raises:
        LieDualError: ``NOT_LIE_ALGEBRA`` if a commutator leaves the span.

    Returns:
        The :py:class:`LieAlgebra` whose structure constants are the
        coordinates of the commutators.
    """
    n = len(matrices)
    probe = LieAlgebra(n, dict(), matrices, name=name, check=False)
    sc = dict()
    for i in range(n):
        for j in range(i + 1, n):
            c = probe.ambient_coordinates(commutator(probe.ambient[i], probe.ambient[j]))
            if c is None:
                raise LieDualError(ErrorCode.NOT_LIE_ALGEBRA, f"commutator of ambient matrices {i} and {j} leaves the span")
            for (k, v) in enumerate(entries(c)):
                if v:
                    sc[(i, j, k)] = v
    g = LieAlgebra(n, sc, probe.ambient, name=name, check=check)
    g._flat = probe._flat
    logger.debug("built %r from %d ambient matrices", g, n)
    return g


def direct_sum(*algebras: LieAlgebra, name: str = None) -> LieAlgebra:
    """
    Builds the direct sum of Lie algebras, basis of the first summand first.
    Ambient matrices (if every summand has some) are placed block-diagonally.
    """
    sc = dict()
    offset = 0
    for g in algebras:
        for ((i, j, k), c) in g.sc.items():
            sc[(i + offset, j + offset, k + offset)] = c
        offset += g.dim
    ambient = None
    if algebras and all(g.ambient is not None for g in algebras):
        sizes = [g.ambient[0].shape[0] if g.dim else 0 for g in algebras]
        total = sum(sizes)
        ambient = []
        start = 0
        for (g, size) in zip(algebras, sizes):
            for a in g.ambient:
                rows = [[QQ_I.zero] * total for _ in range(total)]
                for (r, row) in enumerate(a.to_list()):
                    for (c, value) in enumerate(row):
                        rows[start + r][start + c] = value
                ambient.append(DomainMatrix(rows, (total, total), QQ_I))
            start += size
    if name is None:
        name = "+".join(str(g.name) for g in algebras)
    return LieAlgebra(offset, sc, ambient, name=name, check=False)


def verify_homomorphism(src: LieAlgebra, dst: LieAlgebra, phi: DomainMatrix) -> bool:
    """
    Checks that a linear map between Lie algebras preserves brackets.

    Args:
        src (LieAlgebra): The source algebra.
        dst (LieAlgebra): The target algebra.
        phi (DomainMatrix): A ``(dst.dim, src.dim)`` matrix over ``QQ``.

    Returns:
        ``True`` iff ``phi [e_i, e_j] = [phi e_i, phi e_j]`` for all basis
        vectors.
    """
    require(
        phi.shape == (dst.dim, src.dim),
        ErrorCode.DIM_MISMATCH,
        f"map of shape {phi.shape} between algebras of dims {src.dim} and {dst.dim}"
    )
    images = [entries(v) for v in columns(phi)]
    for i in range(src.dim):
        for j in range(i + 1, src.dim):
            lhs = matmul(phi, column(src.bracket_lists(
                [QQ.one if k == i else QQ.zero for k in range(src.dim)],
                [QQ.one if k == j else QQ.zero for k in range(src.dim)]
            )))
            rhs = column(dst.bracket_lists(images[i], images[j]))
            if not equal(lhs, rhs):
                logger.debug("bracket of (e_%d, e_%d) is not preserved", i, j)
                return False
    return True


# ---------------------------------------------------------------------------
# Commutants and centroid
# ---------------------------------------------------------------------------

def cyclic_vector(ops: List[DomainMatrix], n: int) -> Optional[DomainMatrix]:
    """
    Returns:
        The first vector, among the standard basis vectors and a few fixed
        dense vectors, whose orbit under the associative algebra generated by
        ``ops`` spans ``QQ^n``, or ``None``.
    """
    candidates = [unit(n, i) for i in range(n)]
    candidates += [column([QQ(j + 1) ** k for j in range(n)]) for k in range(4)]
    for w in candidates:
        if orbit(ops, w, n)[0].shape[1] == n:
            return w
    return None


def orbit(ops: List[DomainMatrix], w: DomainMatrix, n: int) -> Tuple[DomainMatrix, list]:
    """
    Breadth first exploration of the words ``A_{a_k} ... A_{a_1} w``.

    Returns:
        A pair ``(basis, words)`` where ``basis`` holds independent vectors of
        the orbit span and ``words[m] = (parent, op)`` tells that
        ``basis[m] = ops[op] basis[parent]`` (``(None, None)`` for ``w``).
    """
    vectors = [w]
    words = [(None, None)]
    basis = from_columns(vectors, n)
    queue = [0]
    while queue and len(vectors) < n:
        m = queue.pop(0)
        for (a, op) in enumerate(ops):
            v = matmul(op, vectors[m])
            if solve(basis, v) is None:
                vectors.append(v)
                words.append((m, a))
                basis = from_columns(vectors, n)
                queue.append(len(vectors) - 1)
    return (basis, words)


def commutant(ops: List[DomainMatrix], n: int) -> Optional[List[DomainMatrix]]:
    """
    Computes the commutant ``{T : T A = A T for all A in ops}`` of a family
    of operators admitting a cyclic vector.

    Any ``T`` in the commutant is determined by ``t = T w`` where ``w`` is a
    cyclic vector. Writing ``u_m = W_m w`` for the orbit basis, ``T`` must
    send ``u_m`` to ``W_m t`` and the compatibility constraints
    ``(A W_m - sum_l alpha_l W_l) t = 0`` (with ``A u_m = sum_l alpha_l u_l``)
    are linear in ``t``.

    Args:
        ops (list): Square ``(n, n)`` matrices over ``QQ``.
        n (int): The dimension of the space.

    Returns:
        A basis of the commutant (as matrices), or ``None`` if the family
        has no cyclic standard basis vector.
    """
    if n == 0:
        return []
    w = cyclic_vector(ops, n)
    if w is None:
        return None
    (u, words) = orbit(ops, w, n)
    walls = []  # walls[m] = W_m
    for (parent, a) in words:
        if parent is None:
            walls.append(identity(n))
        else:
            walls.append(matmul(ops[a], walls[parent]))
    u_inv = inverse(u)
    u_vectors = columns(u)
    solutions = identity(n)  # columns span the admissible t
    for (a, op) in enumerate(ops):
        for m in range(n):
            if solutions.shape[1] == 0:
                break
            alpha = entries(matmul(u_inv, matmul(op, u_vectors[m])))
            constraint = matmul(op, walls[m])
            for (l, c) in enumerate(alpha):
                if c:
                    constraint = constraint - walls[l] * c
            reduced = matmul(constraint.to_dense(), solutions)
            if is_zero(reduced):
                continue
            solutions = matmul(solutions, kernel_basis(reduced))
    result = []
    for t in columns(solutions):
        images = [matmul(walls[m], t) for m in range(n)]
        # T u = [W_0 t, ..., W_{n-1} t] hence T = images * u^{-1}.
        result.append(matmul(from_columns(images, n), u_inv))
    return result


def lie_generators(g: LieAlgebra) -> List[DomainMatrix]:
    """
    Returns:
        A greedy set of basis vectors generating ``g`` as a Lie algebra.
    """
    gens = []
    closure = Subspace.zero(g)
    for i in range(g.dim):
        e = unit(g.dim, i)
        if closure.contains(e):
            continue
        gens.append(e)
        closure = subalgebra_closure(g, gens).subspace
        if closure.dim == g.dim:
            break
    return gens


def centroid(g: LieAlgebra) -> List[DomainMatrix]:
    """
    Computes a basis of the centroid of an indecomposable semisimple algebra.

    Raises:
        LieDualError: ``NOT_SIMPLE_SUMMAND`` if ``g`` has more than one
            minimal ideal.

    Returns:
        The list of basis matrices, the identity first.
    """
    from .ideals import minimal_ideals
    decomposition = minimal_ideals(g)
    require(
        len(decomposition.minimal_ideals) == 1,
        ErrorCode.NOT_SIMPLE_SUMMAND,
        f"{len(decomposition.minimal_ideals)} minimal ideals, the centroid requires exactly one"
    )
    ops = [g.ad_vector(x) for x in lie_generators(g)]
    basis = commutant(ops, g.dim)
    require(basis is not None, ErrorCode.NOT_SIMPLE_SUMMAND, "no cyclic vector for the adjoint action")
    ident = identity(g.dim)
    others = [t for t in basis if not is_zero(traceless_part(t))][:len(basis) - 1]
    logger.debug("centroid of %r has dimension %d", g, len(basis))
    return [ident] + others


def centroid_dim(g: LieAlgebra) -> int:
    """
    Returns:
        The dimension of the centroid ``{T : T ad x = ad x T}`` of an
        indecomposable semisimple algebra: 1 if ``g`` carries no complex
        structure, 2 otherwise.
    """
    return len(centroid(g))


def traceless_part(t: DomainMatrix) -> DomainMatrix:
    n = t.shape[0]
    return (t - identity(n) * (trace(t) / QQ(n))).to_dense()


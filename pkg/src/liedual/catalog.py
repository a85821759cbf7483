#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Classical families of Lie algebras, their involutions, explicit
isomorphism witnesses and the named fixtures used by the tests and the
command line.

Every algebra is realized by matrices over ``QQ_I``; structure constants and
involution matrices are computed from that realization.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from .exact import (
    conjugate,
    diagonal,
    identity,
    inverse,
    matmul,
    matrix,
    rank,
    to_gaussian,
)
from .exceptions import ErrorCode, LieDualError, require
from .invol import CompactTriad, Involution, NoncompactPairC, fixed_view
from .lie import LieAlgebra, direct_sum, from_ambient

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

def elementary(n: int, i: int, j: int, value=1, domain=QQ) -> DomainMatrix:
    """
    Returns:
        The ``(n, n)`` matrix ``value * E_ij``.
    """
    m = [[domain.zero] * n for _ in range(n)]
    m[i][j] = domain.convert(value)
    return DomainMatrix(m, (n, n), domain)


def block_diagonal(*blocks: DomainMatrix) -> DomainMatrix:
    domain = QQ_I if any(b.domain == QQ_I for b in blocks) else QQ
    n = sum(b.shape[0] for b in blocks)
    rows = [[domain.zero] * n for _ in range(n)]
    start = 0
    for b in blocks:
        for (r, row) in enumerate(b.to_list()):
            for (c, a) in enumerate(row):
                rows[start + r][start + c] = domain.convert(a)
        start += b.shape[0]
    return DomainMatrix(rows, (n, n), domain)


def j_m(m: int) -> DomainMatrix:
    """
    Returns:
        ``J_m = [[0, -I_m], [I_m, 0]]``.
    """
    rows = [[0] * (2 * m) for _ in range(2 * m)]
    for k in range(m):
        rows[k][m + k] = -1
        rows[m + k][k] = 1
    return matrix(rows)


def i_mn(m: int, n: int) -> DomainMatrix:
    """
    Returns:
        ``I_{m,n} = diag(I_m, -I_n)``.
    """
    return diagonal([1] * m + [-1] * n)


def j_mn(m: int, n: int) -> DomainMatrix:
    """
    Returns:
        ``J_{m,n} = diag(J_m, J_n)``.
    """
    return block_diagonal(j_m(m), j_m(n))


def j_prime(p: int) -> DomainMatrix:
    """
    Returns:
        ``J'_{2p} = [[0, I_{2p}], [I_{2p}, 0]]``.
    """
    n = 2 * p
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        rows[k][n + k] = 1
        rows[n + k][k] = 1
    return matrix(rows)


def i_prime(p: int, q: int) -> DomainMatrix:
    """
    Returns:
        ``I'_{2p,2q} = diag(I_{2p}, -i I_{2q})`` over ``QQ_I``.
    """
    return diagonal([QQ_I(1, 0)] * (2 * p) + [QQ_I(0, -1)] * (2 * q), QQ_I)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

def _check_params(condition: bool, message: str):
    require(condition, ErrorCode.BAD_PARAMS, message)


@lru_cache(maxsize=None)
def so_pq(p: int, q: int) -> LieAlgebra:
    """
    Builds ``so(p, q) = {X : X^T I_{p,q} + I_{p,q} X = 0}``.

    The basis lists, for ``i < j``, ``E_ij - E_ji`` when both indices lie in
    the same block and ``E_ij + E_ji`` otherwise.
    """
    n = p + q
    _check_params(p >= 0 and q >= 0 and n >= 2, f"so({p},{q}) requires p, q >= 0 and p + q >= 2")
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            same = (i < p) == (j < p)
            mats.append(elementary(n, i, j) + elementary(n, j, i, -1 if same else 1))
    return from_ambient(mats, name=f"so({p},{q})" if q else f"so({p})")


def so_n(n: int) -> LieAlgebra:
    return so_pq(n, 0)


@lru_cache(maxsize=None)
def u_pq(p: int, q: int) -> LieAlgebra:
    """
    Builds ``u(p, q) = {X : X^* I_{p,q} + I_{p,q} X = 0}`` (``u(p)`` when
    ``q = 0``).

    The basis lists ``i E_kk``, then for ``k < l`` the pair
    ``E_kl - E_lk, i (E_kl + E_lk)`` inside a block and
    ``E_kl + E_lk, i (E_kl - E_lk)`` across blocks.
    """
    n = p + q
    _check_params(p >= 0 and q >= 0 and n >= 1, f"u({p},{q}) requires p + q >= 1")
    i_ = QQ_I(0, 1)
    mats = [elementary(n, k, k, i_, QQ_I) for k in range(n)]
    for k in range(n):
        for l in range(k + 1, n):
            sign = -1 if (k < p) == (l < p) else 1
            mats.append(elementary(n, k, l, 1, QQ_I) + elementary(n, l, k, sign, QQ_I))
            mats.append(elementary(n, k, l, i_, QQ_I) + elementary(n, l, k, QQ_I(0, -sign), QQ_I))
    return from_ambient(mats, name=f"u({p},{q})" if q else f"u({p})")


@lru_cache(maxsize=None)
def su_n(n: int) -> LieAlgebra:
    """
    Builds ``su(n)`` on the basis ``i (E_kk - E_{k+1,k+1})``, then
    ``E_jk - E_kj`` and ``i (E_jk + E_kj)`` for ``j < k``.
    """
    _check_params(n >= 2, f"su({n}) requires n >= 2")
    i_ = QQ_I(0, 1)
    mats = [
        elementary(n, k, k, i_, QQ_I) + elementary(n, k + 1, k + 1, -i_, QQ_I)
        for k in range(n - 1)
    ]
    for j in range(n):
        for k in range(j + 1, n):
            mats.append(elementary(n, j, k, 1, QQ_I) + elementary(n, k, j, -1, QQ_I))
            mats.append(elementary(n, j, k, i_, QQ_I) + elementary(n, k, j, i_, QQ_I))
    return from_ambient(mats, name=f"su({n})")


@lru_cache(maxsize=None)
def sl_n_r(n: int) -> LieAlgebra:
    """
    Builds ``sl(n, R)`` on the basis ``E_ij`` (``i != j``, row major), then
    ``E_kk - E_{k+1,k+1}``.
    """
    _check_params(n >= 2, f"sl({n},R) requires n >= 2")
    mats = [elementary(n, i, j) for i in range(n) for j in range(n) if i != j]
    mats += [elementary(n, k, k) + elementary(n, k + 1, k + 1, -1) for k in range(n - 1)]
    return from_ambient(mats, name=f"sl({n},R)")


@lru_cache(maxsize=None)
def gl_n(n: int) -> LieAlgebra:
    _check_params(n >= 1, f"gl({n},R) requires n >= 1")
    return from_ambient(
        [elementary(n, i, j) for i in range(n) for j in range(n)],
        name=f"gl({n},R)"
    )


@lru_cache(maxsize=None)
def copies(factor: str, n: int, count: int) -> LieAlgebra:
    """
    Returns:
        The direct sum of ``count`` copies of a simple family member.
    """
    _check_params(count >= 1, "at least one summand is required")
    g = FAMILIES[factor](n)
    return direct_sum(*([g] * count), name="+".join([g.name] * count))


FAMILIES = {
    "SO_N": so_n,
    "SU_N": su_n,
    "SL_N_R": sl_n_r,
    "GL_N": gl_n,
}


# ---------------------------------------------------------------------------
# Involutions
# ---------------------------------------------------------------------------

def ad(a: DomainMatrix) -> Callable[[DomainMatrix], DomainMatrix]:
    a_inv = inverse(to_gaussian(a))
    return lambda x: matmul(matmul(a, x), a_inv)


def neg_transpose(x: DomainMatrix) -> DomainMatrix:
    return -x.transpose()


def neg_transpose_ad(d: DomainMatrix) -> Callable[[DomainMatrix], DomainMatrix]:
    """
    Returns:
        The map ``X -> -D X^T D^{-1}``.
    """
    d_inv = inverse(d)
    return lambda x: -matmul(matmul(d, x.transpose()), d_inv)


def involution_from_ambient(g: LieAlgebra, f: Callable, name: str) -> Involution:
    """
    Computes the matrix of an involution given by its action on the ambient
    matrices.

    Raises:
        LieDualError: ``NOT_INVOLUTION`` if an image leaves the algebra,
            ``NOT_AUTOMORPHISM`` if brackets are not preserved.
    """
    cols = []
    for (k, a) in enumerate(g.ambient):
        c = g.ambient_coordinates(f(a))
        require(c is not None, ErrorCode.NOT_INVOLUTION, f"{name} maps ambient basis matrix {k} outside {g.name}")
        cols.append([row[0] for row in c.to_list()])
    n = g.dim
    mat = DomainMatrix([[cols[j][i] for j in range(n)] for i in range(n)], (n, n), QQ)
    return Involution(g, mat, name)


def block_map(d: int, perm: Tuple[int, ...], factor: Optional[DomainMatrix] = None) -> DomainMatrix:
    """
    Returns:
        The matrix on ``len(perm)`` copies of a ``d``-dimensional algebra
        sending the summand ``a`` to the summand ``perm[a]`` after applying
        ``factor`` (default: identity) to it.
    """
    count = len(perm)
    factor = identity(d) if factor is None else factor
    f = factor.to_list()
    rows = [[QQ.zero] * (d * count) for _ in range(d * count)]
    for (a, b) in enumerate(perm):
        for r in range(d):
            for c in range(d):
                rows[b * d + r][a * d + c] = f[r][c]
    return DomainMatrix(rows, (d * count, d * count), QQ)


def _pq(params: dict) -> Tuple[int, int]:
    return (params["p"], params["q"])


def _ambient_involution(g: LieAlgebra, tag: str, params: dict) -> Involution:
    if tag == "AD_I_PQ":
        (p, q) = _pq(params)
        _check_params(p + q == g.ambient[0].shape[0], f"I_{{{p},{q}}} does not fit {g.name}")
        return involution_from_ambient(g, ad(i_mn(p, q)), f"Ad I_{{{p},{q}}}")
    if tag == "AD_J_M":
        m = params["m"]
        _check_params(2 * m == g.ambient[0].shape[0], f"J_{m} does not fit {g.name}")
        return involution_from_ambient(g, ad(j_m(m)), f"Ad J_{m}")
    if tag == "AD_J_PQ":
        (p, q) = _pq(params)
        _check_params(2 * (p + q) == g.ambient[0].shape[0], f"J_{{{p},{q}}} does not fit {g.name}")
        return involution_from_ambient(g, ad(j_mn(p, q)), f"Ad J_{{{p},{q}}}")
    if tag == "AD_JPRIME_2P":
        p = params["p"]
        _check_params(4 * p == g.ambient[0].shape[0], f"J'_{2 * p} does not fit {g.name}")
        return involution_from_ambient(g, ad(j_prime(p)), f"Ad J'_{2 * p}")
    if tag == "NEG_TRANSPOSE":
        return involution_from_ambient(g, neg_transpose, "-transpose")
    if tag == "NEG_TRANSPOSE_I_PQ":
        (p, q) = _pq(params)
        return involution_from_ambient(g, neg_transpose_ad(i_mn(p, q)), f"-Ad I_{{{p},{q}}} transpose")
    if tag == "CONJUGATION":
        return involution_from_ambient(g, conjugate, "conjugation")
    raise LieDualError(ErrorCode.BAD_PARAMS, f"unknown involution tag {tag}")


# Permutations of the summands of a direct sum, 0-based.
SUMMAND_PERMUTATIONS = {
    "RHO": (1, 0),
    "RHO_12_34": (1, 0, 3, 2),
    "RHO_14_23": (3, 2, 1, 0),
    "RHO_13_24": (2, 3, 0, 1),
    "RHO_13": (2, 1, 0, 3),
    "RHO_34": (0, 1, 3, 2),
}


def factor_involution(factor: str, n: int) -> Involution:
    """
    Returns:
        The involution ``nu`` used on each summand: complex conjugation for
        ``su(n)``, ``Ad I_{1,n-1}`` for ``so(n)``, ``-transpose`` for
        ``sl(n, R)``.
    """
    g = FAMILIES[factor](n)
    if factor == "SU_N":
        return _ambient_involution(g, "CONJUGATION", dict())
    if factor == "SO_N":
        return _ambient_involution(g, "AD_I_PQ", {"p": 1, "q": n - 1})
    if factor == "SL_N_R":
        return _ambient_involution(g, "NEG_TRANSPOSE", dict())
    raise LieDualError(ErrorCode.BAD_PARAMS, f"no summand involution for {factor}")


def _summand_involution(g: LieAlgebra, tag: str, params: dict) -> Involution:
    (factor, n, count) = (params["factor"], params["n"], params["copies"])
    d = g.dim // count
    nu = factor_involution(factor, n).mat
    if tag == "NU_OPLUS_NU":
        return Involution(g, block_map(d, tuple(range(count)), nu), "nu+nu")
    if tag == "RHO_COMPOSE":
        _check_params(count == 2, "RHO_COMPOSE requires two summands")
        return Involution(g, block_map(d, (1, 0), nu), "rho*(nu+nu)")
    if tag in SUMMAND_PERMUTATIONS:
        perm = SUMMAND_PERMUTATIONS[tag]
        _check_params(len(perm) == count, f"{tag} requires {len(perm)} summands")
        return Involution(g, block_map(d, perm), tag.lower())
    raise LieDualError(ErrorCode.BAD_PARAMS, f"unknown summand involution tag {tag}")


@dataclass
class FamilySpec:
    family: str                      # SO_N, SU_N, SL_N_R, SO_PQ, DIRECT_SUM, FOURFOLD
    params: dict = field(default_factory=dict)
    involutions: List[Tuple[str, dict]] = field(default_factory=list)


@dataclass
class BuiltFamily:
    algebra: LieAlgebra
    involutions: List[Involution]


def build_algebra(spec: FamilySpec) -> LieAlgebra:
    params = spec.params
    try:
        if spec.family in FAMILIES:
            return FAMILIES[spec.family](params["n"])
        if spec.family == "SO_PQ":
            return so_pq(params["p"], params["q"])
        if spec.family == "DIRECT_SUM":
            return copies(params["factor"], params["n"], params["copies"])
        if spec.family == "FOURFOLD":
            return copies(params["factor"], params["n"], 4)
    except KeyError as e:
        raise LieDualError(ErrorCode.BAD_PARAMS, f"{spec.family} requires parameter {e}")
    raise LieDualError(ErrorCode.BAD_PARAMS, f"unknown family {spec.family}")


def build(spec: FamilySpec) -> BuiltFamily:
    """
    Builds an algebra of a family together with its declared involutions.

    Args:
        spec (FamilySpec): The family and the involution tags.

    Raises:
        LieDualError: ``BAD_PARAMS`` if a parameter is missing or out of
            range, or ``NOT_INVOLUTION`` / ``NOT_AUTOMORPHISM`` if a declared
            involution fails its checks.

    Returns:
        The :py:class:`BuiltFamily`.
    """
    g = build_algebra(spec)
    invs = []
    for (tag, params) in spec.involutions:
        if spec.family in ("DIRECT_SUM", "FOURFOLD"):
            summands = dict(spec.params)
            summands.setdefault("copies", 4)
            invs.append(_summand_involution(g, tag, {**summands, **params}))
        else:
            invs.append(_ambient_involution(g, tag, params))
    logger.debug("built %s with involutions %s", g.name, [inv.name for inv in invs])
    return BuiltFamily(g, invs)


def triad(spec: FamilySpec, metadata: dict = None) -> CompactTriad:
    built = build(spec)
    require(len(built.involutions) == 2, ErrorCode.BAD_PARAMS, "a triad requires two involutions")
    (theta1, theta2) = built.involutions
    return CompactTriad(built.algebra, theta1, theta2, _metadata(spec, metadata))


def pair(spec: FamilySpec, metadata: dict = None) -> NoncompactPairC:
    """
    Builds a pair from a spec whose involutions are ``sigma`` then
    ``theta``.
    """
    built = build(spec)
    require(len(built.involutions) == 2, ErrorCode.BAD_PARAMS, "a pair requires two involutions")
    (sigma, theta) = built.involutions
    return NoncompactPairC(built.algebra, sigma, theta, _metadata(spec, metadata))


def _metadata(spec: FamilySpec, extra: dict = None) -> dict:
    metadata = {
        "family": spec.family,
        "params": dict(spec.params),
        "involutions": [[tag, dict(params)] for (tag, params) in spec.involutions],
    }
    metadata.update(extra or dict())
    return metadata


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

@dataclass
class Fixture:
    name: str
    build: Callable
    expected: Dict[str, object] = field(default_factory=dict)
    provenance: Dict[str, str] = field(default_factory=dict)


def _so_triad(p: int, q: int, second: str) -> Callable:
    def builder():
        if second == "AD_J_PQ":
            spec = FamilySpec("SO_N", {"n": 2 * p + 2 * q}, [("AD_I_PQ", {"p": 2 * p, "q": 2 * q}), ("AD_J_PQ", {"p": p, "q": q})])
        else:
            spec = FamilySpec("SO_N", {"n": 4 * p}, [("AD_I_PQ", {"p": 2 * p, "q": 2 * p}), ("AD_J_M", {"m": 2 * p})])
        return triad(spec)
    return builder


def _su_triad(n: int) -> Callable:
    def builder():
        p = n // 2 if n % 2 == 0 else 1
        return triad(FamilySpec("SU_N", {"n": n}, [("CONJUGATION", dict()), ("AD_I_PQ", {"p": p, "q": n - p})]))
    return builder


def _so5_triad():
    return triad(FamilySpec("SO_N", {"n": 5}, [("AD_I_PQ", {"p": 2, "q": 3}), ("AD_I_PQ", {"p": 1, "q": 4})]))


def _keps_pair(n: int) -> Callable:
    def builder():
        return pair(FamilySpec(
            "SL_N_R", {"n": n},
            [("NEG_TRANSPOSE_I_PQ", {"p": 2, "q": n - 2}), ("NEG_TRANSPOSE", dict())]
        ))
    return builder


def _counterexample_pair(m: int, n: int) -> Callable:
    def builder():
        return pair(FamilySpec("SL_N_R", {"n": m + n}, [("AD_I_PQ", {"p": m, "q": n}), ("NEG_TRANSPOSE", dict())]))
    return builder


def _riemannian_pair(count: int) -> Callable:
    def builder():
        if count == 1:
            built = build(FamilySpec("SO_PQ", {"p": 2, "q": 1}, [("AD_I_PQ", {"p": 2, "q": 1})]))
            theta = built.involutions[0]
            g = built.algebra
        else:
            h = so_pq(2, 1)
            theta_h = _ambient_involution(h, "AD_I_PQ", {"p": 2, "q": 1})
            g = direct_sum(h, h, name="so(2,1)+so(2,1)")
            theta = Involution(g, block_diagonal(theta_h.mat, theta_h.mat), "Ad I_{2,1}+Ad I_{2,1}")
        sigma = Involution(g, theta.mat, "sigma", check=False)
        return NoncompactPairC(g, sigma, theta, {"family": "SO_PQ", "params": {"p": 2, "q": 1, "copies": count}})
    return builder


def _summand_triad(first: str, second: str, count: int = 2, metadata: dict = None) -> Callable:
    def builder():
        family = "DIRECT_SUM" if count == 2 else "FOURFOLD"
        spec = FamilySpec(family, {"factor": "SU_N", "n": 2, "copies": count}, [(first, dict()), (second, dict())])
        return triad(spec, metadata)
    return builder


FIXTURES: Dict[str, Fixture] = {
    fixture.name: fixture for fixture in [
        Fixture(
            "so4-IJ", _so_triad(1, 1, "AD_J_PQ"),
            {"kind": "triad", "dim": 6, "joint_dims": (2, 0, 2, 2), "k1k2_dim": 2, "fixed_sigma_dim": 4,
             "center_location": "k", "ideal_count": 2},
            {"k1k2_dim": "PUBLISHED", "center_location": "PUBLISHED", "joint_dims": "DERIVED"},
        ),
        Fixture(
            "so6-IJ", _so_triad(1, 2, "AD_J_PQ"),
            {"kind": "triad", "dim": 15, "ideal_count": 1},
            {"dim": "TRIVIAL"},
        ),
        Fixture(
            "so8-IJ", _so_triad(2, 2, "AD_J_PQ"),
            {"kind": "triad", "dim": 28, "k1k2_dim": 8, "ideal_count": 1},
            {"k1k2_dim": "PUBLISHED"},
        ),
        Fixture(
            "so4-IJ2", _so_triad(1, 1, "AD_J_M"),
            {"kind": "triad", "dim": 6, "joint_dims": (1, 1, 3, 1), "k1k2_dim": 1, "fixed_sigma_dim": 4,
             "center_location": "p", "ideal_count": 2},
            {"k1k2_dim": "PUBLISHED", "center_location": "PUBLISHED", "joint_dims": "DERIVED"},
        ),
        Fixture(
            "so8-IJ4", _so_triad(2, 2, "AD_J_M"),
            {"kind": "triad", "dim": 28, "k1k2_dim": 6, "ideal_count": 1},
            {"k1k2_dim": "PUBLISHED"},
        ),
        Fixture(
            "so5-I23", _so5_triad,
            {"kind": "triad", "dim": 10, "root_count": 8, "a1_dim": 2, "ideal_count": 1},
            {"root_count": "DERIVED"},
        ),
        Fixture(
            "su3-CI", _su_triad(3),
            {"kind": "triad", "dim": 8, "ideal_count": 1},
            {"dim": "TRIVIAL"},
        ),
        Fixture(
            "su4-CI", _su_triad(4),
            {"kind": "triad", "dim": 15, "ideal_count": 1},
            {"dim": "TRIVIAL"},
        ),
        Fixture(
            "su2-Ta", _summand_triad("RHO", "RHO_COMPOSE", metadata={"self_dual_witness": "PHI_NU"}),
            {"kind": "triad", "dim": 6, "type": "T_a", "dual_type": "P_a", "ideal_count": 2, "self_dual": True},
            {"type": "PUBLISHED", "self_dual": "PUBLISHED"},
        ),
        Fixture(
            "su2-Tb", _summand_triad("RHO", "NU_OPLUS_NU"),
            {"kind": "triad", "dim": 6, "type": "T_b", "dual_type": "P_b", "ideal_count": 2},
            {"type": "PUBLISHED"},
        ),
        Fixture(
            "su2-Tc", _summand_triad("RHO_12_34", "RHO_14_23", 4, {"self_dual_witness": "RHO_13", "self_associated_witness": "RHO_34"}),
            {"kind": "triad", "dim": 12, "type": "T_c", "dual_type": "P_c", "ideal_count": 4,
             "self_dual": True, "self_associated": True},
            {"type": "PUBLISHED", "self_dual": "PUBLISHED", "self_associated": "PUBLISHED"},
        ),
        Fixture(
            "su2-Td", _summand_triad("NU_OPLUS_NU", "RHO", metadata={"self_associated_witness": "PHI_NU"}),
            {"kind": "triad", "dim": 6, "type": "T_d", "dual_type": "P_d", "ideal_count": 2, "self_associated": True},
            {"type": "PUBLISHED", "self_associated": "PUBLISHED"},
        ),
        Fixture(
            "sl3-keps", _keps_pair(3),
            {"kind": "pair", "dim": 8, "fixed_sigma_dim": 3, "fixed_sigma_signature": (2, 1, 0), "grading": (1, 2, 2, 2, 1),
             "keps": True},
            {"fixed_sigma_dim": "PUBLISHED", "fixed_sigma_signature": "DERIVED", "grading": "DERIVED", "keps": "PUBLISHED"},
        ),
        Fixture(
            "sl4-keps", _keps_pair(4),
            {"kind": "pair", "dim": 15, "fixed_sigma_dim": 6, "grading": (1, 4, 5, 4, 1), "keps": True},
            {"fixed_sigma_dim": "DERIVED", "grading": "DERIVED", "keps": "PUBLISHED"},
        ),
        Fixture(
            "sl3-counter", _counterexample_pair(1, 2),
            {"kind": "pair", "dim": 8, "module": "REDUCIBLE_WITNESS", "witness_dim": 2, "effective": True},
            {"witness_dim": "DERIVED", "module": "PUBLISHED"},
        ),
        Fixture(
            "sl4-counter", _counterexample_pair(2, 2),
            {"kind": "pair", "dim": 15, "module": "REDUCIBLE_WITNESS", "effective": True},
            {"module": "PUBLISHED"},
        ),
        Fixture(
            "so21-riem", _riemannian_pair(1),
            {"kind": "pair", "dim": 3, "module": "IRREDUCIBLE", "riemannian": True},
            {"module": "DERIVED"},
        ),
        Fixture(
            "so21x2-riem", _riemannian_pair(2),
            {"kind": "pair", "dim": 6, "module": "REDUCIBLE_WITNESS", "riemannian": True, "ideal_count": 2},
            {"module": "PUBLISHED"},
        ),
    ]
}


def fixture(name: str):
    """
    Builds a named fixture.

    Raises:
        LieDualError: ``BAD_PARAMS`` if the name is unknown.
    """
    require(name in FIXTURES, ErrorCode.BAD_PARAMS, f"unknown fixture {name!r}, known: {sorted(FIXTURES)}")
    obj = FIXTURES[name].build()
    obj.metadata.setdefault("fixture", name)
    return obj


def fixture_suite() -> List[Tuple[object, dict]]:
    """
    Returns:
        The list of ``(object, expected)`` pairs for every fixture, in
        registry order.
    """
    return [(fixture(name), dict(FIXTURES[name].expected)) for name in FIXTURES]


def grading_element(n: int) -> DomainMatrix:
    """
    Returns:
        The ambient matrix ``diag(1, -1, 0, ..., 0)`` of ``sl(n, R)``.
    """
    return diagonal([1, -1] + [0] * (n - 2))


def fixture_facts(obj, keys) -> Dict[str, object]:
    """
    Recomputes the properties of a fixture named by ``keys`` (the keys of
    its expected record).

    Returns:
        A dict ``key -> value``, values being comparable to the expected
        ones.
    """
    from .duality import phi
    from .ideals import classify_irreducible, minimal_ideals, self_properties
    from .invol import center_location, joint_eigenspace, joint_split
    from .keps import grading_from_Z, keps_pair
    from .lie import killing_signature
    from .modrep import h_module_analysis, is_effective
    from .roots import restricted_roots

    triad_like = obj.kind == "triad"
    pair_view = phi(obj) if triad_like else obj
    facts = dict()
    for key in keys:
        if key == "kind":
            facts[key] = obj.kind
        elif key == "dim":
            facts[key] = obj.algebra.dim
        elif key == "joint_dims":
            facts[key] = joint_split(*obj.involutions).dims()
        elif key == "k1k2_dim":
            facts[key] = joint_eigenspace(obj.theta1, obj.theta2, 1, 1).dim
        elif key == "fixed_sigma_dim":
            facts[key] = fixed_view(pair_view.sigma).dim
        elif key == "fixed_sigma_signature":
            facts[key] = tuple(killing_signature(fixed_view(pair_view.sigma).algebra))
        elif key == "center_location":
            facts[key] = center_location(fixed_view(pair_view.sigma), pair_view.theta)
        elif key == "ideal_count":
            facts[key] = len(minimal_ideals(obj.algebra).minimal_ideals)
        elif key in ("root_count", "a1_dim"):
            rd = restricted_roots(obj.g, obj.theta1)
            facts["root_count"] = len(rd.roots)
            facts["a1_dim"] = rd.rank
        elif key == "type":
            facts[key] = classify_irreducible(obj).tag
        elif key == "dual_type":
            facts[key] = classify_irreducible(pair_view).tag
        elif key in ("self_dual", "self_associated"):
            facts[key] = getattr(self_properties(obj), key)
        elif key in ("grading", "keps"):
            z = obj.g0.ambient_coordinates(grading_element(obj.metadata["params"]["n"]))
            gd = grading_from_Z(obj.g0, z)
            facts["grading"] = gd.dims()
            facts["keps"] = keps_pair(gd, obj.theta).sigma == obj.sigma
        elif key in ("module", "witness_dim"):
            analysis = h_module_analysis(obj)
            facts["module"] = analysis.flag
            facts["witness_dim"] = analysis.witness_dim
        elif key == "effective":
            facts[key] = is_effective(obj)
        elif key == "riemannian":
            facts[key] = obj.is_riemannian()
        else:
            raise LieDualError(ErrorCode.BAD_PARAMS, f"unknown fixture property {key!r}")
    return {key: facts[key] for key in keys}


@dataclass
class FixtureCheck:
    name: str
    facts: Dict[str, object]
    mismatches: Dict[str, Tuple[object, object]]  # key -> (expected, computed)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def check_fixture(name: str) -> FixtureCheck:
    """
    Builds a fixture and compares its recomputed properties with the
    expected ones.

    Returns:
        The :py:class:`FixtureCheck`.
    """
    obj = fixture(name)
    expected = FIXTURES[name].expected
    facts = fixture_facts(obj, list(expected))
    mismatches = {
        key: (value, facts[key])
        for (key, value) in expected.items()
        if facts[key] != value
    }
    if mismatches:
        logger.warning("fixture %s: mismatches %s", name, mismatches)
    return FixtureCheck(name, facts, mismatches)


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------

@dataclass
class WitnessData:
    matrix: DomainMatrix
    source: object   # CompactTriad, NoncompactPairC or LieAlgebra
    target: object   # Same kind as source
    description: str = ""


def _map_between(src: LieAlgebra, dst: LieAlgebra, f: Callable, name: str) -> DomainMatrix:
    cols = []
    for (k, a) in enumerate(src.ambient):
        c = dst.ambient_coordinates(f(a))
        require(c is not None, ErrorCode.NOT_IN_SPAN, f"{name} sends basis matrix {k} of {src.name} outside {dst.name}")
        cols.append([row[0] for row in c.to_list()])
    return DomainMatrix(
        [[cols[j][i] for j in range(src.dim)] for i in range(dst.dim)],
        (dst.dim, src.dim),
        QQ
    )


def complex_block(p: int, q: int) -> Callable[[DomainMatrix], DomainMatrix]:
    """
    Returns:
        The map sending a real ``(2p+2q)``-matrix to the complex
        ``(p+q)``-matrix with entries ``X[r1, c1] + i X[r2, c1]``, where
        ``r1`` (resp. ``r2``) runs over the first (resp. second) half of each
        of the two diagonal blocks.
    """
    real = list(range(p)) + list(range(2 * p, 2 * p + q))
    imag = list(range(p, 2 * p)) + list(range(2 * p + q, 2 * p + 2 * q))
    n = p + q

    def f(x: DomainMatrix) -> DomainMatrix:
        rows = to_gaussian(x).to_list()
        return DomainMatrix(
            [[rows[real[r]][real[c]] + rows[imag[r]][real[c]] * QQ_I(0, 1) for c in range(n)] for r in range(n)],
            (n, n),
            QQ_I
        )
    return f


def iota_gl(p: int) -> Callable[[DomainMatrix], DomainMatrix]:
    """
    Returns:
        The map ``[[A, B], [B, A]] -> A + B`` on ``4p``-matrices.
    """
    n = 2 * p

    def f(x: DomainMatrix) -> DomainMatrix:
        rows = to_gaussian(x).to_list()
        return DomainMatrix([[rows[r][c] + rows[r][n + c] for c in range(n)] for r in range(n)], (n, n), QQ_I)
    return f


def _so_target_pair(p: int, q: int, sigma_tag: str, sigma_params: dict) -> NoncompactPairC:
    return pair(FamilySpec(
        "SO_PQ", {"p": 2 * p, "q": 2 * q},
        [(sigma_tag, sigma_params), ("AD_I_PQ", {"p": 2 * p, "q": 2 * q})]
    ))


def _i_prime(p: int, q: int, gl: bool = False) -> WitnessData:
    from .duality import phi
    t = _so_triad(p, q, "AD_J_M" if gl else "AD_J_PQ")()
    source = phi(t)
    if gl:
        target = _so_target_pair(p, p, "AD_JPRIME_2P", {"p": p})
    else:
        target = _so_target_pair(p, q, "AD_J_PQ", {"p": p, "q": q})
    m = _map_between(source.g0, target.g0, ad(i_prime(p, q)), "Ad I'")
    return WitnessData(m, source, target, f"Ad I'_{{{2 * p},{2 * q}}} from the dual of {t.g.name} onto {target.g0.name}")


def _u_pq(p: int, q: int) -> WitnessData:
    source = fixed_view(_so_target_pair(p, q, "AD_J_PQ", {"p": p, "q": q}).sigma).algebra
    target = u_pq(p, q)
    return WitnessData(_map_between(source, target, complex_block(p, q), "complex block map"), source, target, f"so({2 * p},{2 * q})^sigma onto u({p},{q})")


def _u_p_plus_q(p: int, q: int) -> WitnessData:
    source = fixed_view(_so_triad(p, q, "AD_J_PQ")().theta2).algebra
    target = u_pq(p + q, 0)
    return WitnessData(_map_between(source, target, complex_block(p, q), "complex block map"), source, target, f"so({2 * p + 2 * q})^theta2 onto u({p + q})")


def _u_2p(p: int) -> WitnessData:
    source = fixed_view(_so_triad(p, p, "AD_J_M")().theta2).algebra
    target = u_pq(2 * p, 0)
    return WitnessData(_map_between(source, target, complex_block(2 * p, 0), "complex block map"), source, target, f"so({4 * p})^theta2 onto u({2 * p})")


def _iota_gl(p: int) -> WitnessData:
    source = fixed_view(_so_target_pair(p, p, "AD_JPRIME_2P", {"p": p}).sigma).algebra
    target = gl_n(2 * p)
    return WitnessData(_map_between(source, target, iota_gl(p), "iota"), source, target, f"so({2 * p},{2 * p})^sigma onto gl({2 * p},R)")


def _phi_nu() -> WitnessData:
    from .duality import dual_triad
    t = fixture("su2-Ta")
    d = t.g.dim // 2
    nu = factor_involution("SU_N", 2).mat
    m = block_diagonal(nu, identity(d))
    return WitnessData(m, t, dual_triad(t), "(X, Y) -> (nu(X), Y)")


def _rho_13() -> WitnessData:
    from .duality import dual_triad
    t = fixture("su2-Tc")
    return WitnessData(block_map(t.g.dim // 4, SUMMAND_PERMUTATIONS["RHO_13"]), t, dual_triad(t), "swap of the summands 1 and 3")


def _rho_34() -> WitnessData:
    from .duality import associated_triad
    t = fixture("su2-Tc")
    return WitnessData(block_map(t.g.dim // 4, SUMMAND_PERMUTATIONS["RHO_34"]), t, associated_triad(t), "swap of the summands 3 and 4")


WITNESSES: Dict[str, Tuple[Callable, tuple]] = {
    # name: (builder, default parameters)
    "I_PRIME": (_i_prime, (1, 1)),
    "I_PRIME_GL": (lambda p: _i_prime(p, p, gl=True), (1,)),
    "U_PQ": (_u_pq, (1, 1)),
    "U_P_PLUS_Q": (_u_p_plus_q, (1, 1)),
    "U_2P": (_u_2p, (1,)),
    "IOTA_GL": (_iota_gl, (1,)),
    "PHI_NU": (_phi_nu, ()),
    "RHO_13": (_rho_13, ()),
    "RHO_34": (_rho_34, ()),
}


def parse_witness_name(name: str) -> Tuple[str, tuple]:
    """
    Splits ``"BASE:1,2"`` into ``("BASE", (1, 2))``.

    Raises:
        LieDualError: ``UNKNOWN_WITNESS`` if the base name is unknown,
            ``BAD_PARAMS`` if the parameters are malformed.
    """
    (base, _, args) = name.partition(":")
    if base not in WITNESSES:
        raise LieDualError(ErrorCode.UNKNOWN_WITNESS, f"unknown witness {name!r}, known: {sorted(WITNESSES)}")
    (_, defaults) = WITNESSES[base]
    if not args:
        return (base, defaults)
    try:
        params = tuple(int(a) for a in args.split(","))
    except ValueError:
        raise LieDualError(ErrorCode.BAD_PARAMS, f"malformed witness parameters {args!r}")
    _check_params(len(params) == len(defaults), f"{base} expects {len(defaults)} parameters")
    _check_params(all(a >= 1 for a in params), f"{base} parameters must be positive")
    return (base, params)


def witness_data(name: str) -> WitnessData:
    (base, params) = parse_witness_name(name)
    data = WITNESSES[base][0](*params)
    logger.debug("witness %s: %s, rank %d", name, data.description, rank(data.matrix))
    return data


def witness(name: str) -> DomainMatrix:
    """
    Builds an explicit isomorphism witness.

    Args:
        name (str): One of :py:data:`WITNESSES`, optionally followed by
            ``:`` and comma separated integer parameters (e.g.
            ``"I_PRIME:1,2"``).

    Raises:
        LieDualError: ``UNKNOWN_WITNESS`` if the name is unknown.

    Returns:
        The rational matrix of the map in the bases of its source and
        target (see :py:func:`witness_data`).
    """
    return witness_data(name).matrix
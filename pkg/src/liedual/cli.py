#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Command line interface. Every subcommand prints one JSON document on the
standard output; logs go to the standard error.

Exit codes: 0 pass, 1 property failure, 2 malformed input, 3 unsupported.
"""

import argparse
import dataclasses
import logging
import sys
from typing import List

from sympy.polys.matrices import DomainMatrix

from .catalog import FIXTURES, check_fixture, fixture, witness_data
from .document import (
    dumps,
    encode_matrix,
    format_rational,
    map_document,
    parse_rational,
    read,
    to_document,
)
from .duality import associated_pair, associated_triad, dual_pair, dual_triad, phi, psi
from .exact import column, entries, rank
from .exceptions import EXIT_FAILURE, EXIT_MALFORMED, EXIT_PASS, ErrorCode, LieDualError, require
from .ideals import (
    classify_irreducible,
    ideal_correspondence,
    invariant_ideal_lattice,
    irreducible_components,
    self_properties,
)
from .invol import NoncompactPairC, invariant_profile, verify_equivalence_witness
from .keps import keps_from_gamma, search_gamma_witness, theta_sim_witness_check
from .lie import LieAlgebra, verify_homomorphism
from .modrep import irreducibility_report
from .roots import gamma_lattice, restricted_roots

logger = logging.getLogger(__name__)

DIRECTIONS = ("phi", "psi", "pair-dual", "associated", "triad-dual")


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _emit(doc) -> int:
    sys.stdout.write(dumps(doc))
    return EXIT_PASS


def _require_kind(obj, kinds: tuple, command: str):
    kind = obj.kind if not isinstance(obj, (LieAlgebra, DomainMatrix)) else "algebra" if isinstance(obj, LieAlgebra) else "map"
    require(kind in kinds, ErrorCode.BAD_PARAMS, f"{command} expects a {' or '.join(kinds)} document, got a {kind}")


def _as_pair(obj) -> NoncompactPairC:
    return phi(obj) if obj.kind == "triad" else obj


def parse_vector(text: str) -> DomainMatrix:
    """
    Parses ``"1,-1/2"`` into a column vector.
    """
    try:
        return column([parse_rational(a.strip()) for a in text.split(",")])
    except LieDualError as e:
        raise LieDualError(ErrorCode.BAD_PARAMS, f"malformed vector {text!r}: {e.detail}")


def _vector(v: DomainMatrix) -> List[str]:
    return [format_rational(a) for a in entries(v)]


def _jsonable(value):
    if dataclasses.is_dataclass(value):
        return {k: _jsonable(v) for (k, v) in dataclasses.asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for (k, v) in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_catalog(args) -> int:
    if args.action == "list":
        return _emit({"fixtures": [
            {"name": f.name, "kind": f.expected.get("kind"), "expected": _jsonable(f.expected), "provenance": f.provenance}
            for f in FIXTURES.values()
        ]})
    require(args.name is not None, ErrorCode.BAD_PARAMS, f"catalog {args.action} requires a name")
    if args.action == "emit":
        return _emit(to_document(fixture(args.name)))
    data = witness_data(args.name)
    if args.part == "map":
        return _emit(map_document(data.matrix, data.description))
    return _emit(to_document(getattr(data, args.part)))


def cmd_validate(args) -> int:
    if args.all:
        checks = [check_fixture(name) for name in FIXTURES]
        _emit({"fixtures": {
            c.name: {"passed": c.passed, "mismatches": _jsonable(c.mismatches)}
            for c in checks
        }})
        return EXIT_PASS if all(c.passed for c in checks) else EXIT_FAILURE
    require(args.file is not None, ErrorCode.BAD_PARAMS, "validate requires a file or --all")
    obj = read(args.file, check=True)
    kind = "algebra" if isinstance(obj, LieAlgebra) else "map" if isinstance(obj, DomainMatrix) else obj.kind
    dim = obj.dim if isinstance(obj, LieAlgebra) else obj.shape[0] if isinstance(obj, DomainMatrix) else obj.algebra.dim
    return _emit({"valid": True, "kind": kind, "dim": dim})


def dualize(obj, direction: str):
    """
    Applies one of the :py:data:`DIRECTIONS` to a triad or a pair.

    Raises:
        LieDualError: ``BAD_PARAMS`` if the direction does not apply to the
            kind of ``obj``.
    """
    kind = obj.kind
    if direction == "phi":
        require(kind == "triad", ErrorCode.BAD_PARAMS, "phi expects a triad")
        return phi(obj)
    if direction == "psi":
        require(kind == "pair", ErrorCode.BAD_PARAMS, "psi expects a pair")
        return psi(obj)
    if direction == "pair-dual":
        require(kind == "pair", ErrorCode.BAD_PARAMS, "pair-dual expects a pair")
        return dual_pair(obj)
    if direction == "triad-dual":
        require(kind == "triad", ErrorCode.BAD_PARAMS, "triad-dual expects a triad")
        return dual_triad(obj)
    if direction == "associated":
        return associated_triad(obj) if kind == "triad" else associated_pair(obj)
    raise LieDualError(ErrorCode.BAD_PARAMS, f"unknown direction {direction!r}")


def cmd_dualize(args) -> int:
    obj = read(args.file)
    _require_kind(obj, ("triad", "pair"), "dualize")
    return _emit(to_document(dualize(obj, args.direction)))


def cmd_decompose(args) -> int:
    obj = read(args.file)
    _require_kind(obj, ("triad", "pair"), "decompose")
    invs = [obj.theta1, obj.theta2] if obj.kind == "triad" else [obj.sigma]
    lattice = invariant_ideal_lattice(obj.algebra, invs)
    components = irreducible_components(obj)
    doc = {
        "minimal_ideal_dims": [s.dim for s in lattice.decomposition.minimal_ideals],
        "minimal_ideals_complete": lattice.decomposition.complete,
        "unsplit_dims": list(lattice.decomposition.metadata.get("unsplit_dims", [])),
        "permutations": [list(p) for p in lattice.permutations],
        "orbits": [sorted(o) for o in lattice.orbits],
        "invariant_ideal_dims": [s.dim for s in lattice.ideals],
        "irreducible": lattice.trivial,
        "components": [
            {"dim": c.algebra.dim, "basis": encode_matrix(c.basis_record), "document": to_document(c)}
            for c in components
        ],
    }
    if obj.kind == "pair":
        doc["correspondence"] = _jsonable(ideal_correspondence(obj))
    return _emit(doc)


def cmd_classify(args) -> int:
    obj = read(args.file)
    _require_kind(obj, ("triad", "pair"), "classify")
    t = classify_irreducible(obj)
    return _emit({"type": t.tag, "evidence": _jsonable(t.evidence)})


def cmd_roots(args) -> int:
    obj = read(args.file)
    _require_kind(obj, ("triad",), "roots")
    rd = restricted_roots(obj.g, obj.theta1)
    return _emit({
        "a1": encode_matrix(rd.a1.basis),
        "roots": [[format_rational(a) for a in lam] for lam in rd.roots],
        "multiplicities": [rd.mult[lam] for lam in rd.roots],
        "zk_dim": rd.zk.dim,
        "gamma_lattice": [_vector(v) for v in gamma_lattice(rd)],
        "metadata": rd.metadata,
    })


def cmd_keps(args) -> int:
    obj = read(args.file)
    _require_kind(obj, ("triad",), "keps")
    if args.action == "build":
        require(args.gamma is not None, ErrorCode.BAD_PARAMS, "keps build requires --gamma")
        result = keps_from_gamma(obj.g, obj.theta1, parse_vector(args.gamma))
        return _emit({
            "triad": to_document(result.triad),
            "pair": to_document(result.pair),
            "grading": {
                "kind": result.grading.kind,
                "dims": list(result.grading.dims()),
                "z": _vector(result.grading.z),
                "flags": result.grading.flags,
            },
            "z_sign": result.z_sign,
        })
    if args.gamma is not None:
        ok = theta_sim_witness_check(obj, parse_vector(args.gamma))
        _emit({"gamma": args.gamma, "witness": ok})
        return EXIT_PASS if ok else EXIT_FAILURE
    found = search_gamma_witness(obj, args.bound)
    return _emit({
        "bound": args.bound,
        "witness": _vector(found) if found is not None else None,
        "detail": "witness found" if found is not None else f"no witness up to bound {args.bound}",
    })


def cmd_verify_witness(args) -> int:
    (src, dst, m) = (read(args.src), read(args.dst), read(args.map))
    require(isinstance(m, DomainMatrix), ErrorCode.MALFORMED_DOCUMENT, "--map expects a map document")
    if isinstance(src, LieAlgebra) or isinstance(dst, LieAlgebra):
        g = src if isinstance(src, LieAlgebra) else src.algebra
        h = dst if isinstance(dst, LieAlgebra) else dst.algebra
        require(m.shape == (h.dim, g.dim), ErrorCode.DIM_MISMATCH, f"map of shape {m.shape} between dimensions {g.dim} and {h.dim}")
        ok = verify_homomorphism(g, h, m) and rank(m) == g.dim
        detail = "injective homomorphism" if ok else "not an injective homomorphism"
        mode = "homomorphism"
    else:
        ok = verify_equivalence_witness(src, dst, m)
        detail = "equivalence" if ok else "not an equivalence"
        mode = "equivalence"
    _emit({"verified": ok, "mode": mode, "detail": detail})
    return EXIT_PASS if ok else EXIT_FAILURE


def cmd_report(args) -> int:
    obj = read(args.file)
    _require_kind(obj, ("triad", "pair"), "report")
    p = _as_pair(obj)
    report = irreducibility_report(p)
    module = report.module
    return _emit({
        "profile": _jsonable(invariant_profile(obj)),
        "effective": report.effective,
        "ideal_irreducible": report.ideal_irreducible,
        "module": {
            "flag": module.flag,
            "witness_dims": [w.dim for w in module.invariant_subspaces_found],
            "witnesses": [encode_matrix(w.basis) for w in module.invariant_subspaces_found],
            "seed_dims": module.seed_dims,
            "commutant_dim": module.commutant_dim,
        },
        "consistent": report.consistent,
        "self": _jsonable(self_properties(obj)),
    })


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liedual",
        description="Duality between compact symmetric triads and non-compact symmetric pairs, in exact arithmetic."
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO logs, -vv for DEBUG logs")
    parser.add_argument("--seedless", action="store_true", help="accepted for reproducibility scripts (no randomness is ever used)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or emit the named fixtures and witnesses")
    p.add_argument("action", choices=("list", "emit", "witness"))
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--part", choices=("map", "source", "target"), default="map", help="witness part to emit")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("validate", help="check every invariant of a document")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--all", action="store_true", help="check every fixture against its expected properties")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dualize", help="apply a duality to a triad or a pair")
    p.add_argument("file")
    p.add_argument("--direction", choices=DIRECTIONS, default="phi")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("decompose", help="irreducible components and invariant ideals")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify", help="type of an irreducible triad or pair")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("roots", help="restricted roots of (g, theta1)")
    p.add_argument("file")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("keps", help="K_epsilon construction and witness checks")
    p.add_argument("action", choices=("build", "check"))
    p.add_argument("file")
    p.add_argument("--gamma", default=None, help="comma separated rationals, coordinates in a1")
    p.add_argument("--bound", type=int, default=1, help="search bound used by check when --gamma is missing")
    p.set_defaults(func=cmd_keps)

    p = sub.add_parser("verify-witness", help="verify an explicit map between two documents")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_verify_witness)

    p = sub.add_parser("report", help="invariant profile, effectiveness and irreducibility analysis")
    p.add_argument("file")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: List[str] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_MALFORMED if e.code else EXIT_PASS
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except LieDualError as e:
        logger.error(str(e))
        sys.stderr.write(str(e) + "\n")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())

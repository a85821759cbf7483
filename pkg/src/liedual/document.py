#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
JSON documents for algebras, triads, pairs and linear maps.

Every number is an exact string: rationals are ``"num/den"`` (reduced,
positive denominator) and Gaussian rationals ``{"re": ..., "im": ...}``.
Documents are dumped with sorted keys so that the output is
byte-deterministic.
"""

import json
import re
import sys
from typing import Union

from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from .exact import is_real, matrix, real_part, to_gaussian
from .exceptions import ErrorCode, LieDualError, require
from .invol import CompactTriad, Involution, NoncompactPairC
from .lie import LieAlgebra

SCHEMA_VERSION = 1

RE_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")

INVOLUTION_NAMES = {
    "triad": ("theta1", "theta2"),
    "pair": ("sigma", "theta"),
}


def _malformed(message: str) -> LieDualError:
    return LieDualError(ErrorCode.MALFORMED_DOCUMENT, message)


# ---------------------------------------------------------------------------
# Scalars and matrices
# ---------------------------------------------------------------------------

def format_rational(q) -> str:
    q = QQ.convert(q)
    return f"{QQ.numer(q)}/{QQ.denom(q)}"


def parse_rational(s: str):
    """
    Parses ``"num/den"`` or ``"num"``.

    Raises:
        LieDualError: ``MALFORMED_DOCUMENT`` if ``s`` is not a reduced
            fraction with a positive denominator.
    """
    if not isinstance(s, str):
        raise _malformed(f"expected a rational string, got {s!r}")
    match = RE_RATIONAL.match(s.strip())
    if not match:
        raise _malformed(f"invalid rational {s!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    require(den > 0, ErrorCode.MALFORMED_DOCUMENT, f"zero denominator in {s!r}")
    q = QQ(num, den)
    require(
        int(QQ.numer(q)) == num and int(QQ.denom(q)) == den,
        ErrorCode.MALFORMED_DOCUMENT,
        f"{s!r} is not reduced"
    )
    return q


def format_gaussian(z) -> dict:
    return {"re": format_rational(z.x), "im": format_rational(z.y)}


def parse_scalar(value) -> tuple:
    """
    Returns:
        The pair ``(re, im)`` of a rational string or a Gaussian record.
    """
    if isinstance(value, dict):
        if set(value) != {"re", "im"}:
            raise _malformed(f"invalid Gaussian record {value!r}")
        return (parse_rational(value["re"]), parse_rational(value["im"]))
    return (parse_rational(value), QQ.zero)


def encode_matrix(m: DomainMatrix) -> list:
    """
    Returns:
        The rows of ``m`` as rational strings if ``m`` is real, as Gaussian
        records otherwise.
    """
    if is_real(m):
        return [[format_rational(a) for a in row] for row in real_part(m).to_list()]
    return [[format_gaussian(a) for a in row] for row in to_gaussian(m).to_list()]


def decode_matrix(rows, shape: tuple = None) -> DomainMatrix:
    """
    Decodes a matrix, over ``QQ`` unless some entry has a nonzero imaginary
    part.

    Raises:
        LieDualError: ``MALFORMED_DOCUMENT`` if the rows are ragged or do not
            match ``shape``.
    """
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise _malformed("a matrix must be a list of rows")
    width = len(rows[0]) if rows else (shape[1] if shape else 0)
    require(all(len(row) == width for row in rows), ErrorCode.MALFORMED_DOCUMENT, "ragged matrix")
    if shape is not None:
        require((len(rows), width) == tuple(shape), ErrorCode.MALFORMED_DOCUMENT, f"expected a {shape} matrix")
    parsed = [[parse_scalar(a) for a in row] for row in rows]
    if all(im == 0 for row in parsed for (_, im) in row):
        return matrix([[re for (re, _) in row] for row in parsed], QQ, (len(rows), width))
    return matrix([[QQ_I(re, im) for (re, im) in row] for row in parsed], QQ_I, (len(rows), width))


# ---------------------------------------------------------------------------
# Documents
# ---------------------------------------------------------------------------

def _algebra_fields(g: LieAlgebra) -> dict:
    return {
        "name": g.name,
        "dim": g.dim,
        "sc": [
            {"i": i, "j": j, "k": k, "num": str(QQ.numer(c)), "den": str(QQ.denom(c))}
            for ((i, j, k), c) in sorted(g.sc.items())
        ],
        "ambient": [encode_matrix(a) for a in g.ambient] if g.ambient is not None else None,
    }


def to_document(obj: Union[LieAlgebra, CompactTriad, NoncompactPairC]) -> dict:
    """
    Serializes an algebra, a triad or a pair.

    Returns:
        The JSON-compatible document.
    """
    if isinstance(obj, LieAlgebra):
        doc = {"kind": "algebra", **_algebra_fields(obj), "involutions": dict(), "metadata": dict(), "basis_record": None}
    else:
        invs = dict(zip(INVOLUTION_NAMES[obj.kind], _named_involutions(obj)))
        doc = {
            "kind": obj.kind,
            **_algebra_fields(obj.algebra),
            "involutions": {name: encode_matrix(inv.mat) for (name, inv) in invs.items()},
            "metadata": obj.metadata,
            "basis_record": encode_matrix(obj.basis_record) if obj.basis_record is not None else None,
        }
    doc["schema_version"] = SCHEMA_VERSION
    return doc


def _named_involutions(obj) -> tuple:
    if obj.kind == "triad":
        return (obj.theta1, obj.theta2)
    return (obj.sigma, obj.theta)


def map_document(m: DomainMatrix, description: str = None) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": "map", "matrix": encode_matrix(m), "description": description}


def _field(doc: dict, key: str, types):
    if key not in doc:
        raise _malformed(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, types):
        raise _malformed(f"field {key!r} has type {type(value).__name__}")
    return value


def _decode_algebra(doc: dict, check: bool) -> LieAlgebra:
    dim = _field(doc, "dim", int)
    sc = dict()
    for record in _field(doc, "sc", list):
        if not isinstance(record, dict) or set(record) != {"i", "j", "k", "num", "den"}:
            raise _malformed(f"invalid structure constant record {record!r}")
        key = (record["i"], record["j"], record["k"])
        if not all(isinstance(a, int) for a in key):
            raise _malformed(f"invalid structure constant indices {key!r}")
        sc[key] = parse_rational(f"{record['num']}/{record['den']}")
    ambient = doc.get("ambient")
    if ambient is not None:
        require(isinstance(ambient, list) and len(ambient) == dim, ErrorCode.MALFORMED_DOCUMENT, "ambient must list one matrix per basis vector")
        ambient = [decode_matrix(a) for a in ambient]
    return LieAlgebra(dim, sc, ambient, name=doc.get("name"), check=check)


def from_document(doc: dict, check: bool = True):
    """
    Deserializes a document.

    Args:
        doc (dict): A document produced by :py:func:`to_document` or
            :py:func:`map_document`.
        check (bool): Pass ``True`` to run the validity checks of the
            decoded objects.

    Raises:
        LieDualError: ``MALFORMED_DOCUMENT`` for schema violations,
            ``TOO_LARGE`` for dimensions above the configured cap, and the
            codes of the failed validity checks.

    Returns:
        A :py:class:`LieAlgebra`, :py:class:`CompactTriad`,
        :py:class:`NoncompactPairC` or, for maps, a ``DomainMatrix``.
    """
    if not isinstance(doc, dict):
        raise _malformed("a document must be a JSON object")
    version = _field(doc, "schema_version", int)
    require(version == SCHEMA_VERSION, ErrorCode.MALFORMED_DOCUMENT, f"unsupported schema version {version}")
    kind = _field(doc, "kind", str)
    if kind == "map":
        return decode_matrix(_field(doc, "matrix", list))
    if kind not in ("algebra", "triad", "pair"):
        raise _malformed(f"unknown kind {kind!r}")
    g = _decode_algebra(doc, check)
    if kind == "algebra":
        return g
    invs = _field(doc, "involutions", dict)
    names = INVOLUTION_NAMES[kind]
    require(set(invs) == set(names), ErrorCode.MALFORMED_DOCUMENT, f"a {kind} requires the involutions {names}")
    (a, b) = (Involution(g, decode_matrix(invs[name], (g.dim, g.dim)), name, check=check) for name in names)
    metadata = doc.get("metadata") or dict()
    require(isinstance(metadata, dict), ErrorCode.MALFORMED_DOCUMENT, "metadata must be an object")
    obj = CompactTriad(g, a, b, metadata, check=check) if kind == "triad" else NoncompactPairC(g, a, b, metadata, check=check)
    record = doc.get("basis_record")
    if record is not None:
        basis_record = decode_matrix(record)
        require(basis_record.shape[1] == g.dim, ErrorCode.MALFORMED_DOCUMENT, "basis_record must have one column per basis vector")
        obj.basis_record = basis_record
    return obj


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise _malformed(f"invalid JSON: {e}")


def read(path: str, check: bool = True):
    """
    Reads a document from a file (``"-"`` for the standard input).
    """
    if path == "-":
        return from_document(loads(sys.stdin.read()), check)
    try:
        with open(path) as f:
            return from_document(loads(f.read()), check)
    except OSError as e:
        raise _malformed(f"cannot read {path}: {e}")

#!/usr/bin/env pytest
# -*- coding: utf-8 -*-

import json

import pytest
from sympy import QQ, QQ_I

from liedual.catalog import fixture, so_n, witness
from liedual.document import (
    SCHEMA_VERSION,
    decode_matrix,
    dumps,
    encode_matrix,
    format_rational,
    from_document,
    loads,
    map_document,
    parse_rational,
    read,
    to_document,
)
from liedual.duality import phi, same_object
from liedual.exact import equal, matrix
from liedual.exceptions import ErrorCode, LieDualError
from liedual.ideals import irreducible_components
from liedual.lie import killing_signature


def test_rationals():
    assert format_rational(QQ(-3, 6)) == "-1/2"
    assert format_rational(4) == "4/1"
    assert parse_rational("-1/2") == QQ(-1, 2)
    assert parse_rational("7") == QQ(7)
    for text in ("2/4", "1/0", "1/-2", "x", "1.5"):
        with pytest.raises(LieDualError) as e:
            parse_rational(text)
        assert e.value.code == ErrorCode.MALFORMED_DOCUMENT
    with pytest.raises(LieDualError):
        parse_rational(3)


def test_matrices():
    m = matrix([[1, QQ(1, 2)], [0, -3]])
    rows = encode_matrix(m)
    assert rows == [["1/1", "1/2"], ["0/1", "-3/1"]]
    assert equal(decode_matrix(rows), m)
    z = matrix([[QQ_I(0, 1)]], QQ_I)
    assert encode_matrix(z) == [[{"re": "0/1", "im": "1/1"}]]
    assert decode_matrix(encode_matrix(z)).domain == QQ_I
    with pytest.raises(LieDualError):
        decode_matrix([["1/1"], ["1/1", "0/1"]])
    with pytest.raises(LieDualError):
        decode_matrix([["1/1"]], (2, 2))
    with pytest.raises(LieDualError):
        decode_matrix([[{"re": "1/1"}]])


@pytest.mark.parametrize("name", ["so4-IJ", "su2-Tb", "sl3-keps", "so21x2-riem"])
def test_documents_preserve_objects(name):
    obj = fixture(name)
    back = from_document(loads(dumps(to_document(obj))))
    assert back.kind == obj.kind
    assert same_object(back, obj)
    assert back.metadata == obj.metadata


def test_algebra_document():
    doc = to_document(so_n(3))
    assert doc["kind"] == "algebra"
    assert doc["schema_version"] == SCHEMA_VERSION
    g = from_document(doc)
    assert g.sc == so_n(3).sc
    assert killing_signature(g) == (0, 3, 0)


def test_basis_record_is_kept():
    p = phi(fixture("so4-IJ"))
    back = from_document(to_document(p))
    assert equal(back.basis_record, p.basis_record)
    (component, _) = irreducible_components(fixture("so4-IJ"))
    back = from_document(to_document(component))
    assert back.basis_record.shape == (6, 3)


def test_map_document():
    m = witness("RHO_34")
    assert equal(from_document(map_document(m, "rho")), m)


def test_dumps_is_deterministic():
    obj = fixture("so4-IJ")
    text = dumps(to_document(obj))
    assert text == dumps(to_document(fixture("so4-IJ")))
    assert text.endswith("\n")
    assert list(json.loads(text)) == sorted(json.loads(text))


@pytest.mark.parametrize("doc", [
    [],
    {"kind": "triad"},
    {"schema_version": 2, "kind": "algebra"},
    {"schema_version": SCHEMA_VERSION, "kind": "group"},
    {"schema_version": SCHEMA_VERSION, "kind": "algebra", "dim": "3", "sc": []},
    {"schema_version": SCHEMA_VERSION, "kind": "algebra", "dim": 1, "sc": [{"i": 0}]},
])
def test_malformed_documents(doc):
    with pytest.raises(LieDualError) as e:
        from_document(doc)
    assert e.value.code == ErrorCode.MALFORMED_DOCUMENT


def test_missing_involution():
    doc = to_document(fixture("so4-IJ"))
    del doc["involutions"]["theta2"]
    with pytest.raises(LieDualError) as e:
        from_document(doc)
    assert e.value.code == ErrorCode.MALFORMED_DOCUMENT


def test_invalid_json():
    with pytest.raises(LieDualError) as e:
        loads("{")
    assert e.value.code == ErrorCode.MALFORMED_DOCUMENT


def test_read(tmp_path):
    path = tmp_path / "so4.json"
    path.write_text(dumps(to_document(fixture("so4-IJ"))))
    assert read(str(path)).kind == "triad"
    with pytest.raises(LieDualError) as e:
        read(str(tmp_path / "missing.json"))
    assert e.value.code == ErrorCode.MALFORMED_DOCUMENT

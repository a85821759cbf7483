#!/usr/bin/env pytest
# -*- coding: utf-8 -*-

import json

import pytest
from sympy import QQ

from liedual.catalog import fixture
from liedual.cli import dualize, main, parse_vector
from liedual.document import dumps, map_document, to_document
from liedual.exact import identity
from liedual.exceptions import EXIT_FAILURE, EXIT_MALFORMED, EXIT_PASS, ErrorCode, LieDualError


def write(tmp_path, name: str, doc: dict) -> str:
    path = tmp_path / f"{name}.json"
    path.write_text(dumps(doc))
    return str(path)


def run(capsys, *argv) -> tuple:
    code = main(list(argv))
    out = capsys.readouterr().out
    return (code, json.loads(out) if out else None)


def test_catalog_list(capsys):
    (code, doc) = run(capsys, "catalog", "list")
    assert code == EXIT_PASS
    names = [f["name"] for f in doc["fixtures"]]
    assert "so4-IJ" in names
    assert "sl3-counter" in names


def test_catalog_emit_and_validate(capsys, tmp_path):
    (code, doc) = run(capsys, "catalog", "emit", "so4-IJ")
    assert code == EXIT_PASS
    assert doc["kind"] == "triad"
    path = write(tmp_path, "so4", doc)
    (code, doc) = run(capsys, "validate", path)
    assert code == EXIT_PASS
    assert doc == {"valid": True, "kind": "triad", "dim": 6}


def test_catalog_witness(capsys):
    (code, doc) = run(capsys, "catalog", "witness", "RHO_34")
    assert code == EXIT_PASS
    assert doc["kind"] == "map"
    (code, doc) = run(capsys, "catalog", "witness", "RHO_34", "--part", "target")
    assert doc["kind"] == "triad"
    (code, _) = run(capsys, "catalog", "witness", "NOPE")
    assert code == EXIT_MALFORMED


def test_dualize_roundtrip(capsys, tmp_path):
    path = write(tmp_path, "so4", to_document(fixture("so4-IJ2")))
    (code, pair) = run(capsys, "dualize", path, "--direction", "phi")
    assert code == EXIT_PASS
    assert pair["kind"] == "pair"
    pair_path = write(tmp_path, "pair", pair)
    (code, triad) = run(capsys, "dualize", pair_path, "--direction", "psi")
    assert code == EXIT_PASS
    assert triad["kind"] == "triad"
    (code, _) = run(capsys, "dualize", pair_path, "--direction", "phi")
    assert code == EXIT_MALFORMED


def test_dualize_directions():
    t = fixture("so4-IJ")
    assert dualize(t, "triad-dual").kind == "triad"
    assert dualize(t, "associated").kind == "triad"
    assert dualize(fixture("sl3-keps"), "pair-dual").kind == "pair"
    with pytest.raises(LieDualError) as e:
        dualize(t, "sideways")
    assert e.value.code == ErrorCode.BAD_PARAMS


def test_decompose_and_classify(capsys, tmp_path):
    path = write(tmp_path, "so4", to_document(fixture("so4-IJ")))
    (code, doc) = run(capsys, "decompose", path)
    assert code == EXIT_PASS
    assert doc["minimal_ideal_dims"] == [3, 3]
    assert doc["minimal_ideals_complete"]
    assert doc["unsplit_dims"] == []
    assert [c["dim"] for c in doc["components"]] == [3, 3]
    assert not doc["irreducible"]
    (code, _) = run(capsys, "classify", path)
    assert code == EXIT_FAILURE
    path = write(tmp_path, "ta", to_document(fixture("su2-Ta")))
    (code, doc) = run(capsys, "classify", path)
    assert code == EXIT_PASS
    assert doc["type"] == "T_a"


def test_roots(capsys, tmp_path):
    path = write(tmp_path, "so5", to_document(fixture("so5-I23")))
    (code, doc) = run(capsys, "roots", path)
    assert code == EXIT_PASS
    assert len(doc["roots"]) == 8
    assert len(doc["gamma_lattice"]) == 2


def test_keps(capsys, tmp_path):
    path = write(tmp_path, "so4", to_document(fixture("so4-IJ")))
    (code, doc) = run(capsys, "keps", "build", path, "--gamma", "1/2,1/2")
    assert code == EXIT_PASS
    assert doc["pair"]["kind"] == "pair"
    assert doc["grading"]["kind"] == 1
    built = write(tmp_path, "built", doc["triad"])
    (code, doc) = run(capsys, "keps", "check", built, "--gamma", "1/2,1/2")
    assert code == EXIT_PASS
    assert doc["witness"]
    (code, doc) = run(capsys, "keps", "check", built)
    assert code == EXIT_PASS
    assert doc["witness"] is not None
    (code, _) = run(capsys, "keps", "build", path, "--gamma", "1/2,0")
    assert code == EXIT_FAILURE
    (code, _) = run(capsys, "keps", "build", path, "--gamma", "a,b")
    assert code == EXIT_MALFORMED


def test_parse_vector():
    assert [row[0] for row in parse_vector("1,-1/2").to_list()] == [QQ(1), QQ(-1, 2)]
    with pytest.raises(LieDualError) as e:
        parse_vector("1,,2")
    assert e.value.code == ErrorCode.BAD_PARAMS


def test_verify_witness(capsys, tmp_path):
    t = fixture("so4-IJ")
    src = write(tmp_path, "src", to_document(t))
    same = write(tmp_path, "map", map_document(identity(6)))
    (code, doc) = run(capsys, "verify-witness", src, src, "--map", same)
    assert code == EXIT_PASS
    assert doc["verified"]
    other = write(tmp_path, "other", to_document(fixture("so4-IJ2")))
    (code, doc) = run(capsys, "verify-witness", src, other, "--map", same)
    assert code == EXIT_FAILURE
    assert not doc["verified"]


def test_report(capsys, tmp_path):
    path = write(tmp_path, "counter", to_document(fixture("sl3-counter")))
    (code, doc) = run(capsys, "report", path)
    assert code == EXIT_PASS
    assert doc["module"]["flag"] == "REDUCIBLE_WITNESS"
    assert min(doc["module"]["witness_dims"]) == 2
    assert doc["effective"]
    assert doc["consistent"]


def test_malformed_input(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    assert main(["validate", str(path)]) == EXIT_MALFORMED
    assert main(["validate"]) == EXIT_MALFORMED
    assert main(["no-such-command"]) == EXIT_MALFORMED
    assert "MALFORMED_DOCUMENT" in capsys.readouterr().err

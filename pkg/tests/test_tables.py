from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from cgrational.clebsch_gordan import cg, normalizer
from cgrational.tables import (
    FORMAT_VERSION,
    build_projectors,
    build_table,
    projectors_to_dict,
    projectors_to_pretty,
    su2_labels,
    table_from_json,
    table_to_csv,
    table_to_json,
    table_to_pretty,
)
from cgrational.weight_basis import coord, window

GOLDEN = Path(__file__).parent / "golden"


def test_json_round_trip_exhaustive():
    for m in range(11):
        for n in range(11):
            doc = build_table(m, n)
            assert table_from_json(table_to_json(doc)) == doc


@given(st.integers(0, 10), st.integers(0, 10), st.data())
@settings(max_examples=30)
def test_json_round_trip_single_block(m, n, data):
    k = data.draw(st.integers(0, min(m, n)))
    doc = build_table(m, n, only_k=k)
    assert [b.k for b in doc.blocks] == [k]
    assert table_from_json(table_to_json(doc)) == doc


def test_json_values_are_strings():
    data = json.loads(table_to_json(build_table(3, 4)))
    assert data["format_version"] == FORMAT_VERSION == "1"
    assert data["m"] == "3"
    block = data["blocks"][1]
    assert block["sign"] == "-1"
    assert block["normalizer"] == "70"
    assert block["clebsch_gordan"][0][0] == "1/7"
    assert all(isinstance(v, str) for row in block["coordinates"] for v in row)


def test_json_trivial_table():
    data = json.loads(table_to_json(build_table(0, 0)))
    assert len(data["blocks"]) == 1
    block = data["blocks"][0]
    assert block["coordinates"] == [["1"]]
    assert block["clebsch_gordan"] == [["1"]]
    assert block["normalizer"] == "1"


def test_json_rejects_unknown_version():
    text = table_to_json(build_table(1, 1)).replace('"format_version": "1"', '"format_version": "9"')
    with pytest.raises(ValueError):
        table_from_json(text)


def test_big_integers_survive_json():
    doc = build_table(30, 30, only_k=15)
    block = doc.blocks[0]
    assert block.normalizer > 2**64
    assert json.loads(table_to_json(doc))["blocks"][0]["normalizer"] == str(block.normalizer)
    assert table_from_json(table_to_json(doc)) == doc


def test_csv_rows():
    text = table_to_csv(build_table(3, 4, only_k=2))
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["m", "n", "k", "i", "j", "c", "C"]
    assert len(rows) == len(list(window(3, 4, 2)))
    for r in rows:
        i, j = int(r["i"]), int(r["j"])
        assert r["k"] == "2"
        assert int(r["c"]) == coord(3, 4, 2, i, j)
        assert Fraction(r["C"]) == cg(3, 4, 2, i, j)


def test_csv_labels():
    text = table_to_csv(build_table(1, 1), labels=True)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["m", "n", "k", "i", "j", "c", "C", "su2_j1", "su2_j2", "su2_j", "su2_m1", "su2_m2"]
    singlet = [r for r in rows if r["k"] == "1" and r["i"] == "0"][0]
    labels = [singlet[f"su2_{name}"] for name in ("j1", "j2", "j", "m1", "m2")]
    assert labels == ["1/2", "1/2", "0", "1/2", "-1/2"]


def test_su2_labels():
    assert su2_labels(3, 4, 1, 0, 3) == (Fraction(3, 2), 2, Fraction(5, 2), Fraction(3, 2), -1)


def test_pretty_matches_golden():
    assert table_to_pretty(build_table(3, 4)) == (GOLDEN / "table_3_4.txt").read_text()


def test_pretty_prefactors():
    text = table_to_pretty(build_table(3, 4))
    for prefactor in ("1/35", "-1/70", "1/45", "-1/10"):
        assert f" {prefactor} [" in text
    for k in range(4):
        assert f"D={normalizer(3, 4, k)}" in text


def test_pretty_single_block():
    text = table_to_pretty(build_table(3, 4, only_k=2))
    assert "k=2" in text and "k=1" not in text


def test_build_table_errors():
    with pytest.raises(ValueError):
        build_table(3, 4, only_k=4)
    with pytest.raises(ValueError):
        build_table(-1, 2)


def test_projector_pretty_matches_golden():
    assert projectors_to_pretty(build_projectors(3, 4, 3)) == (GOLDEN / "projector_3_4_3.txt").read_text()


def test_projector_pretty_factorization_line():
    text = projectors_to_pretty(build_projectors(3, 4, 3, only_k=1))
    assert "column (3, 2, -5, -4) times row (9, 3, -5, -3)/70" in text
    assert "P_V(5) = 1/70 *" in text
    assert "P_V(1)" not in text.split("eigenvalues")[1]


def test_projector_dict():
    data = projectors_to_dict(build_projectors(3, 4, 3))
    assert data["ef_matrix"] == [["7", "3", "0", "0"], ["6", "10", "4", "0"], ["0", "6", "9", "3"], ["0", "0", "4", "4"]]
    assert [p["k"] for p in data["projectors"]] == ["3", "2", "1", "0"]
    assert [p["eigenvalue"] for p in data["projectors"]] == ["1", "4", "9", "16"]
    third = data["decompositions"][2]["components"]
    assert third["2"] == ["0", "0", "0", "0"]
    assert third["1"] == ["-3/14", "-1/7", "5/14", "2/7"]


def test_projector_errors():
    with pytest.raises(ValueError):
        build_projectors(3, 4, 3, only_k=5)
    with pytest.raises(ValueError):
        build_projectors(3, 4, 9)

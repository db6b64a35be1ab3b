import json

import pytest
from hypothesis import given, settings

from strategies import matrices
from tropgreen.core import Flavor
from tropgreen.fileio import (
    MatrixFileError, parse_matrix, read_matrix, serialize_matrix, write_matrix,
)
from tropgreen.fixtures import FIXTURES


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_round_trip(name, tmp_path):
    m = FIXTURES[name]
    path = tmp_path / f"{name}.json"
    write_matrix(m, path)
    assert read_matrix(path) == m


@settings(max_examples=50)
@given(matrices(2, 3, Flavor.TBAR))
def test_parse_serialize_parse_is_identity(m):
    text = serialize_matrix(m)
    again = parse_matrix(text)
    assert again == m
    assert serialize_matrix(again) == text


def test_integers_accepted():
    m = parse_matrix('{"semiring": "FT", "rows": [[1, -2], [3, 4]]}')
    assert m.rows == ((1, -2), (3, 4))


@pytest.mark.parametrize("text,where", [
    ('{"semiring": "FT", "rows": [["1", "-inf"]]}', (1, 35)),
    ('{"semiring": "FT",\n "rows": [["1",\n   "x"]]}', (3, 4)),
    ('{"semiring": "T", "rows": [[1.5]]}', (1, 29)),
])
def test_entry_errors_carry_position(text, where):
    with pytest.raises(MatrixFileError) as e:
        parse_matrix(text)
    assert (e.value.line, e.value.column) == where


def test_syntax_errors_carry_position():
    with pytest.raises(MatrixFileError) as e:
        parse_matrix('{"semiring": "T"\n "rows": []}')
    assert e.value.line == 2


@pytest.mark.parametrize("text", [
    '{"semiring": "Q", "rows": [["1"]]}',
    '{"semiring": "FT", "rows": []}',
    '{"semiring": "FT", "rows": [["1"], ["1", "2"]]}',
    '{"semiring": "FT", "rows": [["1"]], "extra": 1}',
    '[1, 2]',
])
def test_structural_errors(text):
    with pytest.raises(MatrixFileError):
        parse_matrix(text)


def test_missing_file(tmp_path):
    with pytest.raises(MatrixFileError):
        read_matrix(tmp_path / "nope.json")


def test_serialized_form_uses_strings():
    doc = json.loads(serialize_matrix(FIXTURES["A62"]))
    assert doc["semiring"] == "T"
    assert doc["rows"][0] == ["-inf", "0", "1", "1"]

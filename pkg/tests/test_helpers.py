import json
import pytest
from decimal import Decimal
from fractions import Fraction
from unittest.mock import patch
from src.utils.helpers import (
    canonical_json,
    encode_number,
    get_file_type,
    number_to_text,
    parse_int_range,
    parse_int_tuple,
    sniff_format,
    write_text,
)


def test_get_file_type():
    """Test file type detection."""
    assert get_file_type("a.g6") == "graph6"
    assert get_file_type("A.G6") == "graph6"
    assert get_file_type("a.edgelist") == "edgelist"
    assert get_file_type("a.el") == "edgelist"
    assert get_file_type("a.png") == "unknown"


def test_sniff_format():
    assert sniff_format("# comment\n4 3\n0 1\n1 2\n2 3\n") == "edgelist"
    assert sniff_format("Cr\n") == "graph6"
    assert sniff_format("") == "graph6"


def test_encode_number():
    assert encode_number(7) == 7
    assert encode_number(Fraction(3, 2)) == {"num": 3, "den": 2}
    assert encode_number(Fraction(4, 2)) == 2
    assert encode_number(Fraction(4, 2), with_decimal=True) == {"num": 2, "den": 1, "decimal": "2"}
    assert encode_number(Fraction(1, 4), with_decimal=True)["decimal"] == "0.25"
    assert encode_number(Decimal("1.5")) == {"decimal": "1.5"}
    assert encode_number(None) is None
    with pytest.raises(TypeError):
        encode_number("3")


def test_number_to_text():
    assert number_to_text(Fraction(64, 27)) == "64/27"
    assert number_to_text(Fraction(6, 1)) == "6"
    assert number_to_text(5) == "5"


def test_canonical_json_sorts_keys():
    text = canonical_json({"b": 1, "a": [2]})
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [2], "b": 1}
    assert "\n" not in canonical_json({"b": 1, "a": 2}, indent=None)


def test_write_text(tmp_path):
    target = tmp_path / "nested" / "out.txt"
    assert write_text("hello", target) is True
    assert target.read_text() == "hello"


def test_write_text_failure(tmp_path):
    with patch('pathlib.Path.write_text', side_effect=OSError("disk full")):
        assert write_text("hello", tmp_path / "out.txt") is False


def test_parse_int_range():
    assert parse_int_range("4..8") == [4, 5, 6, 7, 8]
    assert parse_int_range("5") == [5]
    with pytest.raises(ValueError):
        parse_int_range("8..4")
    with pytest.raises(ValueError):
        parse_int_range("a..b")


def test_parse_int_tuple():
    assert parse_int_tuple("7, 4", 2) == (7, 4)
    with pytest.raises(ValueError):
        parse_int_tuple("7", 2)

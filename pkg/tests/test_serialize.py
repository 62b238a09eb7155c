import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus_cases import corpus
from lpkit.endentry import end_entries
from lpkit.errors import ParseError
from lpkit.serialize import (
    array_from_json,
    array_to_json,
    check_schema,
    document,
    dumps,
    ends_from_json,
    ends_to_json,
)

ITEMS = corpus()


@given(idx=st.integers(0, len(ITEMS) - 1))
@settings(max_examples=50, deadline=None)
def test_array_round_trip(idx):
    pa = ITEMS[idx][0]
    doc = document(**array_to_json(pa))
    assert array_from_json(doc) == pa
    assert dumps(doc) == dumps(document(**array_to_json(array_from_json(doc))))


def test_ends_round_trip():
    pa = ITEMS[0][0]
    ee = end_entries(pa)
    assert ends_from_json(ends_to_json(ee), pa.field, pa.d) == ee


def test_schema_first_and_checked():
    doc = document(x=1)
    assert list(doc) == ["lpkit_schema", "x"]
    with pytest.raises(ParseError):
        check_schema({"lpkit_schema": 7})
    with pytest.raises(ParseError):
        check_schema([1])


def test_length_mismatch():
    doc = array_to_json(ITEMS[0][0])
    doc["phi"] = doc["phi"][:-1]
    with pytest.raises(ParseError):
        array_from_json(doc)


def test_missing_keys():
    doc = array_to_json(ITEMS[0][0])
    del doc["theta"]
    with pytest.raises(ParseError):
        array_from_json(doc)
    doc = array_to_json(ITEMS[0][0])
    doc["d"] = "3"
    with pytest.raises(ParseError):
        array_from_json(doc)

import json

import pytest

from angk0.files import (
    ParseError,
    canonical_json,
    digest,
    load_path,
    parse_document,
    parse_object_literal,
    serialize,
)

G1_DOC = {
    "n": 3,
    "indecomposables": ["a", "b", "c"],
    "suspension": {"a": "a", "b": "b", "c": "c"},
    "angles": [[{"a": 1}, {"b": 1}, {"c": 1}]],
}

F2_DOC = {
    "n": 3,
    "indecomposables": ["x"],
    "suspension": {"x": "x"},
    "angles": [],
    "tensor": {"unit": {"x": 1}, "table": {"x|x": {"x": 1}}},
}


class TestParse:
    def test_g1(self):
        loaded = parse_document(G1_DOC)
        assert not loaded.violations
        p = loaded.presentation
        assert p.n == 3
        assert p.rank == 3
        assert p.angles[0].vertices == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_tensor_block(self):
        loaded = parse_document(F2_DOC)
        assert loaded.tensor is not None
        assert loaded.tensor.unit == (1,)

    def test_unknown_symbol_is_violation(self):
        doc = dict(G1_DOC, angles=[[{"z": 1}, {}, {}]])
        loaded = parse_document(doc)
        assert loaded.presentation is None
        assert any("unknown symbol" in v for v in loaded.violations)

    def test_nonpositive_multiplicity_is_violation(self):
        doc = dict(G1_DOC, angles=[[{"a": 0}, {}, {}]])
        loaded = parse_document(doc)
        assert any("positive" in v for v in loaded.violations)

    def test_missing_suspension_symbol(self):
        doc = dict(G1_DOC, suspension={"a": "a", "b": "b"})
        loaded = parse_document(doc)
        assert any("missing symbol" in v for v in loaded.violations)

    def test_table_key_order_enforced(self):
        doc = {
            "n": 3,
            "indecomposables": ["a", "b"],
            "suspension": {"a": "a", "b": "b"},
            "angles": [],
            "tensor": {
                "unit": {"a": 1},
                "table": {"b|a": {}, "a|a": {"a": 1}, "a|b": {}, "b|b": {"b": 1}},
            },
        }
        loaded = parse_document(doc)
        assert any("smaller name" in v for v in loaded.violations)

    def test_shape_errors_raise(self):
        with pytest.raises(ParseError):
            parse_document([])
        with pytest.raises(ParseError):
            parse_document({"n": "three", "indecomposables": [], "suspension": {}})
        with pytest.raises(ParseError):
            parse_document({"n": 3, "indecomposables": [1], "suspension": {}})
        with pytest.raises(ParseError):
            parse_document(dict(G1_DOC, angles=[[{"a": "one"}, {}, {}]]))


class TestRoundTrip:
    def test_parse_serialize_parse(self):
        loaded = parse_document(G1_DOC)
        doc = serialize(loaded.presentation)
        again = parse_document(doc)
        assert again.presentation == loaded.presentation
        assert serialize(again.presentation) == doc

    def test_tensor_round_trip(self):
        loaded = parse_document(F2_DOC)
        doc = serialize(loaded.presentation, loaded.tensor)
        again = parse_document(doc)
        assert again.presentation == loaded.presentation
        assert again.tensor.table == loaded.tensor.table
        assert again.tensor.unit == loaded.tensor.unit

    def test_digest_stable(self):
        loaded = parse_document(G1_DOC)
        assert digest(loaded.presentation) == digest(parse_document(G1_DOC).presentation)
        assert len(digest(loaded.presentation)) == 64

    def test_canonical_json_sorted(self):
        loaded = parse_document(G1_DOC)
        text = canonical_json(serialize(loaded.presentation))
        assert json.loads(text) == serialize(loaded.presentation)


class TestLiterals:
    def test_parse_literal(self):
        p = parse_document(G1_DOC).presentation
        assert parse_object_literal('{"a": 2, "c": 1}', p) == (2, 0, 1)

    def test_unknown_name(self):
        p = parse_document(G1_DOC).presentation
        with pytest.raises(ValueError):
            parse_object_literal('{"z": 1}', p)

    def test_empty_is_zero_object(self):
        p = parse_document(G1_DOC).presentation
        assert parse_object_literal("{}", p) == (0, 0, 0)


def test_load_path_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError) as exc:
        load_path(str(bad))
    assert "line" in str(exc.value)
    with pytest.raises(ParseError):
        load_path(str(tmp_path / "missing.json"))

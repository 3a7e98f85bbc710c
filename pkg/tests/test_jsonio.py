"""JSON parsing/rendering canon: exact rationals, stable bytes, digests."""

import json
from fractions import Fraction

import pytest

import tslab
from tslab import InvalidInput
from tslab.jsonio import (
    INT_SAFE_BOUND,
    canonical_json,
    encode_obstruction_report,
    encode_polytope,
    input_digest,
    input_kind,
    parse_bundle,
    parse_fan,
    parse_int,
    parse_polytope,
    parse_rational,
    render_int,
    render_rational,
    render_vector,
)

F = Fraction


class TestScalarParsing:
    def test_parse_int(self):
        assert parse_int(7) == 7
        assert parse_int("-12") == -12
        assert parse_int(str(2 ** 80)) == 2 ** 80

    def test_parse_int_rejects(self):
        for bad in (True, False, 1.5, "3/2", "x", None, [1]):
            with pytest.raises(InvalidInput):
                parse_int(bad)

    def test_parse_rational(self):
        assert parse_rational(3) == 3
        assert parse_rational("3/4") == F(3, 4)
        assert parse_rational("-6/8") == F(-3, 4)
        assert parse_rational("5") == 5
        assert parse_rational("7/-2") == F(-7, 2)

    def test_parse_rational_rejects(self):
        for bad in (True, 0.5, "1.5", "a/b", "", None):
            with pytest.raises(InvalidInput):
                parse_rational(bad)
        with pytest.raises(InvalidInput):
            parse_rational("1/0")

    def test_render_rational_always_slash_form(self):
        assert render_rational(F(1, 2)) == "1/2"
        assert render_rational(3) == "3/1"
        assert render_rational(F(-4, 6)) == "-2/3"
        assert render_rational(0) == "0/1"

    def test_render_int_bounds(self):
        assert render_int(7) == 7
        assert render_int(-(2 ** 53) + 1) == -(2 ** 53) + 1
        assert render_int(2 ** 53) == str(2 ** 53)
        assert render_int(-(2 ** 60)) == str(-(2 ** 60))
        assert INT_SAFE_BOUND == 2 ** 53

    def test_render_vector(self):
        assert render_vector((F(1, 3), 2)) == ["1/3", "2/1"]

    def test_parse_render_round_trip(self):
        for q in (F(0), F(22, 7), F(-9, 4), F(10 ** 20, 3)):
            assert parse_rational(render_rational(q)) == q


class TestObjectParsing:
    def test_polytope_from_vertices(self):
        P = parse_polytope({"dim": 2,
                            "vertices": [[0, 0], [1, 0], [0, 1]]})
        assert P == tslab.construct(vertices=[(0, 0), (1, 0), (0, 1)])

    def test_polytope_from_inequalities(self):
        P = parse_polytope({"dim": 1, "inequalities": [
            {"normal": [1], "offset": 1},
            {"normal": [-1], "offset": 1}]})
        assert set(P.vertices) == {(-1,), (1,)}

    def test_polytope_requires_exactly_one_description(self):
        with pytest.raises(InvalidInput):
            parse_polytope({"dim": 1})
        with pytest.raises(InvalidInput):
            parse_polytope({"dim": 1, "vertices": [[0], [1]],
                            "inequalities": [{"normal": [1], "offset": 0}]})

    def test_polytope_missing_dim(self):
        with pytest.raises(InvalidInput) as err:
            parse_polytope({"vertices": [[0], [1]]})
        assert "dim" in str(err.value)

    def test_rational_vertex_strings(self):
        P = parse_polytope({"dim": 1, "vertices": [["-1/2"], ["3/2"]]})
        assert not P.is_integral

    def test_fan(self):
        fan = parse_fan({"dim": 2,
                         "rays": [[1, 0], [0, 1], [-1, -1]],
                         "max_cones": [[0, 1], [1, 2], [2, 0]]})
        assert fan.dim == 2
        assert len(fan.rays) == 3

    def test_fan_bad_ray_length(self):
        with pytest.raises(InvalidInput):
            parse_fan({"dim": 2, "rays": [[1], [0, 1]],
                       "max_cones": [[0, 1]]})

    def test_bundle(self):
        spec = parse_bundle({
            "genus": 2, "twist_r": 1, "deg_B": -1,
            "components": [
                {"rank": 1, "degree": 0, "weight": "1/1"},
                {"rank": 1, "degree": 1, "weight": "-1/1"}]})
        assert spec.total_rank == 2
        assert spec.components[0].weight == 1

    def test_bundle_missing_key(self):
        with pytest.raises(InvalidInput) as err:
            parse_bundle({"genus": 0, "twist_r": 1, "components": []})
        assert "deg_B" in str(err.value)

    def test_input_kind(self):
        assert input_kind({"rays": [], "max_cones": []}) == "fan"
        assert input_kind({"vertices": []}) == "polytope"
        assert input_kind({"inequalities": []}) == "polytope"
        assert input_kind({"components": []}) == "bundle"
        with pytest.raises(InvalidInput):
            input_kind({"something": 1})
        with pytest.raises(InvalidInput):
            input_kind([1, 2])


class TestCanonicalJson:
    def test_sorted_keys_and_trailing_newline(self):
        text = canonical_json({"b": 1, "a": 2})
        assert text == '{\n  "a": 2,\n  "b": 1\n}\n'

    def test_round_trip_byte_identity(self):
        obj = {"x": ["1/2", "3/1"], "n": 7, "nested": {"k": [1, 2, 3]}}
        text = canonical_json(obj)
        assert canonical_json(json.loads(text)) == text

    def test_ascii_only(self):
        text = canonical_json({"s": "é"})
        assert "\\u00e9" in text
        assert text.encode("ascii")

    def test_digest_stable_under_key_order(self):
        a = {"dim": 1, "vertices": [[0], [1]]}
        b = {"vertices": [[0], [1]], "dim": 1}
        assert input_digest(a) == input_digest(b)
        assert len(input_digest(a)) == 64

    def test_digest_differs_on_content(self):
        assert input_digest({"dim": 1, "vertices": [[0], [1]]}) != \
            input_digest({"dim": 1, "vertices": [[0], [2]]})


class TestEncoders:
    def test_polytope_round_trip(self):
        P = tslab.construct(vertices=[(-1, -1), (2, -1), (-1, 2)])
        data = encode_polytope(P)
        text = canonical_json(data)
        Q = parse_polytope(json.loads(text))
        assert Q == P

    def test_obstruction_report_shape(self):
        P = tslab.construct(vertices=[(-1, 0), (0, -1), (2, -1), (-1, 2)])
        rep = tslab.ono_vectors(P)
        data = encode_obstruction_report(rep)
        assert data["vectors"] == [["1/3", "1/3"], ["2/3", "2/3"]]
        assert data["all_zero"] is False
        assert data["rank"] == 1
        assert data["pairwise_proportional"] is True
        assert data["verdict"] == "obstructed"
        # canonical text is reproducible byte for byte
        assert canonical_json(data) == canonical_json(
            encode_obstruction_report(tslab.ono_vectors(P)))

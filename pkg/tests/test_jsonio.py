"""JSON wire formats: round trips, strict validation, canonical bytes."""

from fractions import Fraction

import pytest

from albertkit.errors import ParseError
from albertkit.gaction import diag_conj, gl2_elem, perm_elem, scalar_elem
from albertkit.jsonio import (
    STENSOR_BASIS_TAG,
    cubic_to_str,
    decode_albert,
    decode_group,
    decode_oct,
    decode_stensor,
    decode_vpoint,
    dumps,
    encode_albert,
    encode_group,
    encode_oct,
    encode_stensor,
    encode_vpoint,
    load_json,
    rat_to_str,
    str_to_rat,
)
from albertkit.octonion import Oct
from albertkit.pvs import cubic_of, w_point
from albertkit.smap import structure_tensor
from albertkit.verify import rand_albert, rand_group, rand_oct, rand_vpoint


def test_rational_strings():
    assert rat_to_str(Fraction(3)) == "3"
    assert rat_to_str(Fraction(-1, 2)) == "-1/2"
    assert str_to_rat("7/3") == Fraction(7, 3)
    assert str_to_rat("-4") == Fraction(-4)
    assert str_to_rat(5) == Fraction(5)
    for bad in ("x", "1/0", "", None, 1.5):
        with pytest.raises(ParseError):
            str_to_rat(bad)


def test_oct_round_trip(rng):
    for _ in range(5):
        x = rand_oct(rng)
        enc = encode_oct(x)
        assert len(enc) == 8 and all(isinstance(s, str) for s in enc)
        assert decode_oct(enc) == x
    with pytest.raises(ParseError):
        decode_oct([1, 2, 3])
    with pytest.raises(ParseError):
        decode_oct("nope")


def test_albert_round_trip(rng):
    for _ in range(5):
        X = rand_albert(rng)
        enc = encode_albert(X)
        assert set(enc) == {"diag", "oct"}
        assert decode_albert(enc) == X
    with pytest.raises(ParseError):
        decode_albert({"diag": ["1", "2", "3"]})
    with pytest.raises(ParseError):
        decode_albert({"diag": ["1", "2"], "oct": [encode_oct(Oct(0))] * 3})
    with pytest.raises(ParseError):
        decode_albert({"diag": ["1", "2", "3"], "oct": [], "extra": 1})


def test_vpoint_round_trip(rng):
    x = rand_vpoint(rng)
    assert decode_vpoint(encode_vpoint(x)) == x
    with pytest.raises(ParseError):
        decode_vpoint({"a": encode_albert(x.a)})


def test_cubic_string():
    assert cubic_to_str(cubic_of(w_point())) == "[0, 1, -1, 0]"


def test_stensor_round_trip():
    t = structure_tensor(w_point())
    enc = encode_stensor(t)
    assert enc["basis"] == STENSOR_BASIS_TAG
    assert len(enc["entries"]) == 19683
    assert decode_stensor(enc) == t
    bad = dict(enc)
    bad["basis"] = "other"
    with pytest.raises(ParseError):
        decode_stensor(bad)
    short = dict(enc)
    short["entries"] = enc["entries"][:5]
    with pytest.raises(ParseError):
        decode_stensor(short)


def test_group_full_round_trip(rng):
    for _ in range(3):
        g = rand_group(rng)
        assert decode_group(encode_group(g)) == g


def test_group_shorthand():
    assert decode_group({"kind": "scalar", "params": "2/3"}) == scalar_elem(
        Fraction(2, 3)
    )
    assert decode_group({"kind": "diag", "params": ["1", "2", "-1/2"]}) == diag_conj(
        1, 2, Fraction(-1, 2)
    )
    assert decode_group({"kind": "perm", "params": [2, 3, 1]}) == perm_elem((2, 3, 1))
    assert decode_group(
        {"kind": "gl2", "params": [["1", "1"], ["0", "1"]]}
    ) == gl2_elem([[1, 1], [0, 1]])
    for bad in (
        {"kind": "scalar"},
        {"kind": "spin", "params": "1"},
        {"kind": "perm", "params": [1, 1, 2]},
        {"kind": "diag", "params": ["1", "2"]},
        {"L": [], "c": "1"},
        "not-a-dict",
    ):
        with pytest.raises(ParseError):
            decode_group(bad)


def test_dumps_canonical():
    s = dumps({"b": 1, "a": [1, 2]})
    assert s == '{"a":[1,2],"b":1}\n'
    assert dumps({"a": [1, 2], "b": 1}) == s


def test_load_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text('{"k": "1/2"}', encoding="utf-8")
    assert load_json(str(p)) == {"k": "1/2"}
    with pytest.raises(ParseError):
        load_json(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{nope", encoding="utf-8")
    with pytest.raises(ParseError):
        load_json(str(bad))

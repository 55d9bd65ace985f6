"""JSON encoding for every domain type; exact rationals as "p/q" strings.

No floating point crosses this boundary. Encoders return plain Python
structures ready for json.dumps; decoders validate shape and raise
ParseError with a readable message. dumps() fixes key order and spacing
so identical values serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .albert import AlbertElem
from .errors import ParseError
from .gaction import GroupElem, diag_conj, gl2_elem, perm_elem, scalar_elem
from .octonion import Oct
from .pvs import BinaryCubic, VPoint
from .smap import StructureTensor

STENSOR_BASIS_TAG = "jbasis-v1"


def rat_to_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def str_to_rat(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError("rational must be a string, got %r" % type(s).__name__)
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad rational %r: %s" % (s, exc)) from None


def encode_oct(x: Oct) -> list:
    return [rat_to_str(c) for c in x.coords()]

def decode_oct(obj) -> Oct:
    if not isinstance(obj, (list, tuple)) or len(obj) != 8:
        raise ParseError("octonion must be an array of 8 rationals")
    return Oct.from_coords([str_to_rat(c) for c in obj])


def encode_albert(X: AlbertElem) -> dict:
    return {
        "diag": [rat_to_str(c) for c in X.s],
        "oct": [encode_oct(xi) for xi in X.x],
    }

def decode_albert(obj) -> AlbertElem:
    if not isinstance(obj, dict) or set(obj) != {"diag", "oct"}:
        raise ParseError('albert element must be {"diag": [...], "oct": [...]}')
    diag = obj["diag"]
    octs = obj["oct"]
    if not isinstance(diag, list) or len(diag) != 3:
        raise ParseError("diag must hold 3 rationals")
    if not isinstance(octs, list) or len(octs) != 3:
        raise ParseError("oct must hold 3 octonions")
    return AlbertElem(
        tuple(str_to_rat(c) for c in diag),
        tuple(decode_oct(o) for o in octs),
    )


def encode_vpoint(x: VPoint) -> dict:
    return {"a": encode_albert(x.a), "b": encode_albert(x.b)}

def decode_vpoint(obj) -> VPoint:
    if not isinstance(obj, dict) or set(obj) != {"a", "b"}:
        raise ParseError('point of V must be {"a": ..., "b": ...}')
    return VPoint(decode_albert(obj["a"]), decode_albert(obj["b"]))


def cubic_to_str(f: BinaryCubic) -> str:
    return "[%s, %s, %s, %s]" % tuple(rat_to_str(c) for c in f.coeffs())


def encode_stensor(t: StructureTensor) -> dict:
    return {
        "basis": STENSOR_BASIS_TAG,
        "point": encode_vpoint(t.point),
        "entries": [rat_to_str(v) for v in t.flat],
    }

def decode_stensor(obj) -> StructureTensor:
    if not isinstance(obj, dict) or set(obj) != {"basis", "entries", "point"}:
        raise ParseError('structure tensor must be {"basis", "point", "entries"}')
    if obj["basis"] != STENSOR_BASIS_TAG:
        raise ParseError("unknown basis tag %r" % (obj["basis"],))
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != 19683:
        raise ParseError("entries must hold 27^3 rationals")
    return StructureTensor(
        decode_vpoint(obj["point"]),
        [str_to_rat(v) for v in entries],
    )


def _decode_matrix(obj, rows, cols, what) -> tuple:
    if not isinstance(obj, list) or len(obj) != rows:
        raise ParseError("%s must be a %dx%d matrix" % (what, rows, cols))
    out = []
    for row in obj:
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError("%s must be a %dx%d matrix" % (what, rows, cols))
        out.append(tuple(str_to_rat(v) for v in row))
    return tuple(out)


def encode_group(g: GroupElem) -> dict:
    return {
        "L": [[rat_to_str(v) for v in row] for row in g.L],
        "c": rat_to_str(g.c),
        "g2": [[rat_to_str(v) for v in row] for row in g.g2],
    }

def decode_group(obj) -> GroupElem:
    """Full form {"L", "c", "g2"} or generator shorthand {"kind", "params"}."""
    if not isinstance(obj, dict):
        raise ParseError("group element must be an object")
    if "kind" in obj:
        if set(obj) != {"kind", "params"}:
            raise ParseError('generator shorthand is {"kind": ..., "params": ...}')
        kind = obj["kind"]
        params = obj["params"]
        if kind == "scalar":
            return scalar_elem(str_to_rat(params))
        if kind == "diag":
            if not isinstance(params, list) or len(params) != 3:
                raise ParseError("diag shorthand needs 3 rationals")
            return diag_conj(*[str_to_rat(v) for v in params])
        if kind == "perm":
            if (
                not isinstance(params, list)
                or len(params) != 3
                or sorted(params) != [1, 2, 3]
            ):
                raise ParseError("perm shorthand needs a permutation of [1, 2, 3]")
            return perm_elem(params)
        if kind == "gl2":
            return gl2_elem(_decode_matrix(params, 2, 2, "gl2 params"))
        raise ParseError("unknown generator kind %r" % (kind,))
    if set(obj) != {"L", "c", "g2"}:
        raise ParseError('group element must be {"L", "c", "g2"} or a shorthand')
    return GroupElem(
        _decode_matrix(obj["L"], 27, 27, "L"),
        str_to_rat(obj["c"]),
        _decode_matrix(obj["g2"], 2, 2, "g2"),
    )


def dumps(obj) -> str:
    """Canonical bytes: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc)) from None
    except json.JSONDecodeError as exc:
        raise ParseError("%s is not valid JSON: %s" % (path, exc)) from None

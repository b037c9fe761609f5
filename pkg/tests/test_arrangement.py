import itertools
import json
import random

import pytest

from hyparr import arrangement as arr
from hyparr.intmat import det
from hyparr.polyring import format_poly, parse_poly

XYZ = ["x", "y", "z"]


def forms(a):
    return [format_poly(f, a.variables) for f in a.forms]


def test_build_normalizes():
    a = arr.build([parse_poly("2*x+4*y", XYZ), parse_poly("-z", XYZ)], 3, XYZ)
    assert forms(a) == ["x + 2*y", "z"]
    assert a.central


def test_build_duplicate():
    with pytest.raises(arr.DuplicateHyperplane) as exc:
        arr.build([parse_poly("x", XYZ), parse_poly("3*x", XYZ)], 3, XYZ)
    assert exc.value.pair == (0, 1)


def test_build_affine_duplicate_needs_constants():
    arr.from_polynomial("x*(x-1)", ["x", "y"])
    with pytest.raises(arr.DuplicateHyperplane):
        arr.from_polynomial("(x-1)*(2*x-2)", ["x", "y"])


def test_build_rejects_bad_forms():
    with pytest.raises(arr.ArrangementError):
        arr.build([parse_poly("x*y", XYZ)], 3, XYZ)
    with pytest.raises(arr.ArrangementError):
        arr.build([parse_poly("0", XYZ)], 3, XYZ)


def test_period_example_matrix(a7):
    assert a7.central
    assert a7.matrix.columns() == [(0, 0, 1), (4, 0, 1), (2, 1, 0), (6, 1, 3), (8, 2, 5)]


def test_cone_line():
    a = arr.from_polynomial("x-1", ["x"])
    c = arr.cone(a)
    assert c.l == 2 and c.central
    assert forms(c) == ["x - z", "z"]


def test_cone_central_input(boolean):
    c = arr.cone(boolean)
    assert c.l == 4 and c.n == 4
    assert c.matrix.columns()[:3] == [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]


def test_cone_affine_plane():
    c = arr.cone(arr.from_polynomial("x*(x-1)*y", ["x", "y"]))
    assert c.n == 4 and c.is_essential()


def test_is_essential(boolean, braid, a5):
    assert arr.is_essential(boolean)
    assert not arr.is_essential(braid)
    assert arr.is_essential(a5)


def test_frak_index_set(boolean, a5):
    assert arr.frak_index_set(boolean) == {(0, 1, 2)}
    full = arr.frak_index_set(a5)
    assert len(full) == 9
    assert set(itertools.combinations(range(5), 3)) - full == {(0, 1, 3)}
    assert full - arr.frak_index_set(a5, 2) == {(0, 2, 4)}


def test_frak_index_set_rejects_affine():
    with pytest.raises(arr.NotCentral):
        arr.frak_index_set(arr.from_polynomial("x*(x-1)*y", ["x", "y"]))


def test_frak_matches_determinants(a5):
    for t in itertools.combinations(range(5), 3):
        d = det(a5.matrix.select_columns(t))
        assert (t in arr.frak_index_set(a5)) == (d != 0)
        assert (t in arr.frak_index_set(a5, 2)) == (d % 2 != 0)


def test_bar_index_set_essential(a5, braid):
    allt = set(itertools.combinations(range(a5.n + 1), a5.l + 1))
    assert arr.bar_index_set(a5) != allt
    allt = set(itertools.combinations(range(braid.n + 1), braid.l + 1))
    assert arr.bar_index_set(braid) == allt


def test_reduce_nongood(a7):
    with pytest.raises(arr.NotGood) as exc:
        arr.reduce(a7, 2)
    assert exc.value.p == 2
    pairs = arr.nongood_pairs(a7, 2)
    # (4x+z, 8x+2y+5z) both become z mod 2
    assert (1, 4) in pairs
    assert exc.value.pair in pairs


def test_reduce_good(a6, boolean):
    for p in (2, 3, 5, 7):
        assert arr.reduce(a6, p).n == 4
    b2 = arr.reduce(boolean, 2)
    assert [format_poly(f, XYZ) for f in b2.forms_p] == ["x", "y", "z"]
    assert b2.is_good()


def test_load_formats(tmp_path):
    a = arr.load({"vars": XYZ, "polynomial": "x*y*(x+y)"})
    b = arr.load({"vars": XYZ, "matrix": [[1, 0, 0], [0, 1, 0], [1, 1, 0]]})
    assert a == b
    c = arr.load({"vars": ["x", "y"], "matrix": [[1, 0], [1, 0]], "constants": [0, -1]})
    assert not c.central
    f = tmp_path / "a.json"
    f.write_text(json.dumps({"vars": XYZ, "polynomial": "x*y*z"}))
    assert arr.load(str(f)).n == 3
    with pytest.raises(arr.ArrangementError):
        arr.load({"polynomial": "x"})


def test_random_central_essential():
    rng = random.Random(0)
    for _ in range(20):
        a = arr.random_central_essential(rng, 3, 5)
        assert a.central and a.is_essential() and a.n == 5

import pytest

from hyparr import arrangement as arr
from hyparr.lattice import (
    CharPoly,
    LatticeBudgetExceeded,
    build_lattice,
    characteristic_polynomial,
    comb_equivalent,
    lattice_from_bar,
    theorem3_crosscheck,
)


def test_boolean_lattice(boolean):
    m = build_lattice(boolean)
    assert len(m.flats) == 8
    assert all(m.mu(f) == (-1) ** f.rank for f in m.flats)
    assert m.rank_counts() == [1, 3, 3, 1]


def test_braid_lattice(braid):
    m = build_lattice(braid)
    assert len(m.flats) == 5
    top = [f for f in m.flats if f.rank == 2]
    assert len(top) == 1 and m.mu(top[0]) == 2
    assert top[0].sorted_hyperplanes == [0, 1, 2]


def test_lattice_changes_mod_2(a5):
    assert build_lattice(a5).signature() != build_lattice(arr.reduce(a5, 2)).signature()
    assert build_lattice(a5).signature() == build_lattice(arr.reduce(a5, 3)).signature()


def test_charpoly(boolean, braid, a5):
    assert characteristic_polynomial(boolean).tolist() == [-1, 3, -3, 1]
    assert characteristic_polynomial(braid).tolist() == [0, 2, -3, 1]
    chi = characteristic_polynomial(a5)
    assert chi.tolist() == [-5, 9, -5, 1]
    for p in (3, 5, 7, 11):
        assert characteristic_polynomial(arr.reduce(a5, p)) == chi


def test_charpoly_affine():
    a = arr.from_polynomial("(x-1)*(x+1)*y", ["x", "y"])
    assert characteristic_polynomial(a).tolist() == [2, -3, 1]


def test_charpoly_str():
    assert str(CharPoly((0, 2, -3, 1))) == "t^3 - 3*t^2 + 2*t"
    assert str(CharPoly((-1,))) == "-1"
    assert CharPoly((1, 2, 0, 0)).degree == 1


def test_subset_cap():
    a = arr.from_matrix([[1, k] for k in range(6)])
    with pytest.raises(LatticeBudgetExceeded):
        build_lattice(a, subset_cap=5)


def test_comb_equivalent(a5, a7):
    assert comb_equivalent(a7, arr.reduce(a7, 3))
    res = comb_equivalent(a5, arr.reduce(a5, 2))
    assert not res
    assert res.witness == (0, 2, 4)
    assert res.dims == (0, 1)
    assert comb_equivalent(a5, a5)


def test_comb_equivalent_size_mismatch(a5, a6):
    with pytest.raises(ValueError):
        comb_equivalent(a5, a6)


def test_theorem3_crosscheck(a5, a7):
    assert theorem3_crosscheck(a5, a5)
    assert theorem3_crosscheck(a5, arr.reduce(a5, 2))
    assert theorem3_crosscheck(a7, arr.reduce(a7, 3))


def test_theorem3_rejects_nonessential(braid):
    with pytest.raises(arr.NotEssential):
        theorem3_crosscheck(braid, braid)


def test_lattice_from_bar_matches_ranks(a5, a7):
    for a in (a5, a7):
        from_bar = lattice_from_bar(a)
        m = build_lattice(a)
        independent = {tuple(sorted(s)) for f in m.flats for s in [f.hyperplanes] if len(s) == f.rank and s}
        assert independent <= from_bar
        for t in from_bar:
            assert a.rank_of(t) == len(t)

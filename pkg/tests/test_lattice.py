import pytest

from src.lattice import PatchLattice, Region, TorusLattice, cycles, grow_region, parse_region, up_triangles

TORUS = TorusLattice(3, 3)


def test_torus_counts():
    assert TORUS.num_sites == 9
    assert len(up_triangles(TORUS)) == 9
    assert up_triangles(TORUS)[0] == (0, 1, 3)


def test_torus_wraps():
    assert TORUS.site(3, 4) == TORUS.site(0, 1) == 1
    assert TORUS.coords(5) == (1, 2)


def test_torus_cycles():
    rows, diagonals = cycles(TORUS)
    assert rows == [[0, 1, 2], [3, 4, 5], [6, 7, 8]]
    assert diagonals == [[0, 3, 6], [1, 4, 7], [2, 5, 8]]
    assert TORUS.second_diagonals()[0] == [0, 5, 7]


def test_torus_rejects_degenerate_sizes():
    with pytest.raises(ValueError):
        TorusLattice(1, 3)


def test_patch_geometry():
    patch = PatchLattice(3, 3)
    assert patch.num_sites == 6
    assert patch.up_triangles() == [(0, 1, 3), (1, 2, 4), (3, 4, 5)]
    assert patch.coords(4) == (1, 1)
    with pytest.raises(ValueError):
        cycles(patch)
    with pytest.raises(ValueError):
        patch.site(2, 1)


def test_region_helpers():
    a = TORUS.region([0, 1])
    b = TORUS.region([3])
    assert len(a.complement()) == 7
    assert a.union(b).ordered == [0, 1, 3]
    assert a.disjoint(b)
    assert 1 in a
    with pytest.raises(ValueError):
        Region(frozenset({9}), 9)


def test_neighbors_and_growth():
    assert TORUS.neighbors(0) == [1, 2, 3, 5, 6, 7]
    grown = grow_region(TORUS.region([0]), TORUS)
    assert len(grown) == 6
    assert all(len(r) == 2 for r in grown)
    with pytest.raises(ValueError):
        grow_region(TORUS.region([]), TORUS)


def test_translations():
    assert TORUS.shift(0, 1)[0] == 1
    assert TORUS.shift(1, 0)[0] == 3
    assert len(TORUS.translations()) == 9


@pytest.mark.parametrize(
    "spec, sites",
    [
        ("triangle", [0, 1, 3]),
        ("site:1,1", [4]),
        ("sites:0,0;2,2", [0, 8]),
        ("row:0:2", [0, 1]),
        ("column:1", [1, 4, 7]),
        ("half", [0, 1, 2]),
    ],
)
def test_parse_region(spec, sites):
    assert parse_region(spec, TORUS).ordered == sites


@pytest.mark.parametrize("spec", ["bogus", "site:x", "row:"])
def test_parse_region_rejects(spec):
    with pytest.raises(ValueError):
        parse_region(spec, TORUS)


@pytest.mark.parametrize("lattice", [TORUS, TorusLattice(9, 9), TorusLattice(5, 40)])
def test_triangles_are_translation_invariant(lattice):
    triangles = {frozenset(t) for t in lattice.up_triangles()}
    for dr, dc in [(0, 1), (1, 0), (2, 3)]:
        table = lattice.shift(dr, dc)
        assert {frozenset(table[s] for s in t) for t in triangles} == triangles
    assert all(len(lattice.triangles_of(s)) == 3 for s in range(lattice.num_sites))


@pytest.mark.parametrize("lattice", [TORUS, TorusLattice(9, 9), TorusLattice(5, 40)])
def test_each_site_on_one_row_and_one_vertical_cycle(lattice):
    rows, verticals = lattice.cycles()
    for family in (rows, verticals):
        sites = sorted(s for cycle in family for s in cycle)
        assert sites == list(range(lattice.num_sites))

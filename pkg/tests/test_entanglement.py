import numpy as np
import pytest

from src.automaton import HCode
from src.entanglement import (
    all_regions,
    area_law_check,
    brute_force_entropy,
    entropy,
    growth_path,
    line_regions,
    maximally_mixed_census,
    random_disjoint_triples,
    rank_entropy,
    strong_subadditivity,
    topological_entropy,
    triangle_regions,
)
from src.errors import EnumerationLimitError
from src.lattice import TorusLattice

TORUS = TorusLattice(3, 3)
TORUS9 = TorusLattice(9, 9)


@pytest.fixture(scope="module")
def code3():
    return HCode.build(TORUS)


@pytest.fixture(scope="module")
def code9():
    return HCode.build(TORUS9)


@pytest.mark.parametrize("lattice", [TORUS, TORUS9])
def test_single_site_and_triangle(lattice):
    assert entropy(lattice.region([lattice.site(1, 1)]), lattice).entropy == 1
    assert entropy(lattice.region(lattice.up_triangles()[0]), lattice).entropy == 2


def test_full_and_empty_regions(code3):
    assert entropy(TORUS.full_region(), TORUS, code=code3).entropy == 0
    empty = entropy(TORUS.region([]), TORUS, code=code3)
    assert empty.entropy == 0
    assert empty.note == "empty region"


def test_rank_matches_brute_force_on_every_3x3_region(code3):
    for region in all_regions(TORUS):
        exact = rank_entropy(region, TORUS, code3)
        assert brute_force_entropy(region, TORUS, code3).entropy == pytest.approx(exact, abs=1e-9)


def test_brute_force_single_site(code3):
    assert brute_force_entropy(TORUS.region([4]), TORUS, code3).entropy == pytest.approx(1.0, abs=1e-9)


def test_brute_force_guard(code9):
    big = TORUS9.region(range(8))
    with pytest.raises(EnumerationLimitError):
        brute_force_entropy(big, TORUS9, code9)


def test_complement_symmetry(code3):
    for region in all_regions(TORUS):
        assert rank_entropy(region, TORUS, code3) == rank_entropy(region.complement(), TORUS, code3)


def test_entropy_bounded_by_size_and_boundary(code3):
    for region in all_regions(TORUS):
        value = rank_entropy(region, TORUS, code3)
        assert 0 <= value <= min(len(region), 3)


def test_sector_entropy(code3):
    assert entropy(TORUS.region([0]), TORUS, sector=0, code=code3).entropy == 1


def test_regions_below_boundary_are_maximally_mixed_on_3x3(code3):
    small = [r for r in all_regions(TORUS) if 0 < len(r) < 3]
    census = maximally_mixed_census(small, TORUS, code3)
    assert census["constrained"] == 0


def test_line_regions_are_maximally_mixed_on_9x9(code9):
    regions = line_regions(TORUS9, 100, np.random.default_rng(4))
    assert all(1 <= len(r) < 9 for r in regions)
    assert maximally_mixed_census(regions, TORUS9, code9)["constrained"] == 0


@pytest.mark.parametrize("lattice", [TORUS, TORUS9])
def test_topological_entropy_of_triangle(lattice):
    a, b, c = triangle_regions(lattice)
    assert topological_entropy(a, b, c, lattice) == -1


def test_topological_entropy_rejects_overlap():
    a = TORUS.region([0, 1])
    with pytest.raises(ValueError):
        topological_entropy(a, TORUS.region([1]), TORUS.region([3]), TORUS)


def test_local_growth_keeps_topological_entropy(code9):
    rng = np.random.default_rng(11)
    for _ in range(10):
        path = growth_path(TORUS9, 6, rng, code=code9, max_sites=36)
        assert len(path.steps) > 1
        assert all(v == -1 for v in path.values)
        sizes = sum(len(r) for r in path.regions)
        assert sizes == 3 + len(path.steps) - 1


def test_growth_stops_at_size_cap(code3):
    path = growth_path(TORUS, 6, np.random.default_rng(0), code=code3, max_sites=6)
    assert sum(len(r) for r in path.regions) <= 5
    assert all(v == -1 for v in path.values)


def test_area_law_3x3(code3):
    report = area_law_check(TORUS, code=code3)
    assert report["regions"] == 512
    assert report["holds"]
    assert report["max_entropy"] == 3
    assert report["size_violations"] == 0


def test_area_law_half_torus_9x9(code9):
    report = area_law_check(TORUS9, rng=np.random.default_rng(6), samples=50, code=code9)
    assert report["holds"]
    assert report["half_entropy"] <= 9


def test_strong_subadditivity(code9):
    triples = random_disjoint_triples(TORUS9, 50, np.random.default_rng(8))
    assert strong_subadditivity(TORUS9, triples, code9) == 0
    small = random_disjoint_triples(TORUS, 20, np.random.default_rng(9))
    assert all(sum(len(r) for r in t) <= 9 for t in small)

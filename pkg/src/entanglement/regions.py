from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..automaton import HCode
from ..lattice import grow_region
from .entropy import column_rank, entropy, rank_entropy, topological_entropy


def triangle_regions(lattice, index=0):
    """The three sites of an up-triangle as single-site regions A, B, C"""
    return tuple(lattice.region([site]) for site in lattice.up_triangles()[index])


def _is_local_move(generator, regions, which, site):
    """The new site adds rank to its own region exactly when it adds rank to A u B u C"""
    own = regions[which].sites
    union = regions[0].sites | regions[1].sites | regions[2].sites
    own_gain = column_rank(generator, own | {site}) - column_rank(generator, own)
    all_gain = column_rank(generator, union | {site}) - column_rank(generator, union)
    return own_gain == all_gain


@dataclass
class GrowthPath:
    local_only: bool
    steps: list = field(default_factory=list)  # (which, site, S_top)
    regions: tuple = ()

    @property
    def values(self):
        return [s for _, _, s in self.steps]


def growth_path(lattice, steps, rng, local_only=True, seed_regions=None, code=None, max_sites=None):
    """Grow A, B, C one site at a time; S_top is recorded after every move.

    With local_only, a move is kept only when the new site's linear
    dependencies all fall inside its own region; such moves leave S_top unchanged
    while A u B u C stays smaller than the minimum distance (pass it as max_sites).
    """
    code = code or HCode.build(lattice)
    generator = code.generator.array
    regions = list(seed_regions or triangle_regions(lattice))
    path = GrowthPath(local_only)
    path.steps.append((None, None, topological_entropy(*regions, lattice, code)))
    for _ in range(steps):
        union = regions[0].union(regions[1], regions[2])
        if max_sites is not None and len(union) + 1 >= max_sites:
            break
        moves = []
        for which in rng.permutation(3):
            grown = grow_region(regions[which], lattice)
            sites = [max(g.sites - regions[which].sites) for g in grown]
            sites = [s for s in sites if s not in union]
            for idx in rng.permutation(len(sites)):
                moves.append((int(which), sites[idx]))
        chosen = None
        for which, site in moves:
            if not local_only or _is_local_move(generator, regions, which, site):
                chosen = (which, site)
                break
        if chosen is None:
            break
        which, site = chosen
        regions[which] = regions[which].add(site)
        path.steps.append((which, site, topological_entropy(*regions, lattice, code)))
    path.regions = tuple(regions)
    return path


def line_regions(lattice, count, rng, max_size=None):
    """Random proper subsets of a single row cycle or column cycle"""
    max_size = max_size or lattice.n - 1
    rows, columns = lattice.cycles()
    regions = []
    for _ in range(count):
        family = rows if rng.integers(2) == 0 else columns
        line = family[rng.integers(len(family))]
        size = int(rng.integers(1, min(max_size, len(line) - 1) + 1))
        regions.append(lattice.region(rng.choice(line, size=size, replace=False)))
    return regions


def random_regions(lattice, count, rng, min_size=1, max_size=None):
    max_size = max_size or lattice.num_sites
    regions = []
    for _ in range(count):
        size = int(rng.integers(min_size, max_size + 1))
        regions.append(lattice.region(rng.choice(lattice.num_sites, size=size, replace=False)))
    return regions


def all_regions(lattice):
    """Every subset of the lattice sites (2^sites of them)"""
    total = lattice.num_sites
    return [lattice.region([s for s in range(total) if mask >> s & 1]) for mask in range(2**total)]


def entropy_table(regions, lattice, workers=1, code=None, sector=None):
    code = code or HCode.build(lattice)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        return list(pool.map(lambda r: entropy(r, lattice, sector=sector, code=code), regions))


def maximally_mixed_census(regions, lattice, code=None):
    """How many regions have entropy equal to their size"""
    code = code or HCode.build(lattice)
    hits = sum(1 for r in regions if rank_entropy(r, lattice, code) == len(r))
    return {"regions": len(regions), "maximally_mixed": hits, "constrained": len(regions) - hits}


def area_law_check(lattice, regions=None, rng=None, samples=500, workers=1, code=None):
    """Entropy never exceeds the boundary length n"""
    code = code or HCode.build(lattice)
    if regions is None:
        if lattice.num_sites <= 12:
            regions = all_regions(lattice)
        else:
            rng = rng or np.random.default_rng(0)
            regions = random_regions(lattice, samples, rng)
    table = entropy_table(regions, lattice, workers=workers, code=code)
    values = [r.entropy for r in table]
    half = lattice.region(s for r in range(lattice.m // 2) for s in lattice.row_sites(r))
    half_entropy = rank_entropy(half, lattice, code)
    bound = code.n
    return {
        "regions": len(regions),
        "bound": bound,
        "max_entropy": max(values),
        "violations": sum(1 for v in values if v > bound),
        "size_violations": sum(1 for r in table if r.entropy > len(r.region)),
        "half_entropy": half_entropy,
        "holds": max(values) <= bound and half_entropy <= bound,
    }


def strong_subadditivity(lattice, triples, code=None):
    """Count of triples violating S_AB + S_BC >= S_B + S_ABC"""
    code = code or HCode.build(lattice)
    failures = 0
    for a, b, c in triples:
        lhs = rank_entropy(a.union(b), lattice, code) + rank_entropy(b.union(c), lattice, code)
        rhs = rank_entropy(b, lattice, code) + rank_entropy(a.union(b, c), lattice, code)
        failures += lhs < rhs
    return failures


def random_disjoint_triples(lattice, count, rng, max_part=4):
    max_part = max(1, min(max_part, lattice.num_sites // 3))
    triples = []
    for _ in range(count):
        sizes = rng.integers(1, max_part + 1, size=3)
        picked = rng.choice(lattice.num_sites, size=int(sizes.sum()), replace=False)
        a, b, c = np.split(picked, np.cumsum(sizes)[:2])
        triples.append((lattice.region(a), lattice.region(b), lattice.region(c)))
    return triples

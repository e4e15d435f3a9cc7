from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class Region:
    """Set of site ids inside a lattice of num_sites sites"""

    sites: frozenset
    num_sites: int

    def __post_init__(self):
        object.__setattr__(self, "sites", frozenset(int(s) for s in self.sites))
        bad = [s for s in self.sites if not 0 <= s < self.num_sites]
        if bad:
            raise ValueError(f"sites {sorted(bad)} outside a lattice of {self.num_sites} sites")

    def __len__(self):
        return len(self.sites)

    def __contains__(self, site):
        return site in self.sites

    def __iter__(self):
        return iter(sorted(self.sites))

    @property
    def ordered(self):
        return sorted(self.sites)

    def complement(self):
        return Region(frozenset(range(self.num_sites)) - self.sites, self.num_sites)

    def union(self, *others):
        sites = set(self.sites)
        for other in others:
            sites |= other.sites
        return Region(frozenset(sites), self.num_sites)

    def add(self, site):
        return Region(self.sites | {site}, self.num_sites)

    def disjoint(self, other):
        return not (self.sites & other.sites)


class _Lattice:
    kind = None

    @property
    def num_sites(self):
        raise NotImplementedError

    def describe(self):
        return {"type": self.kind, "n": self.n, "m": self.m}

    def region(self, sites):
        return Region(frozenset(sites), self.num_sites)

    def full_region(self):
        return self.region(range(self.num_sites))

    @cached_property
    def _triangles_by_site(self):
        table = {site: [] for site in range(self.num_sites)}
        for tri in self.up_triangles():
            for site in tri:
                table[site].append(tri)
        return table

    def triangles_of(self, site):
        return list(self._triangles_by_site[site])

    def neighbors(self, site):
        """Sites sharing an up-triangle with site"""
        found = set()
        for tri in self._triangles_by_site[site]:
            found.update(tri)
        found.discard(site)
        return sorted(found)

    def up_triangles(self):
        raise NotImplementedError


@dataclass(frozen=True)
class TorusLattice(_Lattice):
    """n columns (boundary length) by m rows with periodic rows and columns"""

    n: int
    m: int
    kind = "torus"

    def __post_init__(self):
        if self.n < 2 or self.m < 1:
            raise ValueError(f"torus needs n >= 2 and m >= 1, got ({self.n},{self.m})")

    @property
    def num_sites(self):
        return self.n * self.m

    def site(self, r, c):
        return (r % self.m) * self.n + (c % self.n)

    def coords(self, site):
        return divmod(site, self.n)

    def row_sites(self, r):
        return [self.site(r, c) for c in range(self.n)]

    def up_triangles(self):
        return [
            (self.site(r, c), self.site(r, c + 1), self.site(r + 1, c))
            for r in range(self.m)
            for c in range(self.n)
        ]

    def cycles(self):
        """Row cycles and fixed-column vertical cycles"""
        rows = [self.row_sites(r) for r in range(self.m)]
        diagonals = [[self.site(r, c) for r in range(self.m)] for c in range(self.n)]
        return rows, diagonals

    def second_diagonals(self):
        return [[self.site(r, c - r) for r in range(self.m)] for c in range(self.n)]

    def shift(self, dr, dc):
        """Relabeling table: site -> site translated by (dr, dc)"""
        return [self.site(r + dr, c + dc) for r in range(self.m) for c in range(self.n)]

    def translations(self):
        return [(dr, dc) for dr in range(self.m) for dc in range(self.n)]


@dataclass(frozen=True)
class PatchLattice(_Lattice):
    """Planar patch: row r holds n - r sites, open boundaries"""

    n: int
    m: int
    kind = "patch"

    def __post_init__(self):
        if self.n < 2 or not 1 <= self.m <= self.n:
            raise ValueError(f"patch needs n >= 2 and 1 <= m <= n, got ({self.n},{self.m})")

    @cached_property
    def _offsets(self):
        offsets, total = [], 0
        for r in range(self.m):
            offsets.append(total)
            total += self.n - r
        return offsets, total

    @property
    def num_sites(self):
        return self._offsets[1]

    def row_length(self, r):
        return self.n - r

    def site(self, r, c):
        if not 0 <= r < self.m or not 0 <= c < self.n - r:
            raise ValueError(f"({r},{c}) is outside the patch")
        return self._offsets[0][r] + c

    def coords(self, site):
        offsets = self._offsets[0]
        for r in reversed(range(self.m)):
            if site >= offsets[r]:
                return r, site - offsets[r]
        raise ValueError(f"site {site} is outside the patch")

    def row_sites(self, r):
        return [self.site(r, c) for c in range(self.n - r)]

    def up_triangles(self):
        return [
            (self.site(r, c), self.site(r, c + 1), self.site(r + 1, c))
            for r in range(self.m - 1)
            for c in range(self.n - r - 1)
        ]

    def cycles(self):
        raise ValueError("cycles are only defined on a torus")


def up_triangles(lattice):
    return lattice.up_triangles()


def cycles(lattice):
    if not isinstance(lattice, TorusLattice):
        raise ValueError("cycles are only defined on a torus")
    return lattice.cycles()


def grow_region(region, lattice):
    """Every region obtained by adding one triangle-adjacent site"""
    if not len(region):
        raise ValueError("cannot grow an empty region")
    candidates = set()
    for site in region.sites:
        candidates.update(lattice.neighbors(site))
    candidates -= region.sites
    return [region.add(site) for site in sorted(candidates)]


def parse_region(spec, lattice):
    """Region from a CLI spec: triangle | half | site:r,c | sites:r,c;r,c | row:r[:len] | column:c[:len]"""
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "triangle":
            return lattice.region(lattice.up_triangles()[0])
        if kind == "half":
            return lattice.region(s for r in range(lattice.m // 2) for s in lattice.row_sites(r))
        if kind == "site":
            r, c = (int(v) for v in arg.split(","))
            return lattice.region([lattice.site(r, c)])
        if kind == "sites":
            pairs = [p for p in arg.split(";") if p.strip()]
            return lattice.region(lattice.site(*(int(v) for v in p.split(","))) for p in pairs)
        if kind in ("row", "column"):
            index, _, length = arg.partition(":")
            index = int(index)
            if kind == "row":
                sites = lattice.row_sites(index)
            else:
                sites = [lattice.site(r, index) for r in range(lattice.m)]
            if length:
                sites = sites[: int(length)]
            return lattice.region(sites)
    except (TypeError, ValueError) as e:
        raise ValueError(f"malformed region spec {spec!r}: {e}") from e
    raise ValueError(f"unknown region spec {spec!r}")

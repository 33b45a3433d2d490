"""
Intersection lattices and blocker duals
=======================================

Flats of the braid arrangement are set partitions. The blocker of an
antichain is the set of minimal flats meeting every member of it.
"""

from plgen.families import (
    antichain_shapes,
    blocks_antichain,
    braid_lattice,
    orbit_antichain,
)
from plgen.lattice import antichain_leq, blocker, double_blocker

lat = braid_lattice(6)
print("flats of the braid arrangement on 6 coordinates:", len(lat))
print("flats per rank:", lat.rank_sizes())

for shape in [(4, 2), (3, 3), (3, 2, 1), (2, 2, 2), (2, 2, 1, 1)]:
    a = orbit_antichain([shape], 6)
    star = blocker(a, lat)
    dstar = double_blocker(a, lat)
    print(shape, "->", dict(antichain_shapes(star, 6)), "->", dict(antichain_shapes(dstar, 6)))
    assert antichain_leq(dstar, a)

# the double blocker of (3,3) is everything with two blocks
print(double_blocker(orbit_antichain([(3, 3)], 6), lat) == blocks_antichain(2, 6))

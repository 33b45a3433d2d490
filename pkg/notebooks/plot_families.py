"""
Named families of arrangements
==============================

Orbit arrangements, polygraphs, coordinate arrangements, points in the
projective plane and lines in projective 3-space.
"""

from plgen.arrangements import blocker_ideal, pl_check, vanishing_ideal
from plgen.families import (
    PRESETS,
    SimplicialComplex,
    braid_family,
    cone_checks,
    coordinate_family,
    hook_generators,
    p2_points,
    partitions_of_shape,
    polygraph,
    polygraph_generators,
    six_point_cubics,
    two_line_points,
)
from plgen.poly import Ideal, ideal_compare

# hook orbit arrangement (3,1,1) and its product generators
e = braid_family(partitions_of_shape((3, 1, 1), 5), 5)
print("hook (3,1,1):", ideal_compare(vanishing_ideal(e.arrangement), hook_generators(3, 5, e.ring)))

# polygraph with n = m = 2
e = polygraph(2, 2)
ia = vanishing_ideal(e.arrangement)
print("polygraph:", ideal_compare(ia, polygraph_generators(2, 2, e.ring)), ideal_compare(blocker_ideal(e), ia))

# coordinate arrangement from a simplicial complex
fam = coordinate_family(SimplicialComplex.from_facets([[1, 2], [2, 3], [3, 4]], 4))
print("Stanley-Reisner:", [g.to_str() for g in fam.stanley_reisner.generators])

# points in the plane
for name in ("general5", "generic6", "general7"):
    print(name, pl_check(p2_points(PRESETS[name]), trace=False).verdict)
qs = six_point_cubics(PRESETS["generic6"])
ia = vanishing_ideal(p2_points(PRESETS["generic6"]))
print("four cubics generate:", ideal_compare(Ideal(ia.ring, qs), ia))

cfg = two_line_points(3, 2)
print("two lines (3,2):", ideal_compare(cfg.expected, vanishing_ideal(cfg.arrangement)))

# cone over five points in 3-space
print(cone_checks(PRESETS["general5"]))

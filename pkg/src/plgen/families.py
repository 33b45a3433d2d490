"""Named arrangement families.

Braid arrangements and set partitions, orbit arrangements, polygraphs with
one-dimensional blocks, coordinate (Stanley-Reisner) arrangements, points in
the projective plane and lines in projective 3-space.

Partitions are tuples of sorted tuples of 1-based elements, blocks ordered
by their smallest element, e.g. ``((1, 2), (3,), (4,))``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

from .arrangements import (
    Embedding,
    SubspaceArrangement,
    blocker_ideal,
    embed,
    pl_check,
    vanishing_ideal,
)
from .exact import as_form, det, kernel_basis, rank, scalar
from .lattice import Flat, HyperplaneArrangement, IntersectionLattice, build_lattice, make_antichain
from .poly import Ideal, Polynomial, Ring, hilbert_function, ideal_compare, product_ideal

# ----------------------------------------------------------------- partitions


def set_partitions(n: int):
    """All set partitions of [n] via restricted growth strings."""
    if n == 0:
        yield ()
        return

    def rgs(prefix, top):
        if len(prefix) == n:
            blocks: dict = {}
            for elem, b in enumerate(prefix, start=1):
                blocks.setdefault(b, []).append(elem)
            yield tuple(tuple(blocks[b]) for b in sorted(blocks))
            return
        for b in range(top + 2):
            yield from rgs(prefix + [b], max(top, b))

    yield from rgs([0], 0)


def shape(p) -> tuple:
    return tuple(sorted((len(b) for b in p), reverse=True))


def parse_shape(text: str | Sequence[int]) -> tuple:
    if isinstance(text, str):
        parts = [int(s) for s in text.replace("(", "").replace(")", "").split(",") if s.strip()]
    else:
        parts = [int(s) for s in text]
    if not parts or any(s < 1 for s in parts):
        raise ValueError(f"invalid shape {text!r}")
    return tuple(sorted(parts, reverse=True))


def partitions_of_shape(lam: Sequence[int], n: int) -> list:
    lam = parse_shape(lam)
    if sum(lam) != n:
        raise ValueError(f"shape {lam} is not a partition of {n}")
    return [p for p in set_partitions(n) if shape(p) == lam]


def partitions_with_blocks(k: int, n: int) -> list:
    return [p for p in set_partitions(n) if len(p) == k]


def shape_count(lam: Sequence[int]) -> int:
    """Number of set partitions of a given shape (multinomial over block multiplicities)."""
    lam = parse_shape(lam)
    n = sum(lam)
    total = 1
    left = n
    for s in lam:
        total *= comb(left, s)
        left -= s
    for mult in Counter(lam).values():
        for k in range(2, mult + 1):
            total //= k
    return total


def partition_label(p) -> str:
    return "|".join("".join(str(i) for i in b) if max(b) < 10 else ",".join(map(str, b)) for b in p)


def same_block_pairs(p) -> list[tuple[int, int]]:
    return [pair for b in p for pair in combinations(b, 2)]


# ------------------------------------------------------------------- braid


def braid_arrangement(n: int) -> HyperplaneArrangement:
    """Hyperplanes x_i - x_j, i < j, in lexicographic order of (i, j)."""
    if n < 2:
        raise ValueError("braid arrangement needs n >= 2")
    forms = []
    for i, j in combinations(range(n), 2):
        v = [0] * n
        v[i], v[j] = 1, -1
        forms.append(v)
    return HyperplaneArrangement.from_forms(forms, n)


def _pair_index(i: int, j: int, n: int) -> int:
    # position of (i, j), 1-based with i < j, in lexicographic pair order
    i, j = min(i, j) - 1, max(i, j) - 1
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def braid_lattice(n: int) -> IntersectionLattice:
    return build_lattice(braid_arrangement(n))


def partition_flat(p, lattice: IntersectionLattice) -> Flat:
    n = lattice.host.n
    return lattice.flat(_pair_index(i, j, n) for i, j in same_block_pairs(p))


def flat_partition(x: Flat, n: int):
    """Inverse of partition_flat on the braid lattice."""
    parent = list(range(n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    pairs = list(combinations(range(1, n + 1), 2))
    for idx in x.hset:
        i, j = pairs[idx]
        parent[find(i)] = find(j)
    blocks: dict = {}
    for e in range(1, n + 1):
        blocks.setdefault(find(e), []).append(e)
    return tuple(sorted(tuple(b) for b in blocks.values()))


def f_pi(p, ring: Ring) -> Polynomial:
    """Product of x_i - x_j over i < j in a common block; 1 for the discrete partition."""
    g = ring.gens()
    out = ring.one()
    for i, j in same_block_pairs(p):
        out = out * (g[i - 1] - g[j - 1])
    return out


def f_pi_ideal(partitions: Iterable, ring: Ring) -> Ideal:
    gens = []
    for p in partitions:
        f = f_pi(p, ring)
        if f.degree() == 0:
            raise ValueError("the discrete partition gives the unit; not a generator")
        gens.append(f)
    return Ideal(ring, gens)


def partition_subspace(p, n: int) -> list:
    forms = []
    for i, j in same_block_pairs(p):
        v = [0] * n
        v[i - 1], v[j - 1] = 1, -1
        forms.append(v)
    return forms


def braid_family(partitions: Sequence, n: int) -> Embedding:
    """Arrangement of the given partitions' subspaces, embedded in the braid arrangement."""
    partitions = list(partitions)
    if not partitions:
        raise ValueError("no partitions")
    for p in partitions:
        if len(p) == n:
            raise ValueError("the discrete partition is the whole space, not a proper subspace")
    arr = SubspaceArrangement.from_forms([partition_subspace(p, n) for p in partitions], n)
    return Embedding.of(arr, braid_arrangement(n))


def orbit_family(lam, n: int) -> tuple[SubspaceArrangement, frozenset]:
    """A_λ in the braid arrangement, with its antichain in the partition lattice."""
    parts = partitions_of_shape(lam, n)
    e = braid_family(parts, n)
    lat = braid_lattice(n)
    return e.arrangement, make_antichain((partition_flat(p, lat) for p in parts), lat)


def orbit_antichain(shapes: Iterable, n: int) -> frozenset:
    lat = braid_lattice(n)
    return frozenset(partition_flat(p, lat) for lam in shapes for p in partitions_of_shape(lam, n))


def blocks_antichain(k: int, n: int) -> frozenset:
    """All partitions with exactly k blocks (the union of orbits with k blocks)."""
    lat = braid_lattice(n)
    return frozenset(partition_flat(p, lat) for p in partitions_with_blocks(k, n))


def antichain_shapes(a: Iterable[Flat], n: int) -> dict:
    """Shape histogram of an antichain of the braid lattice."""
    return dict(Counter(shape(flat_partition(x, n)) for x in a))


def is_orbit_union(a: Iterable[Flat], n: int) -> bool:
    a = set(a)
    shapes = antichain_shapes(a, n)
    return sum(shape_count(s) for s in shapes) == len(a)


def hook(m: int, n: int) -> tuple:
    return (m,) + (1,) * (n - m)


def hook_generators(m: int, n: int, ring: Ring) -> Ideal:
    """(f_π : π has m − 1 blocks), the claimed ideal of the hook orbit arrangement."""
    return f_pi_ideal(partitions_with_blocks(m - 1, n), ring)


def kleitman_lovasz(m: int, n: int) -> Embedding:
    """Union of all orbit arrangements with m − 1 blocks."""
    return braid_family(partitions_with_blocks(m - 1, n), n)


def kleitman_lovasz_generators(m: int, n: int, ring: Ring) -> Ideal:
    return f_pi_ideal(partitions_of_shape(hook(m, n), n), ring)


# --------------------------------------------------------------- polygraphs


def polygraph(n: int, m: int) -> Embedding:
    """Polygraph arrangement with one-dimensional blocks in the bipartite braid host.

    Variables x1..xn, a1..am; W_f is cut out by a_i = x_{f(i)}.
    """
    if n < 1 or m < 1:
        raise ValueError("polygraph needs n, m >= 1")
    ring = Ring(tuple(f"x{j}" for j in range(1, n + 1)) + tuple(f"a{i}" for i in range(1, m + 1)))
    dim = n + m

    def form(j, i):
        v = [0] * dim
        v[j], v[n + i] = 1, -1
        return v

    subspaces = [[form(f[i], i) for i in range(m)] for f in product(range(n), repeat=m)]
    arr = SubspaceArrangement.from_forms(subspaces, ring=ring)
    host = [form(j, i) for i in range(m) for j in range(n)]
    return embed(arr, host)


def polygraph_generators(n: int, m: int, ring: Ring) -> Ideal:
    """q_i = prod_j (x_j − a_i)."""
    g = ring.gens()
    qs = []
    for i in range(m):
        q = ring.one()
        for j in range(n):
            q = q * (g[j] - g[n + i])
        qs.append(q)
    return Ideal(ring, qs)


# ------------------------------------------------------ coordinate arrangements


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 1..n given by its facets."""

    facets: frozenset
    n: int

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], n: int) -> "SimplicialComplex":
        fs = frozenset(frozenset(f) for f in facets)
        if not fs:
            raise ValueError("a complex needs at least one facet")
        for f in fs:
            if not f <= set(range(1, n + 1)):
                raise ValueError(f"facet {sorted(f)} is not a subset of [{n}]")
            for g in fs:
                if f != g and f <= g:
                    raise ValueError("facets must be pairwise incomparable")
        return cls(fs, n)

    def is_face(self, s) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def minimal_nonfaces(self) -> list[frozenset]:
        out = []
        for k in range(self.n + 1):
            for c in combinations(range(1, self.n + 1), k):
                s = frozenset(c)
                if not self.is_face(s) and all(self.is_face(s - {v}) for v in s):
                    out.append(s)
        return out

    def alexander_dual(self) -> "SimplicialComplex":
        """Facets are complements of the minimal non-faces."""
        full = frozenset(range(1, self.n + 1))
        return SimplicialComplex.from_facets([full - s for s in self.minimal_nonfaces()], self.n)


def stanley_reisner_ideal(c: SimplicialComplex, ring: Ring) -> Ideal:
    g = ring.gens()
    gens = []
    for s in c.minimal_nonfaces():
        m = ring.one()
        for i in sorted(s):
            m = m * g[i - 1]
        gens.append(m)
    return Ideal(ring, gens)


def coordinate_host(n: int) -> HyperplaneArrangement:
    return HyperplaneArrangement.from_forms([[int(i == j) for j in range(n)] for i in range(n)], n)


@dataclass
class CoordinateFamily:
    complex: SimplicialComplex
    embedding: Embedding
    stanley_reisner: Ideal

    @property
    def arrangement(self) -> SubspaceArrangement:
        return self.embedding.arrangement


def coordinate_family(c: SimplicialComplex, check: bool = True) -> CoordinateFamily:
    """S_G = {x : x_i = 0 for i ∉ G} for each facet G, embedded in the coordinate arrangement.

    With ``check`` the blocker ideal over the coordinate arrangement is
    compared against the combinatorial Stanley-Reisner ideal.
    """
    n = c.n
    ring = Ring.standard(n)
    subspaces = []
    for g in sorted(c.facets, key=sorted):
        if len(g) == n:
            raise ValueError("the full vertex set gives the whole space")
        subspaces.append([[int(i == j) for j in range(n)] for i in range(n) if i + 1 not in g])
    arr = SubspaceArrangement.from_forms(subspaces, ring=ring)
    e = Embedding.of(arr, coordinate_host(n))
    sr = stanley_reisner_ideal(c, ring)
    if check:
        verdict = ideal_compare(blocker_ideal(e), sr)
        if verdict != "equal":
            raise RuntimeError(f"blocker ideal and Stanley-Reisner ideal differ: {verdict}")
    return CoordinateFamily(c, e, sr)


# ---------------------------------------------------------- points in P^2


def _point(p) -> tuple:
    v = as_form(p)
    if all(c == 0 for c in v):
        raise ValueError("a projective point has a nonzero coordinate")
    return v


def p2_ring() -> Ring:
    return Ring.standard(3)


def p2_points(points: Sequence[Sequence], ring: Ring | None = None) -> SubspaceArrangement:
    """Each point of P^2 becomes the ideal of linear forms vanishing at it."""
    pts = [_point(p) for p in points]
    if not pts:
        raise ValueError("at least one point")
    for i, j in combinations(range(len(pts)), 2):
        if rank([pts[i], pts[j]], 3) < 2:
            raise ValueError(f"points {i + 1} and {j + 1} coincide")
    ring = ring or p2_ring()
    return SubspaceArrangement.from_forms([kernel_basis([p], 3) for p in pts], ring=ring)


def linearly_general(points: Sequence[Sequence]) -> bool:
    """No three collinear."""
    pts = [_point(p) for p in points]
    return all(det([pts[i], pts[j], pts[k]]) != 0 for i, j, k in combinations(range(len(pts)), 3))


def is_generic(points: Sequence[Sequence]) -> bool:
    """dim (S/I)_t = min(r, C(t+2, 2)) for every t (checked until it reaches r)."""
    r = len(points)
    ia = vanishing_ideal(p2_points(points))
    t = 0
    while True:
        expected = min(r, comb(t + 2, 2))
        if hilbert_function(ia, t) != expected:
            return False
        if expected == r:
            return True
        t += 1


def moment_points(r: int) -> list[tuple]:
    """Points (1 : t : t^2), t = 0..r−1, on a conic; linearly general but never generic for r ≥ 6."""
    return [(1, t, t * t) for t in range(r)]


PRESETS = {
    "generic6": [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (1, 4, 9)],
    "general5": [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)],
    "general7": [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (1, 4, 9), (1, 3, -2)],
    "coordinate3": [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
}


def line_through(p, q) -> tuple:
    """Linear form of the line joining two points of P^2 (cross product)."""
    p, q = _point(p), _point(q)
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def six_point_cubics(points: Sequence[Sequence], ring: Ring | None = None) -> list[Polynomial]:
    """The four cubic products of joining lines for six linearly general points.

    Q1 = L12 L34 L56, Q2 = L12 L35 L46, Q3 = L15 L26 L34, Q4 = L13 L26 L45.
    """
    if len(points) != 6 or not linearly_general(points):
        raise ValueError("need six linearly general points")
    ring = ring or p2_ring()

    def L(i, j):
        return line_through(points[i - 1], points[j - 1])

    triples = [
        (L(1, 2), L(3, 4), L(5, 6)),
        (L(1, 2), L(3, 5), L(4, 6)),
        (L(1, 5), L(2, 6), L(3, 4)),
        (L(1, 3), L(2, 6), L(4, 5)),
    ]
    return [ring.product_of_forms(t) for t in triples]


def coefficient_rank(polys: Sequence[Polynomial]) -> int:
    monos = sorted({m for p in polys for m in p.terms})
    return rank([p.coefficient_vector(monos) for p in polys], len(monos))


@dataclass
class TwoLineConfiguration:
    arrangement: SubspaceArrangement
    points_l1: list
    points_l2: list
    expected: Ideal


def two_line_points(r1: int, r2: int, l1_params=None, l2_params=None) -> TwoLineConfiguration:
    """Points on L1 = {x3 = 0} and L2 = {x2 = 0}, avoiding their meeting point (1:0:0).

    p_i = (a_i : 1 : 0) on L1, q_j = (b_j : 0 : 1) on L2. h_i joins p_i and q_i
    for i ≤ r2; for i > r2 it is the line through p_i and (0 : 0 : 1), which is
    not a point of the configuration when every b_j is nonzero.
    """
    if not (r1 >= r2 >= 1):
        raise ValueError("need r1 >= r2 >= 1")
    a = [scalar(v) for v in (l1_params or range(1, r1 + 1))]
    b = [scalar(v) for v in (l2_params or range(1, r2 + 1))]
    if len(a) != r1 or len(b) != r2 or len(set(a)) != r1 or len(set(b)) != r2 or 0 in b:
        raise ValueError("degenerate configuration")
    ps = [(ai, 1, 0) for ai in a]
    qs = [(bj, 0, 1) for bj in b]
    ring = p2_ring()
    arr = p2_points(ps + qs, ring)
    l1, l2 = (0, 0, 1), (0, 1, 0)
    hs = [line_through(ps[i], qs[i]) for i in range(r2)]
    hs += [line_through(ps[i], (0, 0, 1)) for i in range(r2, r1)]
    conic = ring.product_of_forms([l1, l2])
    if r1 == r2:
        gens = [conic, ring.product_of_forms(hs)]
    else:
        gens = [conic, ring.product_of_forms([l1] + hs[:r2]), ring.product_of_forms(hs)]
    return TwoLineConfiguration(arr, ps, qs, Ideal(ring, gens))


# ---------------------------------------------------------- lines in P^3


def p3_ring() -> Ring:
    return Ring(("w", "x", "y", "z"))


INFINITY = "inf"


def ruling_line(t) -> list:
    """Line (x − t w, z − t y) on the quadric wz − xy; t = 'inf' gives (w, y)."""
    if t == INFINITY:
        return [(1, 0, 0, 0), (0, 0, 1, 0)]
    t = scalar(t)
    return [(-t, 1, 0, 0), (0, 0, -t, 1)]


def lines_skew(l1: Sequence, l2: Sequence) -> bool:
    return det(list(l1) + list(l2)) != 0


def skew_lines(r: int, params: Sequence | None = None) -> SubspaceArrangement:
    """r lines from one ruling of wz − xy; default parameters 0, 1, ..., r − 1."""
    if r < 2:
        raise ValueError("need at least two lines")
    params = list(params) if params is not None else list(range(r))
    if len(params) != r:
        raise ValueError("one parameter per line")
    keys = [p if p == INFINITY else scalar(p) for p in params]
    if len(set(keys)) != r:
        raise ValueError("repeated parameters")
    lines = [ruling_line(t) for t in params]
    for i, j in combinations(range(r), 2):
        if not lines_skew(lines[i], lines[j]):
            raise ValueError(f"lines {i + 1} and {j + 1} meet")
    return SubspaceArrangement.from_forms(lines, ring=p3_ring())


def cone_arrangement(points: Sequence[Sequence]) -> SubspaceArrangement:
    """Cone over points of P^2 inside P^3 with coordinates w, x, y, z (vertex (1:0:0:0))."""
    ring = p3_ring()
    subs = []
    for p in points:
        subs.append([(0,) + tuple(f) for f in kernel_basis([_point(p)], 3)])
    return SubspaceArrangement.from_forms(subs, ring=ring)


def cone_checks(points5: Sequence[Sequence]) -> dict:
    """Vanishing ideal, all-products ideal and product ideal of a cone over five points."""
    if len(points5) != 5 or not linearly_general(points5):
        raise ValueError("need five linearly general points")
    arr = cone_arrangement(points5)
    cert = pl_check(arr, trace=False)
    ia, f = cert.vanishing_ideal, cert.f_ideal
    prod = product_ideal(*arr.linear_ideals())
    ideals = {"I_A": ia, "F": f, "P": prod}
    names = list(ideals)
    report = {
        "min_degree": {k: v.min_degree() for k, v in ideals.items()},
        "compare": {f"{a}~{b}": ideal_compare(ideals[a], ideals[b]) for a, b in combinations(names, 2)},
        "w_free": {
            k: all("w" not in g.variables() for g in v.generators) for k, v in ideals.items()
        },
        "pl_generated": cert.verdict,
    }
    report["all_different"] = all(v != "equal" for v in report["compare"].values())
    return report

"""Intersection lattices of central hyperplane arrangements and blockers.

Flats are identified with closed sets of hyperplane indices: a set S is
closed when every hyperplane whose form lies in the span of the forms in S
already belongs to S. Intersections of closed sets are closed, so the meet
of two flats is just the intersection of their index sets.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .exact import normalize_form, rref


def _reduce_against(v, rows, pivots):
    v = list(v)
    for r, p in zip(rows, pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, r)]
    return v


@dataclass(frozen=True)
class HyperplaneArrangement:
    """Central arrangement given by pairwise non-proportional normalized forms."""

    forms: tuple
    n: int

    @classmethod
    def from_forms(cls, forms: Iterable[Sequence], n: int | None = None) -> "HyperplaneArrangement":
        seen: dict = {}
        for f in forms:
            f = normalize_form(f)
            if n is not None and len(f) != n:
                raise ValueError(f"form {f} does not live in dimension {n}")
            seen.setdefault(f, None)
        out = tuple(seen)
        if n is None:
            if not out:
                raise ValueError("empty arrangement needs an explicit dimension")
            n = len(out[0])
        return cls(out, n)

    def __len__(self):
        return len(self.forms)

    def index(self, form: Sequence) -> int:
        return self.forms.index(normalize_form(form))

    def add(self, forms: Iterable[Sequence]) -> "HyperplaneArrangement":
        return HyperplaneArrangement.from_forms(list(self.forms) + list(forms), self.n)

    def span(self, hset: Iterable[int]):
        """``(rows, pivots)`` of the rref basis of the forms indexed by ``hset``."""
        rows, pivots, _ = rref([self.forms[i] for i in sorted(hset)], self.n)
        return rows, pivots

    def closure(self, hset: Iterable[int]) -> frozenset:
        rows, pivots = self.span(hset)
        return self.containing(rows, pivots)

    def containing(self, rows, pivots=None) -> frozenset:
        """Indices of the hyperplanes whose forms lie in span(rows)."""
        if pivots is None:
            rows, pivots, _ = rref(rows, self.n)
        return frozenset(
            i for i, f in enumerate(self.forms) if not any(_reduce_against(f, rows, pivots))
        )


@dataclass(frozen=True)
class Flat:
    """Element of the intersection lattice, compared by its closed index set."""

    hset: frozenset
    basis: tuple = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __le__(self, other: "Flat") -> bool:
        return self.hset <= other.hset

    def __lt__(self, other: "Flat") -> bool:
        return self.hset < other.hset

    def label(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.hset)) + "}"


class IntersectionLattice:
    """The materialized lattice L_H, flats sorted by rank then index set."""

    def __init__(self, host: HyperplaneArrangement, flats: Iterable[Flat]):
        self.host = host
        self.flats = sorted(flats, key=lambda f: (f.rank, sorted(f.hset)))
        self._by_hset = {f.hset: f for f in self.flats}
        self.bottom = self._by_hset[frozenset()]
        self.top = self.flats[-1]
        self.atoms = [self._by_hset[frozenset([i])] for i in range(len(host))]

    def __len__(self):
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def __contains__(self, x: Flat) -> bool:
        return x.hset in self._by_hset

    def flat(self, hset: Iterable[int]) -> Flat:
        """The flat spanned by the given hyperplanes (closure applied)."""
        hset = frozenset(hset)
        f = self._by_hset.get(hset)
        if f is None:
            f = self._by_hset[self.host.closure(hset)]
        return f

    def meet(self, x: Flat, y: Flat) -> Flat:
        return self._by_hset[x.hset & y.hset]

    def join(self, x: Flat, y: Flat) -> Flat:
        return self.flat(x.hset | y.hset)

    def rank(self) -> int:
        return self.top.rank

    def rank_sizes(self) -> list[int]:
        sizes = [0] * (self.rank() + 1)
        for f in self.flats:
            sizes[f.rank] += 1
        return sizes


def build_lattice(h: HyperplaneArrangement) -> IntersectionLattice:
    """Close {0̂} under joins with atoms."""
    if len(h) == 0:
        raise ValueError("empty hyperplane arrangement")
    bottom = Flat(frozenset(), ())
    seen = {bottom.hset: bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for x in frontier:
            for i, form in enumerate(h.forms):
                if i in x.hset:
                    continue
                rows, pivots, _ = rref(list(x.basis) + [form], h.n)
                hs = h.containing(rows, pivots)
                if hs not in seen:
                    f = Flat(hs, tuple(rows))
                    seen[hs] = f
                    nxt.append(f)
        frontier = nxt
    return IntersectionLattice(h, seen.values())


def meet_join(x: Flat, y: Flat, lattice: IntersectionLattice) -> tuple[Flat, Flat]:
    return lattice.meet(x, y), lattice.join(x, y)


def make_antichain(flats: Iterable[Flat], lattice: IntersectionLattice | None = None) -> frozenset:
    """Validate and freeze a set of flats as an antichain."""
    a = frozenset(flats)
    if not a:
        raise ValueError("an antichain is nonempty")
    for x in a:
        if not x.hset:
            raise ValueError("an antichain may not contain the bottom element")
        if lattice is not None and x not in lattice:
            raise ValueError(f"flat {x.label()} is not in the lattice")
    for x in a:
        for y in a:
            if x != y and x <= y:
                raise ValueError(f"flats {x.label()} and {y.label()} are comparable")
    return a


def minimal_elements(flats: Iterable[Flat]) -> frozenset:
    items = sorted(set(flats), key=lambda f: len(f.hset))
    kept: list[Flat] = []
    for f in items:
        if not any(g.hset <= f.hset for g in kept):
            kept.append(f)
    return frozenset(kept)


def blocker(a: Iterable[Flat], lattice: IntersectionLattice) -> frozenset:
    """A* = min{x : a ∧ x ≠ 0̂ for every a in A}, by scanning all flats."""
    hsets = [x.hset for x in a]
    if not hsets:
        raise ValueError("blocker of an empty antichain")
    hitting = [x for x in lattice.flats if all(x.hset & h for h in hsets)]
    return minimal_elements(hitting)


def double_blocker(a: Iterable[Flat], lattice: IntersectionLattice) -> frozenset:
    return blocker(blocker(a, lattice), lattice)


def antichain_leq(a: Iterable[Flat], b: Iterable[Flat]) -> bool:
    """A ≤ B when every b in B lies above some a in A."""
    a = list(a)
    return all(any(x <= y for x in a) for y in b)

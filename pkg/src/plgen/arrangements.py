"""Subspace arrangements, their vanishing ideals, and products of linear forms.

A subspace is stored by a basis of linear forms vanishing on it, kept as
given so that the forms a user chose define the default host. An embedding places each subspace in the intersection lattice of a host
hyperplane arrangement. From an embedding come the blocker ideal (products
Q_X over the blocker dual) and the host-product ideal (products over
minimal covers). Enlarging the host so that every intersection of the
subspaces' linear-form spaces has a basis of host forms makes the
host-product ideal the ideal of *all* products of linear forms in I_A, and
comparing it with I_A decides pl-generation.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .exact import independent_forms, intersect_spans, normalize_form, rank, rref, span_basis, span_contains
from .lattice import (
    Flat,
    HyperplaneArrangement,
    IntersectionLattice,
    blocker,
    build_lattice,
    double_blocker,
    make_antichain,
)
from .poly import (
    Ideal,
    Polynomial,
    Ring,
    hilbert_function,
    ideal_compare,
    intersect_ideals,
)

log = logging.getLogger(__name__)


class InvalidArrangement(ValueError):
    pass


def linear_ideal(ring: Ring, basis: Sequence[Sequence]) -> Ideal:
    rows = span_basis(basis, ring.nvars)
    return Ideal(ring, [ring.linear_form(r) for r in rows])


@dataclass(frozen=True)
class SubspaceArrangement:
    """Subspaces of Q^n, each given by a basis of the linear forms vanishing on it.

    Given forms are kept (normalized) as the stored basis; dependent ones are
    dropped. Subspaces are compared through their spans.
    """

    subspaces: tuple
    ring: Ring

    @classmethod
    def from_forms(
        cls, subspaces: Iterable[Iterable[Sequence]], n: int | None = None, ring: Ring | None = None
    ) -> "SubspaceArrangement":
        subs = [list(s) for s in subspaces]
        if ring is None:
            if n is None:
                n = len(subs[0][0])
            ring = Ring.standard(n)
        n = ring.nvars
        bases = []
        for k, s in enumerate(subs):
            for row in s:
                if len(row) != n:
                    raise InvalidArrangement(f"subspace {k + 1}: form {tuple(row)} has length {len(row)}, expected {n}")
            b = tuple(independent_forms(s, n))
            if not b:
                raise InvalidArrangement(f"subspace {k + 1}: no nonzero forms")
            bases.append(b)
        arr = cls(tuple(bases), ring)
        arr.validate()
        return arr

    @property
    def n(self) -> int:
        return self.ring.nvars

    def __len__(self):
        return len(self.subspaces)

    def validate(self):
        if not self.subspaces:
            raise InvalidArrangement("empty arrangement")
        for i, a in enumerate(self.subspaces):
            for j, b in enumerate(self.subspaces):
                # V_j ⊆ V_i exactly when the forms of I_i lie in span(I_j)
                if i != j and span_contains(b, a, self.n):
                    if span_basis(a, self.n) == span_basis(b, self.n):
                        raise InvalidArrangement(f"subspaces {i + 1} and {j + 1} coincide")
                    raise InvalidArrangement(
                        f"containment violation: subspace {j + 1} is contained in subspace {i + 1}"
                    )

    def linear_ideals(self) -> list[Ideal]:
        return [linear_ideal(self.ring, b) for b in self.subspaces]

    def codimensions(self) -> list[int]:
        return [len(b) for b in self.subspaces]


def vanishing_ideal(a: SubspaceArrangement) -> Ideal:
    """I_A as the iterated intersection of the subspaces' linear ideals."""
    if len(a) == 0:
        raise InvalidArrangement("empty arrangement")
    ideals = a.linear_ideals()
    out = ideals[0]
    for j in ideals[1:]:
        out = intersect_ideals(out, j)
    return out


# ----------------------------------------------------------------- embeddings


@dataclass(frozen=True)
class Embedding:
    """An arrangement together with a host hyperplane arrangement containing it."""

    arrangement: SubspaceArrangement
    host: HyperplaneArrangement
    hsets: tuple = field(compare=False)

    @classmethod
    def of(cls, arrangement: SubspaceArrangement, host: HyperplaneArrangement) -> "Embedding":
        if host.n != arrangement.n:
            raise InvalidArrangement("host and arrangement live in different dimensions")
        hsets = []
        for k, basis in enumerate(arrangement.subspaces):
            rows, pivots, _ = rref(basis, host.n)
            hs = host.containing(rows, pivots)
            if rank([host.forms[i] for i in hs], host.n) != len(basis):
                raise InvalidArrangement(
                    f"subspace {k + 1} is not an intersection of host hyperplanes"
                )
            hsets.append(hs)
        return cls(arrangement, host, tuple(hsets))

    @cached_property
    def lattice(self) -> IntersectionLattice:
        return build_lattice(self.host)

    def flat_of(self, k: int) -> Flat:
        return self.lattice.flat(self.hsets[k])

    @cached_property
    def antichain(self) -> frozenset:
        return make_antichain((self.flat_of(k) for k in range(len(self.arrangement))), self.lattice)

    @property
    def ring(self) -> Ring:
        return self.arrangement.ring


def embed(arrangement: SubspaceArrangement, host_forms: Iterable[Sequence]) -> Embedding:
    return Embedding.of(arrangement, HyperplaneArrangement.from_forms(host_forms, arrangement.n))


def canonical_embedding(a: SubspaceArrangement) -> Embedding:
    """Host made of every stored basis form of every subspace, deduplicated."""
    forms = [f for basis in a.subspaces for f in basis]
    return embed(a, forms)


def flat_product(x: Flat, host: HyperplaneArrangement, ring: Ring) -> Polynomial:
    """Q_X: product of the forms of all hyperplanes containing the flat."""
    if not x.hset:
        raise ValueError("Q of the bottom flat is the empty product; not usable as a generator")
    return ring.product_of_forms(host.forms[i] for i in sorted(x.hset))


def blocker_ideal(e: Embedding) -> Ideal:
    dual = sorted(blocker(e.antichain, e.lattice), key=lambda f: sorted(f.hset))
    return Ideal(e.ring, [flat_product(x, e.host, e.ring) for x in dual])


def minimal_transversals(edges: Sequence[Iterable[int]]) -> list[frozenset]:
    """All inclusion-minimal sets meeting every edge (Berge's incremental method)."""
    edges = [frozenset(e) for e in edges]
    if any(not e for e in edges):
        return []
    current = [frozenset()]
    for e in sorted(set(edges), key=lambda s: (len(s), sorted(s))):
        grown = set()
        for t in current:
            if t & e:
                grown.add(t)
            else:
                for v in e:
                    grown.add(t | {v})
        ordered = sorted(grown, key=len)
        current = []
        for t in ordered:
            if not any(s <= t for s in current):
                current.append(t)
    return sorted(current, key=lambda s: (len(s), sorted(s)))


def minimal_covers(e: Embedding) -> list[tuple]:
    """Minimal sets of host hyperplanes such that each subspace lies in one of them."""
    return [tuple(sorted(s)) for s in minimal_transversals(e.hsets)]


def h_product_ideal(e: Embedding) -> Ideal:
    ring = e.ring
    return Ideal(ring, [ring.product_of_forms(e.host.forms[i] for i in c) for c in minimal_covers(e)])


def enlarge_embedding(e: Embedding) -> Embedding:
    """Add host forms until every intersection of the subspaces' form spaces has a host basis."""
    a = e.arrangement
    n = a.n
    forms = list(e.host.forms)
    new: list = []
    seen_spans: set = set()
    r = len(a)

    def visit(start: int, span: tuple):
        for k in range(start, r):
            s = tuple(intersect_spans(span, a.subspaces[k], n)) if span is not None else a.subspaces[k]
            if not s:
                # every superset of this subset meets in the zero space too
                continue
            if s not in seen_spans:
                seen_spans.add(s)
                _ensure_basis(s)
            visit(k + 1, s)

    def _ensure_basis(span: tuple):
        rows, pivots, _ = rref(span, n)
        host_now = HyperplaneArrangement.from_forms(forms + new, n)
        inside = host_now.containing(rows, pivots)
        if rank([host_now.forms[i] for i in inside], n) == len(rows):
            return
        for f in rows:
            f = normalize_form(f)
            if f not in forms and f not in new:
                new.append(f)

    visit(0, None)
    if new:
        log.debug("enlarged host by %d forms", len(new))
    return Embedding.of(a, e.host.add(new))


# ------------------------------------------------------------- the decision


@dataclass
class PlCertificate:
    verdict: bool
    enlarged_host: HyperplaneArrangement
    f_ideal_generators: list
    witness: Polynomial | None
    vanishing_ideal: Ideal
    f_ideal: Ideal
    hilbert_trace: list = field(default_factory=list)

    def generators_for_report(self) -> list[str]:
        return [g.to_str() for g in self.f_ideal_generators]


def pl_check(
    a: SubspaceArrangement,
    embedding: Embedding | None = None,
    trace: bool = True,
    max_degree: int | None = None,
) -> PlCertificate:
    """Decide whether I_A is generated by products of linear forms.

    Equality of I_A and the enlarged host-product ideal F is decided exactly
    by mutual reduction. The Hilbert function trace is reported for degrees
    up to ``max_degree`` (default: the top generator degree of I_A).
    """
    ia = vanishing_ideal(a)
    e = embedding if embedding is not None else canonical_embedding(a)
    big = enlarge_embedding(e)
    f = h_product_ideal(big)
    witness = f.first_outside(ia)
    verdict = witness is None
    # F ⊆ I_A by construction; checked anyway so a failure cannot hide
    escaped = ia.first_outside(f)
    if escaped is not None:
        raise AssertionError(f"product {escaped} does not vanish on the arrangement")
    rows = []
    if trace:
        top = ia.max_generator_degree() if max_degree is None else max_degree
        for t in range(top + 1):
            rows.append((t, hilbert_function(ia, t), hilbert_function(f, t)))
    return PlCertificate(verdict, big.host, list(f.generators), witness, ia, f, rows)


def blocker_ideal_checks(e: Embedding) -> dict:
    """Containments over Q implied by the blocker theory.

    (i) B ⊆ I_A; (ii) B ⊆ I_{A**}; (iii) when A ≠ A**, I_{A**} ⊆ I_A.
    """
    ia = vanishing_ideal(e.arrangement)
    b = blocker_ideal(e)
    dd = double_blocker(e.antichain, e.lattice)
    dd_arr = SubspaceArrangement.from_forms(
        [x.basis for x in sorted(dd, key=lambda f: sorted(f.hset))], ring=e.ring
    )
    i_dd = vanishing_ideal(dd_arr)
    report = {
        "A_equals_A**": dd == e.antichain,
        "B_in_IA": ia.contains_ideal(b),
        "B_in_IA**": i_dd.contains_ideal(b),
        "B_vs_IA": ideal_compare(b, ia),
        "B_vs_IA**": ideal_compare(b, i_dd),
    }
    if dd != e.antichain:
        report["IA**_in_IA"] = ia.contains_ideal(i_dd)
        report["IA**_vs_IA"] = ideal_compare(i_dd, ia)
    return report

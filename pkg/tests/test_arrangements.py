import itertools
import random

import pytest

from plgen.arrangements import (
    InvalidArrangement,
    SubspaceArrangement,
    blocker_ideal,
    blocker_ideal_checks,
    canonical_embedding,
    embed,
    enlarge_embedding,
    flat_product,
    h_product_ideal,
    linear_ideal,
    minimal_covers,
    minimal_transversals,
    pl_check,
    vanishing_ideal,
)
from plgen.exact import as_form, in_span, span_basis
from plgen.families import braid_arrangement, coordinate_host
from plgen.poly import Ideal, Ring, ideal_compare

R3 = Ring.standard(3)


def ideal(*texts, ring=R3):
    return Ideal(ring, [ring.parse(t) for t in texts])


BRAID_PLANES = [[[1, -1, 0]], [[1, 0, -1]]]
CROSSED = [[[1, -1, 0], [1, 1, 0]], [[1, 0, -1], [1, 0, 1]]]
CROSSED_C3 = [[[1, 0, 0], [0, 1, 0]], [[1, 0, 0], [0, 0, 1]]]


def arr(subs, n=3):
    return SubspaceArrangement.from_forms(subs, n)


def brute_covers(e):
    """All minimal hyperplane sets meeting every subspace, by scanning all subsets."""
    p = len(e.host)
    good = [
        frozenset(s)
        for k in range(1, p + 1)
        for s in itertools.combinations(range(p), k)
        if all(set(s) & h for h in e.hsets)
    ]
    return sorted(
        (tuple(sorted(s)) for s in good if not any(t < s for t in good)), key=lambda s: (len(s), s)
    )


def random_subspace(rng, n):
    while True:
        k = rng.randint(1, n - 1)
        rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)]
        basis = span_basis(rows, n)
        if 0 < len(basis) < n:
            return basis


def random_pair(rng):
    n = rng.randint(3, 5)
    while True:
        a, b = random_subspace(rng, n), random_subspace(rng, n)
        try:
            return arr([a, b], n)
        except InvalidArrangement:
            continue


# -------------------------------------------------------------- validation


def test_containment_rejected():
    with pytest.raises(InvalidArrangement, match="containment violation"):
        arr([[[1, 0, 0]], [[1, 0, 0], [0, 1, 0]]])


def test_duplicate_rejected():
    with pytest.raises(InvalidArrangement, match="coincide"):
        arr([[[1, -1, 0]], [[2, -2, 0]]])


def test_dependent_forms_dropped():
    a = arr([[[1, -1, 0], [2, -2, 0]], [[1, 0, -1]]])
    assert a.codimensions() == [1, 1]


# ---------------------------------------------------------- vanishing ideal


def test_vanishing_ideal_examples():
    one = arr([[[1, 0, 0], [0, 1, 0]]])
    assert ideal_compare(vanishing_ideal(one), ideal("x1", "x2")) == "equal"
    assert ideal_compare(vanishing_ideal(arr(BRAID_PLANES)), ideal("(x1-x2)*(x1-x3)")) == "equal"
    r4 = Ring(("w", "x", "y", "z"))
    skew = SubspaceArrangement.from_forms([[[1, 0, 0, 0], [0, 1, 0, 0]], [[0, 0, 1, 0], [0, 0, 0, 1]]], ring=r4)
    assert ideal_compare(vanishing_ideal(skew), ideal("w*y", "w*z", "x*y", "x*z", ring=r4)) == "equal"


def test_vanishing_ideal_generators_vanish_on_each_subspace():
    a = arr(CROSSED)
    ia = vanishing_ideal(a)
    for j in a.linear_ideals():
        assert j.contains_ideal(ia)


# ------------------------------------------------------------- embeddings


def test_canonical_embedding_examples():
    e = canonical_embedding(arr([[[1, 0, 0]]]))
    assert e.host.forms == (as_form([1, 0, 0]),)
    e = canonical_embedding(arr(CROSSED))
    assert set(e.host.forms) == {as_form(f) for f in ([1, -1, 0], [1, 1, 0], [1, 0, -1], [1, 0, 1])}
    e = canonical_embedding(arr(CROSSED_C3))
    assert set(e.host.forms) == set(coordinate_host(3).forms)


def test_embed_rejects_non_intersection():
    with pytest.raises(InvalidArrangement):
        embed(arr([[[1, 1, 0]]]), [[1, 0, 0], [0, 1, 0]])


def test_flat_product():
    e = embed(arr(BRAID_PLANES), braid_arrangement(3).forms)
    lat = e.lattice
    ring = e.ring
    assert flat_product(lat.atoms[0], e.host, ring) == ring.linear_form(e.host.forms[0])
    assert ideal_compare(Ideal(ring, [flat_product(lat.top, e.host, ring)]), ideal("(x1-x2)*(x1-x3)*(x2-x3)")) == "equal"
    with pytest.raises(ValueError):
        flat_product(lat.bottom, e.host, ring)


def test_coordinate_flat_product():
    e = embed(arr([[[0, 0, 1]]]), coordinate_host(3).forms)
    x = e.lattice.flat({0, 1})
    assert flat_product(x, e.host, e.ring) == e.ring.parse("x1*x2")


# ------------------------------------------------------- B and F ideals


def test_braid_planes_ideals():
    e = embed(arr(BRAID_PLANES), braid_arrangement(3).forms)
    b, f, ia = blocker_ideal(e), h_product_ideal(e), vanishing_ideal(e.arrangement)
    assert ideal_compare(b, ideal("(x1-x2)*(x1-x3)*(x2-x3)")) == "equal"
    assert ideal_compare(f, ideal("(x1-x2)*(x1-x3)")) == "equal"
    assert ideal_compare(f, ia) == "equal"
    assert ideal_compare(b, f) == "i-strictly-inside-j"


def test_crossed_planes_ideals():
    e = canonical_embedding(arr(CROSSED))
    mono = ideal("x1^2", "x1*x2", "x1*x3", "x2*x3")
    assert ideal_compare(blocker_ideal(e), mono) == "equal"
    assert ideal_compare(h_product_ideal(e), mono) == "equal"
    assert ideal_compare(vanishing_ideal(e.arrangement), ideal("x1", "x2*x3")) == "equal"
    c = canonical_embedding(arr(CROSSED_C3))
    assert ideal_compare(blocker_ideal(c), ideal("x1", "x2*x3")) == "equal"
    assert ideal_compare(h_product_ideal(c), ideal("x1", "x2*x3")) == "equal"


def test_hyperplane_arrangement_as_own_arrangement():
    h = braid_arrangement(4)
    e = embed(SubspaceArrangement.from_forms([[f] for f in h.forms], 4), h.forms)
    top = Ideal(e.ring, [e.ring.product_of_forms(h.forms)])
    for i in (blocker_ideal(e), h_product_ideal(e), vanishing_ideal(e.arrangement)):
        assert ideal_compare(i, top) == "equal"


def test_minimal_covers_examples():
    e = embed(arr(BRAID_PLANES), braid_arrangement(3).forms)
    assert minimal_covers(e) == brute_covers(e)
    assert minimal_covers(e) == [(0, 1)]
    c = canonical_embedding(arr(CROSSED_C3))
    assert minimal_covers(c) == [(0,), (1, 2)] == brute_covers(c)
    single = embed(arr([[[1, 0, 0], [0, 1, 0]]]), [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]])
    assert minimal_covers(single) == [(0,), (1,), (2,)]


def test_minimal_transversals_bruteforce():
    rng = random.Random(5)
    for _ in range(50):
        edges = [frozenset(rng.sample(range(6), rng.randint(1, 3))) for _ in range(rng.randint(1, 5))]
        got = minimal_transversals(edges)
        hits = [frozenset(s) for k in range(7) for s in itertools.combinations(range(6), k) if all(set(s) & e for e in edges)]
        want = {s for s in hits if not any(t < s for t in hits)}
        assert set(got) == want


def test_minimal_transversals_empty_edge():
    assert minimal_transversals([{1}, set()]) == []


# ----------------------------------------------------------- enlargement


def test_enlarge_crossed_planes_adds_x1():
    e = canonical_embedding(arr(CROSSED))
    big = enlarge_embedding(e)
    assert set(big.host.forms) - set(e.host.forms) == {as_form([1, 0, 0])}


def test_enlarge_idempotent_and_monotone():
    for subs in (CROSSED, CROSSED_C3, BRAID_PLANES):
        e = canonical_embedding(arr(subs))
        once = enlarge_embedding(e)
        assert set(e.host.forms) <= set(once.host.forms)
        assert enlarge_embedding(once).host == once.host
    c = canonical_embedding(arr(CROSSED_C3))
    assert enlarge_embedding(c).host == c.host


def test_enlarge_generic_planes_unchanged():
    a = SubspaceArrangement.from_forms([[[1, 0, 0, 0], [0, 1, 0, 0]], [[0, 0, 1, 0], [0, 0, 0, 1]]], 4)
    e = canonical_embedding(a)
    assert enlarge_embedding(e).host == e.host


# ------------------------------------------------------------ pl_check


def test_pl_check_braid_planes():
    cert = pl_check(arr(BRAID_PLANES))
    assert cert.verdict and cert.witness is None
    assert ideal_compare(cert.f_ideal, ideal("(x1-x2)*(x1-x3)")) == "equal"


def test_pl_check_crossed_planes_both_embeddings():
    for subs in (CROSSED, CROSSED_C3):
        cert = pl_check(arr(subs))
        assert cert.verdict
        assert ideal_compare(cert.f_ideal, ideal("x1", "x2*x3")) == "equal"


def test_pl_check_three_skew_lines():
    r4 = Ring(("w", "x", "y", "z"))
    a = SubspaceArrangement.from_forms(
        [[[0, 1, 0, 0], [0, 0, 1, 0]], [[1, 0, 0, 0], [0, 0, 0, 1]], [[1, -1, 0, 0], [0, 0, -1, 1]]], ring=r4
    )
    cert = pl_check(a)
    assert not cert.verdict
    assert cert.witness.degree() == 2
    assert not cert.f_ideal.contains(cert.witness)
    assert cert.vanishing_ideal.contains(cert.witness)


def test_pl_check_certificate_invariants():
    cert = pl_check(arr(CROSSED))
    assert cert.hilbert_trace[-1][1] == cert.hilbert_trace[-1][2]
    for g in cert.f_ideal_generators:
        assert cert.vanishing_ideal.contains(g)


def test_f_generators_vanish_and_factor_over_host():
    e = enlarge_embedding(canonical_embedding(arr(CROSSED)))
    f = h_product_ideal(e)
    for cover, g in zip(minimal_covers(e), f.generators):
        assert g == e.ring.product_of_forms(e.host.forms[i] for i in cover)
        for j in e.arrangement.linear_ideals():
            assert j.contains(g)


def test_b_f_ia_chain_on_corpus():
    cases = [
        embed(arr(BRAID_PLANES), braid_arrangement(3).forms),
        canonical_embedding(arr(CROSSED)),
        canonical_embedding(arr(CROSSED_C3)),
        embed(arr([[[1, -1, 0, 0], [0, 0, 1, -1]], [[1, 0, -1, 0]]], 4), braid_arrangement(4).forms),
    ]
    for e in cases:
        b, f, ia = blocker_ideal(e), h_product_ideal(e), vanishing_ideal(e.arrangement)
        assert f.contains_ideal(b) and ia.contains_ideal(f)


def test_verdict_independent_of_embedding():
    a = arr(CROSSED)
    extra = [[1, -1, 0], [1, 1, 0], [1, 0, -1], [1, 0, 1], [0, 1, -1], [0, 1, 1]]
    assert pl_check(a).verdict == pl_check(a, embedding=embed(a, extra)).verdict
    b = arr(BRAID_PLANES)
    assert pl_check(b).verdict == pl_check(b, embedding=embed(b, braid_arrangement(3).forms)).verdict


def test_two_subspaces_always_pl_generated():
    rng = random.Random(43)
    for _ in range(20):
        a = random_pair(rng)
        assert pl_check(a, trace=False).verdict


# ------------------------------------------------------------ blocker checks


def test_blocker_checks_braid_planes():
    rep = blocker_ideal_checks(embed(arr(BRAID_PLANES), braid_arrangement(3).forms))
    assert rep["A_equals_A**"] is False
    assert rep["B_in_IA"] and rep["B_in_IA**"] and rep["IA**_in_IA"]
    assert rep["IA**_vs_IA"] == "i-strictly-inside-j"


def test_blocker_checks_coordinate():
    rep = blocker_ideal_checks(canonical_embedding(arr(CROSSED_C3)))
    assert rep["A_equals_A**"] and rep["B_vs_IA"] == "equal" and rep["B_vs_IA**"] == "equal"


def test_linear_ideal_uses_span():
    j = linear_ideal(R3, [[1, 1, 0], [1, -1, 0]])
    assert ideal_compare(j, ideal("x1", "x2")) == "equal"
    assert all(in_span(g.coefficient_vector([(1, 0, 0), (0, 1, 0), (0, 0, 1)]), [[1, 0, 0], [0, 1, 0]], 3) for g in j.generators)

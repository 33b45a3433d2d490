"""Exact rational scalars and linear algebra over Q.

Linear forms are plain tuples of rationals, one coefficient per ambient
variable. Matrices are sequences of such rows. Nothing here ever touches
floating point.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from gmpy2 import mpq

Scalar = type(mpq(0))
LinearForm = tuple
Row = Sequence

ZERO = mpq(0)
ONE = mpq(1)


class NotAHyperplane(ValueError):
    """Raised when the zero form is used where a hyperplane is expected."""


def scalar(x) -> Scalar:
    """Coerce ints, Fractions, strings like ``'3/2'`` or mpq to an mpq."""
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


def as_form(coeffs: Iterable) -> LinearForm:
    return tuple(scalar(c) for c in coeffs)


def is_zero(v: Iterable) -> bool:
    return all(c == 0 for c in v)


def rref(rows: Iterable[Row], ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(rows, pivots, rank)`` where ``rows`` holds only the nonzero
    rows of the echelon form as tuples of mpq.
    """
    m = [[scalar(c) for c in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    for r in m:
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)} in a matrix with {ncols} columns")
    pivots: list[int] = []
    lead = 0
    for col in range(ncols):
        piv = next((i for i in range(lead, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[lead], m[piv] = m[piv], m[lead]
        prow = m[lead]
        inv = 1 / prow[col]
        if inv != 1:
            prow = m[lead] = [c * inv for c in prow]
        for i in range(len(m)):
            if i != lead and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], prow)]
        pivots.append(col)
        lead += 1
        if lead == len(m):
            break
    out = [tuple(r) for r in m[:lead]]
    return out, pivots, lead


def rank(rows: Iterable[Row], ncols: int | None = None) -> int:
    return rref(rows, ncols)[2]


def kernel_basis(rows: Iterable[Row], ncols: int | None = None) -> list[LinearForm]:
    """Basis of the right kernel ``{v : M v = 0}``, one vector per free column."""
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, pivots, _ = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, p in zip(red, pivots):
            v[p] = -r[free]
        basis.append(tuple(v))
    return basis


def normalize_form(f: Iterable) -> LinearForm:
    """Scale ``f`` so its first nonzero coefficient is 1."""
    f = as_form(f)
    for c in f:
        if c != 0:
            return tuple(x / c for x in f)
    raise NotAHyperplane("not a hyperplane: the zero form defines no hyperplane")


def span_basis(forms: Iterable[Row], n: int) -> list[LinearForm]:
    """Canonical basis (rref rows) of the span of ``forms`` in ``Q^n``."""
    return rref(list(forms), n)[0]


def in_span(v: Row, basis: Sequence[Row], n: int) -> bool:
    """Membership of ``v`` in the span of ``basis``."""
    if is_zero(v):
        return True
    return rank(list(basis) + [v], n) == rank(basis, n)


def span_contains(big: Sequence[Row], small: Sequence[Row], n: int) -> bool:
    """True when span(small) is a subspace of span(big)."""
    r = rank(big, n)
    return rank(list(big) + list(small), n) == r


def intersect_spans(a: Sequence[Row], b: Sequence[Row], n: int | None = None) -> list[LinearForm]:
    """Normalized basis of span(a) ∩ span(b).

    Solves ``sum s_i a_i = sum t_j b_j`` via the kernel of the stacked
    matrix ``[a; -b]^T`` and maps kernel vectors back through ``a``.
    """
    a = [as_form(r) for r in a]
    b = [as_form(r) for r in b]
    if n is None:
        n = len((a or b)[0]) if (a or b) else 0
    if not a or not b:
        return []
    a = span_basis(a, n)
    b = span_basis(b, n)
    if not a or not b:
        return []
    # columns of the system are the basis vectors of a and of -b
    cols = a + [tuple(-c for c in r) for r in b]
    system = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
    vecs = []
    for k in kernel_basis(system, len(cols)):
        vecs.append(tuple(sum((k[j] * a[j][i] for j in range(len(a))), ZERO) for i in range(n)))
    return span_basis(vecs, n)


def det(rows: Sequence[Row]) -> Scalar:
    """Determinant of a square rational matrix by elimination."""
    m = [[scalar(c) for c in r] for r in rows]
    size = len(m)
    d = ONE
    for col in range(size):
        piv = next((i for i in range(col, size) if m[i][col] != 0), None)
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            d = -d
        d *= m[col][col]
        for i in range(col + 1, size):
            if m[i][col] != 0:
                f = m[i][col] / m[col][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return d


def matmul(a: Sequence[Row], b: Sequence[Row]) -> list[tuple]:
    bt = list(zip(*b))
    return [tuple(sum((x * y for x, y in zip(r, c)), ZERO) for c in bt) for r in a]


def independent_forms(forms: Iterable[Row], n: int) -> list[LinearForm]:
    """Greedy maximal independent subset of ``forms``, each normalized, in input order."""
    kept: list[LinearForm] = []
    rows: list = []
    pivots: list = []
    for f in forms:
        f = as_form(f)
        if is_zero(f):
            continue
        v = list(f)
        for r, p in zip(rows, pivots):
            if v[p]:
                c = v[p]
                v = [a - c * b for a, b in zip(v, r)]
        if any(v):
            kept.append(normalize_form(f))
            rows, pivots, _ = rref(kept, n)
    return kept

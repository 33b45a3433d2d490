"""Sparse multivariate polynomials over Q and Gröbner basis machinery.

A polynomial is a mapping from exponent tuples to nonzero rationals. Monomial
orders are exposed as sort keys; the larger key is the larger monomial.

Homogeneous ideals get degree-truncated Gröbner bases: with the normal pair
selection strategy, once every pair of degree <= d is processed the partial
basis decides membership for all forms of degree <= d. Membership and
comparison of homogeneous ideals use this and never compute past the degree
they need.
"""

from __future__ import annotations

import contextlib
import re
import time
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from gmpy2 import mpq

from .exact import Scalar, rank, rref, scalar

Monomial = tuple


class RingMismatch(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


class TimeLimitExceeded(RuntimeError):
    """A Gröbner computation ran past the active deadline."""


# --------------------------------------------------------------------- deadline

_deadline: list[float | None] = [None]


@contextlib.contextmanager
def time_limit(seconds: float | None):
    """Cooperative deadline for every Gröbner computation in the block."""
    prev = _deadline[0]
    if seconds is not None:
        end = time.monotonic() + seconds
        _deadline[0] = end if prev is None else min(prev, end)
    try:
        yield
    finally:
        _deadline[0] = prev


def _check_deadline():
    d = _deadline[0]
    if d is not None and time.monotonic() > d:
        raise TimeLimitExceeded("time limit exceeded during Gröbner basis computation")


# ----------------------------------------------------------------------- orders


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex``, ``lex`` or ``elim`` (grevlex blocks, first ``block`` variables eliminated)."""

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs a block size >= 1")

    def key(self, m: Monomial):
        if self.kind == "grevlex":
            return _grevlex(m)
        if self.kind == "lex":
            return m
        b = self.block
        return _grevlex(m[:b]) + _grevlex(m[b:])

    @property
    def keyfunc(self):
        if self.kind == "grevlex":
            return _grevlex
        if self.kind == "lex":
            return _identity
        b = self.block
        return lambda m: _grevlex(m[:b]) + _grevlex(m[b:])

    def __str__(self):
        return f"elim{self.block}" if self.kind == "elim" else self.kind

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        text = text.strip().lower()
        if text.startswith("elim"):
            return cls("elim", int(text[4:] or 1))
        return cls(text)


def _grevlex(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


def _identity(m):
    return m


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


# ------------------------------------------------------------------ monomials


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def monomials_of_degree(n: int, d: int):
    """All exponent tuples of total degree ``d`` in ``n`` variables."""
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


# ------------------------------------------------------------------------ rings


@dataclass(frozen=True)
class Ring:
    names: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "Ring":
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def gens(self) -> list["Polynomial"]:
        n = self.nvars
        return [Polynomial(self, {tuple(int(i == j) for j in range(n)): mpq(1)}) for i in range(n)]

    def var(self, name: str) -> "Polynomial":
        return self.gens()[self.names.index(name)]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = scalar(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def linear_form(self, coeffs: Sequence) -> "Polynomial":
        n = self.nvars
        if len(coeffs) != n:
            raise RingMismatch(f"form has {len(coeffs)} coefficients, ring has {n} variables")
        terms = {}
        for i, c in enumerate(coeffs):
            c = scalar(c)
            if c:
                terms[tuple(int(i == j) for j in range(n))] = c
        return Polynomial(self, terms)

    def product_of_forms(self, forms: Iterable[Sequence]) -> "Polynomial":
        p = self.one()
        for f in forms:
            p = p * self.linear_form(f)
        return p

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def __str__(self):
        return "QQ[" + ",".join(self.names) + "]"


# ------------------------------------------------------------------ polynomials


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to mpq."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Scalar] | None = None):
        self.ring = ring
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = t.get(m, 0) + c1 * c2
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        p = self.ring.one()
        for _ in range(k):
            p = p * self
        return p

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Scalar)) or hasattr(other, "denominator"):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # structure -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables(self) -> set[str]:
        used = set()
        for m in self.terms:
            used.update(self.ring.names[i] for i, e in enumerate(m) if e)
        return used

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        return max(self.terms, key=order.keyfunc)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Scalar:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        inv = 1 / self.leading_coefficient(order)
        return Polynomial(self.ring, {m: c * inv for m, c in self.terms.items()})

    def evaluate(self, point: Sequence) -> Scalar:
        total = mpq(0)
        pt = [scalar(v) for v in point]
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x**e
            total += v
        return total

    def extend(self, ring: Ring, positions: Sequence[int]) -> "Polynomial":
        """Re-embed into ``ring``; variable i of self becomes ``positions[i]``."""
        n = ring.nvars
        t = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                e[positions[i]] += k
            t[tuple(e)] = c
        return Polynomial(ring, t)

    def coefficient_vector(self, monomials: Sequence[Monomial]) -> list[Scalar]:
        return [self.terms.get(m, mpq(0)) for m in monomials]

    # printing --------------------------------------------------------------

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        if not self.terms:
            return "0"
        out = []
        for m in sorted(self.terms, key=order.keyfunc, reverse=True):
            c = self.terms[m]
            vars_ = "*".join(
                (n if e == 1 else f"{n}^{e}") for n, e in zip(self.ring.names, m) if e
            )
            neg = c < 0
            a = -c if neg else c
            if not vars_:
                body = str(a)
            elif a == 1:
                body = vars_
            else:
                body = f"{a}*{vars_}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


class _Parser:
    _tok = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()/]))")

    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = self._tok.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {self.text!r} at column {pos + 1}")
            num, name, op = m.groups()
            if num is not None:
                self.toks.append(("num", mpq(num)))
            elif name is not None:
                if name not in ring.names:
                    raise ValueError(f"unknown variable {name!r} in {self.text!r}")
                self.toks.append(("var", name))
            else:
                self.toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> Polynomial:
        if not self.toks:
            raise ValueError("empty polynomial")
        p = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        p = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self):
        p = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            f = self.factor()
            if op == "*":
                p = p * f
            else:
                if f.degree() > 0 or f.is_zero():
                    raise ValueError("division only by nonzero constants")
                p = p * (1 / f.terms[(0,) * self.ring.nvars])
        return p

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            p = self.ring.constant(val)
        elif kind == "var":
            p = self.ring.var(val)
        elif (kind, val) == ("op", "("):
            p = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {self.text!r}")
        elif (kind, val) == ("op", "-"):
            return -self.factor()
        else:
            raise ValueError(f"unexpected token {val!r} in {self.text!r}")
        if self.peek() == ("op", "^"):
            self.take()
            k, e = self.take()
            if k != "num" or e.denominator != 1:
                raise ValueError("exponent must be a nonnegative integer")
            p = p ** int(e)
        return p


# -------------------------------------------------------------- raw reduction
# Internally polynomials are dicts; G is a list of (lm, dict) with monic dicts.


def _sub_scaled(p: dict, c, shift: Monomial, g: dict):
    """p -= c * x^shift * g, in place."""
    for m, gc in g.items():
        mm = tuple(a + b for a, b in zip(m, shift))
        v = p.get(mm, 0) - c * gc
        if v:
            p[mm] = v
        else:
            p.pop(mm, None)


def _find_divisor(m, lms):
    for idx, lm in enumerate(lms):
        if all(x <= y for x, y in zip(lm, m)):
            return idx
    return -1


def _reduce(p: dict, G: Sequence[tuple], key, full: bool = True) -> dict:
    """Remainder of ``p`` on division by ``G``; ``full=False`` stops once the leading term is irreducible."""
    p = dict(p)
    lms = [g[0] for g in G]
    rem: dict = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        idx = _find_divisor(lm, lms)
        if idx < 0:
            if not full:
                p.update(rem)
                return p
            rem[lm] = c
            del p[lm]
            continue
        glm, g = G[idx]
        _sub_scaled(p, c, tuple(a - b for a, b in zip(lm, glm)), g)
    return rem


def _monic(p: dict, key) -> tuple:
    lm = max(p, key=key)
    inv = 1 / p[lm]
    return lm, {m: c * inv for m, c in p.items()}


def _spoly(f: tuple, g: tuple) -> dict:
    lf, fd = f
    lg, gd = g
    lcm = mono_lcm(lf, lg)
    p = {}
    _sub_scaled(p, -1, tuple(a - b for a, b in zip(lcm, lf)), fd)
    _sub_scaled(p, 1, tuple(a - b for a, b in zip(lcm, lg)), gd)
    return p


def _buchberger(gens: list[dict], key, max_degree: int | None = None) -> tuple[list[tuple], bool]:
    """Reduced Gröbner basis of the dicts in ``gens``.

    Returns ``(basis, complete)``. With ``max_degree`` set (homogeneous
    input only) pairs of higher lcm degree are left unprocessed, and
    ``complete`` reports whether any were left.
    """
    G: list[tuple] = []
    active: list[int] = []
    pairs: set = set()
    skipped = False

    def lcm_of(i, j):
        return mono_lcm(G[i][0], G[j][0])

    def update(h: int):
        nonlocal active, pairs
        lh = G[h][0]
        C = sorted(active)
        D: list[int] = []
        remaining = list(C)
        while remaining:
            g1 = remaining.pop(0)
            l1 = mono_lcm(lh, G[g1][0])
            if mono_coprime(lh, G[g1][0]):
                D.append(g1)
                continue
            others = remaining + D
            if not any(mono_divides(mono_lcm(lh, G[g2][0]), l1) for g2 in others):
                D.append(g1)
        E = {(min(g, h), max(g, h)) for g in D if not mono_coprime(lh, G[g][0])}
        kept = set()
        for (a, b) in pairs:
            lab = lcm_of(a, b)
            if (
                not mono_divides(lh, lab)
                or mono_lcm(G[a][0], lh) == lab
                or mono_lcm(G[b][0], lh) == lab
            ):
                kept.add((a, b))
        pairs = kept | E
        active = [g for g in active if not mono_divides(lh, G[g][0])] + [h]

    def add(p: dict):
        G.append(_monic(p, key))
        update(len(G) - 1)

    # feed generators in increasing degree, each top-reduced by what is there
    todo = sorted((g for g in gens if g), key=lambda d: key(max(d, key=key)))
    for g in todo:
        if max_degree is not None and max(sum(m) for m in g) > max_degree:
            skipped = True
            continue
        _check_deadline()
        r = _reduce(g, [G[i] for i in active], key, full=False)
        if r:
            add(r)

    def pair_key(pr):
        lc = lcm_of(*pr)
        return (sum(lc), key(lc), pr)

    while pairs:
        _check_deadline()
        pr = min(pairs, key=pair_key)
        if max_degree is not None and sum(lcm_of(*pr)) > max_degree:
            skipped = True
            break
        pairs.discard(pr)
        s = _spoly(G[pr[0]], G[pr[1]])
        r = _reduce(s, [G[i] for i in active], key, full=False)
        if r:
            add(r)

    # interreduce the minimal basis
    basis = sorted((G[i] for i in active), key=lambda g: key(g[0]))
    out = []
    for i, (lm, g) in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        r = _reduce(g, others, key, full=True)
        out.append(_monic(r, key))
    out.sort(key=lambda g: key(g[0]), reverse=True)
    return out, not skipped


# -------------------------------------------------------------- Gröbner bases


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis; ``degree_bound`` is set when truncated."""

    ring: Ring
    order: MonomialOrder
    elements: tuple
    degree_bound: int | None = None

    @property
    def complete(self) -> bool:
        return self.degree_bound is None

    def _raw(self):
        return [(p.leading_monomial(self.order), p.terms) for p in self.elements]

    def leading_monomials(self) -> list[Monomial]:
        return [p.leading_monomial(self.order) for p in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        if self.degree_bound is not None and f.degree() > self.degree_bound:
            raise ValueError(
                f"basis truncated at degree {self.degree_bound} cannot decide degree {f.degree()}"
            )
        return normal_form(f, self).is_zero()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def normal_form(f: Polynomial, g: GroebnerBasis) -> Polynomial:
    """Remainder of multivariate division of ``f`` by the basis ``g``."""
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    raw = g._raw()
    return Polynomial(f.ring, _reduce(f.terms, raw, g.order.keyfunc))


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    max_degree: int | None = None,
    ring: Ring | None = None,
) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    ``max_degree`` truncates the computation; it requires homogeneous
    generators, and the result then decides membership up to that degree.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("pass ring= when the generator list is empty")
        ring = gens[0].ring
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis(ring, order, ())
    for g in gens:
        if g.ring != ring:
            raise RingMismatch(f"{g.ring} vs {ring}")
    if max_degree is not None and not all(g.is_homogeneous() for g in gens):
        raise NotHomogeneous("degree truncation needs homogeneous generators")
    key = order.keyfunc
    raw, complete = _buchberger([g.terms for g in gens], key, max_degree)
    elements = tuple(Polynomial(ring, d) for _, d in raw)
    return GroebnerBasis(ring, order, elements, None if complete else max_degree)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    key = order.keyfunc
    return Polynomial(f.ring, _spoly(_monic(f.terms, key), _monic(g.terms, key)))


def is_groebner(gb: GroebnerBasis) -> bool:
    """S-polynomial audit: every pair reduces to zero (up to the degree bound)."""
    els = list(gb.elements)
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            s = s_polynomial(els[i], els[j], gb.order)
            if gb.degree_bound is not None and s.degree() > gb.degree_bound:
                continue
            if not normal_form(s, gb).is_zero():
                return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    lms = gb.leading_monomials()
    for i, p in enumerate(gb.elements):
        if p.leading_coefficient(gb.order) != 1:
            return False
        for m in p.terms:
            for j, lm in enumerate(lms):
                if j != i and mono_divides(lm, m):
                    return False
    return True


# ------------------------------------------------------------------- ideals


class Ideal:
    """Ideal of ``ring`` with cached Gröbner bases keyed by order.

    The cache only memoizes; every answer is the same with an empty cache.
    """

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = ()):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch(f"{g.ring} vs {ring}")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self._gb: dict = {}

    def __repr__(self):
        return f"Ideal({', '.join(g.to_str() for g in self.generators)})"

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.generators), default=-1)

    def groebner(self, order: MonomialOrder = GREVLEX, max_degree: int | None = None) -> GroebnerBasis:
        full = self._gb.get((order, None))
        if full is not None:
            return full
        if max_degree is not None:
            if not self.is_homogeneous():
                max_degree = None
            else:
                for (o, d), gb in self._gb.items():
                    if o == order and d is not None and d >= max_degree:
                        return gb
        if self.is_zero():
            gb = GroebnerBasis(self.ring, order, ())
        else:
            gb = buchberger(self.generators, order, max_degree)
        self._gb[(order, gb.degree_bound)] = gb
        return gb

    def set_groebner(self, gb: GroebnerBasis):
        self._gb[(gb.order, gb.degree_bound)] = gb

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        bound = f.degree() if f.is_homogeneous() else None
        return self.groebner(GREVLEX, bound).contains(f)

    def reduce(self, f: Polynomial, max_degree: int | None = None) -> Polynomial:
        return normal_form(f, self.groebner(GREVLEX, max_degree))

    def contains_ideal(self, other: "Ideal") -> bool:
        return self.first_outside(other) is None

    def first_outside(self, other: "Ideal") -> Polynomial | None:
        """A generator of ``other`` not in self, or None when other ⊆ self."""
        if other.ring != self.ring:
            raise RingMismatch(f"{other.ring} vs {self.ring}")
        if other.is_zero():
            return None
        bound = other.max_generator_degree() if other.is_homogeneous() else None
        gb = self.groebner(GREVLEX, bound)
        for g in other.generators:
            if not normal_form(g, gb).is_zero():
                return g
        return None

    def min_degree(self) -> int | None:
        """Smallest degree of a nonzero element (homogeneous ideals)."""
        if self.is_zero():
            return None
        return min(g.degree() for g in self.groebner().elements)

    def hilbert_function(self, t: int) -> int:
        return hilbert_function(self, t)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_compare(self, other) == "equal"

    __hash__ = None


def ideal_compare(i: Ideal, j: Ideal) -> str:
    """One of ``equal``, ``i-strictly-inside-j``, ``j-strictly-inside-i``, ``incomparable``."""
    if i.ring != j.ring:
        raise RingMismatch(f"{i.ring} vs {j.ring}")
    i_in_j = j.contains_ideal(i)
    j_in_i = i.contains_ideal(j)
    if i_in_j and j_in_i:
        return "equal"
    if i_in_j:
        return "i-strictly-inside-j"
    if j_in_i:
        return "j-strictly-inside-i"
    return "incomparable"


def _aux_name(ring: Ring) -> str:
    name = "t"
    while name in ring.names:
        name = "_" + name
    return name


def intersect_ideals(i: Ideal, j: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t·I + (1 − t)·J.

    The t-free part of the reduced elimination basis is itself the reduced
    grevlex basis of the intersection and is cached on the result.
    """
    if i.ring != j.ring:
        raise RingMismatch(f"{i.ring} vs {j.ring}")
    ring = i.ring
    if i.is_zero() or j.is_zero():
        return Ideal(ring)
    big = Ring((_aux_name(ring),) + ring.names)
    pos = list(range(1, big.nvars))
    t = big.gens()[0]
    gens = [t * g.extend(big, pos) for g in i.generators]
    gens += [(1 - t) * g.extend(big, pos) for g in j.generators]
    order = MonomialOrder("elim", 1)
    gb = buchberger(gens, order)
    kept = []
    for p in gb.elements:
        if all(m[0] == 0 for m in p.terms):
            kept.append(Polynomial(ring, {m[1:]: c for m, c in p.terms.items()}))
    kept.sort(key=lambda p: GREVLEX.key(p.leading_monomial()), reverse=True)
    out = Ideal(ring, kept)
    out.set_groebner(GroebnerBasis(ring, GREVLEX, tuple(kept)))
    return out


def product_ideal(*ideals: Ideal) -> Ideal:
    ring = ideals[0].ring
    gens = [ring.one()]
    for I in ideals:
        gens = [a * b for a in gens for b in I.generators]
    return Ideal(ring, dict.fromkeys(gens))


def hilbert_function(i: Ideal, t: int) -> int:
    """dim_Q of the degree-t part of ring/i, counted from the leading-term ideal."""
    if t < 0:
        raise ValueError("degree must be nonnegative")
    if not i.is_homogeneous():
        raise NotHomogeneous("hilbert_function needs homogeneous generators")
    n = i.ring.nvars
    if i.is_zero():
        return comb(t + n - 1, n - 1)
    lms = i.groebner(GREVLEX, t).leading_monomials()
    return sum(1 for m in monomials_of_degree(n, t) if _find_divisor(m, lms) < 0)


def _degree_part_rows(ideal: Ideal, t: int, monos: list) -> list:
    """Spanning rows of the degree-t part of a homogeneous ideal."""
    n = ideal.ring.nvars
    rows = []
    for g in ideal.groebner(GREVLEX, t).elements:
        d = g.degree()
        if d > t:
            continue
        for m in monomials_of_degree(n, t - d):
            shifted = {tuple(a + b for a, b in zip(k, m)): c for k, c in g.terms.items()}
            rows.append([shifted.get(mm, 0) for mm in monos])
    return rows


def minimal_generator_counts(ideal: Ideal, max_degree: int) -> dict[int, int]:
    """Number of minimal generators of a homogeneous ideal in each degree <= max_degree.

    Counts dim I_t − dim (S_1 · I_{t−1}) by linear algebra on coefficient rows.
    """
    if not ideal.is_homogeneous():
        raise NotHomogeneous("minimal generators are defined here for homogeneous ideals")
    n = ideal.ring.nvars
    counts = {}
    for t in range(max_degree + 1):
        monos = list(monomials_of_degree(n, t))
        dim_t = len(monos) - hilbert_function(ideal, t)
        if t == 0:
            counts[t] = dim_t
            continue
        below = []
        prev = list(monomials_of_degree(n, t - 1))
        lower = _degree_part_rows(ideal, t - 1, prev)
        basis_lower = rref(lower, len(prev))[0] if lower else []
        index = {m: i for i, m in enumerate(monos)}
        for row in basis_lower:
            for v in range(n):
                r = [0] * len(monos)
                for m, c in zip(prev, row):
                    if c:
                        mm = list(m)
                        mm[v] += 1
                        r[index[tuple(mm)]] = c
                below.append(r)
        counts[t] = dim_t - (rank(below, len(monos)) if below else 0)
    return counts

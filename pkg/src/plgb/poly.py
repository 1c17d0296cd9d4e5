"""Exact-rational linear combinations of trees and the four tree products."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .trees import ParseError, PlanarTree, Tree, _Reader

__all__ = [
    "LinComb", "TreePoly", "as_poly", "bilinear",
    "left_butcher", "left_graft", "butcher", "graft",
    "left_butcher_poly", "left_graft_poly", "butcher_poly", "graft_poly",
    "leading_term", "parse_poly", "format_poly",
]


def _coeff(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class LinComb:
    """Finite linear combination of hashable terms carrying an order key.

    Zero coefficients are never stored.  Iteration runs from the largest
    term down.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for t, c in items:
                c = _coeff(c)
                if c:
                    nc = d.get(t, 0) + c
                    if nc:
                        d[t] = nc
                    else:
                        d.pop(t, None)
        self.terms = d

    @classmethod
    def _raw(cls, d):
        obj = cls.__new__(cls)
        obj.terms = d
        return obj

    @staticmethod
    def term_key(t):
        return t.key

    @classmethod
    def monomial(cls, t, c=1):
        return cls({t: c})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def items(self):
        return sorted(self.terms.items(), key=lambda tc: self.term_key(tc[0]), reverse=True)

    def support(self):
        return set(self.terms)

    def coeff(self, t):
        return self.terms.get(t, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _combine(self, other, sign):
        if not isinstance(other, LinComb):
            if other == 0:
                return self
            return NotImplemented
        d = dict(self.terms)
        for t, c in other.terms.items():
            nc = d.get(t, 0) + sign * c
            if nc:
                d[t] = nc
            else:
                d.pop(t, None)
        return self._raw(d)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        return self._raw({t: -c for t, c in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, LinComb):
            return NotImplemented
        c = _coeff(c)
        if not c:
            return self._raw({})
        return self._raw({t: c * v for t, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / _coeff(c))

    def add_scaled(self, other, c):
        """Return ``self + c * other``."""
        d = dict(self.terms)
        for t, v in other.terms.items():
            nc = d.get(t, 0) + c * v
            if nc:
                d[t] = nc
            else:
                d.pop(t, None)
        return self._raw(d)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        t = max(self.terms, key=self.term_key)
        return t, self.terms[t]

    def degrees(self):
        return {t.degree for t in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def homogeneous_degree(self):
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("element is not homogeneous of positive degree")
        return next(iter(ds))

    def component(self, n):
        return self._raw({t: c for t, c in self.terms.items() if t.degree == n})

    def __repr__(self):
        return format_poly(self) if self.terms else "0"


TreePoly = LinComb


def as_poly(x):
    return x if isinstance(x, LinComb) else LinComb({x: 1})


def leading_term(f):
    return as_poly(f).leading_term()


def bilinear(op):
    """Extend a product on monomials (monomial or LinComb valued) bilinearly."""

    def product(f, g):
        f, g = as_poly(f), as_poly(g)
        out = {}
        for s, a in f.terms.items():
            for t, b in g.terms.items():
                r = op(s, t)
                ab = a * b
                if isinstance(r, LinComb):
                    for u, c in r.terms.items():
                        out[u] = out.get(u, 0) + ab * c
                else:
                    out[r] = out.get(r, 0) + ab
        return type(f)._raw({u: c for u, c in out.items() if c})

    product.__name__ = op.__name__ + "_poly"
    product.__doc__ = f"Bilinear extension of :func:`{op.__name__}`."
    return product


# ---------------------------------------------------------------- products

@lru_cache(maxsize=None)
def left_butcher(s: PlanarTree, t: PlanarTree) -> PlanarTree:
    """Graft ``s`` as new leftmost branch of the root of ``t``."""
    return PlanarTree(t.root, (s,) + t.branches)


@lru_cache(maxsize=None)
def _left_graft_all(s, t) -> tuple:
    out = [PlanarTree(t.root, (s,) + t.branches)]
    bs = t.branches
    for i, b in enumerate(bs):
        for r in _left_graft_all(s, b):
            out.append(PlanarTree(t.root, bs[:i] + (r,) + bs[i + 1:]))
    return tuple(out)


def left_graft(s: PlanarTree, t: PlanarTree) -> LinComb:
    """Sum over vertices ``v`` of ``t`` of ``s`` grafted as leftmost branch at ``v``."""
    results = _left_graft_all(s, t)
    poly = LinComb((r, 1) for r in results)
    assert len(poly) == len(results), "planar grafts must be pairwise distinct"
    return poly


@lru_cache(maxsize=None)
def butcher(s: Tree, t: Tree) -> Tree:
    """Non-planar Butcher product: ``s`` becomes a new branch at the root of ``t``."""
    return Tree(t.root, t.branches + (s,))


@lru_cache(maxsize=None)
def _graft_all(s, t) -> tuple:
    out = [Tree(t.root, t.branches + (s,))]
    bs = t.branches
    for i, b in enumerate(bs):
        for r in _graft_all(s, b):
            out.append(Tree(t.root, bs[:i] + (r,) + bs[i + 1:]))
    return tuple(out)


@lru_cache(maxsize=None)
def graft(s: Tree, t: Tree) -> LinComb:
    """Pre-Lie grafting ``s -> t``; coinciding results accumulate."""
    return LinComb((r, 1) for r in _graft_all(s, t))


def graft_at(s: Tree, t: Tree, path) -> Tree:
    """Graft ``s`` on the vertex of ``t`` reached by ``path`` (branch indices)."""
    if not path:
        return Tree(t.root, t.branches + (s,))
    i = path[0]
    bs = t.branches
    return Tree(t.root, bs[:i] + (graft_at(s, bs[i], path[1:]),) + bs[i + 1:])


left_butcher_poly = bilinear(left_butcher)
left_graft_poly = bilinear(left_graft)
butcher_poly = bilinear(butcher)
graft_poly = bilinear(graft)


# ------------------------------------------------------------ text format

_NUMBER = re.compile(r"\d+(?:/\d+)?")


def parse_poly(text: str, alphabet, kind: str = "planar") -> LinComb:
    """Parse ``c1*TREE1 + c2*TREE2 - ...`` with integer or ``p/q`` coefficients.

    ``kind`` selects the term grammar: ``planar``, ``nonplanar`` or ``binary``.
    """
    r = _Reader(text, alphabet)
    if kind == "binary":
        read = r.binary
    elif kind == "nonplanar":
        from .trees import forget_planarity
        read = lambda: forget_planarity(r.tree())
    elif kind == "planar":
        read = r.tree
    else:
        raise ValueError(f"unknown term kind {kind!r}")
    if text.strip() == "0":
        return LinComb()
    terms = []
    while True:
        sign = 1
        while r.peek() and r.peek() in "+-":
            if r.peek() == "-":
                sign = -sign
            r.pos += 1
        r.skip()
        coeff = Fraction(1)
        m = _NUMBER.match(r.text, r.pos)
        if m:
            coeff = Fraction(m.group())
            r.pos = m.end()
            r.expect("*")
        terms.append((read(), sign * coeff))
        if not r.peek():
            break
        if r.peek() not in "+-":
            raise ParseError(f"unexpected {r.peek()!r}", text, r.pos)
    return LinComb(terms)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: LinComb, fmt_term=repr) -> str:
    if not f:
        return "0"
    parts = []
    for t, c in f.items():
        body = fmt_term(t)
        mag = abs(c)
        s = body if mag == 1 else f"{_fmt_coeff(mag)}*{body}"
        if not parts:
            parts.append(("-" if c < 0 else "") + s)
        else:
            parts.append(("- " if c < 0 else "+ ") + s)
    return " ".join(parts)

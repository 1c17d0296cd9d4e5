"""Homogeneous two-sided ideals of tree magmas, leading terms and canonical forms.

An ideal is given by a carrier (a family of trees with a bilinear product)
and a list of parameterised generating relations.  Its homogeneous
components are built in ascending degree: degree ``n`` is spanned by the
relation instances of degree ``n`` together with all products of lower
ideal rows with trees on either side.  Each component is kept as a fully
reduced echelon basis, which turns canonical forms into a single
reduction pass.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .magma import star, vee_poly
from .poly import LinComb, as_poly, graft_poly, left_butcher_poly
from .trees import (Alphabet, enumerate_binary_by_degree, enumerate_nonplanar,
                    enumerate_planar)

__all__ = [
    "ResourceCapExceeded", "DegreeError", "Caps", "Carrier", "Schema",
    "IdealPresentation", "EchelonBasis", "HomogeneousIdealBasis", "IdealBases",
    "PLANAR_BUTCHER", "NONPLANAR_GRAFT", "BINARY_DOT", "BINARY_STAR",
    "pre_lie_schema", "weighted_antisymmetry_schema", "antisymmetry_schema",
    "jacobi_schema", "IDEAL_J", "IDEAL_J_PRIME", "IDEAL_I", "MAGMA_J_STAR",
    "MAGMA_J_PRIME_DOT", "PRESENTATIONS", "span_ideal", "leading_terms",
    "complement", "can", "contains", "quotient_prelie_product",
    "quotient_bracket", "random_reducer",
]

log = logging.getLogger(__name__)


class ResourceCapExceeded(RuntimeError):
    pass


class DegreeError(ValueError):
    """Input lies in a degree for which no ideal component was computed."""


@dataclass(frozen=True)
class Caps:
    max_degree: int = 8
    max_seeds: int = 2_000_000
    max_terms: int = 1_000_000


@dataclass(frozen=True)
class Carrier:
    name: str
    trees: Callable
    product: Callable


PLANAR_BUTCHER = Carrier("planar-butcher", enumerate_planar, left_butcher_poly)
NONPLANAR_GRAFT = Carrier("nonplanar-graft", enumerate_nonplanar, graft_poly)
BINARY_DOT = Carrier("binary-dot", enumerate_binary_by_degree, vee_poly)
BINARY_STAR = Carrier("binary-star", enumerate_binary_by_degree, star)


@dataclass(frozen=True)
class Schema:
    name: str
    arity: int
    build: Callable


def pre_lie_schema(p) -> Schema:
    def build(x, y, z):
        return p(p(x, y), z) - p(x, p(y, z)) - p(p(y, x), z) + p(y, p(x, z))
    return Schema("pre-lie", 3, build)


def weighted_antisymmetry_schema(p) -> Schema:
    def build(x, y):
        return x.degree * p(x, y) + y.degree * p(y, x)
    return Schema("weighted-antisymmetry", 2, build)


def antisymmetry_schema(p) -> Schema:
    def build(x, y):
        return p(x, y) + p(y, x)
    return Schema("antisymmetry", 2, build)


def jacobi_schema(p) -> Schema:
    def build(x, y, z):
        return p(x, p(y, z)) + p(y, p(z, x)) + p(z, p(x, y))
    return Schema("jacobi", 3, build)


@dataclass(frozen=True)
class IdealPresentation:
    name: str
    carrier: Carrier
    schemas: tuple = field(default_factory=tuple)


_lb = PLANAR_BUTCHER.product
IDEAL_J = IdealPresentation("J", PLANAR_BUTCHER, (pre_lie_schema(_lb),))
IDEAL_J_PRIME = IdealPresentation(
    "J'", PLANAR_BUTCHER, (pre_lie_schema(_lb), weighted_antisymmetry_schema(_lb)))
IDEAL_I = IdealPresentation(
    "I", NONPLANAR_GRAFT, (weighted_antisymmetry_schema(NONPLANAR_GRAFT.product),))
MAGMA_J_STAR = IdealPresentation(
    "J-star", BINARY_STAR, (antisymmetry_schema(star), jacobi_schema(star)))
MAGMA_J_PRIME_DOT = IdealPresentation(
    "J'-dot", BINARY_DOT, (pre_lie_schema(vee_poly), weighted_antisymmetry_schema(vee_poly)))

PRESENTATIONS = {p.name: p for p in
                 (IDEAL_J, IDEAL_J_PRIME, IDEAL_I, MAGMA_J_STAR, MAGMA_J_PRIME_DOT)}


class EchelonBasis:
    """Fully reduced row echelon basis of a subspace.

    Rows have pairwise distinct leading terms with coefficient 1, and no
    row contains the leading term of another row.
    """

    def __init__(self, degree=None):
        self.degree = degree
        self._rows = {}

    def reduce(self, f) -> LinComb:
        f = as_poly(f)
        rows = self._rows
        for t in [t for t in f.terms if t in rows]:
            c = f.terms.get(t)
            if c:
                f = f.add_scaled(rows[t], -c)
        return f

    def insert(self, f) -> bool:
        g = self.reduce(f)
        if not g:
            return False
        p, c = g.leading_term()
        if c != 1:
            g = g * (1 / c)
        rows = self._rows
        for q, row in rows.items():
            a = row.terms.get(p)
            if a:
                rows[q] = row.add_scaled(g, -a)
        rows[p] = g
        return True

    def __contains__(self, f):
        return not self.reduce(f)

    def row_for(self, t):
        return self._rows.get(t)

    @property
    def rows(self):
        return [self._rows[p] for p in sorted(self._rows, key=lambda t: t.key, reverse=True)]

    @property
    def leading_terms(self):
        return set(self._rows)

    @property
    def rank(self):
        return len(self._rows)

    def same_span(self, other) -> bool:
        return {p: r.terms for p, r in self._rows.items()} == \
            {p: r.terms for p, r in other._rows.items()}

    def __repr__(self):
        return f"EchelonBasis(degree={self.degree}, rank={self.rank})"


HomogeneousIdealBasis = EchelonBasis


def _compositions(n, k):
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


class IdealBases:
    """Echelon bases of the homogeneous components of an ideal up to a degree."""

    def __init__(self, presentation: IdealPresentation, alphabet: Alphabet,
                 max_degree: int, caps: Caps | None = None):
        caps = caps or Caps()
        if max_degree < 1:
            raise ValueError("max_degree must be >= 1")
        if max_degree > caps.max_degree:
            raise ResourceCapExceeded(
                f"degree {max_degree} exceeds cap max_degree={caps.max_degree}")
        self.presentation = presentation
        self.alphabet = alphabet
        self.max_degree = max_degree
        self.caps = caps
        self.components = {}
        for n in range(1, max_degree + 1):
            self.components[n] = self._build(n)

    def _trees(self, n):
        return self.presentation.carrier.trees(self.alphabet, n)

    def _build(self, n) -> EchelonBasis:
        basis = EchelonBasis(n)
        seeds = 0
        for schema in self.presentation.schemas:
            for degs in _compositions(n, schema.arity) if n >= schema.arity else ():
                pools = [self._trees(d) for d in degs]
                for args in itertools.product(*pools):
                    seeds += 1
                    if seeds > self.caps.max_seeds:
                        raise ResourceCapExceeded(
                            f"more than {self.caps.max_seeds} relation instances in degree {n}")
                    basis.insert(schema.build(*args))
        p = self.presentation.carrier.product
        for m in range(1, n):
            rows = self.components[m].rows
            if not rows:
                continue
            for u in self._trees(n - m):
                for row in rows:
                    basis.insert(p(u, row))
                    basis.insert(p(row, u))
        log.debug("%s degree %d: rank %d from %d relation instances",
                  self.presentation.name, n, basis.rank, seeds)
        return basis

    def component(self, n) -> EchelonBasis:
        try:
            return self.components[n]
        except KeyError:
            raise DegreeError(
                f"degree {n} outside computed range 1..{self.max_degree}") from None

    def leading_terms(self, n):
        return self.component(n).leading_terms

    def complement(self, n):
        lead = self.component(n).leading_terms
        return [t for t in self._trees(n) if t not in lead]

    def can(self, f, chooser=None) -> LinComb:
        """Canonical form of ``f`` modulo the ideal.

        Repeatedly take the leading term of the remainder: if it is not a
        leading term of the ideal it moves to the output, otherwise an ideal
        element with that leading term (coefficient 1) is subtracted.
        ``chooser(t, row, component)`` may supply a different such element.
        """
        f = as_poly(f)
        if len(f) > self.caps.max_terms:
            raise ResourceCapExceeded(f"input has more than {self.caps.max_terms} terms")
        out = {}
        while f:
            t, c = f.leading_term()
            comp = self.component(t.degree)
            row = comp.row_for(t)
            if row is None:
                out[t] = c
                f = f.add_scaled(LinComb._raw({t: Fraction(1)}), -c)
                continue
            g = row if chooser is None else chooser(t, row, comp)
            lt, lc = g.leading_term()
            if lt != t or lc != 1:
                raise ValueError("reducer must have the same leading term with coefficient 1")
            f = f.add_scaled(g, -c)
        return type(f)._raw(out)

    def contains(self, f) -> bool:
        return not self.can(f)

    def dimension_split(self, n):
        return self.component(n).rank, len(self.complement(n)), len(self._trees(n))


def span_ideal(presentation, alphabet, n, caps=None) -> IdealBases:
    if isinstance(presentation, str):
        presentation = PRESENTATIONS[presentation]
    return IdealBases(presentation, alphabet, n, caps)


def leading_terms(basis: EchelonBasis):
    return basis.leading_terms


def complement(basis: EchelonBasis, alphabet, n, trees=enumerate_planar):
    lead = basis.leading_terms
    return [t for t in trees(alphabet, n) if t not in lead]


def can(f, bases: IdealBases, chooser=None):
    return bases.can(f, chooser)


def contains(f, bases: IdealBases) -> bool:
    return bases.contains(f)


def quotient_prelie_product(f, g, bases: IdealBases) -> LinComb:
    return bases.can(graft_poly(as_poly(f), as_poly(g)))


def quotient_bracket(f, g, bases: IdealBases) -> LinComb:
    f = as_poly(f)
    if not f:
        return LinComb()
    return f.homogeneous_degree() * quotient_prelie_product(f, g, bases)


def random_reducer(rng, max_extra=3, span=5):
    """Chooser for :meth:`IdealBases.can` adding random lower rows to each reducer."""

    def choose(t, row, comp):
        lower = [r for p, r in comp._rows.items() if p.key < t.key]
        g = row
        for r in rng.sample(lower, min(len(lower), rng.randint(0, max_extra))):
            g = g.add_scaled(r, Fraction(rng.randint(-span, span), rng.randint(1, span)))
        return g

    return choose

"""Free Lie algebras inside the free associative algebra.

Lie elements are noncommutative polynomials over the alphabet; brackets
are commutators.  ``phi`` realises the pre-Lie morphism from trees with
grafting onto the Lie algebra with ``x |> y = [x, y] / |x|``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import mobius, divisors

from .ideals import EchelonBasis, IdealBases
from .poly import LinComb, as_poly, bilinear, graft
from .trees import Alphabet, Generator, Tree, enumerate_nonplanar, is_ladder

__all__ = [
    "NcWord", "NcPoly", "LieElement", "RankDefectError", "word", "gen", "concat",
    "bracket", "left_normed", "rhd", "black_rhd", "alpha", "bracket_rhd", "phi",
    "rank", "lie_dimension_phi", "lie_dimension_commutators", "witt_dimension",
    "lie_dimension", "lie_monomial_basis", "kernel_check", "ladder_bracket",
    "monic", "phi_poly", "format_bracket",
]


class RankDefectError(AssertionError):
    """A computed basis does not have the dimension the oracles predict."""


class NcWord(tuple):
    """Word in the generators; ordered by degree, length, then letter ranks."""

    __slots__ = ()

    @property
    def degree(self):
        return sum(g.degree for g in self)

    @property
    def key(self):
        return (self.degree, len(self), tuple(g.rank for g in self))

    def __repr__(self):
        return "".join(g.name if len(g.name) == 1 else f"{g.name} " for g in self).strip()


class NcPoly(LinComb):
    __slots__ = ()

    def __repr__(self):
        from .poly import format_poly
        return format_poly(self, lambda w: " ".join(g.name for g in w) or "1")


LieElement = NcPoly


def word(*gens: Generator) -> NcWord:
    return NcWord(gens)


def gen(a: Generator) -> NcPoly:
    return NcPoly({NcWord((a,)): 1})


def _concat_words(u, v):
    return NcWord(u + v)


_concat = bilinear(_concat_words)


def _nc(x) -> NcPoly:
    if isinstance(x, Generator):
        return gen(x)
    if isinstance(x, NcPoly):
        return x
    if isinstance(x, LinComb):
        return NcPoly._raw(dict(x.terms))
    raise TypeError(f"cannot use {type(x).__name__} as a Lie element")


def concat(f, g) -> NcPoly:
    return NcPoly._raw(_concat(_nc(f), _nc(g)).terms)


def bracket(f, g) -> NcPoly:
    f, g = _nc(f), _nc(g)
    return concat(f, g) - concat(g, f)


def left_normed(*xs) -> NcPoly:
    """``[[..[x1, x2], ..], xm]``."""
    out = _nc(xs[0])
    for x in xs[1:]:
        out = bracket(out, x)
    return out


def _deg(x) -> int:
    x = _nc(x)
    if not x:
        raise ValueError("zero element has no degree")
    d = x.homogeneous_degree()
    if d == 0:
        raise ValueError("elements of degree 0 are not allowed")
    return d


def rhd(x, y) -> NcPoly:
    """``x |> y = [x, y] / |x|``."""
    x, y = _nc(x), _nc(y)
    if not x or not y:
        return NcPoly()
    return bracket(x, y) * Fraction(1, _deg(x))


def black_rhd(x, y) -> NcPoly:
    """``x * y = |y| / (|x| + |y|) [x, y]``."""
    x, y = _nc(x), _nc(y)
    if not x or not y:
        return NcPoly()
    dx, dy = _deg(x), _deg(y)
    return bracket(x, y) * Fraction(dy, dx + dy)


def alpha(x) -> NcPoly:
    x = _nc(x)
    return NcPoly._raw({w: c * w.degree for w, c in x.terms.items()})


def bracket_rhd(x, y) -> NcPoly:
    return rhd(x, y) - rhd(y, x)


@lru_cache(maxsize=None)
def phi(t: Tree) -> NcPoly:
    """Image of a tree under the pre-Lie morphism with ``phi(a) = a``.

    With ``t = t1 |> t'`` for the smallest root branch ``t1``,
    ``t1 -> t' = t + (grafts of t1 above the root of t')``, and the
    correction grafts have fewer root branches than ``t``.
    """
    if not t.branches:
        return gen(t.root)
    t1 = t.branches[0]
    rest = Tree(t.root, t.branches[1:])
    out = rhd(phi(t1), phi(rest))
    for s, c in graft(t1, rest).terms.items():
        if s != t:
            out = out.add_scaled(phi(s), -c)
    return out


def rank(polys) -> int:
    basis = EchelonBasis()
    for p in polys:
        basis.insert(p)
    return basis.rank


def lie_dimension_phi(alphabet: Alphabet, n: int) -> int:
    return rank(phi(t) for t in enumerate_nonplanar(alphabet, n))


def _letter_sequences(alphabet, n):
    if n == 0:
        yield ()
        return
    for g in alphabet:
        if g.degree <= n:
            for rest in _letter_sequences(alphabet, n - g.degree):
                yield (g,) + rest


def lie_dimension_commutators(alphabet: Alphabet, n: int) -> int:
    return rank(left_normed(*seq) for seq in _letter_sequences(alphabet, n))


def witt_dimension(k: int, n: int) -> int:
    """Necklace count for ``k`` generators of degree 1."""
    return sum(mobius(d) * k ** (n // d) for d in divisors(n)) // n


def lie_dimension(alphabet: Alphabet, n: int) -> int:
    """Dimension of the degree-``n`` component, by two independent ranks."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    a = lie_dimension_phi(alphabet, n)
    b = lie_dimension_commutators(alphabet, n)
    if a != b:
        raise RankDefectError(f"degree {n}: phi rank {a} != commutator rank {b}")
    return a


def lie_monomial_basis(alphabet: Alphabet, n: int, bases_I: IdealBases) -> list:
    """``[phi(t) for t in O(I)_n]``, checked to be a basis of the component."""
    elems = [phi(t) for t in bases_I.complement(n)]
    r, dim = rank(elems), lie_dimension(alphabet, n)
    if r != len(elems) or r != dim:
        raise RankDefectError(
            f"degree {n}: {len(elems)} elements of rank {r}, expected dimension {dim}")
    return elems


def kernel_check(bases_I: IdealBases, n: int) -> bool:
    comp = bases_I.component(n)
    if any(phi_poly(row) for row in comp.rows):
        return False
    n_trees = len(enumerate_nonplanar(bases_I.alphabet, n))
    return n_trees - comp.rank == lie_dimension(bases_I.alphabet, n)


def phi_poly(f) -> NcPoly:
    out = NcPoly()
    for t, c in as_poly(f).terms.items():
        out = out.add_scaled(phi(t), c)
    return out


def ladder_bracket(t: Tree):
    """``(c, gens)`` with ``phi(t) = c [[..[g1, g2], ..], gm]`` for a ladder ``t``.

    ``gens`` runs from the top vertex down to the root.
    """
    if not is_ladder(t):
        raise ValueError("bracket rendering needs a ladder")
    gens = []
    node = t
    while True:
        gens.append(node.root)
        if not node.branches:
            break
        node = node.branches[0]
    gens.reverse()
    c = Fraction(1)
    partial = 0
    for g in gens[:-1]:
        partial += g.degree
        c /= partial
    return c, gens


def format_bracket(gens) -> str:
    out = gens[0].name
    for g in gens[1:]:
        out = f"[{out},{g.name}]"
    return out


def monic(p: NcPoly) -> NcPoly:
    """Scale so that the largest word has coefficient 1."""
    _, c = p.leading_term()
    return p * (1 / c)

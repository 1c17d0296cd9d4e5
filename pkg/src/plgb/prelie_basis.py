"""Triangular monomial basis of the free pre-Lie algebra on rooted trees.

``psi`` peels off the smallest root branch ``t1`` of ``t`` and grafts
recursively: ``psi(t1 |> t2) = psi(t1) -> psi(t2)``.  The leading term of
``psi(t)`` is ``t`` itself and its support stays inside the class of
trees reachable from ``t`` by moving a grafted subtree one edge up.
"""

from __future__ import annotations

from collections import Counter, deque
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .poly import LinComb, graft_at, graft_poly
from .trees import Tree, enumerate_nonplanar

__all__ = ["HashClass", "remove_branch", "split_min_branch", "r_pairs", "relate_R",
           "hash_class", "psi", "beta", "symmetry_factor", "prelie_monomial_basis"]


def _subtree(t, path):
    for i in path:
        t = t.branches[i]
    return t


def remove_branch(t: Tree, path, i) -> Tree:
    """Remove branch ``i`` of the vertex of ``t`` at ``path``."""
    if not path:
        return Tree(t.root, t.branches[:i] + t.branches[i + 1:])
    j = path[0]
    bs = t.branches
    return Tree(t.root, bs[:j] + (remove_branch(bs[j], path[1:], i),) + bs[j + 1:])


def split_min_branch(t: Tree):
    """``(t1, t2)`` with ``t = t1 |> t2`` and ``t1`` the smallest root branch."""
    if not t.branches:
        raise ValueError("a single vertex has no branch to split off")
    return t.branches[0], Tree(t.root, t.branches[1:])


def r_pairs(u: Tree, base: Tree):
    """Pairs ``(u ->_v base, u ->_w base)`` for every edge with ``w`` directly above ``v``."""
    out = set()
    for path, node in base.vertices():
        for j in range(len(node.branches)):
            out.add((graft_at(u, base, path), graft_at(u, base, path + (j,))))
    return out


def relate_R(t: Tree):
    """All pairs ``(t, s)`` with ``t R s``.

    Every way of writing ``t`` as some subtree ``u`` grafted at a vertex
    ``v`` of the remaining tree is considered, and ``u`` is moved to each
    vertex directly above ``v``.
    """
    out = set()
    for path, node in t.vertices():
        for i, u in enumerate(node.branches):
            rest = remove_branch(t, path, i)
            host = _subtree(rest, path)
            for j in range(len(host.branches)):
                out.add((t, graft_at(u, rest, path + (j,))))
    return out


class HashClass:
    """Reflexive-transitive closure of ``R`` starting at ``representative``."""

    def __init__(self, representative: Tree, members: frozenset):
        self.representative = representative
        self.members = members

    def __contains__(self, s):
        return s in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members, key=lambda s: s.key, reverse=True))


@lru_cache(maxsize=None)
def _closure(t: Tree) -> frozenset:
    seen = {t}
    todo = deque([t])
    while todo:
        s = todo.popleft()
        for _, s2 in relate_R(s):
            if s2 not in seen:
                seen.add(s2)
                todo.append(s2)
    return frozenset(seen)


def hash_class(t: Tree, degree_bound=None) -> HashClass:
    if degree_bound is not None and t.degree > degree_bound:
        raise ValueError(f"tree degree {t.degree} exceeds bound {degree_bound}")
    return HashClass(t, _closure(t))


@lru_cache(maxsize=None)
def psi(t: Tree) -> LinComb:
    if not t.branches:
        return LinComb({t: 1})
    t1, t2 = split_min_branch(t)
    return graft_poly(psi(t1), psi(t2))


@lru_cache(maxsize=None)
def symmetry_factor(t: Tree) -> int:
    """Order of the automorphism group of ``t``."""
    out = 1
    for b, m in Counter(t.branches).items():
        out *= factorial(m) * symmetry_factor(b) ** m
    return out


@lru_cache(maxsize=None)
def _beta(s: Tree, t: Tree) -> Fraction:
    if s.degree != t.degree:
        return Fraction(0)
    if not t.branches:
        return Fraction(1 if s == t else 0)
    t1, t2 = split_min_branch(t)
    total = Fraction(0)
    for path, node in s.vertices():
        for i, top in enumerate(node.branches):
            if top.degree != t1.degree:
                continue
            a = _beta(top, t1)
            if not a:
                continue
            trunk = remove_branch(s, path, i)
            b = _beta(trunk, t2)
            if b:
                # cutting edges overcounts grafts by the symmetry ratio
                total += a * b * Fraction(symmetry_factor(top) * symmetry_factor(trunk),
                                          symmetry_factor(s))
    return total


def beta(s: Tree, t: Tree) -> Fraction:
    """Coefficient of ``s`` in ``psi(t)``, computed without expanding ``psi``.

    Recurses on the split ``t = t1 |> t2`` at the smallest root branch and
    sums over every edge of ``s`` cut into a top part (weighed against
    ``t1``) and a trunk (weighed against ``t2``).
    """
    if s.degree != t.degree:
        raise ValueError("beta needs trees of equal degree")
    return _beta(s, t)


def prelie_monomial_basis(alphabet, n) -> list:
    return [psi(t) for t in enumerate_nonplanar(alphabet, n)]

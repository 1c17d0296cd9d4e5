"""The free magma on a graded alphabet as decorated planar binary trees."""

from __future__ import annotations

from functools import lru_cache

from .poly import LinComb, as_poly, bilinear
from .trees import BinaryTree

__all__ = ["BinaryPoly", "vee", "vee_poly", "star", "weight_f",
           "weight_f_by_left_vertices", "gamma"]

BinaryPoly = LinComb


def vee(t1: BinaryTree, t2: BinaryTree) -> BinaryTree:
    return BinaryTree(left=t1, right=t2)


vee_poly = bilinear(vee)


def _star_monomial(x: BinaryTree, y: BinaryTree) -> LinComb:
    return LinComb({vee(x, y): x.degree})


_star = bilinear(_star_monomial)


def star(x, y) -> LinComb:
    """``x * y = |x| x.y``, for ``x`` homogeneous."""
    x = as_poly(x)
    if not x.is_homogeneous():
        raise ValueError("left factor of the star product must be homogeneous")
    return _star(x, y)


@lru_cache(maxsize=None)
def weight_f(z: BinaryTree) -> int:
    if z.is_leaf:
        return 1
    return z.left.degree * weight_f(z.left) * weight_f(z.right)


def weight_f_by_left_vertices(z: BinaryTree) -> int:
    """Product over left children ``v`` of the degree of the subtree above ``v``."""
    out = 1
    stack = [z]
    while stack:
        node = stack.pop()
        if not node.is_leaf:
            out *= node.left.degree
            stack.append(node.left)
            stack.append(node.right)
    return out


def gamma(x) -> LinComb:
    x = as_poly(x)
    return LinComb({z: weight_f(z) * c for z, c in x.terms.items()})

"""Monomial well-orders on generators and on planar / non-planar trees.

The cascade is: degree, then number of root branches, then the branch
tuple lexicographically (recursively), then the root decoration.  For
non-planar trees the branch tuples are the canonical sorted ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key

from .trees import Generator, PlanarTree, Tree

__all__ = ["Outcome", "Rule", "OrderDecision", "cmp_generators", "cmp_planar",
           "cmp_nonplanar", "sort_trees", "order_key"]


class Outcome(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Rule(enum.Enum):
    DEGREE = "degree"
    BRANCH_COUNT = "branch-count"
    BRANCHES = "branches"
    ROOT = "root"
    IDENTICAL = "identical"


@dataclass(frozen=True)
class OrderDecision:
    outcome: Outcome
    rule_fired: Rule

    @property
    def less(self):
        return self.outcome is Outcome.LESS

    def __int__(self):
        return int(self.outcome)


def _sign(a, b) -> Outcome:
    return Outcome.LESS if a < b else Outcome.GREATER


def cmp_generators(a: Generator, b: Generator) -> OrderDecision:
    if a.tag != b.tag:
        raise ValueError("generators come from different alphabets")
    if a.rank == b.rank:
        return OrderDecision(Outcome.EQUAL, Rule.IDENTICAL)
    rule = Rule.DEGREE if a.degree != b.degree else Rule.ROOT
    return OrderDecision(_sign(a.rank, b.rank), rule)


def cmp_planar(s: PlanarTree, t: PlanarTree) -> OrderDecision:
    if s.degree != t.degree:
        return OrderDecision(_sign(s.degree, t.degree), Rule.DEGREE)
    ks, kt = len(s.branches), len(t.branches)
    if ks != kt:
        return OrderDecision(_sign(ks, kt), Rule.BRANCH_COUNT)
    for a, b in zip(s.branches, t.branches):
        d = cmp_planar(a, b)
        if d.outcome is not Outcome.EQUAL:
            return OrderDecision(d.outcome, Rule.BRANCHES)
    if s.root.rank != t.root.rank:
        return OrderDecision(_sign(s.root.rank, t.root.rank), Rule.ROOT)
    return OrderDecision(Outcome.EQUAL, Rule.IDENTICAL)


def _is_canonical(t):
    bs = t.branches
    return all(bs[i].key <= bs[i + 1].key for i in range(len(bs) - 1)) and all(
        _is_canonical(b) for b in bs)


def cmp_nonplanar(s: Tree, t: Tree) -> OrderDecision:
    if not (_is_canonical(s) and _is_canonical(t)):
        raise ValueError("cmp_nonplanar needs canonical (branch-sorted) trees")
    return cmp_planar(s, t)


def order_key(t):
    """Sort key realising the order; equals ``t.key``."""
    return t.key


def sort_trees(trees, reverse=False):
    return sorted(trees, key=cmp_to_key(lambda a, b: int(cmp_planar(a, b))), reverse=reverse)

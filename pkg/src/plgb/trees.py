"""Generators, decorated rooted trees and planar binary trees.

Trees are immutable.  Every tree carries a precomputed ``key``: a nested
tuple whose natural tuple ordering is the monomial well-order used
throughout the package (degree, then number of root branches, then the
branch tuple compared lexicographically, then the root generator).
A non-planar :class:`Tree` is stored as its canonical representative, i.e.
with branches sorted nondecreasingly for that order at every vertex.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Generator", "Alphabet", "PlanarTree", "Tree", "BinaryTree", "ParseError",
    "degree", "b_plus", "branch_count", "is_ladder", "has_nondecreasing_branches",
    "forget_planarity", "s_min", "planar_preimages", "ladder",
    "enumerate_planar", "enumerate_nonplanar", "enumerate_binary",
    "enumerate_binary_by_degree", "parse_tree", "parse_nonplanar", "format_tree",
    "parse_binary", "format_binary",
]


class ParseError(ValueError):
    """Malformed tree or expression text."""

    def __init__(self, message, text="", pos=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


_ALPHABET_TAGS = itertools.count()


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    rank: int
    tag: int = 0

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"generator {self.name!r} must have degree >= 1")

    def __repr__(self):
        return self.name


class Alphabet:
    """A finite graded, totally ordered set of generators.

    Generators are ranked by degree first and by declaration order within
    a degree.
    """

    def __init__(self, entries: Iterable):
        items = []
        for entry in entries:
            if isinstance(entry, Generator):
                name, deg = entry.name, entry.degree
            elif isinstance(entry, dict):
                name, deg = entry["name"], entry["degree"]
            else:
                name, deg = entry
            if not isinstance(deg, int) or deg < 1:
                raise ValueError(f"generator {name!r}: degree must be a positive integer")
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"invalid generator name {name!r}")
            items.append((name, deg))
        if not items:
            raise ValueError("alphabet must be non-empty")
        names = [n for n, _ in items]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        tag = next(_ALPHABET_TAGS)
        order = sorted(range(len(items)), key=lambda i: (items[i][1], i))
        self.generators = tuple(
            Generator(items[i][0], items[i][1], r, tag) for r, i in enumerate(order))
        self._by_name = {g.name: g for g in self.generators}
        self.tag = tag

    @classmethod
    def from_json(cls, text: str) -> "Alphabet":
        return cls(json.loads(text)["generators"])

    @classmethod
    def load(cls, path) -> "Alphabet":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())

    @classmethod
    def parse_inline(cls, text: str) -> "Alphabet":
        """Parse ``"x:1,y:1"``; a missing degree defaults to 1."""
        entries = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            name, _, deg = part.partition(":")
            entries.append((name.strip(), int(deg) if deg else 1))
        return cls(entries)

    def to_json(self) -> str:
        return json.dumps({"generators": [{"name": g.name, "degree": g.degree}
                                          for g in self.generators]})

    def __getitem__(self, name) -> Generator:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def __contains__(self, name):
        return name in self._by_name

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        inner = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"Alphabet({inner})"

    def of_degree(self, n):
        return [g for g in self.generators if g.degree == n]

    @property
    def max_generator_degree(self):
        return self.generators[-1].degree


class PlanarTree:
    """Decorated planar rooted tree ``B+_root(branches)``."""

    __slots__ = ("root", "branches", "degree", "size", "key", "_hash")

    def __init__(self, root: Generator, branches: Sequence["PlanarTree"] = ()):
        branches = tuple(branches)
        self.root = root
        self.branches = branches
        self.degree = root.degree + sum(b.degree for b in branches)
        self.size = 1 + sum(b.size for b in branches)
        self.key = (self.degree, len(branches), tuple(b.key for b in branches), root.rank)
        # trees over different alphabets may share a key but must stay distinct
        self._hash = hash((self.key, root.tag))

    def __eq__(self, other):
        return (type(self) is type(other) and self.key == other.key
                and self.root.tag == other.root.tag)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __repr__(self):
        return format_tree(self)

    def vertices(self):
        """Yield ``(path, subtree)`` for every vertex in preorder."""
        stack = [((), self)]
        while stack:
            path, t = stack.pop()
            yield path, t
            for i in range(len(t.branches) - 1, -1, -1):
                stack.append((path + (i,), t.branches[i]))


class Tree(PlanarTree):
    """Non-planar decorated rooted tree, stored canonically."""

    __slots__ = ()

    def __init__(self, root: Generator, branches: Iterable["Tree"] = ()):
        branches = sorted(branches, key=_key_of)
        for b in branches:
            if type(b) is not Tree:
                raise TypeError("branches of a Tree must be Trees")
        super().__init__(root, branches)


def _key_of(t):
    return t.key


class BinaryTree:
    """Planar binary tree with decorated leaves (an element of the free magma)."""

    __slots__ = ("leaf", "left", "right", "degree", "n_leaves", "key", "tag", "_hash")

    def __init__(self, leaf: Generator | None = None, left: "BinaryTree | None" = None,
                 right: "BinaryTree | None" = None):
        is_leaf = leaf is not None and left is None and right is None
        is_node = leaf is None and left is not None and right is not None
        if not (is_leaf or is_node):
            raise ValueError("a binary tree is either a leaf or a node with two children")
        self.leaf, self.left, self.right = leaf, left, right
        if leaf is not None:
            self.degree = leaf.degree
            self.n_leaves = 1
            self.key = (self.degree, 0, leaf.rank)
            self.tag = leaf.tag
        else:
            self.degree = left.degree + right.degree
            self.n_leaves = left.n_leaves + right.n_leaves
            self.key = (self.degree, 1, left.key, right.key)
            self.tag = left.tag
        self._hash = hash((self.key, self.tag))

    @property
    def is_leaf(self):
        return self.leaf is not None

    def leaves(self):
        if self.is_leaf:
            return [self.leaf]
        return self.left.leaves() + self.right.leaves()

    def __eq__(self, other):
        return type(other) is BinaryTree and self.key == other.key and self.tag == other.tag

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return format_binary(self)


# ---------------------------------------------------------------- structure

def degree(t) -> int:
    return t.degree


def b_plus(a: Generator, branches: Sequence[PlanarTree] = ()) -> PlanarTree:
    return PlanarTree(a, branches)


def branch_count(t) -> int:
    return len(t.branches)


def is_ladder(t) -> bool:
    while t.branches:
        if len(t.branches) > 1:
            return False
        t = t.branches[0]
    return True


def ladder(gens: Sequence[Generator], cls=PlanarTree):
    """Ladder with ``gens[0]`` at the root and ``gens[-1]`` on top."""
    t = cls(gens[-1])
    for g in reversed(gens[:-1]):
        t = cls(g, (t,))
    return t


def has_nondecreasing_branches(t: PlanarTree) -> bool:
    bs = t.branches
    if any(bs[i].key > bs[i + 1].key for i in range(len(bs) - 1)):
        return False
    return all(has_nondecreasing_branches(b) for b in bs)


@lru_cache(maxsize=None)
def forget_planarity(t: PlanarTree) -> Tree:
    if type(t) is Tree:
        return t
    return Tree(t.root, [forget_planarity(b) for b in t.branches])


@lru_cache(maxsize=None)
def s_min(t: Tree) -> PlanarTree:
    """Order-minimal planar representative of ``t``.

    The canonical representative already has its branches sorted
    nondecreasingly, so this is the identity embedding into planar trees.
    """
    return PlanarTree(t.root, [s_min(b) for b in t.branches])


def planar_preimages(t: Tree) -> list:
    """All planar trees whose underlying non-planar tree is ``t``."""
    child_options = [planar_preimages(b) for b in t.branches]
    out = set()
    for perm in set(itertools.permutations(range(len(t.branches)))):
        for choice in itertools.product(*(child_options[i] for i in perm)):
            out.add(PlanarTree(t.root, choice))
    return sorted(out, key=_key_of)


# -------------------------------------------------------------- enumeration

def _check_degree(n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"degree must be a positive integer, got {n!r}")


@lru_cache(maxsize=None)
def _planar(alphabet: Alphabet, n: int) -> tuple:
    out = []
    for a in alphabet:
        if a.degree <= n:
            for seq in _planar_forests(alphabet, n - a.degree):
                out.append(PlanarTree(a, seq))
    out.sort(key=_key_of)
    return tuple(out)


@lru_cache(maxsize=None)
def _planar_forests(alphabet, r) -> tuple:
    if r == 0:
        return ((),)
    out = []
    for d in range(1, r + 1):
        for t in _planar(alphabet, d):
            for rest in _planar_forests(alphabet, r - d):
                out.append((t,) + rest)
    return tuple(out)


def enumerate_planar(alphabet: Alphabet, n: int) -> list:
    """All planar trees of degree ``n``, in increasing order."""
    _check_degree(n)
    return list(_planar(alphabet, n))


@lru_cache(maxsize=None)
def _nonplanar(alphabet: Alphabet, n: int) -> tuple:
    smaller = [t for d in range(1, n) for t in _nonplanar(alphabet, d)]
    smaller.sort(key=_key_of)
    out = []
    for a in alphabet:
        if a.degree <= n:
            for ms in _multisets(smaller, 0, n - a.degree):
                out.append(Tree(a, ms))
    out.sort(key=_key_of)
    return tuple(out)


def _multisets(pool, start, r):
    # nondecreasing sequences from pool[start:] with total degree r
    if r == 0:
        yield ()
        return
    for i in range(start, len(pool)):
        t = pool[i]
        if t.degree > r:
            break
        for rest in _multisets(pool, i, r - t.degree):
            yield (t,) + rest


def enumerate_nonplanar(alphabet: Alphabet, n: int) -> list:
    """All non-planar trees of degree ``n``, in increasing order."""
    _check_degree(n)
    return list(_nonplanar(alphabet, n))


@lru_cache(maxsize=None)
def _binary_leaves(alphabet, n) -> tuple:
    if n == 1:
        return tuple(BinaryTree(a) for a in alphabet)
    out = []
    for i in range(1, n):
        for left in _binary_leaves(alphabet, i):
            for right in _binary_leaves(alphabet, n - i):
                out.append(BinaryTree(left=left, right=right))
    return tuple(out)


def enumerate_binary(alphabet: Alphabet, n_leaves: int) -> list:
    """All decorated planar binary trees with ``n_leaves`` leaves."""
    _check_degree(n_leaves)
    return list(_binary_leaves(alphabet, n_leaves))


@lru_cache(maxsize=None)
def _binary_degree(alphabet, n) -> tuple:
    out = [BinaryTree(a) for a in alphabet if a.degree == n]
    for d in range(1, n):
        for left in _binary_degree(alphabet, d):
            for right in _binary_degree(alphabet, n - d):
                out.append(BinaryTree(left=left, right=right))
    out.sort(key=_key_of)
    return tuple(out)


def enumerate_binary_by_degree(alphabet: Alphabet, n: int) -> list:
    """All decorated planar binary trees whose leaf degrees sum to ``n``."""
    _check_degree(n)
    return list(_binary_degree(alphabet, n))


# ------------------------------------------------------------ serialization

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Reader:
    def __init__(self, text, alphabet):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.text, self.pos)
        self.pos += 1

    def name(self) -> Generator:
        self.skip()
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise ParseError("expected generator name", self.text, self.pos)
        if m.group() not in self.alphabet:
            raise ParseError(f"unknown generator {m.group()!r}", self.text, self.pos)
        self.pos = m.end()
        return self.alphabet[m.group()]

    def tree(self) -> PlanarTree:
        root = self.name()
        branches = []
        if self.peek() == "(":
            self.pos += 1
            branches.append(self.tree())
            while self.peek() == ",":
                self.pos += 1
                branches.append(self.tree())
            self.expect(")")
        return PlanarTree(root, branches)

    def binary(self) -> BinaryTree:
        if self.peek() == "(":
            self.pos += 1
            left = self.binary()
            self.expect("^")
            right = self.binary()
            self.expect(")")
            return BinaryTree(left=left, right=right)
        return BinaryTree(self.name())

    def done(self):
        if self.peek():
            raise ParseError(f"unexpected {self.peek()!r}", self.text, self.pos)


def parse_tree(text: str, alphabet: Alphabet) -> PlanarTree:
    """Parse ``NAME`` or ``NAME(TREE, ...)`` into a planar tree."""
    r = _Reader(text, alphabet)
    t = r.tree()
    r.done()
    return t


def parse_nonplanar(text: str, alphabet: Alphabet) -> Tree:
    return forget_planarity(parse_tree(text, alphabet))


def format_tree(t: PlanarTree) -> str:
    if not t.branches:
        return t.root.name
    return t.root.name + "(" + ",".join(format_tree(b) for b in t.branches) + ")"


def parse_binary(text: str, alphabet: Alphabet) -> BinaryTree:
    r = _Reader(text, alphabet)
    t = r.binary()
    r.done()
    return t


def format_binary(t: BinaryTree) -> str:
    if t.is_leaf:
        return t.leaf.name
    return "(" + format_binary(t.left) + "^" + format_binary(t.right) + ")"

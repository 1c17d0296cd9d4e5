"""Free pre-Lie and free Lie algebras over graded decorated rooted trees."""

from .trees import (Alphabet, BinaryTree, Generator, ParseError, PlanarTree, Tree,
                    enumerate_binary, enumerate_nonplanar, enumerate_planar, format_tree,
                    forget_planarity, parse_nonplanar, parse_tree, s_min)
from .order import cmp_nonplanar, cmp_planar, sort_trees
from .poly import LinComb, TreePoly, format_poly, graft, graft_poly, left_butcher, parse_poly
from .ideals import Caps, IdealBases, ResourceCapExceeded, span_ideal
from .prelie_basis import beta, hash_class, psi, prelie_monomial_basis
from .lie import RankDefectError, bracket, lie_dimension, lie_monomial_basis, phi, rhd

__version__ = "0.1.0"

from fractions import Fraction

import pytest

from plgb.poly import (LinComb, as_poly, butcher, butcher_poly, format_poly, graft, graft_at,
                       graft_poly, left_butcher, left_butcher_poly, left_graft, left_graft_poly,
                       parse_poly)
from plgb.trees import (ParseError, Tree, b_plus, enumerate_nonplanar, enumerate_planar,
                        forget_planarity, parse_nonplanar, parse_tree)


def P(text, A, kind="planar"):
    return parse_poly(text, A, kind)


def test_lincomb_drops_zeros(xy):
    t = parse_tree("x(y)", xy)
    f = LinComb({t: 2}) - LinComb({t: 2})
    assert not f and f == 0 and len(f) == 0
    assert LinComb({t: 0}).terms == {}


def test_lincomb_rejects_floats(xy):
    with pytest.raises(TypeError):
        LinComb({parse_tree("x", xy): 0.5})


def test_leading_term(xy):
    f = P("2*x + 3*y(x) - x(y)", xy)
    # branches are compared before roots, so x(y) is above y(x)
    assert f.leading_term() == (parse_tree("x(y)", xy), -1)
    with pytest.raises(ValueError):
        LinComb().leading_term()


def test_homogeneity(xy):
    f = P("x(y) + y(y)", xy)
    assert f.is_homogeneous() and f.homogeneous_degree() == 2
    g = f + P("x", xy)
    assert not g.is_homogeneous()
    assert g.component(1) == P("x", xy)


def test_parse_and_format(xy):
    f = P("3/2*y(x) + x(y) - 1/2 * x", xy)
    assert f.coeff(parse_tree("y(x)", xy)) == Fraction(3, 2)
    assert format_poly(f) == "x(y) + 3/2*y(x) - 1/2*x"
    assert P(format_poly(f), xy) == f
    assert P("-x - -y", xy) == P("y - x", xy)
    assert P("0", xy) == LinComb()
    with pytest.raises(ParseError):
        P("2 x", xy)
    with pytest.raises(ParseError):
        P("x +", xy)


def test_left_butcher_is_leftmost(xy):
    s, t = parse_tree("y", xy), parse_tree("x(x)", xy)
    assert left_butcher(s, t) == parse_tree("x(y,x)", xy)


def test_left_graft_example(one):
    a = one["a"]
    s = parse_tree("a", one)
    t = parse_tree("a(a)", one)
    # grafting a single vertex leftmost at each of the two vertices
    assert left_graft(s, t) == P("a(a,a) + a(a(a))", one)


def test_left_graft_sizes(xy):
    for n in range(1, 4):
        for t in enumerate_planar(xy, n):
            for s in enumerate_planar(xy, 1):
                assert len(left_graft(s, t)) == t.size


def test_butcher_nap(one):
    trees = [t for n in range(1, 4) for t in enumerate_nonplanar(one, n)]
    for s in trees:
        for s2 in trees:
            for t in trees:
                assert butcher(s, butcher(s2, t)) == butcher(s2, butcher(s, t))


def test_graft_multiplicities(one):
    s = parse_nonplanar("a", one)
    cherry = parse_nonplanar("a(a,a)", one)
    # grafting onto either leaf gives the same tree
    g = graft(s, cherry)
    assert g == P("a(a,a,a) + 2*a(a,a(a))", one, "nonplanar")
    assert sum(g.terms.values()) == cherry.size


def test_graft_at(one):
    s = parse_nonplanar("a", one)
    t = parse_nonplanar("a(a(a))", one)
    assert graft_at(s, t, ()) == parse_nonplanar("a(a,a(a))", one)
    assert graft_at(s, t, (0, 0)) == parse_nonplanar("a(a(a(a)))", one)


def test_graft_prelie_small(xy):
    trees = [t for n in range(1, 3) for t in enumerate_nonplanar(xy, n)]
    g = graft_poly
    for x in trees:
        for y in trees:
            for z in trees:
                assert g(g(x, y), z) - g(x, g(y, z)) == g(g(y, x), z) - g(y, g(x, z))


def test_bilinearity(xy):
    f = P("2*x + y", xy, "nonplanar")
    g = P("x(y) - 3*y", xy, "nonplanar")
    h = P("1/2*y", xy, "nonplanar")
    assert graft_poly(f + h, g) == graft_poly(f, g) + graft_poly(h, g)
    assert graft_poly(f, g * 3) == graft_poly(f, g) * 3
    assert butcher_poly(f, g) == sum((butcher_poly(as_poly(s), g) * c for s, c in f.items()),
                                     LinComb())
    pf, pg = P("x + y", xy), P("x(y)", xy)
    assert left_butcher_poly(pf, pg) == P("x(x,y) + x(y,y)", xy)
    assert left_graft_poly(pf, P("x", xy)) == P("x(x) + x(y)", xy)


def test_planar_and_nonplanar_graft_agree(xy):
    for s in enumerate_planar(xy, 2):
        for t in enumerate_planar(xy, 2):
            lhs = LinComb()
            for r, c in left_graft(s, t).items():
                lhs = lhs + LinComb({forget_planarity(r): c})
            assert lhs == graft(forget_planarity(s), forget_planarity(t))

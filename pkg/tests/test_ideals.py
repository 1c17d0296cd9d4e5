import pytest

from plgb.ideals import (Caps, DegreeError, EchelonBasis, IDEAL_I, ResourceCapExceeded,
                         complement, contains, leading_terms, quotient_bracket,
                         quotient_prelie_product, random_reducer, span_ideal)
from plgb.poly import LinComb, left_butcher_poly, parse_poly
from plgb.trees import (enumerate_nonplanar, enumerate_planar, has_nondecreasing_branches,
                        is_ladder, parse_nonplanar, parse_tree)

A000081 = [1, 1, 2, 4, 9, 20]
LIE_DIMS_XY = [2, 1, 2, 3, 6]


def P(text, A, kind="planar"):
    return parse_poly(text, A, kind)


def test_echelon_basis_fully_reduced(xy):
    E = EchelonBasis()
    assert E.insert(P("x(y) + y(x)", xy))
    assert E.insert(P("y(x) + x(x)", xy))
    assert not E.insert(P("x(y) - x(x)", xy))
    for row in E.rows:
        lt, lc = row.leading_term()
        assert lc == 1
        others = E.leading_terms - {lt}
        assert not (row.support() & others)
    assert E.rank == 2
    assert P("x(y) - x(x)", xy) in E


def test_I_degree_two_one_generator(one):
    I = span_ideal("I", one, 2)
    l2 = parse_nonplanar("a(a)", one)
    assert I.component(2).rows == [LinComb({l2: 1})]
    assert leading_terms(I.component(2)) == {l2}
    assert I.can(LinComb({l2: 1})) == 0


def test_O_I_two_generators(xy):
    I = span_ideal("I", xy, 5)
    assert [len(I.complement(n)) for n in range(1, 6)] == LIE_DIMS_XY
    assert I.complement(2) == [parse_nonplanar("y(x)", xy)]


@pytest.mark.parametrize("n", range(1, 7))
def test_O_J_counts_one_generator(one, n):
    J = span_ideal("J", one, n)
    assert len(J.complement(n)) == A000081[n - 1]


def test_O_J_nondecreasing(xy):
    J = span_ideal("J", xy, 4)
    for n in range(1, 5):
        want = [t for t in enumerate_planar(xy, n) if has_nondecreasing_branches(t)]
        assert J.complement(n) == want


def test_O_J_prime_ladders_and_dimension(xy):
    Jp = span_ideal("J'", xy, 5)
    I = span_ideal("I", xy, 5)
    for n in range(1, 6):
        assert all(is_ladder(t) for t in Jp.complement(n))
        assert len(Jp.complement(n)) == len(I.complement(n))


def test_dimension_split(xy):
    for name in ("J", "J'", "I"):
        bases = span_ideal(name, xy, 4)
        for n in range(1, 5):
            rank, n_o, n_trees = bases.dimension_split(n)
            assert rank + n_o == n_trees


def test_membership_examples(xy):
    J = span_ideal("J", xy, 4)
    x, y = parse_tree("x", xy), parse_tree("y", xy)
    lb = left_butcher_poly
    pl = lb(lb(x, y), x) - lb(x, lb(y, x)) - lb(lb(y, x), x) + lb(y, lb(x, x))
    assert contains(pl, J)
    assert not contains(LinComb({J.complement(3)[0]: 1}), J)
    assert contains(lb(x, pl) + lb(pl, y), J)


def test_can_fixes_O(xy):
    I = span_ideal("I", xy, 5)
    for n in range(1, 6):
        for t in I.complement(n):
            assert I.can(LinComb({t: 1})) == LinComb({t: 1})


def test_worked_example():
    from plgb.trees import Alphabet
    from fractions import Fraction
    A = Alphabet.parse_inline("a1:1,a2:2,a3:3")
    Jp = span_ideal("J'", A, 4)
    g = Jp.can(P("a3(a1) + a1(a3) + a1(a2) + a1(a1,a2)", A))
    assert g == P("3/2*a1(a2(a1)) + 2/3*a3(a1) - 1/2*a2(a1)", A)
    assert sorted(g.terms.values()) == [Fraction(-1, 2), Fraction(2, 3), Fraction(3, 2)]


def test_reducer_choice(xy, rng):
    Jp = span_ideal("J'", xy, 4)
    f = P("x(y,x(y)) + 2*y(x,x,x) - x(x(x(y)))", xy)
    want = Jp.can(f)
    for _ in range(20):
        assert Jp.can(f, random_reducer(rng)) == want


def test_bad_reducer_rejected(xy):
    I = span_ideal("I", xy, 3)
    f = LinComb({parse_nonplanar("x(x)", xy): 1})
    with pytest.raises(ValueError):
        I.can(f, lambda t, row, comp: row * 2)


def test_quotient_bracket_antisymmetric(xy):
    I = span_ideal("I", xy, 4)
    trees = [t for n in (1, 2) for t in enumerate_nonplanar(xy, n)]
    for s in trees:
        assert quotient_bracket(s, s, I) == 0
        for t in trees:
            assert quotient_bracket(s, t, I) == -quotient_bracket(t, s, I)


def test_quotient_jacobi(xy):
    I = span_ideal("I", xy, 4)
    br = lambda f, g: quotient_bracket(f, g, I)
    gens = [LinComb({t: 1}) for t in enumerate_nonplanar(xy, 1)] + \
        [LinComb({t: 1}) for t in I.complement(2)]
    for a in gens:
        for b in gens:
            for c in gens:
                if a.homogeneous_degree() + b.homogeneous_degree() + c.homogeneous_degree() > 4:
                    continue
                assert br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b)) == 0


def test_quotient_product_is_canonical(xy):
    I = span_ideal("I", xy, 3)
    s, t = parse_nonplanar("x", xy), parse_nonplanar("y(x)", xy)
    out = quotient_prelie_product(s, t, I)
    assert all(u in I.complement(3) for u in out.terms)


def test_degree_errors_and_caps(xy):
    I = span_ideal("I", xy, 2)
    with pytest.raises(DegreeError):
        I.can(LinComb({parse_nonplanar("x(x(x))", xy): 1}))
    with pytest.raises(ResourceCapExceeded):
        span_ideal(IDEAL_I, xy, 6, Caps(max_degree=5))
    with pytest.raises(ResourceCapExceeded):
        span_ideal("J", xy, 4, Caps(max_seeds=10))
    with pytest.raises(ValueError):
        span_ideal("I", xy, 0)


def test_module_complement_helper(xy):
    J = span_ideal("J", xy, 3)
    assert complement(J.component(3), xy, 3) == J.complement(3)

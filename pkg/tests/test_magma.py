import itertools
import random

import pytest

from plgb.magma import gamma, star, vee, vee_poly, weight_f, weight_f_by_left_vertices
from plgb.poly import LinComb, parse_poly
from plgb.trees import Alphabet, BinaryTree, enumerate_binary, parse_binary


def B(text, A):
    return parse_binary(text, A)


@pytest.fixture
def ab():
    return Alphabet.parse_inline("a:1,b:2,c:3")


def test_vee(ab):
    y = vee(B("a", ab), B("b", ab))
    assert y == B("(a^b)", ab)
    assert [g.name for g in y.leaves()] == ["a", "b"]
    assert y.n_leaves == 2 and y.degree == 3


def test_star_definition(ab):
    a, b, c = (B(n, ab) for n in "abc")
    assert star(a, b) == LinComb({B("(a^b)", ab): 1})
    assert star(b, a) == LinComb({B("(b^a)", ab): 2})
    # unrolled twice: |a| (|a| + |b|) ((a.b).c)
    assert star(star(a, b), c) == LinComb({B("((a^b)^c)", ab): 1 * 3})
    assert star(b, b) == LinComb({B("(b^b)", ab): 2})


def test_star_needs_homogeneous_left(ab):
    mixed = LinComb({B("a", ab): 1, B("b", ab): 1})
    with pytest.raises(ValueError):
        star(mixed, B("a", ab))


def test_weight_small(ab):
    assert weight_f(B("a", ab)) == 1
    assert weight_f(B("((b^a)^c)", ab)) == 2 * 3
    # a right comb b.(b.a) has weight |b| * |b|, which is 1 only for degree-1 leaves
    assert weight_f(B("(b^(b^a))", ab)) == 4
    one = Alphabet.parse_inline("x:1")
    assert weight_f(B("(x^(x^(x^x)))", one)) == 1


def test_weight_worked_example():
    rng = random.Random(7)
    for _ in range(30):
        degs = [rng.randint(1, 9) for _ in range(5)]
        A = Alphabet(list(zip("abcde", degs)))
        z = B("(((a^b)^c)^(d^e))", A)
        da, db, dc, dd, _ = degs
        assert weight_f(z) == da * dd * (da + db) * (da + db + dc)


def test_left_vertex_description_agrees(ab):
    for n in range(1, 7):
        for z in enumerate_binary(ab, n) if n <= 4 else enumerate_binary(
                Alphabet.parse_inline("p:2"), n):
            assert weight_f_by_left_vertices(z) == weight_f(z)


def test_gamma_morphism_exhaustive(ab):
    trees = {k: enumerate_binary(ab, k) for k in range(1, 4)}
    for k1, k2 in itertools.product(trees, repeat=2):
        if k1 + k2 > 4:
            continue
        for x in trees[k1]:
            for y in trees[k2]:
                assert gamma(vee_poly(x, y)) == star(gamma(x), gamma(y))


def test_gamma_invertible(ab):
    f = parse_poly("2*(a^b) - (b^a) + 1/3*a", ab, "binary")
    g = gamma(f)
    assert set(g.terms) == set(f.terms)
    assert all(g.coeff(z) == f.coeff(z) * weight_f(z) for z in f.terms)

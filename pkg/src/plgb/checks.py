"""Invariant suite shared by ``plgb verify`` and the acceptance tests.

Each check returns a :class:`CheckResult` counting the instances examined
and listing (a bounded number of) counterexamples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .ideals import EchelonBasis, span_ideal, random_reducer
from .lie import (alpha, black_rhd, bracket, bracket_rhd, gen, kernel_check, ladder_bracket,
                  left_normed, lie_dimension, lie_monomial_basis, phi, phi_poly, rank, rhd,
                  witt_dimension)
from .magma import gamma, vee, vee_poly, weight_f, weight_f_by_left_vertices
from .order import cmp_planar, Outcome
from .poly import (LinComb, butcher, graft, graft_poly, left_butcher, parse_poly)
from .prelie_basis import beta, hash_class, psi
from .trees import (Alphabet, BinaryTree, enumerate_binary, enumerate_nonplanar,
                    enumerate_planar, has_nondecreasing_branches, is_ladder)

MAX_EXAMPLES = 5


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.checked > 0 and not self.failures

    def record(self, good, example=None):
        self.checked += 1
        if not good:
            self.failures.append(example)

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        extra = ""
        if self.failures:
            extra = f"; e.g. {self.failures[:MAX_EXAMPLES]!r}"
        return f"{status} {self.name}: {self.checked - len(self.failures)}/{self.checked}{extra}"


def a000081(n_max):
    """Rooted unlabeled tree counts by the Euler-transform recurrence."""
    a = [0, 1]
    for n in range(1, n_max):
        s = sum(sum(d * a[d] for d in range(1, k + 1) if k % d == 0) * a[n - k + 1]
                for k in range(1, n + 1))
        a.append(s // n)
    return a[1:n_max + 1]


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def one_generator():
    return Alphabet.parse_inline("a:1")


def two_generators():
    return Alphabet.parse_inline("x:1,y:1")


def graded_alphabet(k=5):
    return Alphabet.parse_inline(",".join(f"a{i}:{i}" for i in range(1, k + 1)))


# ------------------------------------------------------------------ counting

def check_counts(max_nonplanar=7, max_planar=6, max_binary=5):
    res = CheckResult("counts")
    A = one_generator()
    want = a000081(max_nonplanar)
    for n in range(1, max_nonplanar + 1):
        got = len(enumerate_nonplanar(A, n))
        res.record(got == want[n - 1], ("nonplanar", n, got))
    for n in range(1, max_planar + 1):
        got = len(enumerate_planar(A, n))
        res.record(got == catalan(n - 1), ("planar", n, got))
    for n in range(1, max_binary + 1):
        got = len(enumerate_binary(A, n))
        res.record(got == catalan(n - 1), ("binary", n, got))
    return res


# ---------------------------------------------------------------- identities

def _trees_upto(alphabet, n, kind="nonplanar"):
    enum = enumerate_nonplanar if kind == "nonplanar" else enumerate_planar
    return {d: enum(alphabet, d) for d in range(1, n + 1)}


def _triples(by_deg, total):
    for dx, dy, dz in itertools.product(by_deg, repeat=3):
        if dx + dy + dz <= total:
            yield from itertools.product(by_deg[dx], by_deg[dy], by_deg[dz])


def check_graft_prelie(alphabet=None, total=6):
    alphabet = alphabet or one_generator()
    res = CheckResult("pre-Lie law for grafting")
    g = graft_poly
    for x, y, z in _triples(_trees_upto(alphabet, total - 2), total):
        lhs = g(g(x, y), z) - g(x, g(y, z))
        rhs = g(g(y, x), z) - g(y, g(x, z))
        res.record(lhs == rhs, (x, y, z))
    return res


def check_butcher_nap(alphabet=None, total=6):
    alphabet = alphabet or one_generator()
    res = CheckResult("NAP law for Butcher product")
    for x, y, z in _triples(_trees_upto(alphabet, total - 2), total):
        res.record(butcher(x, butcher(y, z)) == butcher(y, butcher(x, z)), (x, y, z))
    return res


def random_lie_element(rng, alphabet, degree, n_terms=3):
    """Random nonzero homogeneous element: a combination of left-normed commutators."""
    out = LinComb()
    while not out:
        for _ in range(n_terms):
            seq, left = [], degree
            while left:
                g = rng.choice([g for g in alphabet if g.degree <= left])
                seq.append(g)
                left -= g.degree
            out = out + left_normed(*seq) * Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return out


def _random_triple(rng, alphabet, max_total):
    while True:
        degs = [rng.randint(1, max_total - 2) for _ in range(3)]
        if sum(degs) <= max_total:
            break
    return [random_lie_element(rng, alphabet, d) for d in degs]


def check_rhd_prelie(rng, count=1000, max_total=8):
    alphabet = graded_alphabet(3)
    res = CheckResult("pre-Lie law for rhd on random triples")
    for _ in range(count):
        x, y, z = _random_triple(rng, alphabet, max_total)
        lhs = rhd(rhd(x, y), z) - rhd(x, rhd(y, z))
        rhs = rhd(rhd(y, x), z) - rhd(y, rhd(x, z))
        res.record(lhs == rhs, (x, y, z))
    return res


def check_lie_products(rng, count=200, max_total=8):
    """Scaling law of the induced bracket and the alpha intertwining laws."""
    alphabet = graded_alphabet(3)
    res = CheckResult("rhd / black_rhd / alpha laws")
    for _ in range(count):
        x, y, z = _random_triple(rng, alphabet, max_total)
        dx, dy = x.homogeneous_degree(), y.homogeneous_degree()
        res.record(bracket_rhd(x, y) == bracket(x, y) * Fraction(dx + dy, dx * dy), ("scale", x, y))
        res.record(alpha(black_rhd(x, y)) == rhd(alpha(x), alpha(y)), ("alpha-black", x, y))
        res.record(alpha(bracket(x, y)) == bracket_rhd(alpha(x), alpha(y)), ("alpha-bracket", x, y))
        lhs = black_rhd(black_rhd(x, y), z) - black_rhd(x, black_rhd(y, z))
        rhs = black_rhd(black_rhd(y, x), z) - black_rhd(y, black_rhd(x, z))
        res.record(lhs == rhs, ("black pre-Lie", x, y, z))
        jac = (bracket_rhd(x, bracket_rhd(y, z)) + bracket_rhd(y, bracket_rhd(z, x))
               + bracket_rhd(z, bracket_rhd(x, y)))
        res.record(not jac, ("jacobi", x, y, z))
    return res


# --------------------------------------------------------------------- order

def check_monomiality(alphabet=None, total=5):
    """``s < t`` implies ``u*s < u*t`` and ``s*u < t*u``, planar and non-planar."""
    alphabet = alphabet or two_generators()
    res = CheckResult("monomiality of the order")
    for kind, prod in (("planar", left_butcher), ("nonplanar", butcher)):
        by_deg = _trees_upto(alphabet, total - 1, kind)
        trees = [t for ts in by_deg.values() for t in ts]
        for s, t in itertools.product(trees, repeat=2):
            if cmp_planar(s, t).outcome is not Outcome.LESS:
                continue
            for du in range(1, total - max(s.degree, t.degree) + 1):
                for u in by_deg[du]:
                    ok = (cmp_planar(prod(u, s), prod(u, t)).outcome is Outcome.LESS
                          and cmp_planar(prod(s, u), prod(t, u)).outcome is Outcome.LESS)
                    res.record(ok, (kind, s, t, u))
    return res


# -------------------------------------------------------------------- ideals

def check_oj(alphabet, max_degree):
    res = CheckResult(f"O(J) = nondecreasing trees over {alphabet!r}")
    J = span_ideal("J", alphabet, max_degree)
    for n in range(1, max_degree + 1):
        want = {t for t in enumerate_planar(alphabet, n) if has_nondecreasing_branches(t)}
        got = set(J.complement(n))
        res.record(got == want, (n, sorted(got ^ want)))
    return res


def check_ojprime_ladders(alphabet, max_degree):
    res = CheckResult(f"O(J') consists of ladders over {alphabet!r}")
    Jp = span_ideal("J'", alphabet, max_degree)
    for n in range(1, max_degree + 1):
        for t in Jp.complement(n):
            res.record(is_ladder(t), (n, t))
    return res


def random_poly(rng, trees, n_terms=4, span=6):
    terms = rng.sample(trees, min(n_terms, len(trees)))
    return LinComb((t, Fraction(rng.randint(-span, span), rng.randint(1, span))) for t in terms)


def random_ideal_element(rng, comp, span=6):
    out = LinComb()
    rows = comp.rows
    for r in rng.sample(rows, min(len(rows), 3)):
        out = out.add_scaled(r, Fraction(rng.randint(-span, span) or 1, rng.randint(1, span)))
    return out


def _member(bases, f):
    """Membership by a rank test, independent of the reduction loop."""
    for n in f.degrees():
        probe = EchelonBasis()
        for row in bases.component(n).rows:
            probe.insert(row)
        if probe.insert(f.component(n)):
            return False
    return True


def check_can_contract(rng, ideal, alphabet, max_degree=5, count=500):
    res = CheckResult(f"can contract for {ideal}")
    bases = span_ideal(ideal, alphabet, max_degree)
    trees = [t for n in range(1, max_degree + 1) for t in bases._trees(n)]
    chooser = random_reducer(rng)
    for _ in range(count):
        f, g = random_poly(rng, trees), random_poly(rng, trees)
        a = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        cf, cg = bases.can(f), bases.can(g)
        res.record(bases.can(cf) == cf, ("idempotent", f))
        res.record(bases.can(f + g * a) == cf + cg * a, ("linear", f, g))
        res.record(bases.can(f, chooser) == cf, ("reducer choice", f))
        res.record(_member(bases, f - cf)
                   and all(t not in bases.leading_terms(t.degree) for t in cf.terms),
                   ("f - can(f) in ideal, can(f) on O", f))
        comp = bases.component(rng.randint(1, max_degree))
        h = random_ideal_element(rng, comp)
        for x in (f, h, h + f.component(comp.degree)):
            res.record((not bases.can(x)) == _member(bases, x), ("vanishes exactly", x))
    return res


EXAMPLE_ALPHABET = "a1:1,a2:2,a3:3"
EXAMPLE_INPUT = "a3(a1) + a1(a3) + a1(a2) + a1(a1,a2)"
EXAMPLE_COEFFICIENTS = sorted([Fraction(3, 2), Fraction(2, 3), Fraction(-1, 2)])


def check_worked_example():
    res = CheckResult("worked reduction modulo J'")
    A = Alphabet.parse_inline(EXAMPLE_ALPHABET)
    Jp = span_ideal("J'", A, 4)
    g = Jp.can(parse_poly(EXAMPLE_INPUT, A))
    res.record(sorted(c for _, c in g.items()) == EXAMPLE_COEFFICIENTS, g)
    return res


# ------------------------------------------------------------------- pre-Lie

def check_psi_triangular(alphabet, max_degree=5):
    res = CheckResult(f"psi triangular with support in hash class over {alphabet!r}")
    for n in range(1, max_degree + 1):
        for t in enumerate_nonplanar(alphabet, n):
            p = psi(t)
            lt, lc = p.leading_term()
            cls = hash_class(t)
            res.record(lt == t and lc == 1 and p.support() <= cls.members, t)
    return res


def check_beta(alphabet, max_degree=5):
    res = CheckResult(f"beta equals psi coefficients over {alphabet!r}")
    for n in range(1, max_degree + 1):
        trees = enumerate_nonplanar(alphabet, n)
        for t in trees:
            p = psi(t)
            for s in trees:
                res.record(beta(s, t) == p.coeff(s), (s, t))
    return res


def check_psi_fixed_points(alphabet, max_degree=5):
    res = CheckResult(f"psi fixes O(I) over {alphabet!r}")
    I = span_ideal("I", alphabet, max_degree)
    for n in range(1, max_degree + 1):
        for t in I.complement(n):
            p = psi(t)
            res.record(p == LinComb({t: 1}) and I.can(p) == p, t)
    return res


# ---------------------------------------------------------------------- Lie

def check_phi_morphism(alphabet=None, total=5):
    alphabet = alphabet or two_generators()
    res = CheckResult("phi is a pre-Lie morphism")
    by_deg = _trees_upto(alphabet, total - 1)
    for ds, dt in itertools.product(by_deg, repeat=2):
        if ds + dt > total:
            continue
        for s in by_deg[ds]:
            for t in by_deg[dt]:
                res.record(phi_poly(graft(s, t)) == rhd(phi(s), phi(t)), (s, t))
    return res


def check_lie_dimensions(max_degree=5, expected=(2, 1, 2, 3, 6)):
    res = CheckResult("Lie dimensions over {x,y}")
    A = two_generators()
    I = span_ideal("I", A, max_degree)
    for n in range(1, max_degree + 1):
        basis = lie_monomial_basis(A, n, I)
        res.record(len(basis) == expected[n - 1] == witt_dimension(2, n)
                   == lie_dimension(A, n) == rank(basis), (n, len(basis)))
    return res


def graded_expected_bases(A):
    g = {a.name: a for a in A}
    return {
        3: [gen(g["a3"]), left_normed(g["a1"], g["a2"])],
        4: [gen(g["a4"]), left_normed(g["a1"], g["a3"]), left_normed(g["a1"], g["a2"], g["a1"])],
    }


def check_graded_lie_bases():
    """Elementwise: ``phi(t) = c * bracket`` with ``c`` the ladder weight; spans equal."""
    res = CheckResult("Lie bases for the graded alphabet")
    A = graded_alphabet(4)
    I = span_ideal("I", A, 4)
    for n, want in graded_expected_bases(A).items():
        trees = I.complement(n)
        got = lie_monomial_basis(A, n, I)
        res.record(len(got) == len(want) and rank(got) == rank(got + want) == len(want),
                   ("span", n))
        for t, w in zip(trees, want):
            c, gens = ladder_bracket(t)
            res.record(phi(t) == w * c and left_normed(*gens) == w, ("element", t))
    return res


def check_kernel(alphabet=None, max_degree=5):
    alphabet = alphabet or two_generators()
    res = CheckResult(f"I is the kernel of phi over {alphabet!r}")
    I = span_ideal("I", alphabet, max_degree)
    for n in range(1, max_degree + 1):
        res.record(kernel_check(I, n), n)
    return res


def check_closing_remark():
    res = CheckResult("[[[x,y],x],y] = [[[x,y],y],x]")
    A = two_generators()
    x, y = A["x"], A["y"]
    res.record(not (left_normed(x, y, x, y) - left_normed(x, y, y, x)))
    return res


# -------------------------------------------------------------------- magma

def check_weight_example(rng, count=50):
    res = CheckResult("weight f on ((a.b).c).(d.e)")
    for _ in range(count):
        degs = [rng.randint(1, 6) for _ in range(5)]
        A = Alphabet([(n, d) for n, d in zip("abcde", degs)])
        a, b, c, d, e = (BinaryTree(A[n]) for n in "abcde")
        z = vee(vee(vee(a, b), c), vee(d, e))
        da, db, dc, dd = degs[:4]
        want = da * dd * (da + db) * (da + db + dc)
        res.record(weight_f(z) == want == weight_f_by_left_vertices(z), degs)
    return res


def check_gamma_morphism(alphabet=None, max_leaves=4):
    """``gamma(x . y) = gamma(x) * gamma(y)`` on all binary trees."""
    from .magma import star
    alphabet = alphabet or Alphabet.parse_inline("a:1,b:2")
    res = CheckResult("gamma is a magma morphism")
    trees = {k: enumerate_binary(alphabet, k) for k in range(1, max_leaves)}
    for k1, k2 in itertools.product(trees, repeat=2):
        if k1 + k2 > max_leaves:
            continue
        for x in trees[k1]:
            for y in trees[k2]:
                res.record(gamma(vee_poly(x, y)) == star(gamma(x), gamma(y)), (x, y))
    return res


def check_binary_j_equals_jprime(alphabet=None, max_degree=5):
    """The antisymmetry+Jacobi ideal for ``*`` equals the pre-Lie+WAS ideal for ``.``."""
    alphabet = alphabet or Alphabet.parse_inline("a:1,b:2")
    res = CheckResult(f"J-star and J'-dot have equal components over {alphabet!r}")
    Js = span_ideal("J-star", alphabet, max_degree)
    Jd = span_ideal("J'-dot", alphabet, max_degree)
    for n in range(1, max_degree + 1):
        a, b = Js.component(n), Jd.component(n)
        res.record(a.same_span(b), (n, a.rank, b.rank))
    return res


def run_suite(max_degree=4, seed=0, samples=100):
    """Every invariant at reduced size; used by ``plgb verify``."""
    rng = random.Random(seed)
    d = max(2, max_degree)
    one, two = one_generator(), two_generators()
    return [
        check_counts(min(7, d + 2), min(6, d + 1), min(5, d)),
        check_graft_prelie(one, min(6, d + 1)),
        check_butcher_nap(one, min(6, d + 1)),
        check_rhd_prelie(rng, samples, min(8, d + 2)),
        check_lie_products(rng, samples // 4 or 1, min(8, d + 2)),
        check_monomiality(two, d),
        check_oj(one, d), check_oj(two, d),
        check_ojprime_ladders(one, d),
        *(check_can_contract(rng, name, two, d, samples) for name in ("J", "J'", "I")),
        check_worked_example(),
        check_psi_triangular(two, d),
        check_beta(two, d),
        check_psi_fixed_points(two, d),
        check_phi_morphism(two, d),
        check_lie_dimensions(min(d, 5)),
        check_graded_lie_bases(),
        check_kernel(two, d),
        check_closing_remark(),
        check_weight_example(rng, samples // 4 or 1),
        check_gamma_morphism(),
        check_binary_j_equals_jprime(max_degree=d),
    ]

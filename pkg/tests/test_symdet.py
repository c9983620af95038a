import random
from itertools import permutations

import pytest

from zelisko.errors import SizeOutOfRange
from zelisko.euclid import ZZ
from zelisko.matrix import bareiss_det
from zelisko.symdet import (
    MAX_N,
    MIN_N,
    Monomial,
    SymPolynomial,
    a_var,
    build_lemma3_matrix,
    build_lemma4_matrices,
    check_lemma3,
    check_lemma4,
    evaluate_matrix,
    h_var,
    inverse_perm,
    lam,
    perm_term,
    sym_det,
)


def a(i):
    return Monomial.var(a_var(i))


def test_lemma3_matrix_small():
    assert build_lemma3_matrix(2) == [[Monomial(), Monomial()], [a(2), Monomial()]]
    m3 = build_lemma3_matrix(3)
    assert m3 == [
        [Monomial(), Monomial(), Monomial()],
        [a(2), Monomial(), Monomial()],
        [a(2) * a(3), a(3), Monomial()],
    ]
    assert build_lemma3_matrix(4)[3][0] == a(2) * a(3) * a(4)


def test_lam():
    assert lam(1, 1) == Monomial() and lam(1, 3) == Monomial()
    assert lam(3, 1) == a(2) * a(3)
    assert repr(lam(4, 1)) == "a21*a32*a43"


def test_perm_terms_n3():
    m = build_lemma3_matrix(3)
    assert perm_term((0, 1, 2), m) == Monomial()
    # 1 -> 2, 2 -> 3, 3 -> 1 and its inverse
    sigma = (1, 2, 0)
    assert perm_term(sigma, m) == a(2) * a(3)
    assert perm_term(inverse_perm(sigma), m) == a(2) * a(3)


def test_monomial_algebra():
    x, y = Monomial.var(h_var(1, 2)), a(2)
    assert x * y == y * x
    assert (x * x).exps == ((h_var(1, 2), 2),)
    assert repr(Monomial(-1, {a_var(2): 1})) == "-a21"
    assert repr(Monomial(3)) == "3"
    assert Monomial(0, {a_var(2): 1}) == Monomial(0)
    p = SymPolynomial([x, y, Monomial(-1, x.exps)])
    assert p.monomials() == [y] and len(p) == 1
    assert (p - p).is_zero()
    assert p.evaluate({a_var(2): 5}) == 5


def test_det_expansion_n2():
    am, bm = build_lemma4_matrices(2)
    d = sym_det(am)
    h11, h12, h21, h22 = (Monomial.var(h_var(i, j)) for i, j in [(1, 1), (1, 2), (2, 1), (2, 2)])
    assert d == SymPolynomial([h11 * h22, Monomial(-1) * a(2) * h12 * h21])
    assert d == sym_det(bm)


@pytest.mark.parametrize("n", range(MIN_N, MAX_N + 1))
def test_lemmas_hold(n):
    assert check_lemma3(n)
    assert check_lemma4(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_integer_substitution(n):
    rng = random.Random(100 + n)
    am, bm = build_lemma4_matrices(n)
    names = {a_var(i) for i in range(2, n + 1)} | {
        h_var(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
    }
    det_a = sym_det(am)
    for _ in range(20):
        values = {v: rng.randint(-9, 9) for v in names}
        ia, ib = evaluate_matrix(am, values), evaluate_matrix(bm, values)
        assert bareiss_det(ia, ZZ) == bareiss_det(ib, ZZ) == det_a.evaluate(values)


def test_lemma4_term_count_n5():
    am, _ = build_lemma4_matrices(5)
    assert len(sym_det(am)) == 120


def test_multipliers_matter():
    # dropping the multipliers changes the determinant, so equality is not vacuous
    am, _ = build_lemma4_matrices(3)
    plain = [[Monomial.var(h_var(i, j)) for j in range(1, 4)] for i in range(1, 4)]
    assert sym_det(am) != sym_det(plain)


@pytest.mark.parametrize("n", [1, 8])
def test_size_limits(n):
    with pytest.raises(SizeOutOfRange):
        build_lemma3_matrix(n)
    with pytest.raises(SizeOutOfRange):
        check_lemma4(n)


def test_sign_matches_inversions():
    for sigma in permutations(range(4)):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if sigma[i] > sigma[j])
        assert perm_term(sigma, build_lemma3_matrix(4)).coeff == (-1) ** inv

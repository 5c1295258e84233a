import itertools
from functools import lru_cache

import pytest

from ordinalforge import cnf_oracle as O
from ordinalforge import term as T
from ordinalforge.arrays import EQUAL, GREATER, LESS
from ordinalforge.cnf_oracle import BVPhi, cnf_from_int as n

W = O.cnf_omega_pow(n(1))


def test_examples():
    assert O.cnf_add(n(2), W) == W
    assert O.cnf_omega_pow(n(0)) == n(1)
    assert O.cnf_compare(O.cnf_omega_pow(W), O.CnfOrdinal(((n(1), 5),))) == GREATER
    assert O.cnf_add(W, n(2)) == O.CnfOrdinal(((n(1), 1), (n(0), 2)))
    assert O.cnf_add(O.cnf_add(W, n(1)), W) == O.CnfOrdinal(((n(1), 2),))


def test_invalid_cnf_rejected():
    with pytest.raises(ValueError):
        O.CnfOrdinal(((n(0), 1), (n(1), 1)))
    with pytest.raises(ValueError):
        O.CnfOrdinal(((n(0), 0),))


def test_term_to_cnf():
    assert O.term_to_cnf(T.ZERO) == n(0)
    assert O.term_to_cnf(T.OMEGA) == W
    assert O.term_to_cnf(T.parse("p(1@(1@()))")) is None
    assert O.term_to_cnf(T.parse("p(w+1@())+3")) == O.cnf_add(
        O.cnf_omega_pow(O.cnf_add(W, n(1))), n(3))
    with pytest.raises(T.NonStandardError):
        O.term_to_cnf(T.parse("1+w"))


@lru_cache(maxsize=None)
def cnf_of_size(s):
    """CNF ordinals whose summands ω^e cost 1 + size(e) each, total exactly s."""
    if s == 0:
        return (n(0),)
    out = []
    principals = [(k, e) for k in range(1, s + 1) for e in cnf_of_size(k - 1)]

    def build(left, chosen):
        if left == 0:
            acc = n(0)
            for e in chosen:
                acc = O.cnf_add(acc, O.cnf_omega_pow(e))
            out.append(acc)
            return
        for k, e in principals:
            if k <= left and (not chosen or O.cnf_compare(e, chosen[-1]) != GREATER):
                build(left - k, chosen + [e])

    build(s, [])
    return tuple(out)


ALL = [x for s in range(6) for x in cnf_of_size(s)]


def test_generator_is_injective():
    assert len(set(ALL)) == len(ALL)


def test_total_order():
    for a, b in itertools.product(ALL, repeat=2):
        c = O.cnf_compare(a, b)
        assert c == -O.cnf_compare(b, a)
        assert (c == EQUAL) == (a == b)
    for a, b, c in itertools.product(ALL[:30], repeat=3):
        if O.cnf_compare(a, b) == LESS and O.cnf_compare(b, c) == LESS:
            assert O.cnf_compare(a, c) == LESS


def test_add_associative_and_right_monotone():
    small = ALL[:25]
    for a, b, c in itertools.product(small, repeat=3):
        assert O.cnf_add(O.cnf_add(a, b), c) == O.cnf_add(a, O.cnf_add(b, c))
        if O.cnf_compare(b, c) == LESS:
            assert O.cnf_compare(O.cnf_add(a, b), O.cnf_add(a, c)) == LESS


# -- binary Veblen ---------------------------------------------------------------

E0 = BVPhi(n(1), n(0))


def test_binary_examples():
    assert O.binary_veblen_compare(E0, BVPhi(n(0), E0)) == EQUAL
    assert O.binary_veblen_compare(BVPhi(n(0), n(1)), E0) == LESS
    assert O.binary_veblen_compare(BVPhi(n(1), n(1)), BVPhi(n(2), n(0))) == LESS


def test_binary_fixed_points():
    zeta0 = BVPhi(n(2), n(0))
    assert O.binary_veblen_compare(BVPhi(n(1), zeta0), zeta0) == EQUAL
    assert O.binary_veblen_compare(BVPhi(n(1), O.BVSum((zeta0, n(1)))), zeta0) == GREATER
    assert O.binary_veblen_compare(O.BVSum((W, E0)), E0) == EQUAL
    assert O.binary_veblen_compare(O.BVSum((E0, W)), E0) == GREATER


def test_binary_leaves_agree_with_cnf():
    for a, b in itertools.product(ALL[:40], repeat=2):
        assert O.binary_veblen_compare(a, b) == O.cnf_compare(a, b)
        assert O.binary_veblen_compare(BVPhi(n(0), a), O.cnf_omega_pow(b)) == \
            O.cnf_compare(a, b)


def test_term_to_bv():
    assert O.bv_normalize(O.term_to_bv(T.parse("p(1@(1@()))"))) == E0
    assert O.term_to_bv(T.parse("p(1@(2@()))")) is None
    assert O.term_to_bv(T.parse("p(1@(1@(1@())))")) is None

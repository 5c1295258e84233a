import itertools
from functools import lru_cache

import pytest

from ordinalforge import classic_veblen as CV
from ordinalforge import cnf_oracle as O
from ordinalforge import hierarchy as H
from ordinalforge import term as T
from ordinalforge.term import ONE, OMEGA, ZERO, parse

# Standard terms of each exact norm, frozen after the first run and checked
# against the naive generator below for norms up to 5.
COUNT_BY_NORM = [1, 1, 2, 5, 16, 58, 239, 1046]


@lru_cache(maxsize=None)
def naive_terms(k):
    """Every term of size k, in any order, without filtering."""
    if k == 0:
        return (ZERO,)
    out = [T.Phi(a) for a in naive_arrays(k - 1)]
    for split in range(1, k):
        for head in naive_terms(split):
            if not isinstance(head, T.Phi):
                continue
            for tail in naive_terms(k - split):
                if not isinstance(tail, T.Zero):
                    out.append(T.make_sum([head, tail]))
    return tuple(set(out))


@lru_cache(maxsize=None)
def naive_arrays(k):
    """Arrays of size k as sets of entries with nonzero coefficients."""
    if k == 0:
        return (T.EPS,)
    out = set()
    for first in range(1, k + 1):
        for cs in range(1, first + 1):
            for c in naive_terms(cs):
                for p in naive_arrays(first - cs):
                    for rest in naive_arrays(k - first):
                        if any(q == p for _, q in rest.entries):
                            continue
                        out.add(T.ArrayTerm(list(rest.entries) + [(c, p)]))
    return tuple(out)


def test_counts_match_naive_generator():
    for k in range(6):
        naive = sum(1 for t in naive_terms(k) if T.is_standard(t))
        assert naive == COUNT_BY_NORM[k]


def test_counts_are_frozen():
    assert H.count_by_norm(7) == COUNT_BY_NORM


def test_small_enumerations():
    assert H.enumerate_standard(H.NormBudget(0)) == (ZERO,)
    assert H.enumerate_standard(H.NormBudget(1)) == (ZERO, ONE)
    assert [T.to_text(t) for t in H.enumerate_standard(H.NormBudget(2))] == \
        ["0", "1", "2", "w"]


def test_cap():
    with pytest.raises(H.CapExceededError):
        H.enumerate_standard(H.NormBudget(7, max_count=100))


def test_rank_rho():
    assert H.rank_rho(ZERO) == 0
    assert H.rank_rho(ONE) == 1
    assert H.rank_rho(OMEGA) == 2
    assert H.rank_rho(parse("3")) == 3
    # Depth of positions is invisible to the literal rank.
    assert H.rank_rho(parse("p(1@(1@(1@())))")) == H.rank_rho(parse("w"))


def test_norm():
    assert H.norm_L(ZERO) == 0
    assert H.norm_L(OMEGA) == 2
    assert H.norm_L(parse("p(1@(1@()))")) == 3
    with pytest.raises(T.NonStandardError):
        H.norm_L(parse("1+w"))


def test_norm_axioms(standard_terms):
    for t in standard_terms:
        assert H.norm_L(T.succ(t)) <= H.norm_L(t) + 1


def test_norm_of_cnf_terms(standard_terms):
    # Below ε₀ the norm is additive over summands and ω^a costs L(a) + 1.
    for t in standard_terms:
        if isinstance(t, T.Zero) or O.term_to_cnf(t) is None:
            continue
        if isinstance(t, T.Sum):
            assert H.norm_L(t) == sum(H.norm_L(p) for p in t.parts)
        elif t.array:
            ((a, _),) = t.array.entries
            assert H.norm_L(t) == H.norm_L(a) + 1


def test_fs_norm_examples():
    for n in range(4):
        assert H.fs_norm(ONE, n) == ZERO
    assert H.fs_norm(OMEGA, 0) == parse("2")
    assert H.fs_norm(parse("w+1"), 0) == OMEGA


def test_fs_norm_properties(standard_terms):
    limits = [t for t in standard_terms if T.term_kind(t).kind == "limit"
              and H.norm_L(t) <= 5]
    for t in limits:
        xs = [H.fs_norm(t, n) for n in range(3)]
        for a, b in zip(xs, xs[1:]):
            assert T.less(a, t) and not T.less(b, a)


def test_hardy_examples():
    assert H.hardy(ZERO, 5) == 5
    assert H.hardy(parse("2"), 3) == 5
    assert H.hardy(OMEGA, 3) == 6
    # Under the norm system ω[3] = 5, the largest finite term of norm <= 5.
    assert H.hardy(OMEGA, 3, fs="norm") == 8


def test_fgh_examples():
    assert H.fgh(ZERO, 7) == 8
    assert H.fgh(ONE, 3) == 6
    assert H.fgh(parse("2"), 2) == 8
    assert H.fgh(parse("2"), 3) == 24
    # f_ω(2) = f_2(2).
    assert H.fgh(OMEGA, 2) == 8


@pytest.mark.parametrize("n", range(6))
def test_fgh_matches_closed_forms(n):
    assert H.fgh(ONE, n) == 2 * n
    assert H.fgh(parse("2"), n) == 2**n * n


def test_fuel():
    fuel = H.Fuel(10)
    with pytest.raises(H.FuelExhausted):
        H.hardy(parse("p(1@(1@()))"), 3, fuel=fuel)
    assert fuel.used == 11
    fuel = H.Fuel(100)
    assert H.hardy(OMEGA, 3, fuel=fuel) == 6
    assert fuel.used == 5


def test_fuel_env_override(monkeypatch):
    monkeypatch.setenv("ORDINALFORGE_FUEL", "3")
    with pytest.raises(H.FuelExhausted):
        H.hardy(parse("5"), 0)


def test_unknown_system():
    with pytest.raises(ValueError):
        H.hardy(OMEGA, 1, fs="nope")


@pytest.mark.parametrize("fs,terms", [
    ("class", ["w", "w+w", "p(2@())", "p(w@())"]),
    ("norm", ["w", "w+1"]),
])
def test_hardy_monotone_in_n_for_each_system(fs, terms):
    for t in map(parse, terms):
        vals = [H.hardy(t, n, fs=fs, fuel=H.Fuel(10**5)) for n in range(3)]
        assert vals == sorted(vals)


def _plain_hardy(t, n, limit):
    """One recurrence step per loop, the whole term rewritten each time."""
    used = 0
    while True:
        used += 1
        if used > limit:
            return "exhausted", limit + 1
        kind = T.term_kind(t)
        if kind.kind == "zero":
            return n, used
        if kind.kind == "successor":
            t, n = kind.predecessor, n + 1
        else:
            t = CV.fs_class(t, n)


def test_class_evaluator_matches_plain_recurrence():
    checked = unavailable = 0
    for t in H.enumerate_standard(H.NormBudget(5)):
        for n in range(4):
            try:
                expected = _plain_hardy(t, n, 200)
            except CV.FSUnavailableError:
                # both must refuse; beyond the one-row fragment there is no sequence
                with pytest.raises(CV.FSUnavailableError):
                    H.hardy(t, n, fuel=H.Fuel(200))
                unavailable += 1
                continue
            fuel = H.Fuel(200)
            try:
                got = H.hardy(t, n, fuel=fuel), fuel.used
            except H.FuelExhausted:
                got = "exhausted", fuel.used
            assert got == expected, (T.to_text(t), n)
            checked += 1
    assert checked + unavailable == 4 * sum(H.count_by_norm(5))
    assert checked > unavailable


@pytest.mark.parametrize("k,n", [(1, 3), (3, 7), (5, 40)])
def test_omega_multiples_step_count(k, n):
    fuel = H.Fuel(10**6)
    assert H.hardy(T.make_sum([OMEGA] * k), n, fuel=fuel) == n * 2**k
    assert fuel.used == k + n * (2**k - 1) + 1


@pytest.mark.parametrize("n", [1, 4, 9])
def test_omega_squared_closed_form(n):
    assert H.hardy(parse("p(2@())"), n, fuel=H.Fuel(10**6)) == 2**n * n


def test_epsilon_above_cnf_matches_plain():
    for text in ["p(1@(1@()),1@())", "p(1@(1@()))+p(1@(1@()))", "p(p(1@(1@()))+1@())"]:
        t = parse(text)
        for n in range(3):
            fuel = H.Fuel(500)
            try:
                got = H.hardy(t, n, fuel=fuel), fuel.used
            except H.FuelExhausted:
                got = "exhausted", fuel.used
            assert got == _plain_hardy(t, n, 500), (text, n)

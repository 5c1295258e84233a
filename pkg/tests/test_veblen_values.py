import random

import pytest
from hypothesis import given, settings, strategies as st

from ordinalforge import classic_veblen as CV
from ordinalforge import hierarchy as H
from ordinalforge import term as T
from ordinalforge import veblen_values as V

TERMS = H.enumerate_standard(H.NormBudget(6))


def test_round_trip_through_values():
    for t in TERMS:
        assert V.to_term(V.of_term(t)) == t, T.to_text(t)


def test_fs_tracks_the_term_level_sequence():
    # follow each sequence a few levels down, which leaves the enumeration
    checked = 0
    for t in TERMS:
        for n in range(4):
            x, v = t, V.of_term(t)
            for _ in range(4):
                if isinstance(x, T.Zero):
                    break
                try:
                    want = CV.fs_class(x, n)
                except CV.FSUnavailableError:
                    with pytest.raises(CV.FSUnavailableError):
                        V.fs(v, n)
                    break
                got = V.fs(v, n)
                assert V.to_term(got) == want, (T.to_text(x), n)
                x, v = want, got
                checked += 1
    assert checked > 1000


def test_order_agrees_with_terms():
    sample = random.Random(7).sample(TERMS, 150)
    values = [V.of_term(t) for t in sample]
    for a, va in zip(sample, values):
        for b, vb in zip(sample, values):
            assert V.compare(va, vb) == T.compare(a, b), (T.to_text(a), T.to_text(b))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(TERMS), st.integers(0, 3))
def test_fs_member_is_below(t, n):
    v = V.of_term(t)
    if v is None:
        return
    try:
        out = V.fs(v, n)
    except CV.FSUnavailableError:
        return
    assert V.compare(out, v) < 0


def test_equal_values_built_apart_compare_equal():
    # nothing is interned, so equality must come from the order itself
    built = V.fs(V.of_term(T.parse_term("p(1@(1@()))+w+w")), 1)
    parsed = V.of_term(T.parse_term("p(1@(1@()))+w+1"))
    assert built is not parsed
    assert V.compare(built, parsed) == 0
    assert V.to_term(built) == V.to_term(parsed)

import pytest
from hypothesis import given, strategies as st

from ordinalforge import arrays as A
from ordinalforge import term as T
from ordinalforge.arrays import EMPTY, EQUAL, GREATER, LESS, NATURALS, ArrayValue, underline
from ordinalforge.term import TERMS, numeral

AV = ArrayValue


def nat_arrays(max_rank=3, zeros=False):
    lo = 0 if zeros else 1
    leaf = st.just(EMPTY)

    def extend(inner):
        return st.dictionaries(inner, st.integers(lo, 4), max_size=3).map(
            lambda d: AV((c, p) for p, c in d.items()))

    return st.recursive(leaf, extend, max_leaves=max_rank * 3)


# -- worked examples ------------------------------------------------------------

ONE, TWO, THREE = numeral(1), numeral(2), numeral(3)
W = T.OMEGA


def tv(n):
    return underline(numeral(n))


def example_one_row():
    """{(1,{(2,∅)}), (3,{(1,∅)})} with term coefficients."""
    return AV([(ONE, tv(2)), (THREE, tv(1))])


def test_first_worked_example_structure():
    x = example_one_row()
    assert A.drop_first(x, TERMS) == x
    assert A.min_sub(x) == tv(1)
    assert A.preimage(x, A.min_sub(x), TERMS) == THREE
    assert A.classify(x, TERMS) == TWO


@pytest.mark.parametrize("alpha", [ONE, TWO, W, T.parse_term("w+1")])
def test_first_worked_example_fund(alpha):
    expected = AV([(ONE, tv(2)), (TWO, tv(1)), (alpha, EMPTY)])
    assert A.fund(example_one_row(), alpha, TERMS) == expected


def test_first_worked_example_semantics():
    sem = A.phi_semantics(example_one_row(), TERMS)
    assert isinstance(sem, A.FixPoint)
    assert sem.index == T.ZERO


def test_first_worked_example_naturals():
    x = AV([(1, underline(2)), (3, underline(1))])
    assert A.classify(x) == 2
    assert A.fund(x, 7) == AV([(1, underline(2)), (2, underline(1)), (7, EMPTY)])


def example_limit_coefficient():
    """{(2,{(ω,∅)})}."""
    return AV([(TWO, underline(W))])


@pytest.mark.parametrize("alpha", [ONE, TWO, W])
def test_second_worked_example(alpha):
    x = example_limit_coefficient()
    assert A.drop_first(x, TERMS) == x
    assert A.classify(x, TERMS) == W
    assert A.fund(x, alpha, TERMS) == AV([(ONE, underline(W)), (ONE, underline(alpha))])
    sem = A.phi_semantics(x, TERMS)
    assert isinstance(sem, A.LimitFamily) and sem.length == W


# -- unit behaviour ------------------------------------------------------------


def test_compare_basics():
    assert A.compare(EMPTY, underline(1)) == LESS
    assert A.compare(underline(1), underline(2)) == LESS
    assert A.compare(underline(5), AV([(1, underline(1))])) == LESS
    assert A.compare(AV([(1, underline(1)), (9, EMPTY)]), AV([(2, underline(1))])) == LESS
    assert A.compare(underline(3), underline(3)) == EQUAL


def test_validate_modes():
    z = AV([(0, EMPTY)])
    assert A.validate(z, "B") is None
    assert A.validate(z, "A").clause == "zero coefficient"
    dup = AV([(1, EMPTY), (2, EMPTY)])
    assert A.validate(dup, "B").clause == "injectivity"
    nested = AV([(1, dup)])
    assert A.validate(nested) is not None


def test_rank_and_range():
    x = AV([(1, underline(2)), (3, EMPTY)])
    assert A.rank(EMPTY) == 0
    assert A.rank(x) == 2
    assert A.range_of(x) == frozenset([underline(2), EMPTY])
    assert A.preimage(x, underline(9)) == 0


def test_empty_array_errors():
    with pytest.raises(A.EmptyArrayError):
        A.max_sub(EMPTY)
    with pytest.raises(A.EmptyArrayError):
        A.min_sub(EMPTY)


def test_erase_zeros_recurses_and_detects_collisions():
    x = AV([(0, EMPTY), (2, AV([(0, EMPTY), (1, underline(1))]))])
    assert A.erase_zeros(x) == AV([(2, AV([(1, underline(1))]))])
    clash = AV([(1, AV([(0, EMPTY)])), (2, EMPTY)])
    with pytest.raises(A.ArrayCollisionError):
        A.erase_zeros(clash)


def test_dec_first():
    assert A.dec_first(underline(3)) == underline(2)
    assert A.dec_first(underline(1)) == EMPTY
    x = AV([(1, underline(1))])
    assert A.dec_first(x) == x
    assert A.dec_first(AV([(W, EMPTY)]), TERMS) == AV([(W, EMPTY)])


def test_classify_cases():
    assert A.classify(EMPTY) == 0
    assert A.classify(underline(4)) == 1
    assert A.classify(AV([(1, underline(1))])) == 2
    # Clause 3b descends into the least position.
    assert A.classify(AV([(1, AV([(1, underline(1))]))])) == 2
    assert A.classify(AV([(W, underline(1))]), TERMS) == W


def test_semantics_variants():
    assert A.phi_semantics(EMPTY) == A.Unit()
    assert A.phi_semantics(underline(3)) == A.OmegaPower(3)
    sem = A.phi_semantics(AV([(2, EMPTY), (1, underline(1))]))
    assert sem == A.FixPoint(2, AV([(1, underline(1))]))


# -- properties ----------------------------------------------------------------


@given(nat_arrays(), nat_arrays())
def test_compare_antisymmetric(x, y):
    assert A.compare(x, y) == -A.compare(y, x)
    assert (A.compare(x, y) == EQUAL) == (x == y)


@given(nat_arrays(), nat_arrays(), nat_arrays())
def test_compare_transitive(x, y, z):
    if A.compare(x, y) == LESS and A.compare(y, z) == LESS:
        assert A.compare(x, z) == LESS


@given(nat_arrays(zeros=True))
def test_erase_zeros_leaves_no_zero(x):
    try:
        clean = A.erase_zeros(x)
    except A.ArrayCollisionError:
        return
    assert A.validate(clean, "A") is None
    assert A.erase_zeros(clean) == clean


@given(nat_arrays())
def test_dec_first_never_increases(x):
    assert A.compare(A.dec_first(x), x) in (LESS, EQUAL)


@given(nat_arrays(), st.integers(1, 5))
def test_fund_never_raises_the_top_position(x, alpha):
    if not x.entries or A.validate(x) is not None:
        return
    try:
        y = A.fund(x, alpha)
    except A.ArrayCollisionError:
        return
    if y.entries:
        assert A.compare(A.max_sub(y), A.max_sub(x)) != GREATER


@given(nat_arrays())
def test_classify_one_iff_dec_first_moves(x):
    moved = A.dec_first(x) != x
    assert (A.classify(x) == 1) == moved

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from quivloc import (
    FramedWeight,
    InputError,
    InternalConsistencyError,
    dominant_conjugate,
    dominantize,
    is_dominant,
    is_weight,
    max_shift,
    preset,
)
from quivloc.weights import reflect
from sweeps import vectors

A1, A2 = preset("A1"), preset("A2")


def fw(q, w, c):
    return FramedWeight(q, tuple(w), tuple(c))


def test_is_dominant_examples():
    assert is_dominant(fw(A1, (2,), (1,)))
    assert not is_dominant(fw(A1, (1,), (2,)))
    assert fw(A1, (1,), (2,)).pairings() == (-3,)
    assert is_dominant(fw(preset("E6"), (0, 1, 0, 0, 0, 1), (0,) * 6))


def test_dominant_conjugate_a1():
    assert dominant_conjugate(fw(A1, (1,), (2,))) == ((-1,), [0])


def test_dominant_conjugate_fixed_on_dominant():
    assert dominant_conjugate(fw(A1, (2,), (1,))) == ((1,), [])


def test_dominant_conjugate_a2():
    c, chain = dominant_conjugate(fw(A2, (1, 1), (0, 2)))
    assert chain[0] == 1
    assert is_dominant(fw(A2, (1, 1), c))


def test_affine_level_zero_non_dominant_rejected():
    with pytest.raises(InputError):
        dominant_conjugate(fw(preset("A2~"), (0, 0, 0), (1, 0, 0)))


def test_negative_framing_rejected():
    with pytest.raises(InputError):
        fw(A1, (-1,), (0,))


@pytest.mark.parametrize("w,c,expected", [((2,), (1,), True), ((2,), (3,), False), ((2,), (0,), True), ((2,), (2,), True), ((3,), (4,), False)])
def test_is_weight_sl2(w, c, expected):
    assert is_weight(fw(A1, w, c)) is expected


def test_is_weight_affine_needs_level():
    with pytest.raises(InputError):
        is_weight(fw(preset("A2~"), (0, 0, 0), (1, 1, 1)))
    assert is_weight(fw(preset("A2~"), (1, 0, 0), (1, 1, 1)))


def test_is_weight_jordan():
    # the Jordan Cartan matrix is zero: every c >= 0 is a weight
    j = preset("jordan")
    assert is_weight(fw(j, (2,), (5,)))
    assert not is_weight(fw(j, (2,), (-1,)))


@pytest.mark.parametrize("v,w,b,m", [((1,), (2,), (1,), 1), ((2,), (5,), (1,), 2), ((0,), (3,), (1,), 0)])
def test_max_shift_examples(v, w, b, m):
    assert max_shift(A1, v, w, b) == m


def test_max_shift_needs_dominant():
    with pytest.raises(InputError):
        max_shift(A1, (2,), (1,), (1,))


def test_max_shift_affine_delta():
    q = preset("A2~")
    assert max_shift(q, (1, 1, 1), (1, 0, 0), (1, 1, 1)) == 1
    assert max_shift(q, (2, 2, 2), (1, 1, 0), (1, 1, 1)) == 2


@pytest.mark.parametrize("w", range(0, 12))
def test_max_shift_sl2_closed_form(w):
    for v in range(0, w // 2 + 1):
        assert max_shift(A1, (v,), (w,), (1,)) == v


@pytest.mark.parametrize("name", ["A1", "A2", "A3"])
def test_is_weight_matches_freudenthal(name):
    q = preset(name)
    for w in vectors(q.n, 4):
        oracle = oracles.Freudenthal(q.n, q.arrows, w)
        for c in vectors(q.n, 6):
            assert is_weight(fw(q, w, c)) == oracle.is_weight(c), (w, c)


@pytest.mark.parametrize("name,w", [("A3", (1, 0, 1)), ("A3", (0, 2, 0)), ("A2", (2, 1))])
def test_max_shift_is_largest_in_bound(name, w):
    q = preset(name)
    roots = oracles.positive_roots(oracles.cartan(q.n, q.arrows))
    for v in vectors(q.n, 5):
        if not is_dominant(fw(q, w, v)):
            continue
        for b in roots:
            bound = min(v[i] // b[i] for i in range(q.n) if b[i])
            passing = [m for m in range(bound + 1) if is_weight(fw(q, w, [x - m * y for x, y in zip(v, b)]))]
            assert max_shift(q, v, w, b) == max(passing)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=3), st.lists(st.integers(-2, 5), min_size=3, max_size=3))
def test_weight_invariant_along_chain(w, c):
    q = preset("A3")
    f = fw(q, w, c)
    expected = is_weight(f)
    dom, chain = dominant_conjugate(f)
    assert is_dominant(fw(q, w, dom))
    cur = f
    for i in chain:
        cur = reflect(cur, i)
        assert is_weight(cur) == expected
    # the weight set is invariant under every simple reflection
    for i in range(q.n):
        assert is_weight(reflect(f, i)) == expected


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=5, max_size=5), st.lists(st.integers(0, 5), min_size=5, max_size=5))
def test_dominantize_affine_terminates(w, v):
    q = preset("D4~")
    if w[0] + w[1] + 2 * w[2] + w[3] + w[4] == 0:
        return
    v2, chain = dominantize(q, v, w)
    assert is_dominant(fw(q, w, v2))
    assert len(chain) < 10 * (sum(map(abs, v)) + sum(w) + 10)


def test_internal_error_type():
    assert issubclass(InternalConsistencyError, AssertionError)

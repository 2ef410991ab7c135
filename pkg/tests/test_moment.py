import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from quivloc import (
    BudgetExceededError,
    FramedWeight,
    InputError,
    Quiver,
    RepType,
    delta,
    is_dominant,
    is_flat,
    is_irreducible_dim,
    leaves_on_wall,
    max_shift,
    minimal_leaf,
    positive_roots_upto,
    preset,
)
from quivloc.moment import framed_quiver, wall_shift, zero_parameter_summands
from sweeps import SMALL_FINITE, vectors

A1, J, A2T = preset("A1"), preset("jordan"), preset("A2~")


def _violates(q, v, w, rt):
    c = oracles.cartan(q.n, q.arrows)

    def p(x):
        return sum(a * b for a, b in zip(w, x)) - oracles.tits(c, x, x)

    k = sum(n for _, n in rt.summands)
    rhs = p(rt.v0) + k - sum(n * oracles.tits(c, r, r) for r, n in rt.summands)
    return p(v) < rhs


def test_flat_dominant_fast_path():
    rep = is_flat(A1, (1,), (2,))
    assert rep.flat and rep.fast_path and rep.witness is None


def test_not_flat_witness():
    rep = is_flat(A1, (2,), (1,))
    assert not rep.flat
    assert rep.witness.v0 == (1,) and rep.witness.summands == (((1,), 1),)
    assert _violates(A1, (2,), (1,), rep.witness)


@pytest.mark.parametrize("q", [A1, preset("A3"), preset("D4~"), J])
def test_zero_vector_flat(q):
    assert is_flat(q, (0,) * q.n, (0,) * q.n).flat


def test_jordan_flatness():
    assert not is_flat(J, (2,), (0,)).flat
    assert is_flat(J, (3,), (1,)).flat
    assert is_flat(J, (4,), (2,)).flat


def test_affine_level_zero_not_flat():
    rep = is_flat(A2T, (1, 1, 1), (0, 0, 0))
    assert not rep.flat and not rep.fast_path


def test_affine_dominant_level_one_flat():
    rep = is_flat(A2T, (2, 2, 2), (1, 0, 0))
    assert rep.flat and rep.fast_path


def test_budget_exceeded():
    with pytest.raises(BudgetExceededError) as err:
        is_flat(preset("A3"), (3, 3, 3), (0, 0, 0), budget=5)
    assert err.value.exit_code == 4


@pytest.mark.parametrize("q", SMALL_FINITE[:4], ids=lambda q: q.name)
def test_flatness_matches_brute_force(q):
    for v in vectors(q.n, 4):
        for w in vectors(q.n, 3):
            rep = is_flat(q, v, w)
            assert rep.flat == oracles.brute_force_flat(q.n, q.arrows, v, w), (v, w)
            if not rep.flat:
                assert rep.witness.total() == v
                assert _violates(q, v, w, rep.witness)


def test_framed_quiver():
    fq = framed_quiver(preset("A2"), (2, 1))
    assert fq.n == 3 and sorted(fq.arrows) == [(0, 1), (0, 2), (0, 2), (1, 2)]


def test_irreducible_examples():
    assert is_irreducible_dim(A1, (1,), (2,), zero_parameter_summands(A1))
    assert is_irreducible_dim(A1, (0,), (0,), zero_parameter_summands(A1))
    assert not is_irreducible_dim(A2T, delta(A2T), (1, 0, 0), zero_parameter_summands(A2T))
    assert not is_irreducible_dim(A1, (2,), (1,), zero_parameter_summands(A1))


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
def test_dominant_v0_irreducible_finite(name):
    q = preset(name)
    pool = zero_parameter_summands(q)
    for w in vectors(q.n, 2):
        for v0 in vectors(q.n, 3):
            if is_dominant(FramedWeight(q, w, v0)):
                assert is_irreducible_dim(q, v0, w, pool), (w, v0)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=3, max_size=3), st.lists(st.integers(0, 2), min_size=3, max_size=3),
       st.lists(st.booleans(), min_size=6, max_size=6))
def test_irreducible_monotone_in_pool(v0, w, mask):
    q = preset("A3")
    pool = [tuple(r) for r in oracles.positive_roots(oracles.cartan(q.n, q.arrows))]
    small = [r for r, keep in zip(pool, mask) if keep]
    if not is_irreducible_dim(q, v0, w, pool):
        return
    assert is_irreducible_dim(q, v0, w, small)


def test_leaves_a1():
    leaves = leaves_on_wall(A1, (1,), (2,), (1,))
    assert leaves == [RepType((1,), ()), RepType((0,), (((1,), 1),))]
    assert [r.minimal for r in leaves] == [False, True]


def test_leaves_jordan_partitions():
    leaves = leaves_on_wall(J, (3,), (1,), (1,))
    assert len(leaves) == 3
    assert minimal_leaf(J, (3,), (1,), (1,)).summands == (((1,), 3),)
    assert sum(r.minimal for r in leaves) == 1


def test_leaves_jordan_level_two_chain():
    leaves = leaves_on_wall(J, (3,), (2,), (1,))
    assert [r.v0 for r in leaves] == [(3,), (2,), (1,), (0,)]


def test_partition_counts_level_one():
    counts = [len(leaves_on_wall(J, (n,), (1,), (1,))) for n in range(1, 8)]
    assert counts == [1, 2, 3, 5, 7, 11, 15]


def test_leaves_non_dominant_rejected():
    with pytest.raises(InputError):
        leaves_on_wall(A1, (2,), (1,), (1,))


def test_wall_not_recognized():
    with pytest.raises(InputError):
        leaves_on_wall(preset("A2"), (1, 1), (1, 1), (1, 2))


def test_wall_flag_false_when_m_zero():
    q = preset("A2")
    kind, m, is_wall = wall_shift(q, (0, 0), (1, 0), (0, 1))
    assert (kind, m, is_wall) == ("real", 0, False)
    assert leaves_on_wall(q, (0, 0), (1, 0), (0, 1)) == [RepType((0, 0), ())]


def test_level_one_single_delta_is_not_a_wall():
    assert wall_shift(A2T, (1, 1, 1), (1, 0, 0), (1, 1, 1))[2] is False
    assert wall_shift(A2T, (2, 2, 2), (1, 0, 0), (1, 1, 1))[2] is True


@pytest.mark.parametrize("name,w", [("A3", (1, 1, 0)), ("D4", (0, 1, 0, 1)), ("A2~", (1, 1, 0))])
def test_leaf_bookkeeping_and_length(name, w):
    # level >= 2 throughout, so imaginary walls also give a chain of m + 1 leaves
    q = preset(name)
    for v in vectors(q.n, 4):
        if not is_dominant(FramedWeight(q, w, v)):
            continue
        for root in positive_roots_upto(q, v):
            if not root.is_real and root.coords != delta_or_none(q):
                continue
            b = root.coords
            leaves = leaves_on_wall(q, v, w, b)
            assert len(leaves) == max_shift(q, v, w, b) + 1
            for rt in leaves:
                assert rt.total() == v
                roots = [r for r, _ in rt.summands]
                assert len(roots) == len(set(roots))


def delta_or_none(q):
    try:
        return delta(q)
    except InputError:
        return None


def test_reptype_str_and_total():
    rt = RepType((1, 0), (((0, 1), 2),))
    assert rt.total() == (1, 2)
    assert "(0, 1)" in str(rt) or "0,1" in str(rt)

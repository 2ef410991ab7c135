import random
from fractions import Fraction as F

import pytest

from quivloc import (
    Confidence,
    LocalizationOracle,
    NonGenericStabilityError,
    NotFlatError,
    abelian_localization,
    derived_localization,
    finite_homological_dimension,
    gamma_exact,
    is_singular_parameter,
    o_regular,
    preset,
    singular_hyperplanes,
    slice_transfer_check,
)
from quivloc.localization import BASIS_OFF_ESSENTIAL, coverage
from quivloc.quiver import dot
from quivloc.walls import is_generic_stability

A1, J = preset("A1"), preset("jordan")


def test_is_singular_parameter_examples():
    fams = singular_hyperplanes(A1, (1,), (2,))
    assert is_singular_parameter(fams, (F(0),))
    assert not is_singular_parameter(fams, (F(1, 3),))
    assert not is_singular_parameter([], (F(0),))


def test_gieseker_derived():
    v = derived_localization(J, (2,), (2,), (0,))
    assert not v.holds and v.confidence is Confidence.PROVEN
    assert derived_localization(J, (2,), (2,), (F(1, 3),)).holds


def test_finite_homological_dimension_alias():
    a = finite_homological_dimension(J, (2,), (2,), (0,))
    assert a.holds == derived_localization(J, (2,), (2,), (0,)).holds
    assert a.question == "finite_homological_dimension"


def test_conjectural_for_affine_d():
    q = preset("D4~")
    v, w = (1, 1, 2, 1, 1), (0, 0, 1, 0, 0)
    assert derived_localization(q, v, w, (0, 0, 0, 0, 0)).confidence is Confidence.CONJECTURAL
    # off every essential hyperplane the verdict is proven in any type
    off = derived_localization(q, v, w, (F(1, 5), F(1, 7), F(1, 11), F(1, 13), F(1, 17)))
    assert off.holds and off.confidence is Confidence.PROVEN and off.basis == BASIS_OFF_ESSENTIAL


def test_coverage_table():
    assert coverage(preset("A4~")) is Confidence.PROVEN
    assert coverage(J) is Confidence.PROVEN
    assert coverage(preset("E6")) is Confidence.CONJECTURAL


@pytest.mark.parametrize(
    "lam,theta,holds",
    [((3,), (1,), True), ((-2,), (1,), False), ((-2,), (-1,), True), ((F(1, 3),), (1,), True), ((F(1, 3),), (-1,), True)],
)
def test_gamma_exact_a1(lam, theta, holds):
    assert gamma_exact(A1, (1,), (2,), lam, theta).holds is holds


def test_gamma_exact_details():
    g = gamma_exact(A1, (2,), (5,), (F(7, 2),), (1,))
    (d,) = g.walls
    assert d.relevant and d.threshold == F(3, 2) and d.side == "+" and d.pairing == F(7, 2)


def test_non_generic_theta():
    with pytest.raises(NonGenericStabilityError) as err:
        gamma_exact(A1, (1,), (2,), (3,), (0,))
    assert err.value.exit_code == 3 and "[1]" in str(err.value)


def test_abelian_examples():
    assert abelian_localization(A1, (1,), (2,), (3,), (1,)).holds
    for theta in [(1,), (-1,)]:
        assert not abelian_localization(A1, (1,), (2,), (0,), theta).holds
    assert abelian_localization(J, (2,), (1,), (F(11, 2),), (1,)).holds


def test_o_regular_examples():
    assert not o_regular(J, (2,), (2,), (0,)).holds
    assert o_regular(J, (2,), (2,), (2,)).holds
    r = o_regular(preset("A2"), (1, 1), (1, 1), (F(1, 3), F(1, 5)))
    assert r.holds and r.confidence is Confidence.PROVEN


def test_slice_transfer_example():
    rep = slice_transfer_check(A1, (2,), (5,), (10,), (1,))
    assert rep.ambient_holds and rep.consistent
    (entry,) = rep.slices
    assert (entry.slice_quiver, entry.v_bar, entry.w_bar, entry.eta_lambda) == ("A1", 2, 5, 10)


def test_slice_transfer_informational_on_failure():
    rep = slice_transfer_check(A1, (2,), (5,), (F(1, 2),), (1,))
    assert not rep.ambient_holds and rep.consistent


def test_not_flat_rejected():
    with pytest.raises(NotFlatError):
        LocalizationOracle(A1, (2,), (1,))


INSTANCES = [
    (A1, (2,), (5,)),
    (A1, (3,), (6,)),
    (J, (3,), (2,)),
    (J, (4,), (1,)),
    (preset("A2"), (1, 1), (1, 1)),
    (preset("A3"), (1, 2, 1), (1, 1, 1)),
    (preset("A2~"), (2, 2, 2), (1, 0, 0)),
    (preset("A2~"), (1, 1, 1), (1, 1, 0)),
    (preset("D4"), (1, 2, 1, 1), (1, 0, 1, 0)),
]


def _rand_rational(rng, lo=-6, hi=6):
    q = rng.randint(1, 4)
    return F(rng.randint(lo * q, hi * q), q)


def _rand_theta(rng, q, v):
    while True:
        theta = tuple(rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(q.n))
        if is_generic_stability(q, v, theta):
            return theta


@pytest.mark.parametrize("q,v,w", INSTANCES, ids=lambda x: getattr(x, "name", str(x)))
def test_exactly_one_chamber(q, v, w):
    rng = random.Random(1)
    oracle = LocalizationOracle(q, v, w)
    v_dom = oracle.instance.v
    for _ in range(40):
        lam = tuple(_rand_rational(rng) for _ in range(q.n))
        if oracle.is_singular(lam):
            continue
        required = {}
        for f in oracle.families:
            coset = f.coset_offsets(f.pairing(lam))
            if coset:
                x = f.pairing(lam)
                assert x > max(coset) or x < min(coset)
                required[f.normal] = 1 if x > max(coset) else -1
        for _ in range(6):
            theta = _rand_theta(rng, q, v_dom)
            expected = all((dot(theta, b) > 0) == (s > 0) for b, s in required.items())
            assert oracle.abelian(lam, theta).holds == expected


@pytest.mark.parametrize("q,v,w", INSTANCES, ids=lambda x: getattr(x, "name", str(x)))
def test_derived_abelian_implications(q, v, w):
    rng = random.Random(2)
    oracle = LocalizationOracle(q, v, w)
    for _ in range(40):
        lam = tuple(_rand_rational(rng) for _ in range(q.n))
        theta = _rand_theta(rng, q, oracle.instance.v)
        derived = oracle.derived(lam).holds
        abelian = oracle.abelian(lam, theta).holds
        assert derived or not abelian
        assert oracle.o_regular(lam).holds == derived


def test_dominantized_coordinates():
    # A2 with v=(1,1), w=(0,1) is not dominant; verdicts use the dominant instance
    oracle = LocalizationOracle(preset("A2"), (1, 1), (0, 1))
    assert oracle.instance.substituted and oracle.instance.v == (0, 0)
    assert oracle.families == ()

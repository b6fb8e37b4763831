import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylgk.weyl import LaurentVector, falling, w_act, w_multiply, weyl

from oracles import laurent_box, random_weyl, weyl_oracle_act

LAM = (Fraction(1, 3), Fraction(2, 5))


def as_vector(lam, f):
    return LaurentVector(lam, f)


def test_basic_products():
    D = weyl(1)
    assert D("d[1]") * D("x[1]") == D("x[1]*d[1] + 1")
    assert D("d[1]") * D("xinv[1]") == D("xinv[1]*d[1] - xinv[1]^2")
    assert D("d[1]^2") * D("x[1]^2") == D("x[1]^2*d[1]^2 + 4*x[1]*d[1] + 2")


def test_printing_of_negative_powers():
    D = weyl(1)
    assert str(D("d[1]") * D("xinv[1]")) == "xinv[1]*d[1] - xinv[1]^2"
    assert D("x[1]^-2") == D("xinv[1]^2")


def test_products_against_operator_oracle_on_small_box():
    D = weyl(1)
    f = {(k,): Fraction(1) for k in range(-3, 4)}
    for u, v in [("d[1]", "xinv[1]"), ("d[1]^2", "x[1]^2"), ("d[1]^3", "xinv[1]^2")]:
        u, v = D(u), D(v)
        assert weyl_oracle_act(u * v, (Fraction(1, 2),), f) == \
            weyl_oracle_act(u, (Fraction(1, 2),), weyl_oracle_act(v, (Fraction(1, 2),), f))


def test_falling_factorial_negative_argument():
    assert falling(-2, 3) == (-2) * (-3) * (-4)
    assert falling(Fraction(1, 2), 0) == 1


def test_action_examples():
    D1, D2 = weyl(1), weyl(2)
    v = LaurentVector.basis((Fraction(1, 2),))
    assert w_act(D1("x[1]*d[1]"), v) == v * Fraction(1, 2)
    w = LaurentVector.basis((0, 0), (2, 5))
    assert w_act(D2("d[1]"), w) == LaurentVector((0, 0), {(1, 5): 2})


def test_action_dimension_mismatch():
    with pytest.raises(ValueError):
        w_act(weyl(2)("d[1]"), LaurentVector.basis((0,)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_canonical_commutation_relations(n):
    D = weyl(n)
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        assert not D.d(i).commutator(D.d(j))
        assert not D.x(i).commutator(D.x(j))
        assert D.d(i).commutator(D.x(j)) == (D.one() if i == j else D.zero())
        assert D.x(i) * D.xinv(i) == D.one() == D.xinv(i) * D.x(i)


def test_disjoint_variables_commute():
    rng = random.Random(3)
    D = weyl(2)
    for _ in range(20):
        u = D.element({((a, 0), (b, 0)): 1 for a, b in [(rng.randint(-2, 2), rng.randint(0, 2))]})
        v = D.element({((0, a), (0, b)): 1 for a, b in [(rng.randint(-2, 2), rng.randint(0, 2))]})
        assert u * v == v * u


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_product_is_operator_composition(seed):
    rng = random.Random(seed)
    D = weyl(2)
    u, v = random_weyl(rng, D), random_weyl(rng, D)
    f = laurent_box(2, 2, rng=rng)
    lhs = w_act(u * v, as_vector(LAM, f))
    assert lhs == w_act(u, w_act(v, as_vector(LAM, f)))
    assert lhs.terms == weyl_oracle_act(u * v, LAM, f)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_associativity(seed):
    rng = random.Random(seed)
    D = weyl(2)
    u, v, w = (random_weyl(rng, D) for _ in range(3))
    assert u * (v * w) == (u * v) * w
    assert w_multiply(u, v) == u * v


def test_faithful_on_generic_weights():
    """Distinct normal forms act differently on a generic box."""
    D = weyl(1)
    lam = (Fraction(2, 7),)
    f = {(k,): Fraction(1) for k in range(-3, 4)}
    monos = [D(s) for s in ["1", "x[1]", "d[1]", "x[1]*d[1]", "xinv[1]*d[1]", "d[1]^2"]]
    images = [tuple(sorted(weyl_oracle_act(m, lam, f).items())) for m in monos]
    assert len(set(images)) == len(images)


def test_laurent_vector_support_and_printing():
    v = LaurentVector((Fraction(1, 2), 0), {(1, 0): 2, (0, -1): -1})
    assert v.support() == {(Fraction(3, 2), 0), (Fraction(1, 2), -1)}
    assert str(v) == "-x^(lam+(0,-1)) + 2*x^(lam+(1,0))"

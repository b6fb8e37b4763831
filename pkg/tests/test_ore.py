import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylgk.lie import make_s
from weylgk.maps import psi, psi_prime
from weylgk.ore import embed, is_polynomial, l_multiply, localized
from weylgk.uea import uea

from oracles import laurent_box, loc_operator, random_coeff, random_loc, random_word

LAM = (Fraction(1, 3), Fraction(2, 5), Fraction(3, 7))


def test_straightening_examples():
    L = localized(2)
    assert L("einv[1]") * L("e[1,1]") == L("e[1,1]*einv[1] + einv[1]")
    assert L("e[1]") * L("einv[1]") == L.one()
    assert L("einv[2]") * L("e[1,1]") == L("e[1,1]*einv[2]")
    assert str(L("einv[1]") * L("e[1,1]")) == "e[1,1]*einv[1] + einv[1]"


def test_straightening_examples_against_psi():
    L = localized(2)
    p = psi(2)
    assert p(L("einv[1]")) * p(L("e[1,1]")) == p(L("e[1,1]*einv[1] + einv[1]"))
    assert p(L("einv[2]")) * p(L("e[1,1]")) == p(L("e[1,1]*einv[2]"))


def test_closed_form_rule_for_all_exponents():
    """e_m^c e_jk = e_jk e_m^c - c delta_km e_j e_m^(c-1), checked in the vector-field picture."""
    L = localized(2)
    f = laurent_box(2, 2)
    for c in range(-3, 4):
        for j, k, m in [(1, 1, 1), (1, 2, 2), (2, 1, 1), (1, 2, 1)]:
            lhs = L(f"e[{m}]^{c}" if c >= 0 else f"einv[{m}]^{-c}") * L(f"e[{j},{k}]")
            assert loc_operator(L, lhs.terms, LAM[:2], f) == \
                loc_operator(L, {(w, g): 1 for (w, g) in [((), tuple(c if i == m - 1 else 0 for i in range(2)))]},
                             LAM[:2], loc_operator(L, L(f"e[{j},{k}]").terms, LAM[:2], f))


def test_rule_at_exponent_one_is_the_bracket():
    for n in (1, 2, 3):
        L = localized(n)
        s = make_s(n)
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                for m in range(1, n + 1):
                    got = L(f"e[{m}]").commutator(L(f"e[{j},{k}]"))
                    expected = L(f"-e[{j}]") if k == m else L.zero()
                    assert got == expected


def test_embed_examples():
    U = uea(make_s(2))
    L = localized(2)
    u = embed(2, U("e[1,2]*e[1]"))
    assert u.terms == {((L.gl.spec.index("e[1,2]"),), (1, 0)): 1}
    assert embed(2, U.one()) == L.one()
    assert L.restrict(u) == U("e[1,2]*e[1]")


def test_is_polynomial_examples():
    L = localized(2)
    U = uea(make_s(2))
    assert is_polynomial(embed(2, U("e[1,1]*e[2]^2 + e[2,1]")))
    assert not is_polynomial(L("einv[1]"))
    d1 = psi_prime(2)["d[1]"]
    assert d1 == L("e[1,1]*einv[1] + einv[1]")
    assert not is_polynomial(d1)
    with pytest.raises(ValueError):
        L.restrict(d1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_units_are_invertible(n):
    L = localized(n)
    for i in range(1, n + 1):
        assert l_multiply(n, L(f"e[{i}]"), L(f"einv[{i}]")) == L.one()
        assert l_multiply(n, L(f"einv[{i}]"), L(f"e[{i}]")) == L.one()


def test_s1_aliases():
    L = localized(1)
    assert L("d1inv*d0") == L("einv[1]*e[1,1]")
    assert L("d1^-1") == L("einv[1]")


def random_uea(rng, U, max_deg=3):
    return U.element({tuple(sorted(random_word(rng, U.spec.dim, max_deg))): random_coeff(rng)
                      for _ in range(rng.randint(1, 3))})


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_embed_is_multiplicative(seed):
    rng = random.Random(seed)
    U = uea(make_s(2))
    u, v = random_uea(rng, U), random_uea(rng, U)
    assert embed(2, u * v) == l_multiply(2, embed(2, u), embed(2, v))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([1, 2, 3]), st.integers(0, 10**6))
def test_associativity(n, seed):
    rng = random.Random(seed)
    L = localized(n)
    u, v, w = (random_loc(rng, L, terms=2) for _ in range(3))
    assert u * (v * w) == (u * v) * w


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_products_against_vector_field_oracle(seed):
    rng = random.Random(seed)
    L = localized(2)
    u, v = random_loc(rng, L), random_loc(rng, L)
    f = laurent_box(2, 2, rng=rng)
    lam = LAM[:2]
    assert loc_operator(L, (u * v).terms, lam, f) == loc_operator(L, u.terms, lam, loc_operator(L, v.terms, lam, f))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_psi_transports_products(seed):
    rng = random.Random(seed)
    L = localized(2)
    p = psi(2)
    u, v = random_loc(rng, L), random_loc(rng, L)
    assert p(u * v) == p(u) * p(v)

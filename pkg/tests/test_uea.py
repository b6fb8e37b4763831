import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylgk.lie import make_a, make_gl, make_s
from weylgk.maps import phi
from weylgk.uea import ad, extend_hom, straighten_word, u_multiply, uea

from oracles import laurent_box, random_coeff, random_word, uea_operator

LAM3 = (Fraction(1, 3), Fraction(2, 5), Fraction(3, 7))


def random_element(rng, U, max_deg, terms=3):
    acc = {}
    for _ in range(rng.randint(1, terms)):
        acc[tuple(sorted(random_word(rng, U.spec.dim, max_deg)))] = random_coeff(rng)
    return U.element(acc)


def test_gl2_straightening():
    U = uea(make_gl(2))
    assert U("e[2,1]") * U("e[1,2]") == U("e[1,2]*e[2,1] + e[2,2] - e[1,1]")
    assert str(U("e[2,1]") * U("e[1,2]")) == "e[1,2]*e[2,1] - e[1,1] + e[2,2]"


def test_identity_is_neutral():
    rng = random.Random(1)
    U = uea(make_s(2))
    for _ in range(20):
        u = random_element(rng, U, 3)
        assert U.one() * u == u == u * U.one()


def test_s2_examples():
    U = uea(make_s(2))
    assert U("e[1,1]*e[1]") * U("e[1]") == U("e[1,1]*e[1]^2")
    assert U("e[1]") * U("e[1,1]") == U("e[1,1]*e[1] - e[1]")


def test_s2_examples_against_operator_oracle():
    s = make_s(2)
    U = uea(s)
    f = laurent_box(2, 2)
    lam = LAM3[:2]
    i11, i1 = s.index("e[1,1]"), s.index("e[1]")
    assert uea_operator(s, (U.word([i1, i11])).terms, lam, f) == uea_operator(s, {(i1, i11): 1}, lam, f)
    assert uea_operator(s, (U.word([i11, i1, i1])).terms, lam, f) == uea_operator(s, {(i11, i1, i1): 1}, lam, f)


def test_ad_examples():
    s, gl = make_s(2), make_gl(2)
    U, G = uea(s), uea(gl)
    assert not ad(s, "e[1]", U("e[2]"))
    assert ad(s, "e[1]", U("e[1,1]")) == U("-e[1]")
    assert not ad(s, "e[1]", ad(s, "e[1]", U("e[1,1]")))
    assert not ad(gl, G("e[1,1] + e[2,2]"), G("e[1,2]*e[2,1]"))


def test_ad_accepts_lie_elements():
    s = make_s(2)
    assert ad(s, s.element({"e[1]": 2}), uea(s)("e[1,1]")) == uea(s)("-2*e[1]")


def test_extend_hom_examples():
    U = uea(make_gl(2))
    ph = phi(2)
    assert extend_hom(ph.images, U.one(), ph.codomain) == ph.codomain.one()
    D = ph.codomain
    assert extend_hom(ph.images, U("e[1,2]*e[2,1]")) == D("x[1]*x[2]*d[1]*d[2] + x[1]*d[1]")


def test_extend_hom_missing_image():
    U = uea(make_gl(2))
    images = dict(phi(2).images)
    del images["e[2,1]"]
    with pytest.raises(KeyError):
        extend_hom(images, U("e[2,1]"))


@pytest.mark.parametrize("spec", [make_gl(2), make_s(2), make_s(3), make_a(3)], ids=lambda s: s.name)
def test_confluence_of_strategies(spec):
    rng = random.Random(7)
    U = uea(spec)
    for _ in range(30):
        w = random_word(rng, spec.dim, 5)
        left = straighten_word(spec, w, "left")
        right = straighten_word(spec, w, "right")
        assert left == right
        assert U.word(w).terms == left


def test_straighten_rejects_unknown_strategy():
    with pytest.raises(ValueError):
        straighten_word(make_s(1), (1, 0), "middle")


@pytest.mark.parametrize("n", [2, 3])
def test_products_against_operator_oracle(n):
    """Vector-field representation e_ij -> x_i d_j, e_k -> x_k on a Laurent box."""
    s = make_s(n)
    U = uea(s)
    rng = random.Random(n)
    lam = LAM3[:n]
    f = laurent_box(n, 1, rng=rng)
    for _ in range(25):
        u, v = random_element(rng, U, 2), random_element(rng, U, 2)
        lhs = uea_operator(s, (u * v).terms, lam, f)
        rhs = uea_operator(s, u.terms, lam, uea_operator(s, v.terms, lam, f))
        assert lhs == rhs


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_local_ad_nilpotency(n):
    s = make_s(n)
    U = uea(s)
    for i in range(1, n + 1):
        for b in s.basis:
            assert not ad(s, f"e[{i}]", ad(s, f"e[{i}]", U.gen(b)))


def test_u_multiply_matches_operator():
    s = make_s(2)
    assert u_multiply(s, uea(s)("e[1]"), uea(s)("e[1,1]")) == uea(s)("e[1,1]*e[1] - e[1]")


specs = st.sampled_from([make_gl(2), make_s(2), make_s(3)])


@settings(max_examples=40, deadline=None)
@given(specs, st.integers(0, 10**6))
def test_associativity(spec, seed):
    rng = random.Random(seed)
    U = uea(spec)
    u, v, w = (random_element(rng, U, 3, terms=2) for _ in range(3))
    assert u * (v * w) == (u * v) * w


@settings(max_examples=40, deadline=None)
@given(specs, st.integers(0, 10**6))
def test_ad_is_a_derivation(spec, seed):
    rng = random.Random(seed)
    U = uea(spec)
    g = rng.randrange(spec.dim)
    u, v = random_element(rng, U, 2), random_element(rng, U, 2)
    assert ad(spec, g, u * v) == ad(spec, g, u) * v + u * ad(spec, g, v)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_extend_hom_is_linear_and_multiplicative(seed):
    rng = random.Random(seed)
    U = uea(make_gl(2))
    ph = phi(2)
    u, v = random_element(rng, U, 3), random_element(rng, U, 3)
    assert ph(u + v) == ph(u) + ph(v)
    assert ph(u * v) == ph(u) * ph(v)


@pytest.mark.parametrize("n", [2, 3])
def test_extend_hom_bracket_on_generators(n):
    gl = make_gl(n)
    U = uea(gl)
    ph = phi(n)
    for g, h in itertools.product(gl.basis, repeat=2):
        assert ph(U.gen(g).commutator(U.gen(h))) == ph[g].commutator(ph[h])

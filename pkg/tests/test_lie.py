import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylgk.lie import (LieAlgebraSpec, a_to_gl, bracket, check_antisymmetry, check_jacobi,
                        gl_to_a_coords, make_a, make_gl, make_s)
from weylgk.maps import xi_matrix

from oracles import gl_commutator


def test_gl1_is_abelian():
    g = make_gl(1)
    assert g.dim == 1
    assert bracket(g, g.basis_element(0), g.basis_element(0)) == g.element({})


def test_gl2_basic_bracket():
    g = make_gl(2)
    assert g.basis == ("e[1,1]", "e[1,2]", "e[2,1]", "e[2,2]")
    assert bracket(g, g.basis_element("e[1,2]"), g.basis_element("e[2,1]")) == g.element(
        {"e[1,1]": 1, "e[2,2]": -1})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_gl_brackets_match_matrix_commutators(n):
    g = make_gl(n)
    for p, q in itertools.product(range(g.dim), repeat=2):
        i, j = divmod(p, n)
        k, l = divmod(q, n)
        expected = gl_commutator(n, {(i + 1, j + 1): 1}, {(k + 1, l + 1): 1})
        got = {divmod(t, n): c for t, c in g.struct_consts(p, q).items()}
        assert {(a + 1, b + 1): c for (a, b), c in got.items()} == expected


def test_s1_is_the_two_dimensional_nonabelian_algebra():
    s = make_s(1)
    assert s.dim == 2
    d0, d1 = s.basis_element("d0"), s.basis_element("d1")
    assert bracket(s, d0, d1) == d1


def test_s2_brackets():
    s = make_s(2)
    assert s.dim == 6
    assert bracket(s, s.basis_element("e[1,2]"), s.basis_element("e[2]")) == s.basis_element("e[1]")
    assert not bracket(s, s.basis_element("e[1]"), s.basis_element("e[2]"))
    assert bracket(s, s.basis_element("e[1,1]"), s.basis_element("e[1]")) == s.basis_element("e[1]")


def test_bracket_bilinearity_example():
    g = make_gl(2)
    u = g.element({"e[1,2]": 1, "e[2,1]": 1})
    assert bracket(g, u, g.basis_element("e[1,1]")) == g.element({"e[2,1]": 1, "e[1,2]": -1})


def test_bracket_index_out_of_range():
    g = make_gl(2)
    with pytest.raises(IndexError):
        g.struct_consts(0, 7)


@pytest.mark.parametrize("make,n", [(make_gl, 1), (make_gl, 2), (make_gl, 3), (make_s, 1),
                                    (make_s, 2), (make_s, 3), (make_a, 2), (make_a, 3), (make_a, 4)])
def test_shipped_algebras_are_lie_algebras(make, n):
    spec = make(n)
    assert check_antisymmetry(spec)
    assert check_jacobi(spec)


def test_jacobi_detects_a_broken_table():
    # [b1,b2] = b3, [b1,b3] = b1, antisymmetrized: Jacobiator on (1,2,3) is -b1 != 0
    table = {(0, 1): {2: 1}, (1, 0): {2: -1}, (0, 2): {0: 1}, (2, 0): {0: -1}}
    spec = LieAlgebraSpec("broken", ["b1", "b2", "b3"], table)
    assert check_antisymmetry(spec)
    assert not check_jacobi(spec)


def test_a1_dimension_and_bracket():
    a = make_a(2)
    assert a.dim == 2
    assert a.basis == ("a[1,2]", "a[2,1]")
    # [e12 - e22, e21 - e11] = (e11 - e21) - (e22 - e12), in gl_2
    lhs = gl_commutator(2, {(1, 2): 1, (2, 2): -1}, {(2, 1): 1, (1, 1): -1})
    rhs = {(1, 1): 1, (2, 1): -1, (2, 2): -1, (1, 2): 1}
    assert lhs == rhs
    got = bracket(a, a.basis_element("a[1,2]"), a.basis_element("a[2,1]"))
    assert got == a.element(gl_to_a_coords(2, rhs) and {"a[1,2]": 1, "a[2,1]": -1})


@pytest.mark.parametrize("n", [2, 3, 4])
def test_a_structure_constants_against_matrix_commutators(n):
    a = make_a(n)
    for p, q in itertools.product(range(a.dim), repeat=2):
        lhs = gl_commutator(n, a_to_gl(n, {tuple(int(t) for t in a.label(p)[2:-1].split(",")): 1}),
                            a_to_gl(n, {tuple(int(t) for t in a.label(q)[2:-1].split(",")): 1}))
        got = {tuple(int(t) for t in a.label(k)[2:-1].split(",")): c
               for k, c in a.struct_consts(p, q).items()}
        assert a_to_gl(n, got) == lhs


@pytest.mark.parametrize("n", [2, 3, 4])
def test_a_is_s_transported_through_xi(n):
    """Structure constants of a_{n-1} equal those of s_{n-1} after the base change."""
    import sympy

    s, a = make_s(n - 1), make_a(n)
    M = sympy.Matrix(xi_matrix(n))
    Minv = M.inv()
    for i, j in itertools.product(range(s.dim), repeat=2):
        # bracket in a of the images, pulled back
        xi_i = M[:, i]
        xi_j = M[:, j]
        img = sympy.zeros(a.dim, 1)
        for p in range(a.dim):
            for q in range(a.dim):
                c = xi_i[p] * xi_j[q]
                if c:
                    for k, v in a.struct_consts(p, q).items():
                        img[k] += c * v
        pulled = Minv * img
        expected = sympy.zeros(s.dim, 1)
        for k, v in s.struct_consts(i, j).items():
            expected[k] = v
        assert pulled == expected


def test_a_needs_n_at_least_2():
    with pytest.raises(ValueError):
        make_a(1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_json_round_trip(n):
    for spec in (make_gl(n), make_s(n)):
        again = LieAlgebraSpec.from_json(spec.to_json())
        assert again == spec
        assert again.to_dict()["brackets"] == spec.to_dict()["brackets"]


def test_json_format_shape():
    d = make_s(1).to_dict()
    assert d == {"name": "s1", "dim": 2, "basis": ["e[1,1]", "e[1]"],
                 "brackets": [[0, 1, [[1, "1"]]], [1, 0, [[1, "-1"]]]]}


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_bracket_bilinear_and_antisymmetric(data):
    spec = data.draw(st.sampled_from([make_gl(2), make_s(2), make_a(3)]))
    vec = st.dictionaries(st.integers(0, spec.dim - 1), coeffs, max_size=4)
    u, v, w = (spec.element(data.draw(vec)) for _ in range(3))
    c = data.draw(coeffs)
    assert bracket(spec, u, v) == -bracket(spec, v, u)
    assert bracket(spec, u * c + w, v) == bracket(spec, u, v) * c + bracket(spec, w, v)

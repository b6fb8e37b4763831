# Straightening in U(gl_2), U(s_2) and the Laurent Weyl algebra D_1.

from fractions import Fraction

from weylgk import LaurentVector, make_gl, make_s, uea, w_act, weyl


# # Enveloping algebras
G = uea(make_gl(2))
print(G("e[2,1]") * G("e[1,2]"))

S = uea(make_s(2))
print(S("e[1]") * S("e[1,1]"))
print(S("e[1,1]*e[1]") * S("e[1]"))


# # Weyl algebra with negative powers of x
D = weyl(1)
for u, v in [("d[1]", "x[1]"), ("d[1]", "xinv[1]"), ("d[1]^2", "x[1]^2")]:
    print(f"{u} * {v} =", D(u) * D(v))


# # Action on x^lam times Laurent monomials
f = LaurentVector.basis((Fraction(1, 2),), (3,))
print(w_act(D("x[1]*d[1]"), f))
print(w_act(D("d[1]^2"), f))

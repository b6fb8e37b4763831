# Weight modules T(lam, V), Hom dimensions, Casimirs and center scans.

from weylgk import (casimir, center_scan, character_module, hom_dim_lie, hom_dim_T, is_central, make_gl,
                    make_s, standard_module, TModule, trivial_module, two_dim_s1, verify_module)
from weylgk.modules import generic_weight


lam = generic_weight(2)
V = two_dim_s1()
T = TModule(2, lam, V)
w = T.vector((0, 0), 0)
print(T.act("e[1,2]", w))
print(T.act("einv[1]*e[1,1]", w))


# # Module axioms on a 7x7 box
for M in (trivial_module(1), character_module(1, 5), V):
    print(M, verify_module(2, lam, M, 3).summary())


# # Hom dimensions, truncated vs. finite-dimensional
for A, B in [(V, V), (V, trivial_module(1)), (trivial_module(1), V), (standard_module(1), standard_module(1))]:
    print(A, "->", B, hom_dim_T(2, lam, A, B, 3).summary(), "| lie:", hom_dim_lie(A, B))


# # Center
print(casimir(2, 2))
print(all(is_central(make_gl(3), casimir(3, k)) for k in (1, 2, 3)))
print([str(u) for u in center_scan(make_gl(2), 2)])
print([str(u) for u in center_scan(make_s(2), 3)])

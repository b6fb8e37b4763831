# U(s_n) with e_1..e_n inverted, and the isomorphism onto D_n (x) U(a_{n-1}).

from weylgk import localized, make_s, psi, psi_prime, verify_hom


L = localized(2)
print(L("einv[1]") * L("e[1,1]"))
print(L("einv[2]") * L("e[1,1]"))
print(L("e[1]") * L("einv[1]"))


# # Generator images
for lab in ["e[1,2]", "e[2,1]", "e[1,1]", "e[1]", "einv[2]"]:
    print(f"psi({lab}) =", psi(2)[lab])
for lab in ["d[1]", "a[1,2]"]:
    print(f"psi'({lab}) =", psi_prime(2)[lab])


# # Round trips
u = L("e[1,2]*e[2,1]*einv[2] + 3*e[1]")
print(psi_prime(2)(psi(2)(u)) == u)


# # Bracket checks
for n in (2, 3, 4):
    print(n, verify_hom(psi(n), make_s(n)).summary())

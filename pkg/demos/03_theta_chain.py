# Theta_n = (id (x) xi^-1) psi, iterated down to sigma_1.

from weylgk import chain_map, make_s, sigma1, theta, theta_chain, verify_hom, weyl_variable_count, xi, xi_inv
from weylgk.ore import localized


print(xi(2)["e[1]"], "|", xi(2)["e[1,1]"])
print(xi_inv(2)["a[1,2]"], "|", xi_inv(2)["a[2,1]"])
print(theta(2)["e[1,2]"])


# # sigma_1 turns d1^-1 d0 into a derivative
print(sigma1()(localized(1)("d1^-1*d0")))


# # Stages and Weyl variables
for n in range(1, 5):
    print(n, [m.name for m in theta_chain(n)], weyl_variable_count(n))

print(chain_map(2)["e[1,2]"])
print(verify_hom(chain_map(3), make_s(3)).summary())

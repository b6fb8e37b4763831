"""Exact PBW, Laurent-Weyl and localized enveloping-algebra arithmetic for
``s_n = gl_n + C^n``, with the maps relating ``U(s_n)`` localized at
``e_1, ..., e_n`` to ``D_n (x) U(s_{n-1})`` and the weight modules built
from them."""

from .algebra import Algebra, Element
from .center import casimir, center_scan, is_central
from .lie import LieAlgebraSpec, LieElement, bracket, check_jacobi, make_a, make_gl, make_s
from .maps import (GeneratorMap, HomReport, chain_map, phi, psi, psi_prime, sigma1, theta,
                   theta_chain, verify_hom, weyl_variable_count, xi, xi_inv)
from .modules import (FinDimModule, TElement, TModule, character_module, hom_dim_lie, hom_dim_T,
                      standard_module, support, t_act, trivial_module, two_dim_s1, verify_module)
from .ore import embed, is_polynomial, l_multiply, localized
from .parsing import ParseError, parse, parse_element
from .tensor import TensorAlgebra, t_multiply, tensor
from .uea import UEA, ad, extend_hom, straighten_word, u_multiply, uea
from .weyl import LaurentVector, WeylAlgebra, w_act, w_multiply, weyl

__version__ = "0.1.0"

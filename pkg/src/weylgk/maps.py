"""Generator-level algebra maps and a bracket-exhaustive homomorphism checker.

Maps provided (``n`` is the rank of the source ``s_n`` / ``gl_n``):

``phi(n)``         U(gl_n) -> D_n,                   e_ij -> x_i d_j
``xi(n)``          s_{n-1} -> a_{n-1},               e_ij -> e_ij - e_nj,
                                                     e_i -> sum_l (e_il - e_nl)
``xi_inv(n)``      a_{n-1} -> s_{n-1}                (exact matrix inverse)
``psi(n)``         U(s_n)_X -> D_n (x) U(a_{n-1})
``psi_prime(n)``   D_n (x) U(a_{n-1}) -> U(s_n)_X
``theta(n)``       U(s_n)_X -> D_n (x) U(s_{n-1}),   (id (x) xi_inv) o psi
``sigma1()``       U(s_1)_{d1} -> D_1,               d1 -> x_1, d0 -> x_1 d_1
``chain_map(n)``   U(s_n)_X -> D_n (x) D_{n-1} (x) ... (x) D_1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import Algebra, Element, add_into
from .lie import (LieAlgebraSpec, LieElement, a_pairs, bracket, e_label, gl_label,
                  gl_to_a_coords, make_a, make_gl, make_s)
from .linalg import inverse
from .ore import localized
from .tensor import TensorAlgebra, tensor
from .uea import extend_hom, uea
from .weyl import weyl


@dataclass(frozen=True, eq=False)
class GeneratorMap:
    """An algebra map given by the images of the domain's generators."""

    name: str
    domain: Algebra
    codomain: Algebra
    images: dict = field(repr=False)

    def __call__(self, u) -> Element:
        return extend_hom(self.images, self.domain(u), self.codomain)

    def __getitem__(self, label: str) -> Element:
        return self.images[label]

    def same_images(self, other: "GeneratorMap") -> bool:
        return self.images.keys() == other.images.keys() and all(
            self.images[k] == other.images[k] for k in self.images)

    def with_image(self, label: str, value: Element) -> "GeneratorMap":
        images = dict(self.images)
        images[label] = self.codomain(value)
        return GeneratorMap(self.name + "*", self.domain, self.codomain, images)


# --- phi -------------------------------------------------------------------

@lru_cache(maxsize=None)
def phi(n: int) -> GeneratorMap:
    D = weyl(n)
    images = {gl_label(i, j): D.x(i) * D.d(j)
              for i in range(1, n + 1) for j in range(1, n + 1)}
    return GeneratorMap(f"phi{n}", uea(make_gl(n)), D, images)


# --- xi ------------------------------------------------------------------------

def _xi_gl_image(n: int, label: str) -> dict:
    """xi(label) as a gl_n matrix-unit dict; ``label`` is a generator of s_{n-1}."""
    out: dict = {}
    if label.count(",") == 1:
        i, j = (int(t) for t in label[2:-1].split(","))
        add_into(out, (i, j), 1)
        add_into(out, (n, j), -1)
    else:
        i = int(label[2:-1])
        for l in range(1, n + 1):
            add_into(out, (i, l), 1)
            add_into(out, (n, l), -1)
    return out


@lru_cache(maxsize=None)
def xi_matrix(n: int) -> list[list[Fraction]]:
    """Columns: a_{n-1} coordinates of xi applied to each basis element of s_{n-1}."""
    src, dst = make_s(n - 1), make_a(n)
    cols = []
    for lab in src.basis:
        coords = gl_to_a_coords(n, _xi_gl_image(n, lab))
        cols.append([coords.get(p, Fraction(0)) for p in a_pairs(n)])
    return [[cols[c][r] for c in range(src.dim)] for r in range(dst.dim)]


@lru_cache(maxsize=None)
def xi(n: int) -> GeneratorMap:
    if n < 2:
        raise ValueError("xi needs n >= 2")
    src, dst = make_s(n - 1), make_a(n)
    A = uea(dst)
    M = xi_matrix(n)
    images = {lab: A.element({(r,): M[r][c] for r in range(dst.dim)})
              for c, lab in enumerate(src.basis)}
    return GeneratorMap(f"xi{n}", uea(src), A, images)


@lru_cache(maxsize=None)
def xi_inv(n: int) -> GeneratorMap:
    if n < 2:
        raise ValueError("xi needs n >= 2")
    src, dst = make_s(n - 1), make_a(n)
    try:
        Minv = inverse(xi_matrix(n))
    except ZeroDivisionError:
        raise RuntimeError(f"xi matrix for n={n} is singular") from None
    U = uea(src)
    images = {lab: U.element({(r,): Minv[r][c] for r in range(src.dim)})
              for c, lab in enumerate(dst.basis)}
    return GeneratorMap(f"xi_inv{n}", uea(dst), U, images)


# --- psi, psi', theta --------------------------------------------------------------

def psi_codomain(n: int) -> TensorAlgebra:
    return tensor(weyl(n), uea(make_a(n)))


def theta_codomain(n: int) -> TensorAlgebra:
    return tensor(weyl(n), uea(make_s(n - 1)))


def _psi_like(n: int, right, name: str) -> GeneratorMap:
    """Images ``x_i d_j (x) 1 + x_i x_j^-1 (x) right(a[i,j])``, ``e_i -> x_i``."""
    L = localized(n)
    D = weyl(n)
    T = tensor(D, right.codomain if isinstance(right, GeneratorMap) else right)
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            img = T.embed_slot(0, D.x(i) * D.d(j))
            if i != j:
                a = uea(make_a(n)).gen(f"a[{i},{j}]")
                r = right(a) if isinstance(right, GeneratorMap) else a
                img = img + T.pure(D.x(i) * D.xinv(j), r)
            images[gl_label(i, j)] = img
        images[e_label(i)] = T.embed_slot(0, D.x(i))
        images[f"einv[{i}]"] = T.embed_slot(0, D.xinv(i))
    return GeneratorMap(name, L, T, images)


@lru_cache(maxsize=None)
def psi(n: int) -> GeneratorMap:
    if n < 2:
        raise ValueError("psi needs n >= 2")
    return _psi_like(n, uea(make_a(n)), f"psi{n}")


@lru_cache(maxsize=None)
def psi_prime(n: int) -> GeneratorMap:
    """Inverse of :func:`psi`.  ``d_i`` goes to ``e_i^-1 e_ii``."""
    if n < 2:
        raise ValueError("psi' needs n >= 2")
    L = localized(n)
    images = {}
    for i in range(1, n + 1):
        images[f"x[{i}]"] = L.gen(e_label(i))
        images[f"xinv[{i}]"] = L.gen(f"einv[{i}]")
        images[f"d[{i}]"] = L.gen(f"einv[{i}]") * L.gen(gl_label(i, i))
    for i, j in a_pairs(n):
        images[f"a[{i},{j}]"] = (L.gen(e_label(j)) * L.gen(f"einv[{i}]") * L.gen(gl_label(i, j))
                                 - L.gen(gl_label(j, j)))
    return GeneratorMap(f"psi_prime{n}", psi_codomain(n), L, images)


@lru_cache(maxsize=None)
def theta(n: int) -> GeneratorMap:
    if n < 2:
        raise ValueError("theta needs n >= 2")
    return _psi_like(n, xi_inv(n), f"theta{n}")


def theta_via_composition(n: int) -> GeneratorMap:
    """``(id (x) xi_inv) o psi`` computed image by image, for cross-checking :func:`theta`."""
    P, X = psi(n), xi_inv(n)
    T = theta_codomain(n)
    images = {lab: P.codomain.slot_images(img, 1, X, T) for lab, img in P.images.items()}
    return GeneratorMap(f"theta{n}'", P.domain, T, images)


@lru_cache(maxsize=None)
def sigma1() -> GeneratorMap:
    D = weyl(1)
    images = {"e[1,1]": D.x(1) * D.d(1), "e[1]": D.x(1), "einv[1]": D.xinv(1)}
    return GeneratorMap("sigma1", localized(1), D, images)


# --- the iterated chain -------------------------------------------------------

def theta_chain(n: int) -> list[GeneratorMap]:
    """``[theta_n, theta_{n-1}, ..., theta_2, sigma_1]``."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return [theta(k) for k in range(n, 1, -1)] + [sigma1()]


def chain_codomain(n: int) -> Algebra:
    if n == 1:
        return weyl(1)
    return tensor(*(weyl(k) for k in range(n, 0, -1)))


def weyl_variable_count(n: int) -> int:
    """Total number of ``x``/``d`` pairs across the chain's codomain."""
    cod = chain_codomain(n)
    facs = cod.factors if isinstance(cod, TensorAlgebra) else (cod,)
    return sum(f.n for f in facs)


@lru_cache(maxsize=None)
def chain_map(n: int) -> GeneratorMap:
    """Compose the stages of :func:`theta_chain`.

    After each stage the ``U(s_{k-1})`` factor is re-embedded in its own
    localization and handed to the next stage.
    """
    if n == 1:
        return sigma1()
    stage = theta(n)
    inner = chain_map(n - 1)
    cod = chain_codomain(n)
    inner_loc = localized(n - 1)
    right = stage.codomain.factors[1]
    memo: dict = {}

    def lift(word):
        if word not in memo:
            img = inner(inner_loc.embed(right.monomial(word)))
            memo[word] = img
        return memo[word]

    images = {}
    for lab, img in stage.images.items():
        acc: dict = {}
        for (wm, word), c in img.terms.items():
            for m2, c2 in lift(word).terms.items():
                tail = m2 if n - 1 > 1 else (m2,)
                add_into(acc, (wm,) + tail, c * c2)
        images[lab] = cod.element(acc)
    return GeneratorMap(f"chain{n}", stage.domain, cod, images)


# --- verification -----------------------------------------------------------

@dataclass
class HomReport:
    ok: bool
    pairs_checked: int
    counterexample: tuple | None = None
    extra_checks: int = 0

    def summary(self) -> str:
        if self.ok:
            return f"all {self.pairs_checked} generator pairs verified"
        g, h, lhs, rhs = self.counterexample
        return f"bracket not preserved on ({g}, {h}): image of bracket = {lhs}, commutator of images = {rhs}"

    def to_dict(self) -> dict:
        out = {"ok": self.ok, "pairs_checked": self.pairs_checked, "extra_checks": self.extra_checks}
        if self.counterexample:
            g, h, lhs, rhs = self.counterexample
            out["counterexample"] = {"pair": [g, h], "image_of_bracket": str(lhs),
                                     "commutator_of_images": str(rhs)}
        return out


def _image_of_lie(gmap: GeneratorMap, x: LieElement) -> Element:
    out = gmap.codomain.zero()
    for k, c in x.coeffs.items():
        out = out + gmap.images[x.spec.label(k)] * c
    return out


def verify_hom(gmap: GeneratorMap, spec: LieAlgebraSpec, lie: bool = False) -> HomReport:
    """Check ``image([g, h]) == [image(g), image(h)]`` on every ordered basis pair.

    With ``lie=True`` the images must be linear and the right side is the
    bracket of the target Lie algebra rather than an associative commutator.
    Pairs are scanned in basis order; the first failure is reported.  For
    localized domains the relations ``e_i e_i^-1 = e_i^-1 e_i = 1`` are also
    checked when the map provides ``einv`` images.
    """
    missing = [lab for lab in spec.basis if lab not in gmap.images]
    if missing:
        raise KeyError(f"{gmap.name} has no image for {missing}")
    target_spec = gmap.codomain.spec if lie else None
    to_lie = gmap.codomain.to_lie if lie else None
    checked = 0
    for i in range(spec.dim):
        for j in range(spec.dim):
            g, h = spec.label(i), spec.label(j)
            lhs = _image_of_lie(gmap, bracket(spec, spec.basis_element(i), spec.basis_element(j)))
            if lie:
                rhs = gmap.codomain.from_lie(bracket(target_spec, to_lie(gmap.images[g]), to_lie(gmap.images[h])))
            else:
                rhs = gmap.images[g].commutator(gmap.images[h])
            checked += 1
            if lhs != rhs:
                return HomReport(False, checked, (g, h, lhs, rhs))
    extra = 0
    inverse_label = getattr(gmap.domain, "inverse_label", None)
    for lab in spec.basis:
        try:
            inv = inverse_label(lab) if inverse_label else None
        except KeyError:
            inv = None
        if inv and inv in gmap.images:
            a, b = gmap.images[lab], gmap.images[inv]
            for lhs_ in (a * b, b * a):
                extra += 1
                if lhs_ != gmap.codomain.one():
                    return HomReport(False, checked, (lab, inv, lhs_, gmap.codomain.one()), extra)
    return HomReport(True, checked, None, extra)

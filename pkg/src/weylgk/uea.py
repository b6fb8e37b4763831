"""Universal enveloping algebras in PBW normal form.

A PBW monomial is stored as a non-decreasing tuple of basis indices (the
"word" ``b_{i1} b_{i2} ... b_{ik}`` with ``i1 <= i2 <= ...``).  This is the
same data as an exponent vector; :func:`exponents` converts.

Products are straightened by the rule ``b_j b_i = b_i b_j + [b_j, b_i]`` for
``j > i``.  The fast path right-multiplies a sorted word by one generator at
a time with memoization.  :func:`straighten_word` is an independent
adjacent-swap rewriter used to cross-check confluence.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .algebra import Algebra, Element, add_into
from .lie import LieAlgebraSpec, LieElement


def exponents(word: tuple[int, ...], dim: int) -> tuple[int, ...]:
    out = [0] * dim
    for i in word:
        out[i] += 1
    return tuple(out)


def word_from_exponents(exps) -> tuple[int, ...]:
    return tuple(i for i, a in enumerate(exps) for _ in range(a))


def _run_length(word):
    return [(k, len(list(g))) for k, g in itertools.groupby(word)]


class UEA(Algebra):
    """``U(g)`` for a :class:`LieAlgebraSpec`, PBW order = basis order."""

    def __init__(self, spec: LieAlgebraSpec):
        self.spec = spec
        self.name = f"U({spec.name})"
        self._gen_cache: dict = {}

    def _key(self):
        return self.spec._key()

    def one_monomial(self):
        return ()

    def degree(self, m):
        return len(m)

    def sort_key(self, m):
        return m

    def generator_labels(self):
        return list(self.spec.basis)

    def gen(self, label):
        return self.monomial((self.spec.index(label),))

    def monomial_factors(self, m):
        return [(self.spec.label(i), k) for i, k in _run_length(m)]

    def monomial_str(self, m):
        return "*".join(lab if k == 1 else f"{lab}^{k}" for lab, k in self.monomial_factors(m))

    def from_lie(self, x: LieElement) -> Element:
        if x.spec != self.spec:
            raise ValueError("Lie element over a different algebra")
        return self.element({(i,): c for i, c in x.coeffs.items()})

    def to_lie(self, u: Element) -> LieElement:
        """Inverse of :meth:`from_lie` on elements of degree exactly one."""
        coeffs = {}
        for m, c in u.terms.items():
            if len(m) != 1:
                raise ValueError(f"{u} is not a Lie element")
            coeffs[m[0]] = c
        return LieElement(self.spec, coeffs)

    # --- straightening -------------------------------------------------
    def mul_generator(self, word: tuple, g: int) -> dict:
        """``word * b_g`` in PBW normal form (memoized)."""
        key = (word, g)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        if not word or word[-1] <= g:
            result = {word + (g,): Fraction(1)}
        else:
            head, x = word[:-1], word[-1]
            # head * x * g = (head * g) * x + head * [x, g]
            result: dict = {}
            for m, c in self.mul_generator(head, g).items():
                for m2, c2 in self.mul_generator(m, x).items():
                    add_into(result, m2, c * c2)
            for k, ck in self.spec.struct_consts(x, g).items():
                for m, c in self.mul_generator(head, k).items():
                    add_into(result, m, ck * c)
        self._gen_cache[key] = result
        return result

    def mul_monomials(self, a, b):
        acc = {a: Fraction(1)}
        for g in b:
            nxt: dict = {}
            for m, c in acc.items():
                for m2, c2 in self.mul_generator(m, g).items():
                    add_into(nxt, m2, c * c2)
            acc = nxt
        return acc

    def word(self, letters) -> Element:
        """Product of basis elements in the given (arbitrary) order."""
        out = self.one()
        for g in letters:
            g = self.spec.index(g) if isinstance(g, str) else g
            out = self.element(
                (m2, c * c2) for m, c in out.terms.items() for m2, c2 in self.mul_generator(m, g).items())
        return out


@lru_cache(maxsize=None)
def uea(spec: LieAlgebraSpec) -> UEA:
    return UEA(spec)


def u_multiply(spec: LieAlgebraSpec, u: Element, v: Element) -> Element:
    A = uea(spec)
    return A.multiply(A(u), A(v))


def ad(spec: LieAlgebraSpec, g, u: Element) -> Element:
    """``g*u - u*g`` with ``g`` a Lie element, basis label or index."""
    A = uea(spec)
    if isinstance(g, LieElement):
        ge = A.from_lie(g)
    elif isinstance(g, Element):
        ge = g
    else:
        ge = A.gen(g) if isinstance(g, str) else A.monomial((g,))
    return ge.commutator(A(u))


def straighten_word(spec: LieAlgebraSpec, word, strategy: str = "left") -> dict:
    """Rewrite an arbitrary word to PBW normal form by adjacent swaps.

    ``strategy`` picks the leftmost or rightmost out-of-order adjacent pair
    at every step.  Independent of :meth:`UEA.mul_generator`.
    """
    if strategy not in ("left", "right"):
        raise ValueError("strategy must be 'left' or 'right'")
    pending = {tuple(word): Fraction(1)}
    done: dict = {}
    while pending:
        w, c = pending.popitem()
        descents = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if not descents:
            add_into(done, w, c)
            continue
        p = descents[0] if strategy == "left" else descents[-1]
        j, i = w[p], w[p + 1]
        add_into(pending, w[:p] + (i, j) + w[p + 2:], c)
        for k, ck in spec.struct_consts(j, i).items():
            add_into(pending, w[:p] + (k,) + w[p + 2:], c * ck)
    return done


def extend_hom(gen_images, u: Element, target: Algebra | None = None) -> Element:
    """Image of ``u`` under the algebra map extending ``gen_images``.

    ``gen_images`` maps generator labels (as spelled by the domain's
    :meth:`Algebra.monomial_factors`) to elements of the target algebra.
    Each monomial is mapped factor by factor, left to right.
    """
    if target is None:
        if not gen_images:
            raise ValueError("cannot infer the target algebra from an empty map")
        target = next(iter(gen_images.values())).parent
    domain = u.parent
    powers: dict = {}
    acc: dict = {}
    for m, c in u.terms.items():
        img = target.one()
        for label, k in domain.monomial_factors(m):
            if label not in gen_images:
                raise KeyError(f"no image given for generator {label}")
            key = (label, k)
            if key not in powers:
                powers[key] = target(gen_images[label]) ** k
            img = img * powers[key]
        for m2, c2 in img.terms.items():
            add_into(acc, m2, c * c2)
    return Element(target, acc)

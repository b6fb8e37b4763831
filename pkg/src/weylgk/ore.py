"""The localization of ``U(s_n)`` at the commuting set ``{e_1^i1 ... e_n^in}``.

Normal form: a PBW-ordered ``gl_n`` word on the left times ``e^gamma`` on
the right with ``gamma`` in ``Z^n``.  Since ``[e_jk, e_m] = delta_km e_j``
and ``e_j`` commutes with every ``e_m``, for every integer ``c``

    e_m^c e_jk = e_jk e_m^c - c delta_km e_j e_m^(c-1),

which is what :meth:`LocalizedAlgebra.push` applies letter by letter.
Correction terms only drop letters from the ``gl_n`` word, so every product
stays in cleared normal form.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .algebra import Algebra, Element, add_into
from .lie import make_gl, make_s
from .uea import UEA, uea


class LocalizedAlgebra(Algebra):
    """``U(s_n)`` with every ``e_i`` inverted; monomial = ``(gl word, gamma)``."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n >= 1 required")
        self.n = n
        self.name = f"s{n}-loc"
        self.spec = make_s(n)
        self.gl = uea(make_gl(n))
        self._push_cache: dict = {}
        self._labels = {}
        for t, lab in enumerate(self.gl.spec.basis):
            self._labels[lab] = ("gl", t)
        for i in range(1, n + 1):
            self._labels[f"e[{i}]"] = ("e", i, 1)
            self._labels[f"einv[{i}]"] = ("e", i, -1)
        if n == 1:
            self._labels.update(d0=self._labels["e[1,1]"], d1=self._labels["e[1]"],
                                d1inv=self._labels["einv[1]"])

    def _key(self):
        return self.n

    def one_monomial(self):
        return ((), (0,) * self.n)

    def degree(self, m):
        return len(m[0]) + sum(abs(g) for g in m[1])

    def sort_key(self, m):
        return (m[0], tuple(-g for g in m[1]))

    def generator_labels(self):
        return list(self.spec.basis) + [f"einv[{i}]" for i in range(1, self.n + 1)]

    def _lookup(self, label):
        try:
            return self._labels[label]
        except KeyError:
            raise KeyError(f"{label!r} is not a generator of {self.name}") from None

    def gen(self, label):
        info = self._lookup(label)
        if info[0] == "gl":
            return self.monomial(((info[1],), (0,) * self.n))
        _, i, s = info
        return self.monomial(((), tuple(s if t == i - 1 else 0 for t in range(self.n))))

    def inverse_label(self, label):
        info = self._lookup(label)
        if info[0] == "e":
            return f"einv[{info[1]}]" if info[2] > 0 else f"e[{info[1]}]"
        return None

    def e_power(self, gamma) -> Element:
        return self.monomial(((), tuple(gamma)))

    def monomial_factors(self, m):
        word, gamma = m
        out = self.gl.monomial_factors(word)
        for i, g in enumerate(gamma, 1):
            if g > 0:
                out.append((f"e[{i}]", g))
            elif g < 0:
                out.append((f"einv[{i}]", -g))
        return out

    def monomial_str(self, m):
        return "*".join(lab if k == 1 else f"{lab}^{k}" for lab, k in self.monomial_factors(m))

    def push(self, gamma: tuple, word: tuple) -> dict:
        """``e^gamma * word`` as ``{(subword, gamma'): coeff}`` with ``e`` on the right."""
        key = (gamma, word)
        hit = self._push_cache.get(key)
        if hit is not None:
            return hit
        if not word:
            result = {((), gamma): Fraction(1)}
        else:
            q, rest = word[0], word[1:]
            j, k = divmod(q, self.n)  # e_{j+1, k+1}
            result: dict = {}
            for (w, g), c in self.push(gamma, rest).items():
                add_into(result, ((q,) + w, g), c)
            if gamma[k]:
                shifted = list(gamma)
                shifted[k] -= 1
                shifted[j] += 1
                for (w, g), c in self.push(tuple(shifted), rest).items():
                    add_into(result, (w, g), -gamma[k] * c)
        self._push_cache[key] = result
        return result

    def mul_monomials(self, a, b):
        (p, gamma), (q, delta) = a, b
        result: dict = {}
        for (w, g), c in self.push(gamma, q).items():
            e_part = tuple(x + y for x, y in zip(g, delta))
            for word, c2 in self.gl.mul_monomials(p, w).items():
                add_into(result, (word, e_part), c * c2)
        return result

    def embed(self, u: Element) -> Element:
        """Canonical map ``U(s_n) -> U(s_n)_{X_n}``."""
        if not isinstance(u.parent, UEA) or u.parent.spec != self.spec:
            raise ValueError(f"embed expects an element of U({self.spec.name})")
        m = self.n * self.n
        acc = {}
        for word, c in u.terms.items():
            gl_word = tuple(i for i in word if i < m)
            gamma = [0] * self.n
            for i in word:
                if i >= m:
                    gamma[i - m] += 1
            acc[(gl_word, tuple(gamma))] = c
        return Element(self, acc)

    def restrict(self, u: Element) -> Element:
        """Inverse of :meth:`embed` on polynomial elements."""
        if not is_polynomial(u):
            raise ValueError(f"{u} has negative e-exponents")
        m = self.n * self.n
        acc = {}
        for (word, gamma), c in u.terms.items():
            acc[word + tuple(itertools.chain.from_iterable([m + i] * g for i, g in enumerate(gamma)))] = c
        return Element(uea(self.spec), acc)


@lru_cache(maxsize=None)
def localized(n: int) -> LocalizedAlgebra:
    return LocalizedAlgebra(n)


def l_multiply(n: int, u: Element, v: Element) -> Element:
    A = localized(n)
    return A.multiply(A(u), A(v))


def embed(n: int, u: Element) -> Element:
    return localized(n).embed(u)


def is_polynomial(u: Element) -> bool:
    """True iff ``u`` lies in the image of :func:`embed`."""
    return all(g >= 0 for (_, gamma) in u.terms for g in gamma)

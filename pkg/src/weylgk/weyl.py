"""The Weyl algebra over Laurent polynomials, ``D_n = C[x^{+-1}, d]``.

Monomials are normal ordered ``x^alpha d^beta`` with ``alpha`` in ``Z^n`` and
``beta`` in ``Z_+^n``.  Reordering uses

    d^b x^c = sum_g  binom(b, g) (c)_g  x^(c - g) d^(b - g)

componentwise, with the falling factorial ``(c)_g`` taken literally for
negative ``c``.

:class:`LaurentVector` is a finite sum ``sum_a c_a x^(lambda + a)`` with a
fixed rational base weight ``lambda``; :func:`w_act` is the action of
``D_n`` on such vectors.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping

from .algebra import Algebra, Element, add_into, format_fraction, to_fraction


def falling(c, g: int):
    out = 1
    for t in range(g):
        out *= c - t
    return out


class WeylAlgebra(Algebra):
    """``D_n``; monomial = ``(alpha, beta)`` tuple pair."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("D_n needs n >= 1")
        self.n = n
        self.name = f"D{n}"
        self._cache: dict = {}

    def _key(self):
        return self.n

    def one_monomial(self):
        z = (0,) * self.n
        return (z, z)

    def degree(self, m):
        return sum(abs(a) for a in m[0]) + sum(m[1])

    def sort_key(self, m):
        return (tuple(-a for a in m[0]), tuple(-b for b in m[1]))

    def generator_labels(self):
        n = self.n
        return ([f"x[{i}]" for i in range(1, n + 1)] + [f"xinv[{i}]" for i in range(1, n + 1)]
                + [f"d[{i}]" for i in range(1, n + 1)])

    def _unit(self, i):
        return tuple(1 if t == i - 1 else 0 for t in range(self.n))

    def _parse_label(self, label: str):
        for kind in ("xinv", "x", "d"):
            if label.startswith(kind + "[") and label.endswith("]"):
                try:
                    i = int(label[len(kind) + 1:-1])
                except ValueError:
                    break
                if 1 <= i <= self.n:
                    return kind, i
        raise KeyError(f"{label!r} is not a generator of {self.name}")

    def gen(self, label):
        kind, i = self._parse_label(label)
        z = (0,) * self.n
        e = self._unit(i)
        if kind == "x":
            return self.monomial((e, z))
        if kind == "xinv":
            return self.monomial((tuple(-t for t in e), z))
        return self.monomial((z, e))

    def inverse_label(self, label):
        kind, i = self._parse_label(label)
        return {"x": f"xinv[{i}]", "xinv": f"x[{i}]"}.get(kind)

    def x(self, i):
        return self.gen(f"x[{i}]")

    def xinv(self, i):
        return self.gen(f"xinv[{i}]")

    def d(self, i):
        return self.gen(f"d[{i}]")

    def xpow(self, alpha, beta=None) -> Element:
        beta = beta or (0,) * self.n
        return self.monomial((tuple(alpha), tuple(beta)))

    def monomial_factors(self, m):
        alpha, beta = m
        out = []
        for i, a in enumerate(alpha, 1):
            if a > 0:
                out.append((f"x[{i}]", a))
            elif a < 0:
                out.append((f"xinv[{i}]", -a))
        out.extend((f"d[{i}]", b) for i, b in enumerate(beta, 1) if b)
        return out

    def monomial_str(self, m):
        return "*".join(lab if k == 1 else f"{lab}^{k}" for lab, k in self.monomial_factors(m))

    def mul_monomials(self, a, b):
        key = (a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        (xa, da), (xb, db) = a, b
        result: dict = {}
        # move d^da past x^xb
        ranges = [range(bb + 1) for bb in da]
        for g in itertools.product(*ranges):
            coeff = 1
            for bi, ci, gi in zip(da, xb, g):
                coeff *= comb(bi, gi) * falling(ci, gi)
                if not coeff:
                    break
            if not coeff:
                continue
            mono = (tuple(p + q - r for p, q, r in zip(xa, xb, g)),
                    tuple(p - r + q for p, r, q in zip(da, g, db)))
            add_into(result, mono, Fraction(coeff))
        self._cache[key] = result
        return result


@lru_cache(maxsize=None)
def weyl(n: int) -> WeylAlgebra:
    return WeylAlgebra(n)


def w_multiply(u: Element, v: Element) -> Element:
    if not isinstance(u.parent, WeylAlgebra) or u.parent != v.parent:
        raise ValueError("w_multiply needs two elements of the same D_n")
    return u * v


class LaurentVector:
    """``sum_alpha c_alpha x^(lam + alpha)`` with exact rational ``lam``."""

    __slots__ = ("lam", "terms")

    def __init__(self, lam, terms: Mapping | None = None):
        self.lam = tuple(to_fraction(t) for t in lam)
        acc: dict = {}
        for a, c in (terms or {}).items():
            if len(a) != len(self.lam):
                raise ValueError("exponent shift has the wrong length")
            add_into(acc, tuple(a), to_fraction(c))
        self.terms = acc

    @classmethod
    def basis(cls, lam, alpha=None) -> "LaurentVector":
        alpha = alpha if alpha is not None else (0,) * len(lam)
        return cls(lam, {tuple(alpha): 1})

    @property
    def n(self):
        return len(self.lam)

    def __add__(self, other):
        if self.lam != other.lam:
            raise ValueError("base weights differ")
        acc = dict(self.terms)
        for a, c in other.terms.items():
            add_into(acc, a, c)
        return LaurentVector._raw(self.lam, acc)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        c = to_fraction(c)
        return LaurentVector._raw(self.lam, {a: c * v for a, v in self.terms.items()} if c else {})

    __rmul__ = __mul__

    @classmethod
    def _raw(cls, lam, terms):
        out = cls.__new__(cls)
        out.lam = lam
        out.terms = terms
        return out

    def __eq__(self, other):
        return isinstance(other, LaurentVector) and self.lam == other.lam and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def support(self) -> set:
        return {tuple(l + a for l, a in zip(self.lam, alpha)) for alpha in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (a, c) in enumerate(sorted(self.terms.items())):
            shift = ",".join(str(t) for t in a)
            body = f"x^(lam+({shift}))"
            body = body if abs(c) == 1 else f"{format_fraction(abs(c))}*{body}"
            parts.append(("-" if c < 0 else "") + body if i == 0 else f" {'-' if c < 0 else '+'} {body}")
        return "".join(parts)

    __repr__ = __str__


def act_monomial(m, lam, alpha):
    """``x^a d^b . x^(lam + alpha)`` as ``(coefficient, new alpha)``."""
    xa, db = m
    coeff = Fraction(1)
    for l, a, b in zip(lam, alpha, db):
        if b:
            coeff *= falling(l + a, b)
            if not coeff:
                return coeff, None
    return coeff, tuple(a - b + x for a, b, x in zip(alpha, db, xa))


def w_act(u: Element, f: LaurentVector) -> LaurentVector:
    """Action of ``u`` in ``D_n`` on ``f``: ``x_i`` shifts, ``d_i`` differentiates."""
    if not isinstance(u.parent, WeylAlgebra) or u.parent.n != f.n:
        raise ValueError("dimension mismatch between operator and vector")
    acc: dict = {}
    for m, c in u.terms.items():
        for alpha, v in f.terms.items():
            k, beta = act_monomial(m, f.lam, alpha)
            if k:
                add_into(acc, beta, c * v * k)
    return LaurentVector._raw(f.lam, acc)

"""Tensor products of the algebras above, multiplied slot by slot."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import Algebra, Element, add_into


class TensorAlgebra(Algebra):
    """``A_1 (x) A_2 (x) ... (x) A_k``; monomial = tuple of slot monomials.

    Printed as ``left @ right`` with ``1`` standing in for a trivial slot.
    """

    def __init__(self, factors):
        self.factors = tuple(factors)
        if len(self.factors) < 2:
            raise ValueError("a tensor product needs at least two factors")
        self.name = " (x) ".join(str(f) for f in self.factors)
        owner: dict = {}
        for s, f in enumerate(self.factors):
            for lab in f.generator_labels():
                owner.setdefault(lab, []).append(s)
        self._owner = owner

    def _key(self):
        return tuple((type(f).__name__, f._key()) for f in self.factors)

    def one_monomial(self):
        return tuple(f.one_monomial() for f in self.factors)

    def degree(self, m):
        return sum(f.degree(x) for f, x in zip(self.factors, m))

    def sort_key(self, m):
        return tuple((-f.degree(x), f.sort_key(x)) for f, x in zip(self.factors, m))

    def generator_labels(self):
        return [lab for f in self.factors for lab in f.generator_labels()]

    def slot_of(self, label: str) -> int:
        slots = self._owner.get(label)
        if not slots:
            raise KeyError(f"{label!r} is not a generator of {self.name}")
        if len(slots) > 1:
            raise KeyError(f"{label!r} is ambiguous in {self.name}; use '@' to separate slots")
        return slots[0]

    def gen(self, label):
        return self.embed_slot(self.slot_of(label), self.factors[self.slot_of(label)].gen(label))

    def inverse_label(self, label):
        return self.factors[self.slot_of(label)].inverse_label(label)

    def monomial_factors(self, m):
        out = []
        for f, x in zip(self.factors, m):
            out.extend(f.monomial_factors(x))
        return out

    def monomial_str(self, m):
        parts = []
        for f, x in zip(self.factors, m):
            parts.append("1" if x == f.one_monomial() else f.monomial_str(x))
        return " @ ".join(parts)

    def mul_monomials(self, a, b):
        acc = {(): Fraction(1)}
        for f, x, y in zip(self.factors, a, b):
            prod = f.mul_monomials(x, y)
            acc = {m + (m2,): c * c2 for m, c in acc.items() for m2, c2 in prod.items()}
        return acc

    def embed_slot(self, slot: int, u: Element) -> Element:
        """``1 (x) .. (x) u (x) .. (x) 1`` with ``u`` in position ``slot``."""
        one = list(self.one_monomial())
        acc = {}
        for m, c in self.factors[slot](u).terms.items():
            mono = list(one)
            mono[slot] = m
            acc[tuple(mono)] = c
        return Element(self, acc)

    def pure(self, *parts: Element) -> Element:
        """``parts[0] (x) parts[1] (x) ...``."""
        if len(parts) != len(self.factors):
            raise ValueError("wrong number of tensor factors")
        acc = {(): Fraction(1)}
        for f, u in zip(self.factors, parts):
            u = f(u)
            acc = {m + (m2,): c * c2 for m, c in acc.items() for m2, c2 in u.terms.items()}
        return Element(self, acc)

    def slot_images(self, u: Element, slot: int, fmap, codomain: "TensorAlgebra") -> Element:
        """Apply ``fmap`` (element -> element) to one slot of every term."""
        acc: dict = {}
        for m, c in u.terms.items():
            img = fmap(self.factors[slot].monomial(m[slot]))
            for m2, c2 in img.terms.items():
                mono = list(m)
                mono[slot] = m2
                add_into(acc, tuple(mono), c * c2)
        return codomain.element(acc)


@lru_cache(maxsize=None)
def tensor(*factors) -> TensorAlgebra:
    return TensorAlgebra(factors)


def t_multiply(u: Element, v: Element) -> Element:
    if not isinstance(u.parent, TensorAlgebra) or u.parent != v.parent:
        raise ValueError("t_multiply needs two elements of the same tensor algebra")
    return u * v

"""Parent/element scaffolding shared by every algebra in the package.

An :class:`Algebra` knows how to multiply two of its monomials and how to
spell a monomial as an ordered product of named generators.  An
:class:`Element` is an immutable sparse map ``monomial -> Fraction`` attached
to its parent.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Iterator, Mapping

Monomial = Hashable


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions, gmpy ``mpq`` and ``"p/q"`` strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot use {value!r} as an exact rational")


def format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def add_into(acc: dict, mono, coeff) -> None:
    """``acc[mono] += coeff`` with pruning of zeros."""
    if not coeff:
        return
    new = acc.get(mono, 0) + coeff
    if new:
        acc[mono] = new
    else:
        del acc[mono]


class Algebra:
    """Base parent.  Subclasses implement the monomial-level hooks."""

    name = "algebra"

    def _key(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    # --- hooks -----------------------------------------------------------
    def one_monomial(self) -> Monomial:
        raise NotImplementedError

    def mul_monomials(self, a: Monomial, b: Monomial) -> Mapping[Monomial, Fraction]:
        raise NotImplementedError

    def monomial_factors(self, m: Monomial) -> list[tuple[str, int]]:
        """Ordered ``(generator label, positive exponent)`` list whose product is ``m``."""
        raise NotImplementedError

    def monomial_str(self, m: Monomial) -> str:
        raise NotImplementedError

    def degree(self, m: Monomial) -> int:
        raise NotImplementedError

    def sort_key(self, m: Monomial):
        return m

    def generator_labels(self) -> list[str]:
        raise NotImplementedError

    def gen(self, label: str) -> "Element":
        raise NotImplementedError

    def inverse_label(self, label: str) -> str | None:
        """Label of the inverse generator, if the algebra has one."""
        return None

    # --- element construction -------------------------------------------
    def element(self, terms: Mapping | Iterable = ()) -> "Element":
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict = {}
        for m, c in terms:
            add_into(acc, m, to_fraction(c))
        return Element(self, acc)

    def monomial(self, m: Monomial, coeff=1) -> "Element":
        return self.element({m: coeff})

    def one(self) -> "Element":
        return self.monomial(self.one_monomial())

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c) -> "Element":
        return self.monomial(self.one_monomial(), c)

    def __call__(self, x) -> "Element":
        if isinstance(x, Element):
            if x.parent != self:
                raise ValueError(f"element of {x.parent} is not in {self}")
            return x
        if isinstance(x, str):
            from .parsing import parse_element

            return parse_element(x, self)
        return self.scalar(x)

    def multiply(self, u: "Element", v: "Element") -> "Element":
        acc: dict = {}
        for a, ca in u.terms.items():
            for b, cb in v.terms.items():
                for m, c in self.mul_monomials(a, b).items():
                    add_into(acc, m, ca * cb * c)
        return Element(self, acc)

    def __repr__(self):
        return self.name

    def __str__(self):
        return self.name


class Element:
    """Immutable finite linear combination of monomials of ``parent``."""

    __slots__ = ("parent", "terms", "_hash")

    def __init__(self, parent: Algebra, terms: dict):
        self.parent = parent
        self.terms = terms
        self._hash = None

    # --- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.parent != self.parent:
                raise ValueError(f"cannot combine elements of {self.parent} and {other.parent}")
            return other
        return self.parent.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            add_into(acc, m, c)
        return Element(self.parent, acc)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.parent, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.parent.multiply(self, self._coerce(other))
        c = to_fraction(other)
        if not c:
            return self.parent.zero()
        return Element(self.parent, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, Element):
            return self._coerce(other) * self
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined on invertible generators")
        result = self.parent.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def commutator(self, other) -> "Element":
        other = self._coerce(other)
        return self * other - other * self

    # --- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Element):
            return self.parent == other.parent and self.terms == other.terms
        try:
            return self.terms == self.parent.scalar(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.sorted_terms())

    # --- inspection -------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical printing order: higher degree first, then by key."""
        P = self.parent
        return sorted(self.terms.items(), key=lambda mc: (-P.degree(mc[0]), P.sort_key(mc[0])))

    def coefficient(self, m) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def is_scalar(self) -> bool:
        one = self.parent.one_monomial()
        return all(m == one for m in self.terms)

    def degree(self) -> int:
        return max((self.parent.degree(m) for m in self.terms), default=-1)

    def __str__(self):
        if not self.terms:
            return "0"
        one = self.parent.one_monomial()
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if m == one:
                body = format_fraction(a)
            else:
                mono = self.parent.monomial_str(m)
                body = mono if a == 1 else f"{format_fraction(a)}*{mono}"
            if i == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"<{self.parent}: {self}>"

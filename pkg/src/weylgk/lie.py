"""Finite-dimensional Lie algebras given by rational structure constants.

Concrete algebras used throughout the package:

* ``make_gl(n)``: matrix units ``e[i,j]`` ordered lexicographically,
  ``[e_ij, e_kl] = delta_jk e_il - delta_li e_kj``.
* ``make_s(n)``: ``gl_n`` extended by its natural module, basis
  ``e[i,j]`` followed by ``e[1] .. e[n]``, ``[e_ij, e_k] = delta_jk e_i``.
  For ``n = 1`` the labels ``d0``/``d1`` are accepted for ``e[1,1]``/``e[1]``.
* ``make_a(n)``: the span of ``e_ij - e_jj`` inside ``gl_n``, basis
  ``a[i,j] = e_ij - e_jj`` for ``i != j``.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .algebra import add_into, format_fraction, to_fraction


class LieAlgebraSpec:
    """Labeled basis plus structure constants ``[b_i, b_j] = sum_k c^k_ij b_k``.

    Only pairs with a nonzero bracket are stored; ``struct_consts`` returns
    the bracket of any basis pair as a sparse ``{k: Fraction}`` dict.
    """

    def __init__(self, name: str, basis, brackets: Mapping, aliases: Mapping | None = None):
        self.name = name
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self._index = {lab: i for i, lab in enumerate(self.basis)}
        for alias, target in (aliases or {}).items():
            self._index[alias] = self._index[target]
        self.aliases = dict(aliases or {})
        table: dict = {}
        for (i, j), vec in brackets.items():
            vec = {k: to_fraction(c) for k, c in vec.items() if c}
            if vec:
                table[(i, j)] = vec
        self._table = table

    def struct_consts(self, i: int, j: int) -> dict[int, Fraction]:
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError(f"basis index out of range for {self.name}: ({i}, {j})")
        return self._table.get((i, j), {})

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not a generator of {self.name}") from None

    def label(self, i: int) -> str:
        return self.basis[i]

    def element(self, coeffs) -> "LieElement":
        """Build a :class:`LieElement` from ``{label or index: coefficient}``."""
        acc: dict = {}
        for key, c in dict(coeffs).items():
            i = self.index(key) if isinstance(key, str) else key
            add_into(acc, i, to_fraction(c))
        return LieElement(self, acc)

    def basis_element(self, key) -> "LieElement":
        return self.element({key: 1})

    def _key(self):
        return (self.name, self.basis, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self._table.items())))

    def __eq__(self, other):
        return isinstance(other, LieAlgebraSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"LieAlgebraSpec({self.name!r}, dim={self.dim})"

    # --- serialization ----------------------------------------------------
    def to_dict(self) -> dict:
        brackets = []
        for (i, j), vec in sorted(self._table.items()):
            brackets.append([i, j, [[k, format_fraction(c)] for k, c in sorted(vec.items())]])
        return {"name": self.name, "dim": self.dim, "basis": list(self.basis), "brackets": brackets}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "LieAlgebraSpec":
        basis = list(data["basis"])
        if "dim" in data and data["dim"] != len(basis):
            raise ValueError(f"dim {data['dim']} does not match {len(basis)} basis labels")
        table = {}
        for i, j, vec in data.get("brackets", []):
            table[(int(i), int(j))] = {int(k): to_fraction(c) for k, c in vec}
        return cls(data["name"], basis, table)

    @classmethod
    def from_json(cls, text: str) -> "LieAlgebraSpec":
        return cls.from_dict(json.loads(text))


class LieElement:
    """Sparse vector ``{basis index: Fraction}`` in a Lie algebra."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: LieAlgebraSpec, coeffs: dict):
        self.spec = spec
        self.coeffs = coeffs

    def __add__(self, other):
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            add_into(acc, k, c)
        return LieElement(self.spec, acc)

    def __neg__(self):
        return LieElement(self.spec, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = to_fraction(c)
        if not c:
            return LieElement(self.spec, {})
        return LieElement(self.spec, {k: c * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, (k, c) in enumerate(sorted(self.coeffs.items())):
            lab = self.spec.label(k)
            a = abs(c)
            body = lab if a == 1 else f"{format_fraction(a)}*{lab}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(parts)

    __repr__ = __str__


def bracket(spec: LieAlgebraSpec, u: LieElement, v: LieElement) -> LieElement:
    """Bilinear extension of the structure constants."""
    acc: dict = {}
    for i, a in u.coeffs.items():
        for j, b in v.coeffs.items():
            for k, c in spec.struct_consts(i, j).items():
                add_into(acc, k, a * b * c)
    return LieElement(spec, acc)


def jacobiator(spec: LieAlgebraSpec, i: int, j: int, k: int) -> LieElement:
    x, y, z = (spec.basis_element(t) for t in (i, j, k))
    return (bracket(spec, x, bracket(spec, y, z))
            + bracket(spec, y, bracket(spec, z, x))
            + bracket(spec, z, bracket(spec, x, y)))


def check_antisymmetry(spec: LieAlgebraSpec) -> bool:
    for i in range(spec.dim):
        if spec.struct_consts(i, i):
            return False
        for j in range(i + 1, spec.dim):
            a = spec.struct_consts(i, j)
            b = spec.struct_consts(j, i)
            if a != {k: -c for k, c in b.items()}:
                return False
    return True


def check_jacobi(spec: LieAlgebraSpec) -> bool:
    """True iff the Jacobi identity holds on every basis triple."""
    return all(not jacobiator(spec, i, j, k)
               for i, j, k in itertools.combinations_with_replacement(range(spec.dim), 3))


def _antisymmetrize(table: dict) -> dict:
    full = dict(table)
    for (i, j), vec in table.items():
        full[(j, i)] = {k: -c for k, c in vec.items()}
    return full


def gl_label(i: int, j: int) -> str:
    return f"e[{i},{j}]"


def e_label(i: int) -> str:
    return f"e[{i}]"


def a_label(i: int, j: int) -> str:
    return f"a[{i},{j}]"


def gl_bracket(i, j, k, l):
    """``[e_ij, e_kl]`` as a ``{(p, q): coeff}`` dict of matrix units."""
    out: dict = {}
    if j == k:
        add_into(out, (i, l), 1)
    if l == i:
        add_into(out, (k, j), -1)
    return out


@lru_cache(maxsize=None)
def make_gl(n: int) -> LieAlgebraSpec:
    if n < 1:
        raise ValueError("gl_n needs n >= 1")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    idx = {p: t for t, p in enumerate(pairs)}
    table = {}
    for (i, j), (k, l) in itertools.product(pairs, repeat=2):
        vec = {idx[p]: c for p, c in gl_bracket(i, j, k, l).items()}
        if vec:
            table[(idx[(i, j)], idx[(k, l)])] = vec
    return LieAlgebraSpec(f"gl{n}", [gl_label(*p) for p in pairs], table)


@lru_cache(maxsize=None)
def make_s(n: int) -> LieAlgebraSpec:
    if n < 1:
        raise ValueError("s_n needs n >= 1")
    gl = make_gl(n)
    m = n * n
    table = {key: gl.struct_consts(*key) for key in itertools.product(range(m), repeat=2)
             if gl.struct_consts(*key)}
    for t, label in enumerate(gl.basis):
        i, j = divmod(t, n)
        # [e_ij, e_k] = delta_jk e_i
        table[(t, m + j)] = {m + i: Fraction(1)}
    aliases = {"d0": gl_label(1, 1), "d1": e_label(1)} if n == 1 else None
    basis = list(gl.basis) + [e_label(k) for k in range(1, n + 1)]
    return LieAlgebraSpec(f"s{n}", basis, _antisymmetrize(table), aliases)


def a_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def gl_to_a_coords(n: int, mat: Mapping[tuple[int, int], Fraction]) -> dict[tuple[int, int], Fraction]:
    """Coordinates of a ``gl_n`` element in the ``a[i,j]`` basis.

    The element lies in the span iff every column sums to zero; then the
    coordinate on ``a[i,j]`` is simply its ``(i, j)`` entry.
    """
    for j in range(1, n + 1):
        if sum(mat.get((i, j), 0) for i in range(1, n + 1)) != 0:
            raise ValueError(f"column {j} does not sum to zero; not in span of e_ij - e_jj")
    return {(i, j): c for (i, j), c in mat.items() if i != j and c}


def a_to_gl(n: int, coords: Mapping[tuple[int, int], Fraction]) -> dict[tuple[int, int], Fraction]:
    out: dict = {}
    for (i, j), c in coords.items():
        add_into(out, (i, j), c)
        add_into(out, (j, j), -c)
    return out


@lru_cache(maxsize=None)
def make_a(n: int) -> LieAlgebraSpec:
    """The Lie algebra spanned by ``e_ij - e_jj`` in ``gl_n`` (dimension ``n^2 - n``)."""
    if n < 2:
        raise ValueError("a_{n-1} needs n >= 2")
    pairs = a_pairs(n)
    idx = {p: t for t, p in enumerate(pairs)}
    table = {}
    for p, q in itertools.product(pairs, repeat=2):
        acc: dict = {}
        for (i, j), c1 in a_to_gl(n, {p: 1}).items():
            for (k, l), c2 in a_to_gl(n, {q: 1}).items():
                for r, c in gl_bracket(i, j, k, l).items():
                    add_into(acc, r, c1 * c2 * c)
        vec = {idx[r]: c for r, c in gl_to_a_coords(n, acc).items()}
        if vec:
            table[(idx[p], idx[q])] = vec
    return LieAlgebraSpec(f"a{n - 1}", [a_label(*p) for p in pairs], table)

"""Weight modules ``T(lam, V) = x^lam A_n (x) V`` of ``s_n`` and their Hom spaces.

``V`` is a finite-dimensional ``s_{n-1}``-module given by explicit rational
matrices.  ``s_n`` (and its localization) acts on ``T(lam, V)`` through
``theta(n)``: the ``D_n`` factor acts on ``x^(lam + alpha)`` and the
``U(s_{n-1})`` factor acts on ``V``.

Vectors are finitely supported, so module checks are exact on the whole
infinite module; only :func:`hom_dim_T` truncates to a box of weights.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .algebra import Element, add_into, format_fraction, to_fraction
from .lie import LieAlgebraSpec, make_s
from .linalg import nullspace
from .maps import GeneratorMap, theta
from .ore import localized
from .weyl import act_monomial


def _matrix(rows, dim) -> np.ndarray:
    M = np.empty((dim, dim), dtype=object)
    rows = list(rows)
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ValueError(f"expected a {dim}x{dim} matrix")
    for i, row in enumerate(rows):
        for j, c in enumerate(row):
            M[i, j] = to_fraction(c)
    return M


def _zero(dim) -> np.ndarray:
    return _matrix([[0] * dim for _ in range(dim)], dim)


class FinDimModule:
    """Finite-dimensional module over ``spec``: one matrix per basis element."""

    def __init__(self, spec: LieAlgebraSpec, dim: int, action: Mapping, name: str = ""):
        self.spec = spec
        self.dim = dim
        self.name = name or f"V({spec.name}, dim {dim})"
        mats = {}
        for label, rows in action.items():
            mats[spec.index(label)] = rows if isinstance(rows, np.ndarray) else _matrix(rows, dim)
        for i in range(spec.dim):
            mats.setdefault(i, _zero(dim))
        self.matrices = mats
        self._word_cache: dict = {}

    def matrix(self, g) -> np.ndarray:
        return self.matrices[self.spec.index(g) if isinstance(g, str) else g]

    def failures(self):
        """Basis pairs ``(g, h)`` where ``rho([g,h]) != [rho(g), rho(h)]``."""
        bad = []
        for i, j in itertools.product(range(self.spec.dim), repeat=2):
            lhs = _zero(self.dim)
            for k, c in self.spec.struct_consts(i, j).items():
                lhs = lhs + self.matrices[k] * c
            A, B = self.matrices[i], self.matrices[j]
            if not np.array_equal(lhs, A.dot(B) - B.dot(A)):
                bad.append((self.spec.label(i), self.spec.label(j)))
        return bad

    def is_module(self) -> bool:
        return not self.failures()

    def word_matrix(self, word: tuple) -> np.ndarray:
        """``rho(b_i1) rho(b_i2) ...`` for a PBW word."""
        hit = self._word_cache.get(word)
        if hit is None:
            hit = np.identity(self.dim, dtype=object) * Fraction(1)
            for i in word:
                hit = hit.dot(self.matrices[i])
            self._word_cache[word] = hit
        return hit

    # --- file format ---------------------------------------------------------
    def to_dict(self) -> dict:
        n = int(self.spec.name[1:]) if self.spec.name.startswith("s") else None
        gens = {self.spec.label(i): [[format_fraction(c) for c in row] for row in M.tolist()]
                for i, M in sorted(self.matrices.items())}
        return {"n": n, "dim": self.dim, "generators": gens}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping, name: str = "") -> "FinDimModule":
        spec = make_s(int(data["n"]))
        return cls(spec, int(data["dim"]), data["generators"], name)

    @classmethod
    def from_json(cls, text: str, name: str = "") -> "FinDimModule":
        return cls.from_dict(json.loads(text), name)

    def __repr__(self):
        return f"<{self.name}>"


# --- stock modules ------------------------------------------------------------

def trivial_module(m: int) -> FinDimModule:
    return FinDimModule(make_s(m), 1, {}, f"trivial s{m}")


def character_module(m: int, c) -> FinDimModule:
    """One-dimensional module ``e_ii -> c``, everything else ``0`` (for s_1: ``d0 -> c``)."""
    return FinDimModule(make_s(m), 1, {f"e[{i},{i}]": [[c]] for i in range(1, m + 1)},
                        f"char s{m} ({format_fraction(to_fraction(c))})")


def two_dim_s1() -> FinDimModule:
    """Indecomposable, non-semisimple: ``d0 -> diag(0,1)``, ``d1 -> E_21``."""
    return FinDimModule(make_s(1), 2, {"d0": [[0, 0], [0, 1]], "d1": [[0, 0], [1, 0]]},
                        "two-dim s1")


def standard_module(m: int) -> FinDimModule:
    """``s_m`` as block matrices ``[[A, v], [0, 0]]`` acting on ``C^(m+1)``."""
    dim = m + 1
    action = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            M = [[0] * dim for _ in range(dim)]
            M[i - 1][j - 1] = 1
            action[f"e[{i},{j}]"] = M
        M = [[0] * dim for _ in range(dim)]
        M[i - 1][m] = 1
        action[f"e[{i}]"] = M
    return FinDimModule(make_s(m), dim, action, f"standard s{m}")


# --- T(lam, V) ------------------------------------------------------------------

class TElement:
    """``sum c x^(lam + alpha) (x) v_k``, keyed by ``(alpha, k)``; ``k`` is 0-based."""

    __slots__ = ("lam", "terms")

    def __init__(self, lam, terms: Mapping | None = None):
        self.lam = tuple(to_fraction(t) for t in lam)
        acc: dict = {}
        for (alpha, k), c in (terms or {}).items():
            add_into(acc, (tuple(alpha), k), to_fraction(c))
        self.terms = acc

    @classmethod
    def basis(cls, lam, alpha, k=0) -> "TElement":
        return cls(lam, {(tuple(alpha), k): 1})

    def __add__(self, other):
        acc = dict(self.terms)
        for key, c in other.terms.items():
            add_into(acc, key, c)
        out = TElement(self.lam)
        out.terms = acc
        return out

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        c = to_fraction(c)
        out = TElement(self.lam)
        out.terms = {k: c * v for k, v in self.terms.items()} if c else {}
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, TElement) and self.lam == other.lam and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def support(self) -> set:
        return support(self)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, ((alpha, k), c) in enumerate(sorted(self.terms.items())):
            body = f"x^(lam+({','.join(map(str, alpha))}))@v[{k + 1}]"
            body = body if abs(c) == 1 else f"{format_fraction(abs(c))}*{body}"
            parts.append(("-" if c < 0 else "") + body if i == 0 else f" {'-' if c < 0 else '+'} {body}")
        return "".join(parts)

    __repr__ = __str__


def support(vec: TElement) -> set:
    """Weights ``lam + alpha`` carried by the terms of ``vec``."""
    return {tuple(l + a for l, a in zip(vec.lam, alpha)) for (alpha, _) in vec.terms}


def act_tensor(t: Element, V: FinDimModule, vec: TElement) -> TElement:
    """Apply ``t`` in ``D_n (x) U(s_{n-1})`` to ``vec`` in ``T(lam, V)``."""
    acc: dict = {}
    lam = vec.lam
    for (wm, word), c in t.terms.items():
        M = V.word_matrix(word)
        for (alpha, k), v in vec.terms.items():
            coef, beta = act_monomial(wm, lam, alpha)
            if not coef:
                continue
            for r in range(V.dim):
                mk = M[r, k]
                if mk:
                    add_into(acc, (beta, r), c * coef * v * mk)
    out = TElement(lam)
    out.terms = acc
    return out


class TModule:
    """``T(lam, V)`` as a module over ``U(s_n)`` localized at the ``e_i``."""

    def __init__(self, n: int, lam, V: FinDimModule, theta_map: GeneratorMap | None = None):
        if n < 2:
            raise ValueError("T(lam, V) needs n >= 2")
        if V.spec != make_s(n - 1):
            raise ValueError(f"V must be an s{n - 1}-module, got a module over {V.spec.name}")
        lam = tuple(to_fraction(c) for c in lam)
        if len(lam) != n:
            raise ValueError(f"lambda needs {n} components")
        self.n, self.lam, self.V = n, lam, V
        self.theta = theta_map or theta(n)
        self.spec = make_s(n)
        self.loc = localized(n)

    def vector(self, alpha, k=0) -> TElement:
        if len(alpha) != self.n or not 0 <= k < self.V.dim:
            raise ValueError("vector index out of range")
        return TElement.basis(self.lam, alpha, k)

    def act(self, u, vec: TElement) -> TElement:
        """``u . vec`` for ``u`` a generator label or an element of the localization."""
        if vec.lam != self.lam:
            raise ValueError("vector belongs to a different T(lam, V)")
        if isinstance(u, str) and u in self.theta.images:
            img = self.theta.images[u]
        else:
            img = self.theta(self.loc(u))
        return act_tensor(img, self.V, vec)

    def generator_image(self, label: str) -> Element:
        return self.theta.images[label]


def t_act(n: int, lam, V: FinDimModule, u, vec: TElement) -> TElement:
    return TModule(n, lam, V).act(u, vec)


def box(n: int, radius: int):
    return itertools.product(range(-radius, radius + 1), repeat=n)


@dataclass
class ModuleReport:
    ok: bool
    checked: int
    counterexample: tuple | None = None

    def summary(self) -> str:
        if self.ok:
            return f"module axioms hold on {self.checked} (pair, vector) checks"
        g, h, w = self.counterexample
        return f"[{g}, {h}] acts wrongly on {w}"


def verify_module(n: int, lam, V: FinDimModule, radius: int,
                  theta_map: GeneratorMap | None = None) -> ModuleReport:
    """``[g,h].w == g.(h.w) - h.(g.w)`` for all generator pairs of ``s_n`` and
    every basis vector ``x^(lam+alpha) (x) v_k`` with ``|alpha|_inf <= radius``."""
    if radius < 2:
        raise ValueError("radius must be at least 2")
    T = TModule(n, lam, V, theta_map)
    S = T.spec
    ops = [T.generator_image(lab) for lab in S.basis]
    checked = 0
    for alpha in box(n, radius):
        for k in range(V.dim):
            w = T.vector(alpha, k)
            hw = [act_tensor(op, V, w) for op in ops]
            for i, j in itertools.product(range(S.dim), repeat=2):
                lhs = TElement(T.lam)
                for t, c in S.struct_consts(i, j).items():
                    lhs = lhs + hw[t] * c
                rhs = act_tensor(ops[i], V, hw[j]) - act_tensor(ops[j], V, hw[i])
                checked += 1
                if lhs != rhs:
                    return ModuleReport(False, checked, (S.label(i), S.label(j), w))
    return ModuleReport(True, checked)


def hom_dim_lie(V: FinDimModule, W: FinDimModule) -> int:
    """``dim Hom(V, W)``: matrices ``A`` with ``A rho_V(g) = rho_W(g) A`` for all ``g``."""
    if V.spec != W.spec:
        raise ValueError("modules over different Lie algebras")
    dv, dw = V.dim, W.dim
    rows = []
    for g in range(V.spec.dim):
        P, Q = V.matrices[g], W.matrices[g]
        for r in range(dw):
            for c in range(dv):
                row: dict = {}
                for k in range(dv):
                    add_into(row, r * dv + k, P[k, c])
                for k in range(dw):
                    add_into(row, k * dv + c, -Q[r, k])
                if row:
                    rows.append(row)
    return len(nullspace(rows, dv * dw))


@dataclass
class HomDimResult:
    dim: int
    dim_previous: int
    radius: int

    @property
    def stable(self) -> bool:
        return self.dim == self.dim_previous

    def summary(self) -> str:
        if not self.stable:
            return (f"inconclusive: dimension {self.dim} at radius {self.radius} "
                    f"but {self.dim_previous} at radius {self.radius - 1}")
        return f"hom dimension {self.dim} (stable at radii {self.radius - 1} and {self.radius})"


def _truncated_hom_dim(TV: TModule, TW: TModule, radius: int) -> int:
    n, dv, dw = TV.n, TV.V.dim, TW.V.dim
    weights = list(box(n, radius))
    inside = set(weights)
    col = {}
    for alpha in weights:
        for r in range(dw):
            for c in range(dv):
                col[(alpha, r, c)] = len(col)
    rows = []
    for lab in TV.spec.basis:
        op = TV.generator_image(lab)
        for alpha in weights:
            # g.(x^a (x) v_k) on both sides must stay inside the box
            imgs_v = [act_tensor(op, TV.V, TV.vector(alpha, k)) for k in range(dv)]
            imgs_w = [act_tensor(op, TW.V, TW.vector(alpha, r)) for r in range(dw)]
            targets = {beta for img in imgs_v + imgs_w for (beta, _) in img.terms}
            if not targets <= inside:
                continue
            for k in range(dv):
                eqs: dict = {}
                # A(g.w)
                for (beta, k2), c in imgs_v[k].terms.items():
                    for r2 in range(dw):
                        add_into(eqs.setdefault((beta, r2), {}), col[(beta, r2, k2)], c)
                # g.(A w) with A w = sum_r A_alpha[r, k] w_r
                for r in range(dw):
                    for (beta, r2), c in imgs_w[r].terms.items():
                        add_into(eqs.setdefault((beta, r2), {}), col[(alpha, r, k)], -c)
                rows.extend(row for row in eqs.values() if row)
    return len(nullspace(rows, len(col)))


def hom_dim_T(n: int, lam, V: FinDimModule, W: FinDimModule, radius: int) -> HomDimResult:
    """Dimension of weight-preserving ``s_n``-maps ``T(lam, V) -> T(lam, W)`` on a
    truncated weight box, computed at ``radius`` and ``radius - 1``."""
    if radius < 2:
        raise ValueError("radius must be at least 2")
    TV, TW = TModule(n, lam, V), TModule(n, lam, W)
    return HomDimResult(_truncated_hom_dim(TV, TW, radius), _truncated_hom_dim(TV, TW, radius - 1), radius)


def generic_weight(n: int) -> tuple[Fraction, ...]:
    """Pairwise distinct components ``i / p_i`` over odd primes ``p_i >= 3``."""
    dens = [p for p in range(3, 10 * n + 10) if all(p % q for q in range(2, p))][:n]
    return tuple(Fraction(i + 1, d) for i, d in enumerate(dens))

"""Casimir elements of ``U(gl_n)`` and degree-bounded centralizer scans."""

from __future__ import annotations

import itertools

from .algebra import Element, add_into
from .lie import LieAlgebraSpec, gl_label, make_gl
from .linalg import nullspace
from .uea import ad, uea


def casimir_terms(n: int, k: int):
    """The ``n**k`` unnormalized words ``E_{i1 i2} E_{i2 i3} ... E_{ik i1}``."""
    for idx in itertools.product(range(1, n + 1), repeat=k):
        yield [gl_label(idx[t], idx[(t + 1) % k]) for t in range(k)]


def casimir(n: int, k: int) -> Element:
    """``c_k = sum over (i1..ik) of E_{i1 i2} ... E_{ik i1}`` in PBW normal form."""
    if k < 1:
        raise ValueError("k >= 1 required")
    A = uea(make_gl(n))
    out = A.zero()
    for word in casimir_terms(n, k):
        out = out + A.word(word)
    return out


def is_central(spec: LieAlgebraSpec, u: Element) -> bool:
    """``ad(g, u) == 0`` for every basis generator ``g`` (enough, since ad is a derivation)."""
    return all(not ad(spec, i, u) for i in range(spec.dim))


def pbw_words(dim: int, degree: int):
    """All PBW words (non-decreasing index tuples) of length ``<= degree``."""
    for d in range(degree + 1):
        yield from itertools.combinations_with_replacement(range(dim), d)


def center_scan(spec: LieAlgebraSpec, degree: int) -> list[Element]:
    """Basis of the elements of PBW degree ``<= degree`` commuting with all of ``spec``."""
    if degree < 1:
        raise ValueError("degree bound must be at least 1")
    A = uea(spec)
    words = list(pbw_words(spec.dim, degree))
    col = {w: t for t, w in enumerate(words)}
    rows = []
    for g in range(spec.dim):
        eqs: dict = {}
        for w in words:
            for m, c in ad(spec, g, A.monomial(w)).terms.items():
                add_into(eqs.setdefault(m, {}), col[w], c)
        rows.extend(r for r in eqs.values() if r)
    basis = []
    for vec in nullspace(rows, len(words)):
        u = A.element({words[t]: c for t, c in vec.items()})
        # normalize: leading coefficient 1 in printing order
        lead = u.sorted_terms()[0][1]
        basis.append(u * (1 / lead))
    return sorted(basis, key=lambda u: (u.degree(), str(u)))


def spans_equal(a: list[Element], b: list[Element]) -> bool:
    """Same linear span (exact rank comparison)."""
    from .linalg import rank

    monos = sorted({m for u in a + b for m in u.terms}, key=repr)
    idx = {m: t for t, m in enumerate(monos)}

    def r(vs):
        return rank([{idx[m]: c for m, c in u.terms.items()} for u in vs], len(monos))

    return r(a) == r(b) == r(a + b)

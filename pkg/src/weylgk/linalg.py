"""Exact rational linear algebra on sparse rows, backed by sympy's DomainMatrix."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .algebra import to_fraction


def _qq(c):
    c = to_fraction(c)
    return QQ(c.numerator, c.denominator)


def _sparse(rows: Sequence[dict], ncols: int) -> DomainMatrix:
    data = {}
    for r, row in enumerate(rows):
        entries = {int(k): _qq(v) for k, v in row.items() if v}
        if entries:
            data[r] = entries
    return DomainMatrix(data, (max(len(rows), 1), ncols), QQ)


def nullspace(rows: Sequence[dict], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of ``{v : row . v = 0 for every row}`` as sparse vectors."""
    if ncols == 0:
        return []
    N = _sparse(rows, ncols).nullspace()
    out = []
    for vec in N.to_Matrix().tolist():
        out.append({k: Fraction(int(c.p), int(c.q)) for k, c in enumerate(vec) if c})
    return out


def rank(rows: Sequence[dict], ncols: int) -> int:
    return _sparse(rows, ncols).rank() if ncols else 0


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse of a square rational matrix; raises ``ZeroDivisionError`` if singular."""
    n = len(matrix)
    M = DomainMatrix([[_qq(c) for c in row] for row in matrix], (n, n), QQ)
    try:
        inv = M.inv()
    except Exception as exc:  # sympy raises DMNonInvertibleMatrixError
        raise ZeroDivisionError("matrix is singular") from exc
    return [[Fraction(int(c.numerator), int(c.denominator)) for c in row] for row in inv.to_list()]

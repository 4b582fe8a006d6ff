"""Brute-force homology of braid groups from the Salvetti complex.

The braid group ``B_m`` is the Artin group of type ``A_{m-1}`` and its
Salvetti complex is a finite ``K(B_m, 1)`` with one cell ``e_T`` for each
subset ``T`` of the Coxeter generators ``{1..m-1}``.  With trivial
coefficients the boundary is

    d e_T = sum_{s in T} (-1)^{#{t in T : t < s}} W_T(-1)/W_{T-s}(-1) e_{T-s}

where ``W_T(q)`` is the Poincare polynomial of the parabolic subgroup and the
quotient is evaluated as a polynomial before substituting ``q = -1``.  Ranks
are computed exactly over ``QQ`` or ``GF(p)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from sympy import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

MAX_STRANDS = 8


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c, r = divmod(a[k + len(b) - 1], b[-1])
        if r:
            raise ArithmeticError("inexact polynomial division")
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


def _runs(T: tuple[int, ...]) -> list[int]:
    """Lengths of the maximal runs of consecutive generators in ``T``."""
    runs, prev = [], None
    for s in T:
        if prev is not None and s == prev + 1:
            runs[-1] += 1
        else:
            runs.append(1)
        prev = s
    return runs


@lru_cache(maxsize=None)
def poincare_polynomial(T: tuple[int, ...]) -> tuple[int, ...]:
    """Length generating function of the parabolic subgroup ``W_T`` of ``S_m``."""
    poly = [1]
    for r in _runs(T):
        for i in range(2, r + 2):
            poly = _poly_mul(poly, [1] * i)
    return tuple(poly)


def _coefficient(T: tuple[int, ...], s: int) -> int:
    rest = tuple(t for t in T if t != s)
    quotient = _poly_divexact(list(poincare_polynomial(T)), list(poincare_polynomial(rest)))
    value = sum(c * (-1) ** k for k, c in enumerate(quotient))
    sign = (-1) ** sum(1 for t in T if t < s)
    return sign * value


def cells(m: int, d: int) -> list[tuple[int, ...]]:
    return list(combinations(range(1, m), d))


@lru_cache(maxsize=None)
def boundary_matrix(m: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of ``C_d -> C_{d-1}``; rows index ``(d-1)``-cells, columns ``d``-cells."""
    rows = cells(m, d - 1)
    cols = cells(m, d)
    index = {c: i for i, c in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, T in enumerate(cols):
        for s in T:
            rest = tuple(t for t in T if t != s)
            mat[index[rest]][j] += _coefficient(T, s)
    return tuple(tuple(r) for r in mat)


def _rank(mat: tuple[tuple[int, ...], ...], p: int) -> int:
    if not mat or not mat[0]:
        return 0
    dm = DomainMatrix([[ZZ(x) for x in row] for row in mat], (len(mat), len(mat[0])), ZZ)
    return dm.convert_to(QQ if p == 0 else GF(p)).rank()


def oracle_homology(m: int, p: int = 0, max_deg: int | None = None) -> tuple[int, ...]:
    """Betti numbers of ``B_m`` over ``QQ`` (``p = 0``) or ``GF(p)`` in degrees ``0..max_deg``."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if m > MAX_STRANDS:
        raise ValueError(f"oracle limited to m <= {MAX_STRANDS} strands, got {m}")
    if max_deg is None:
        max_deg = max(m - 1, 0)
    top = m - 1
    ranks = {d: _rank(boundary_matrix(m, d), p) if 1 <= d <= top else 0 for d in range(0, top + 2)}
    dims = []
    for d in range(max_deg + 1):
        if d > top:
            dims.append(0)
            continue
        dims.append(len(cells(m, d)) - ranks[d] - ranks[d + 1])
    return tuple(dims)


def integral_torsion_free_check(m: int) -> bool:
    """``d o d = 0`` over the integers for every degree (sanity of signs)."""
    for d in range(2, m):
        a = boundary_matrix(m, d - 1)
        b = boundary_matrix(m, d)
        for i in range(len(a)):
            for j in range(len(b[0])):
                if sum(a[i][k] * b[k][j] for k in range(len(b))):
                    return False
    return True

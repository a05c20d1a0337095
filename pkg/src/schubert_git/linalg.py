"""Exact linear algebra over the rationals.

Fraction-free (Bareiss) forward elimination for ranks, reduced row echelon
form for normalized kernel bases, and a modular rank shortcut for large
integer matrices.  Column order is never permuted, so pivot positions are
deterministic functions of the input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def _copy(rows: Sequence[Sequence[Fraction | int]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank by fraction-free Gaussian elimination (Bareiss).

    Divisions in the Bareiss update are exact, so integer input stays
    integral throughout.
    """
    m = _copy(rows)
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    piv_row = 0
    prev = Fraction(1)
    for col in range(n_cols):
        pivot = next((r for r in range(piv_row, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        if pivot != piv_row:
            m[piv_row], m[pivot] = m[pivot], m[piv_row]
        p = m[piv_row][col]
        for r in range(piv_row + 1, n_rows):
            factor = m[r][col]
            row_r, row_p = m[r], m[piv_row]
            for c in range(col, n_cols):
                row_r[c] = (row_r[c] * p - factor * row_p[c]) / prev
        prev = p
        piv_row += 1
        if piv_row == n_rows:
            break
    return piv_row


def rref(rows: Sequence[Sequence[Fraction | int]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot column list."""
    m = _copy(rows)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    piv_row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(piv_row, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        if pivot != piv_row:
            m[piv_row], m[pivot] = m[pivot], m[piv_row]
        p = m[piv_row][col]
        m[piv_row] = [x / p for x in m[piv_row]]
        for r in range(n_rows):
            if r != piv_row and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[piv_row])]
        pivots.append(col)
        piv_row += 1
        if piv_row == n_rows:
            break
    return m, pivots


def right_nullspace(rows: Sequence[Sequence[Fraction | int]], n_cols: int) -> list[list[Fraction]]:
    """Basis of ``{x : M x = 0}``, returned in reduced row echelon form.

    ``n_cols`` must be passed explicitly so empty matrices keep their
    column count.
    """
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n_cols) if c not in pivot_set]
    basis: list[list[Fraction]] = []
    for free in free_cols:
        vec = [Fraction(0)] * n_cols
        vec[free] = Fraction(1)
        for row_idx, piv_col in enumerate(pivots):
            vec[piv_col] = -reduced[row_idx][free]
        basis.append(vec)
    if not basis:
        return []
    normalized, _ = rref(basis)
    return [row for row in normalized if any(row)]


def left_nullspace(rows: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    """Basis of ``{c : c M = 0}`` in reduced row echelon form."""
    if not rows:
        return []
    n_rows = len(rows)
    transpose = [[rows[r][c] for r in range(n_rows)] for c in range(len(rows[0]))]
    return right_nullspace(transpose, n_rows)


_DEFAULT_PRIME = (1 << 31) - 1


def rank_mod(rows: Sequence[Sequence[int]], prime: int = _DEFAULT_PRIME) -> int:
    """Rank of an integer matrix over F_p.

    Always a lower bound for the rational rank; used as a fast certificate
    when the expected rank is an a-priori upper bound.
    """
    m = [[x % prime for x in row] for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    piv_row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(piv_row, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        if pivot != piv_row:
            m[piv_row], m[pivot] = m[pivot], m[piv_row]
        inv = pow(m[piv_row][col], prime - 2, prime)
        prow = m[piv_row]
        for r in range(piv_row + 1, n_rows):
            if m[r][col]:
                factor = (m[r][col] * inv) % prime
                row = m[r]
                m[r] = [(a - factor * b) % prime for a, b in zip(row, prow)]
        piv_row += 1
        if piv_row == n_rows:
            break
    return piv_row

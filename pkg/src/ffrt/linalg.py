"""Dense Gaussian elimination over an arbitrary exact field.

Entries are field elements supporting ``+ - * /`` and truthiness (``bool(x)``
is False exactly for zero).  The field object supplies ``zero`` and ``one``.
"""

from __future__ import annotations

from typing import Sequence


def rref(rows: Sequence[Sequence], field) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form; zero rows are dropped.

    Returns ``(rows, pivots)`` where ``pivots[r]`` is the pivot column of row r.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = None
        for r in range(top, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        lead = work[top][col]
        if lead != field.one:
            inv = field.one / lead
            work[top] = [x * inv for x in work[top]]
        prow = work[top]
        for r in range(len(work)):
            if r != top and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y if y else x for x, y in zip(work[r], prow)]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(rows: Sequence[Sequence], field) -> int:
    return len(rref(rows, field)[0])


def nullspace(rows: Sequence[Sequence], ncols: int, field) -> list[list]:
    """Basis of {x : rows @ x = 0}, one basis vector per free column."""
    red, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for row, pc in zip(red, pivots):
            vec[pc] = -row[fc]
        basis.append(vec)
    return basis


def solve(matrix: Sequence[Sequence], rhs: Sequence, field) -> list | None:
    """One solution of ``matrix @ x = rhs`` or None when inconsistent."""
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x

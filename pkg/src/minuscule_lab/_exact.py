"""Exact linear algebra over the rationals for small matrices."""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction


def inverse(matrix: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    """Gauss-Jordan inverse with Fraction entries.

    >>> inverse([[2, -1], [-1, 2]])[0]
    (Fraction(2, 3), Fraction(1, 3))
    """
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def sparse_rank(rows: Iterable[dict[int, int | Fraction]]) -> int:
    """Rank of a matrix given as sparse rows ``{column: value}``.

    Rows are reduced against previously accepted pivots keyed by their
    leading column, so relation matrices with two nonzeros per row stay small.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v != 0}
        while row:
            lead = min(row)
            basis = pivots.get(lead)
            if basis is None:
                scale = row[lead]
                pivots[lead] = {c: v / scale for c, v in row.items()}
                break
            f = row[lead]
            for c, v in basis.items():
                nv = row.get(c, 0) - f * v
                if nv == 0:
                    row.pop(c, None)
                else:
                    row[c] = nv
    return len(pivots)


def rank(matrix: Sequence[Sequence[int | Fraction]]) -> int:
    """Exact rank of a dense matrix."""
    return sparse_rank({j: v for j, v in enumerate(row) if v != 0} for row in matrix)

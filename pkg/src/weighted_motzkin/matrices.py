"""Lower-triangular integer matrices: Riordan arrays and weighted recurrences.

Matrix indices are 1-based, ``(i, j)`` with ``1 <= j <= i``.  The Riordan
entry ``(i, j)`` is the coefficient of ``x**(i-1)`` in ``g * f**(j-1)``.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

from .errors import NonIntegralEntryError, ParameterError
from .series import TruncatedSeries, solve_motzkin_gf


@dataclass(frozen=True)
class TriangularMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        for i, r in enumerate(rows, 1):
            if len(r) != i:
                raise ParameterError(f"row {i} has {len(r)} entries, expected {i}")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """Entry ``(i, j)``, 1-based; zero above the diagonal."""
        if not 1 <= i <= self.size or j < 1:
            raise IndexError((i, j))
        return self.rows[i - 1][j - 1] if j <= i else 0

    def column(self, j: int) -> list[int]:
        return [r[j - 1] for r in self.rows[j - 1:]]

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "TriangularMatrix":
        return cls(tuple(tuple(int(v) for v in r) for r in obj["rows"]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(self.rows)
        return buf.getvalue()

    def __str__(self) -> str:
        width = max((len(str(v)) for r in self.rows for v in r), default=1)
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)


@dataclass(frozen=True)
class RiordanArray:
    g: TruncatedSeries
    f: TruncatedSeries

    def __post_init__(self):
        if self.g[0] != 1:
            raise ParameterError("g must have constant term 1")
        if self.f[0] != 0 or self.f.order < 1 or self.f[1] == 0:
            raise ParameterError("f must have zero constant term and nonzero linear term")


def riordan_matrix(R: RiordanArray, rows: int) -> TriangularMatrix:
    """The first ``rows`` rows of the Riordan array ``(g, f)``.

    Raises
    ------
    NonIntegralEntryError
        If any extracted coefficient is not an integer.
    """
    order = min(R.g.order, R.f.order)
    if rows - 1 > order:
        raise ParameterError(f"series order {order} too small for {rows} rows")
    g = R.g.truncate(rows - 1) if rows else R.g
    f = R.f.truncate(rows - 1) if rows else R.f
    columns = []
    col = g
    for j in range(rows):
        columns.append(col)
        col = col * f
    out = []
    for i in range(rows):
        row = []
        for j in range(i + 1):
            c = columns[j][i]
            if c.denominator != 1:
                raise NonIntegralEntryError(f"entry ({i + 1}, {j + 1}) = {c} is not an integer")
            row.append(c.numerator)
        out.append(tuple(row))
    return TriangularMatrix(tuple(out))


def triangle_from_first_column(first_column: Sequence[int], a: int, b: int) -> TriangularMatrix:
    """Fill ``m[i][j] = m[i-1][j-1] + a*m[i-1][j] + b*m[i-1][j+1]`` for ``j >= 2``."""
    rows: list[list[int]] = []
    for i, head in enumerate(first_column):
        row = [head]
        if i:
            prev = rows[-1]
            for j in range(1, i + 1):
                v = prev[j - 1]
                if j < i:
                    v += a * prev[j]
                if j + 1 < i:
                    v += b * prev[j + 1]
                row.append(v)
        rows.append(row)
    return TriangularMatrix(tuple(tuple(r) for r in rows))


def check_kt(k: int, t: int) -> None:
    if k < 2 or t < 1 or k < t + 1:
        raise ParameterError(f"need k >= 2, t >= 1 and k >= t + 1, got k={k}, t={t}")


def recurrence_matrix(k: int, t: int, rows: int) -> TriangularMatrix:
    """Weighted Motzkin triangle for horizontal weight ``k-t-1`` and down weight ``t``.

    The first column holds the weighted Motzkin counts; every other entry
    follows ``m[i,j] = m[i-1,j-1] + (k-t-1) m[i-1,j] + t m[i-1,j+1]``.
    """
    check_kt(k, t)
    if rows < 0:
        raise ParameterError("rows must be >= 0")
    if rows == 0:
        return TriangularMatrix(())
    head = solve_motzkin_gf(k - t - 1, t, rows - 1).integer_coefficients()
    return triangle_from_first_column(head, k - t - 1, t)


def weighted_riordan_array(k: int, t: int, order: int) -> RiordanArray:
    """``(g, x*g)`` where ``g`` is the weighted Motzkin series for ``(k-t-1, t)``."""
    check_kt(k, t)
    g = solve_motzkin_gf(k - t - 1, t, order)
    return RiordanArray(g, g.shift(1))


def matrix_vector_product(M: TriangularMatrix, v: Sequence[int]) -> list[int]:
    if len(v) < M.size:
        raise ParameterError(f"vector has {len(v)} entries, matrix has {M.size} rows")
    return [sum(a * b for a, b in zip(row, v)) for row in M.rows]

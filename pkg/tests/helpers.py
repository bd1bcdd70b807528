"""Brute-force oracles shared by the tests.

Everything here is computed from first principles (permutation filters,
Laplace expansion, dense rational elimination) and never calls into the
package, so the tests pit two independent routes against each other.
"""

from fractions import Fraction
from itertools import permutations
from math import factorial

Rows = tuple[tuple[int, ...], ...]


def brute_fillings(shape) -> list[Rows]:
    """Every bijective filling of the diagram, rows bottom-up."""
    n = sum(shape)
    out = []
    for perm in permutations(range(1, n + 1)):
        rows = []
        k = 0
        for part in shape:
            rows.append(tuple(perm[k:k + part]))
            k += part
        out.append(tuple(rows))
    return out


def rows_increase(rows: Rows) -> bool:
    return all(all(a < b for a, b in zip(row, row[1:])) for row in rows)


def columns_increase(rows: Rows) -> bool:
    width = max((len(row) for row in rows), default=0)
    for c in range(width):
        column = [row[c] for row in rows if len(row) > c]
        if any(a >= b for a, b in zip(column, column[1:])):
            return False
    return True


def brute_srit(shape) -> set[Rows]:
    return {rows for rows in brute_fillings(shape) if rows_increase(rows)}


def brute_set(shape) -> set[Rows]:
    return {
        rows
        for rows in brute_fillings(shape)
        if rows_increase(rows) and columns_increase(rows)
    }


def row_of_entries(rows: Rows) -> dict[int, int]:
    """1-based row index of each entry."""
    out = {}
    for r, row in enumerate(rows, start=1):
        for value in row:
            out[value] = r
    return out


def descents_by_row_rule(rows: Rows) -> list[int]:
    """Descents of a standard Young tableau: i with i+1 strictly above i."""
    n = sum(len(row) for row in rows)
    row_of = row_of_entries(rows)
    return [i for i in range(1, n) if row_of[i + 1] > row_of[i]]


def composition_from_descents(descents, n) -> tuple[int, ...]:
    if n == 0:
        return ()
    parts = []
    previous = 0
    for d in sorted(descents) + [n]:
        parts.append(d - previous)
        previous = d
    return tuple(parts)


def hook_length(shape) -> int:
    """Standard-Young-tableau count of a partition shape."""
    n = sum(shape)
    product = 1
    for r, part in enumerate(shape):
        for c in range(part):
            arm = part - c - 1
            leg = sum(1 for upper in shape[r + 1:] if upper > c)
            product *= arm + leg + 1
    return factorial(n) // product


def laplace_determinant(matrix) -> int:
    """Cofactor-expansion determinant, practical only for tiny matrices."""
    size = len(matrix)
    if size == 0:
        return 1
    if size == 1:
        return matrix[0][0]
    total = 0
    for c in range(size):
        if matrix[0][c] == 0:
            continue
        minor = [
            [row[cc] for cc in range(size) if cc != c] for row in matrix[1:]
        ]
        total += (-1) ** c * matrix[0][c] * laplace_determinant(minor)
    return total


def dense_rank(rows, ncols) -> int:
    """Rank via plain dense elimination over exact rationals."""
    m = [[Fraction(row[c] if c < len(row) else 0) for c in range(ncols)] for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        head = m[rank][col]
        m[rank] = [v / head for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank

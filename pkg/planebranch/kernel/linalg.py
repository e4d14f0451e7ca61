"""Dense Gaussian elimination over a FieldSpec."""

from typing import Any, List, Optional, Sequence, Tuple

from planebranch.kernel.field import FieldSpec


def row_reduce(spec: FieldSpec, rows: Sequence[Sequence[Any]]) -> Tuple[List[List[Any]], List[int]]:
    """Reduced row echelon form and the pivot columns"""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    width = len(mat[0])
    pivots: List[int] = []
    top = 0
    for col in range(width):
        pivot_row = next((r for r in range(top, len(mat)) if mat[r][col]), None)
        if pivot_row is None:
            continue
        mat[top], mat[pivot_row] = mat[pivot_row], mat[top]
        inv = spec.inv(mat[top][col])
        mat[top] = [spec.mul(v, inv) for v in mat[top]]
        for r in range(len(mat)):
            if r != top and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [spec.sub(a, spec.mul(factor, b)) for a, b in zip(mat[r], mat[top])]
        pivots.append(col)
        top += 1
        if top == len(mat):
            break
    return mat[:top], pivots


def rank(spec: FieldSpec, rows: Sequence[Sequence[Any]]) -> int:
    return len(row_reduce(spec, rows)[1])


def solve(spec: FieldSpec, columns: Sequence[Sequence[Any]], target: Sequence[Any]) -> Optional[List[Any]]:
    """Coefficients a with sum a_i * columns[i] == target, or None"""
    if not columns:
        return [] if not any(target) else None
    height = len(target)
    n = len(columns)
    augmented = [[columns[c][r] for c in range(n)] + [target[r]] for r in range(height)]
    reduced, pivots = row_reduce(spec, augmented)
    if n in pivots:
        return None
    solution = [spec.zero] * n
    for row, col in zip(reduced, pivots):
        solution[col] = row[n]
    return solution

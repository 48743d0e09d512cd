"""Exact sparse linear algebra over the rationals.

Matrices are stored column-sparse: a list with one {row: value} dict per
column.  Everything here is exact — integer cross-multiplication with gcd
normalization for ranks, Fraction arithmetic for factorizations.  No
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

SparseColumns = list[dict[int, int]]


def rank(cols: SparseColumns) -> int:
    """Rank by integer Gaussian elimination with Markowitz-style pivoting.

    Rows are combined by cross-multiplication and re-divided by their
    content, so all intermediate entries stay integral.
    """
    rows: dict[int, dict[int, int]] = {}
    for j, col in enumerate(cols):
        for i, v in col.items():
            if v:
                rows.setdefault(i, {})[j] = v
    col_support: dict[int, set[int]] = {}
    for i, row in rows.items():
        for j in row:
            col_support.setdefault(j, set()).add(i)

    result = 0
    while rows:
        # cheapest pivot: scan the sparsest column, take its shortest row
        pivot_col = min(col_support, key=lambda j: len(col_support[j]))
        pivot_row = min(
            col_support[pivot_col],
            key=lambda i: (len(rows[i]), abs(rows[i][pivot_col])),
        )
        prow = rows.pop(pivot_row)
        pval = prow[pivot_col]
        for j in prow:
            col_support[j].discard(pivot_row)

        for i in list(col_support[pivot_col]):
            row = rows[i]
            rval = row.pop(pivot_col)
            col_support[pivot_col].discard(i)
            for j in row:
                row[j] *= pval
            for j, v in prow.items():
                if j == pivot_col:
                    continue
                new = row.get(j, 0) - rval * v
                if new:
                    if j not in row:
                        col_support.setdefault(j, set()).add(i)
                    row[j] = new
                elif j in row:
                    del row[j]
                    col_support[j].discard(i)
            if row:
                content = 0
                for v in row.values():
                    content = gcd(content, v)
                if content > 1:
                    for j in row:
                        row[j] //= content
            else:
                del rows[i]
        del col_support[pivot_col]
        for j in [j for j, s in col_support.items() if not s]:
            del col_support[j]
        result += 1
    return result


def column_factorization(
    cols: SparseColumns,
) -> tuple[list[int], list[dict[int, Fraction]]]:
    """Greedy column echelon with coordinate tracking.

    Returns (pivots, coeffs): ``pivots`` lists the indices of a maximal
    independent subset of the columns (in order), and ``coeffs[j]``
    expresses column j as a combination of the pivot columns,
    cols[j] = sum coeffs[j][l] * cols[l] over l in pivots.
    """
    pivots: list[int] = []
    # echelon entries: (pivot_row, vector, coords) with vector[pivot_row]=1
    echelon: list[tuple[int, dict[int, Fraction], dict[int, Fraction]]] = []
    coeffs: list[dict[int, Fraction]] = []
    for j, col in enumerate(cols):
        w = {i: Fraction(v) for i, v in col.items() if v}
        acc: dict[int, Fraction] = {}
        for pivot_row, vec, coord in echelon:
            t = w.get(pivot_row)
            if not t:
                continue
            for i, v in vec.items():
                new = w.get(i, Fraction(0)) - t * v
                if new:
                    w[i] = new
                elif i in w:
                    del w[i]
            for l, v in coord.items():
                new = acc.get(l, Fraction(0)) + t * v
                if new:
                    acc[l] = new
                elif l in acc:
                    del acc[l]
        if w:
            pivot_row = min(w, key=lambda i: (len(str(w[i])), i))
            scale = w[pivot_row]
            vec = {i: v / scale for i, v in w.items()}
            coord = {l: -v / scale for l, v in acc.items()}
            coord[j] = 1 / scale
            echelon.append((pivot_row, vec, coord))
            pivots.append(j)
            coeffs.append({j: Fraction(1)})
        else:
            coeffs.append(acc)
    return pivots, coeffs


def trace_on_image(
    dcols: SparseColumns,
    action_cols: SparseColumns,
    factorization: tuple[list[int], list[dict[int, Fraction]]] | None = None,
) -> Fraction:
    """Trace of an equivariant signed permutation on the column span of d.

    ``action_cols`` is the signed permutation action on the *source* of d
    (one {image: sign} entry per column).  Equivariance makes the action
    permute the columns of d up to sign, so the trace on the image follows
    from the column factorization alone.
    """
    pivots, coeffs = factorization or column_factorization(dcols)
    total = Fraction(0)
    for l in pivots:
        (img, sign), = action_cols[l].items()
        total += sign * coeffs[img].get(l, Fraction(0))
    return total


def span_solver(basis: SparseColumns):
    """Return a function solving basis · x = target exactly.

    The basis columns must be linearly independent.  The returned solver
    maps a sparse target vector to its coordinate dict, or None when the
    target lies outside the span.
    """
    echelon: list[tuple[int, dict[int, Fraction], dict[int, Fraction]]] = []
    for j, col in enumerate(basis):
        w = {i: Fraction(v) for i, v in col.items() if v}
        acc: dict[int, Fraction] = {j: Fraction(1)}
        for pivot_row, vec, coord in echelon:
            t = w.get(pivot_row)
            if not t:
                continue
            for i, v in vec.items():
                new = w.get(i, Fraction(0)) - t * v
                if new:
                    w[i] = new
                elif i in w:
                    del w[i]
            for l, v in coord.items():
                new = acc.get(l, Fraction(0)) - t * v
                if new:
                    acc[l] = new
                elif l in acc:
                    del acc[l]
        if not w:
            raise ValueError("span_solver requires independent columns")
        pivot_row = next(iter(w))
        scale = w[pivot_row]
        echelon.append(
            (
                pivot_row,
                {i: v / scale for i, v in w.items()},
                {l: v / scale for l, v in acc.items()},
            )
        )

    def solve(target) -> dict[int, Fraction] | None:
        w = {i: Fraction(v) for i, v in target.items() if v}
        acc: dict[int, Fraction] = {}
        for pivot_row, vec, coord in echelon:
            t = w.get(pivot_row)
            if not t:
                continue
            for i, v in vec.items():
                new = w.get(i, Fraction(0)) - t * v
                if new:
                    w[i] = new
                elif i in w:
                    del w[i]
            for l, v in coord.items():
                new = acc.get(l, Fraction(0)) + t * v
                if new:
                    acc[l] = new
                elif l in acc:
                    del acc[l]
        return None if w else acc

    return solve

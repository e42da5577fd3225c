"""Dense exact linear algebra over the rationals.

Matrices are plain lists of lists of Fractions (or ints, which Fraction
arithmetic absorbs).  Sizes here are desk scale (at most a few hundred
rows), so straightforward Gauss-Jordan with exact pivots is plenty.
"""

from fractions import Fraction


def rat_rref(rows, ncols=None):
    """Reduced row echelon form in place; returns the pivot column list."""
    nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rat_rank(rows):
    return len(rat_rref([list(r) for r in rows]))


def rat_solve(a, b):
    """One exact solution x of a x = b (column vectors), or None.

    ``b`` may be a flat vector or a list of columns packed as rows of a
    matrix with one row per row of ``a``.  Free variables are set to 0.
    """
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    flat = b and not isinstance(b[0], (list, tuple))
    rhs = [[x] for x in b] if flat else [list(r) for r in b]
    width = len(rhs[0]) if rhs else 1
    aug = [list(ra) + list(rb) for ra, rb in zip(a, rhs)]
    pivots = rat_rref(aug, ncols)
    for i in range(len(pivots), nrows):
        if any(aug[i][ncols:]):
            return None
    sol = [[Fraction(0)] * width for _ in range(ncols)]
    for r, c in enumerate(pivots):
        sol[c] = [Fraction(x) for x in aug[r][ncols:]]
    return [row[0] for row in sol] if flat else sol


def rat_inverse(a):
    """Inverse of a square rational matrix; None if singular."""
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    pivots = rat_rref(aug, n)
    if len(pivots) != n:
        return None
    return [row[n:] for row in aug]


def rat_matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]

"""Exact rational matrix routines and a small two-phase simplex solver.

Matrices are lists of rows of Fractions.  Sizes here are tiny (a dozen
rows at most), so clarity wins over clever pivoting.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "SingularMatrixError",
    "InfeasibleError",
    "UnboundedError",
    "to_matrix",
    "matmul",
    "matvec",
    "identity",
    "rref",
    "rank",
    "inverse",
    "solve_left",
    "linprog_min",
]


class SingularMatrixError(ValueError):
    pass


class InfeasibleError(ValueError):
    pass


class UnboundedError(ValueError):
    pass


def to_matrix(rows) -> list:
    return [[Fraction(v) for v in row] for row in rows]


def identity(n: int) -> list:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b) -> list:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def matvec(a, v) -> list:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def rref(m):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(row) for row in m]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pr = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        p = m[r][c]
        m[r] = [v / p for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def inverse(m) -> list:
    n = len(m)
    if any(len(row) != n for row in m):
        raise SingularMatrixError("matrix is not square")
    aug = [list(row) + e for row, e in zip(m, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in red]


def solve_left(t, m):
    """Find S with S @ m == t, for m of full row rank.

    Used to factor a map through its row space.
    """
    # S m = t  <=>  m^T S^T = t^T
    mt = [list(col) for col in zip(*m)]
    k = len(m)
    sols = []
    for row in t:
        aug = [r + [b] for r, b in zip(mt, row)]
        red, pivots = rref(aug)
        if k in pivots:
            raise SingularMatrixError("rows of t are not in the row space of m")
        x = [Fraction(0)] * k
        for i, c in enumerate(pivots):
            x[c] = red[i][k]
        sols.append(x)
    return sols


def linprog_min(c, a_eq, b_eq):
    """Minimise c.x subject to a_eq x = b_eq, x >= 0, exactly.

    Two-phase tableau simplex with Bland's rule, so it terminates on
    degenerate problems.  Returns (optimal value, x).
    """
    m = len(a_eq)
    n = len(c)
    rows = []
    rhs = []
    for row, b in zip(a_eq, b_eq):
        row = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)

    # phase 1: artificials n..n+m-1
    tab = [row + [Fraction(int(i == j)) for j in range(m)] + [b] for i, (row, b) in enumerate(zip(rows, rhs))]
    basis = list(range(n, n + m))
    cost1 = [Fraction(0)] * n + [Fraction(1)] * m
    _simplex(tab, basis, cost1, n + m)
    if _objective(tab, basis, cost1) != 0:
        raise InfeasibleError("linear program is infeasible")

    # drive remaining artificials out of the basis where possible
    for i, bv in enumerate(basis):
        if bv >= n:
            j = next((j for j in range(n) if tab[i][j] != 0), None)
            if j is not None:
                _pivot(tab, basis, i, j)
    keep = [i for i, bv in enumerate(basis) if bv < n]
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    cost = [Fraction(v) for v in c]
    _simplex(tab, basis, cost, n)
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = tab[i][-1]
    return _objective(tab, basis, cost), x


def _objective(tab, basis, cost):
    return sum((cost[bv] * tab[i][-1] for i, bv in enumerate(basis)), Fraction(0))


def _pivot(tab, basis, r, c):
    p = tab[r][c]
    tab[r] = [v / p for v in tab[r]]
    for i in range(len(tab)):
        if i != r and tab[i][c] != 0:
            f = tab[i][c]
            tab[i] = [a - f * b for a, b in zip(tab[i], tab[r])]
    basis[r] = c


def _simplex(tab, basis, cost, n_cols):
    while True:
        # reduced costs
        entering = None
        for j in range(n_cols):
            if j in basis:
                continue
            rc = cost[j] - sum((cost[bv] * tab[i][j] for i, bv in enumerate(basis)), Fraction(0))
            if rc < 0:
                entering = j
                break
        if entering is None:
            return
        best = None
        for i in range(len(tab)):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise UnboundedError("linear program is unbounded")
        _pivot(tab, basis, best[1], entering)

"""Exact linear algebra over the rational-function field.

Elimination is fraction-free (Bareiss): rows are first cleared of
denominators, then every update ``(p*a - q*b) / previous_pivot`` is an
exact polynomial division.  Pivots are chosen over the whole remaining
block by least total degree, ties broken by row and then column index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Polynomial, RationalFunction, as_rf, lcm


class RFMatrix:
    """Dense matrix of RationalFunction entries sharing one variable tuple."""

    __slots__ = ("variables", "rows", "nrows", "ncols")

    def __init__(self, variables, rows: Sequence[Sequence]):
        self.variables = tuple(variables)
        self.rows = tuple(tuple(as_rf(v, self.variables) for v in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def apply(self, vec: Sequence[RationalFunction]) -> tuple[RationalFunction, ...]:
        if len(vec) != self.ncols:
            raise ValueError(f"vector length {len(vec)} != {self.ncols} columns")
        zero = RationalFunction.zero(self.variables)
        out = []
        for row in self.rows:
            acc = zero
            for a, v in zip(row, vec):
                if not a.is_zero() and not v.is_zero():
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RFMatrix":
        return RFMatrix(self.variables, [[self.rows[i][j] for j in cols] for i in rows])

    def evaluate(self, point) -> list[list]:
        return [[e.evaluate(point) for e in row] for row in self.rows]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows) + "]"


@dataclass(frozen=True)
class Unique:
    solution: tuple


@dataclass(frozen=True)
class Affine:
    particular: tuple
    kernel: tuple


@dataclass(frozen=True)
class Inconsistent:
    # solves the pivot rows only; at least one remaining equation fails
    partial: tuple


SolveResult = Unique | Affine | Inconsistent


def _clear_denominators(row: Sequence[RationalFunction], variables) -> list[Polynomial]:
    common = Polynomial.constant(variables, 1)
    for e in row:
        if not e.den.is_one():
            common = lcm(common, e.den)
    if common.is_one():
        return [e.num for e in row]
    return [e.num * common.exact_div(e.den) for e in row]


def _bareiss(A: list[list[Polynomial]], ncols: int):
    """In-place fraction-free forward elimination on the first ``ncols`` columns.

    Returns (rank, column permutation, number of row swaps).
    """
    m = len(A)
    variables = A[0][0].variables if m and A[0] else ()
    perm = list(range(ncols))
    swaps = 0
    prev = Polynomial.constant(variables, 1)
    k = 0
    while k < min(m, ncols):
        best = None
        for i in range(k, m):
            row = A[i]
            for j in range(k, ncols):
                e = row[j]
                if not e.is_zero():
                    key = (e.total_degree(), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pi, pj = best
        if pi != k:
            A[k], A[pi] = A[pi], A[k]
            swaps += 1
        if pj != k:
            for row in A:
                row[k], row[pj] = row[pj], row[k]
            perm[k], perm[pj] = perm[pj], perm[k]
            swaps += 1
        piv = A[k][k]
        width = len(A[k])
        for i in range(k + 1, m):
            a_ik = A[i][k]
            row_i = A[i]
            for j in range(k + 1, width):
                t = piv * row_i[j]
                if not a_ik.is_zero() and not A[k][j].is_zero():
                    t = t - a_ik * A[k][j]
                row_i[j] = t.exact_div(prev)
            row_i[k] = Polynomial.zero(variables)
        prev = piv
        k += 1
    return k, perm, swaps


def solve_linear(M: RFMatrix, b: Sequence) -> SolveResult:
    """Solve ``M x = b`` exactly over the rational-function field."""
    b = [as_rf(v, M.variables) for v in b]
    if len(b) != M.nrows:
        raise ValueError(f"right-hand side has {len(b)} entries, expected {M.nrows}")
    n = M.ncols
    A = [_clear_denominators(list(row) + [bi], M.variables) for row, bi in zip(M.rows, b)]
    rank, perm, _ = _bareiss(A, n)

    def back_substitute(rhs_col: list, free_values: dict[int, RationalFunction]):
        # solves the upper-triangular pivot block; columns are in permuted order
        x = [None] * n
        for j, val in free_values.items():
            x[j] = val
        for k in range(rank - 1, -1, -1):
            acc = rhs_col[k]
            for j in range(k + 1, n):
                if not A[k][j].is_zero() and not x[j].is_zero():
                    acc = acc - RationalFunction._poly(A[k][j]) * x[j]
            x[k] = acc / RationalFunction._poly(A[k][k])
        out = [None] * n
        for pos, col in enumerate(perm):
            out[col] = x[pos]
        return tuple(out)

    zero = RationalFunction.zero(M.variables)
    rhs = [RationalFunction._poly(row[n]) for row in A]
    free = range(rank, n)
    particular = back_substitute(rhs, {j: zero for j in free})
    if any(not A[i][n].is_zero() for i in range(rank, M.nrows)):
        return Inconsistent(particular)
    if rank == n:
        return Unique(particular)
    kernel = []
    for f in free:
        vals = {j: (RationalFunction.constant(M.variables, 1) if j == f else zero) for j in free}
        kernel.append(back_substitute([zero] * rank, vals))
    return Affine(particular, tuple(kernel))


def rank(M: RFMatrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    A = [_clear_denominators(row, M.variables) for row in M.rows]
    return _bareiss(A, M.ncols)[0]


def determinant(M: RFMatrix) -> RationalFunction:
    """Bareiss determinant of a square matrix."""
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    if M.nrows == 0:
        return RationalFunction.constant(M.variables, 1)
    scale = RationalFunction.constant(M.variables, 1)
    A = []
    for row in M.rows:
        cleared = _clear_denominators(row, M.variables)
        # cleared = row * common, recover common from any nonzero entry
        for e, c in zip(row, cleared):
            if not e.is_zero():
                scale = scale * (RationalFunction._poly(c) / e)
                break
        A.append(cleared)
    r, _, swaps = _bareiss(A, M.ncols)
    if r < M.ncols:
        return RationalFunction.zero(M.variables)
    det = RationalFunction._poly(A[-1][-1])
    if swaps % 2:
        det = -det
    return det / scale

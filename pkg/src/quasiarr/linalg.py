"""Exact integer linear algebra.

Smith normal form over Z, the induced invariant factors over Z_q, and
solvability / solution counting for linear congruence systems.  Python ints
are arbitrary precision, so no overflow handling is needed anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd, prod
from typing import Iterable, Sequence

from .errors import InvalidModulusError, RangeError, ShapeError


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major integer matrix.  Zero rows or zero columns are legal."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ShapeError("column count is required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ShapeError(f"ragged row of length {len(r)}, expected {cols}")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls.from_rows(
            [[int(i == j) for j in range(size)] for i in range(size)], cols=size
        )

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def select_rows(self, indices: Iterable[int]) -> "IntMatrix":
        return IntMatrix.from_rows([self.row(i) for i in indices], cols=self.cols)

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if other.cols != self.cols:
            raise ShapeError(f"cannot stack {self.cols} and {other.cols} columns")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def augment(self, column: Sequence[int]) -> "IntMatrix":
        """Return ``[self, column]``."""
        if len(column) != self.rows:
            raise ShapeError(f"column of length {len(column)} for {self.rows} rows")
        return IntMatrix.from_rows(
            [self.row(i) + (int(column[i]),) for i in range(self.rows)],
            cols=self.cols + 1,
        )

    def matvec(self, x: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(self.row(i), x)) for i in range(self.rows)]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of an integer matrix."""

    rank: int
    factors: tuple[int, ...]

    @property
    def maximal(self) -> int:
        """Largest invariant factor, or 0 for a rank-zero matrix."""
        return self.factors[-1] if self.factors else 0


@dataclass(frozen=True)
class ModqFactors:
    """Invariant factors of a matrix reduced mod q.

    ``factors`` lists ``gcd(q, d_i)`` for the leading ``d_i`` not divisible by q.
    """

    modulus: int
    factors: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.factors)


def _check_modulus(q):
    if q < 1:
        raise InvalidModulusError(f"modulus must be a positive integer, got {q}")


def smith_normal_form(M: IntMatrix) -> SmithForm:
    """Compute the invariant factors of ``M`` by unimodular elimination.

    Pivots are the smallest nonzero entry (in absolute value) of the active
    submatrix.  A pivot that fails to divide the rest of the submatrix is
    repaired by adding the offending row into the pivot row and resweeping.
    """
    a = M.to_rows()
    nrows, ncols = M.rows, M.cols
    factors = []
    t = 0
    while t < nrows and t < ncols:
        pivot = _min_nonzero(a, t, nrows, ncols)
        if pivot is None:
            break
        _move_to(a, pivot, t)
        while True:
            if not _clear_cross(a, t, nrows, ncols):
                continue
            bad = _non_divisible_row(a, t, nrows, ncols)
            if bad is None:
                break
            row_t, row_b = a[t], a[bad]
            for j in range(t, ncols):
                row_t[j] += row_b[j]
        factors.append(abs(a[t][t]))
        t += 1
    return SmithForm(len(factors), tuple(factors))


def _min_nonzero(a, t, nrows, ncols):
    best = None
    for i in range(t, nrows):
        row = a[i]
        for j in range(t, ncols):
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return best[1], best[2]
    return None if best is None else (best[1], best[2])


def _move_to(a, pos, t):
    i, j = pos
    if i != t:
        a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def _clear_cross(a, t, nrows, ncols):
    """Reduce row t and column t against the pivot at (t, t).

    Returns False if a smaller remainder appeared and was swapped in as the
    new pivot, in which case the caller must sweep again.
    """
    p = a[t][t]
    for i in range(t + 1, nrows):
        v = a[i][t]
        if v:
            f = v // p
            row_i, row_t = a[i], a[t]
            for j in range(t, ncols):
                row_i[j] -= f * row_t[j]
            if row_i[t]:
                _move_to(a, (i, t), t)
                return False
    for j in range(t + 1, ncols):
        v = a[t][j]
        if v:
            f = v // p
            for i in range(t, nrows):
                a[i][j] -= f * a[i][t]
            if a[t][j]:
                _move_to(a, (t, j), t)
                return False
    return True


def _non_divisible_row(a, t, nrows, ncols):
    p = a[t][t]
    for i in range(t + 1, nrows):
        row = a[i]
        for j in range(t + 1, ncols):
            if row[j] % p:
                return i
    return None


def modq_factors(sf: SmithForm, q: int) -> ModqFactors:
    _check_modulus(q)
    out = []
    for d in sf.factors:
        if d % q == 0:
            break
        out.append(gcd(q, d))
    return ModqFactors(q, tuple(out))


def solvable_from_forms(plain: SmithForm, augmented: SmithForm, q: int) -> bool:
    """Decide ``[c]_q in Col_q(M)`` from the Smith forms of ``M`` and ``[M, c]``.

    ``[M, 0]`` has the invariant factors of ``M``, so the system is solvable
    exactly when both reduce to the same invariant factors mod q.
    """
    return modq_factors(plain, q) == modq_factors(augmented, q)


def _check_system(M, c):
    if len(c) != M.rows:
        raise ShapeError(f"right-hand side of length {len(c)} for {M.rows} equations")


def is_solvable_mod_q(M: IntMatrix, c: Sequence[int], q: int) -> bool:
    _check_system(M, c)
    _check_modulus(q)
    return solvable_from_forms(smith_normal_form(M), smith_normal_form(M.augment(c)), q)


def count_from_form(sf: SmithForm, ncols: int, q: int) -> int:
    """Size of the kernel of ``M`` mod q: ``q^(n-r) * prod gcd(q, d_j)``."""
    return q ** (ncols - sf.rank) * prod(gcd(q, d) for d in sf.factors)


def count_solutions_mod_q(M: IntMatrix, c: Sequence[int], q: int) -> int:
    """Number of ``x`` in ``Z_q^n`` with ``Mx = c (mod q)``."""
    _check_system(M, c)
    _check_modulus(q)
    sf = smith_normal_form(M)
    if not solvable_from_forms(sf, smith_normal_form(M.augment(c)), q):
        return 0
    return count_from_form(sf, M.cols, q)


def _det(rows):
    # Bareiss fraction-free elimination; exact for integer input.
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def gcd_of_minors(M: IntMatrix, j: int) -> int:
    """gcd of all ``j x j`` minors of ``M`` (0 if they all vanish)."""
    if not 1 <= j <= min(M.rows, M.cols):
        raise RangeError(f"minor size {j} outside 1..{min(M.rows, M.cols)}")
    rows = M.to_rows()
    minors = (
        _det([[rows[r][c] for c in cs] for r in rs])
        for rs in combinations(range(M.rows), j)
        for cs in combinations(range(M.cols), j)
    )
    return reduce(gcd, minors, 0)

"""Brute-force ground truth by exhaustive enumeration of ``Z_q^n``.

Deliberately independent of the Smith-form machinery: these functions only
reduce dot products mod q.  They exist to cross-check the exact formulas.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .errors import BudgetExceededError, InvalidModulusError
from .linalg import IntMatrix

DEFAULT_BUDGET = 10**7


def _check(q, n, budget):
    if q < 1:
        raise InvalidModulusError(f"modulus must be a positive integer, got {q}")
    budget = DEFAULT_BUDGET if budget is None else budget
    if q**n > budget:
        raise BudgetExceededError(
            f"enumerating {q}^{n} points exceeds the oracle budget {budget}", budget
        )


def _satisfies(rows, rhs, x, q):
    for row, c in zip(rows, rhs):
        if (sum(a * v for a, v in zip(row, x)) - c) % q:
            return False
    return True


def solution_set(M: IntMatrix, c: Sequence[int], q: int, budget: int | None = None):
    """All ``x`` in ``Z_q^n`` (lexicographic order) with ``Mx = c (mod q)``."""
    _check(q, M.cols, budget)
    rows = M.to_rows()
    return [x for x in product(range(q), repeat=M.cols) if _satisfies(rows, c, x, q)]


def brute_count_solutions(M: IntMatrix, c: Sequence[int], q: int, budget: int | None = None) -> int:
    return len(solution_set(M, c, q, budget))


def brute_count_complement(arr, q: int, budget: int | None = None) -> int:
    _check(q, arr.n, budget)
    B, A = arr.B.to_rows(), arr.A.to_rows()
    count = 0
    for x in product(range(q), repeat=arr.n):
        if not _satisfies(B, arr.b, x, q):
            continue
        for row, ai in zip(A, arr.a):
            if (sum(u * v for u, v in zip(row, x)) - ai) % q == 0:
                break
        else:
            count += 1
    return count


def brute_count_colorings(n: int, edges, w, q: int, budget: int | None = None) -> int:
    """Vertex maps ``c: [n] -> Z_q`` with ``c(head) - c(tail) != w_e`` on every edge."""
    _check(q, n, budget)
    return sum(
        all((c[h - 1] - c[t - 1] - we) % q for (t, h), we in zip(edges, w))
        for c in product(range(q), repeat=n)
    )


def brute_count_flows(n: int, edges, b, q: int, budget: int | None = None) -> int:
    """Nowhere-zero edge labelings whose net inflow at each vertex is ``b_v`` mod q."""
    _check(q, len(edges), budget)
    count = 0
    for f in product(range(1, q), repeat=len(edges)):
        net = [0] * n
        for (t, h), val in zip(edges, f):
            net[h - 1] += val
            net[t - 1] -= val
        if all((x - bv) % q == 0 for x, bv in zip(net, b)):
            count += 1
    return count

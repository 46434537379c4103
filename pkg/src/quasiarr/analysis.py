"""Unsigned coefficients, combinatorial equivalence and comparison checkers.

The checkers return a :class:`ComparisonVerdict` rather than asserting, so a
failing hypothesis (a perfectly legitimate outcome) can be reported alongside
the coefficient data that shows why the conclusion may break.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .arrangement import (
    TruncatedArrangement,
    count_complement,
    lcm_period,
    q_zero,
    subset_profiles,
    tilde_d,
)
from .errors import InvalidModulusError, PreconditionError, RangeError
from .linalg import (
    IntMatrix,
    is_solvable_mod_q,
    smith_normal_form,
    solvable_from_forms,
)
from .oracle import solution_set


@dataclass(frozen=True)
class CoefficientVector:
    """Unsigned coefficients indexed ``lower .. upper`` (inclusive)."""

    lower: int
    upper: int
    values: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        if not self.lower <= j <= self.upper:
            raise IndexError(j)
        return self.values[j - self.lower]

    def items(self):
        return list(zip(range(self.lower, self.upper + 1), self.values))


@dataclass(frozen=True)
class ComparisonVerdict:
    hypotheses_hold: bool
    conclusion_holds: bool
    witness: Optional[int] = None
    left: object = None
    right: object = None

    @property
    def falsified(self) -> bool:
        """Hypotheses true but conclusion false: a counterexample to the theorem."""
        return self.hypotheses_hold and not self.conclusion_holds


def _positive(x, what="modulus"):
    if x < 1:
        raise InvalidModulusError(f"{what} must be a positive integer, got {x}")


def _coefficients(arr: TruncatedArrangement, q: int) -> CoefficientVector:
    profiles = subset_profiles(arr)
    r, s = profiles[0].rJ, profiles[-1].rJ
    acc = [0] * (s - r + 1)
    for p in profiles:
        if p.rank_preserving:
            acc[p.rJ - r] += p.sign * tilde_d(p, q)
    return CoefficientVector(r, s, tuple((-1) ** k * v for k, v in enumerate(acc)))


def beta(arr: TruncatedArrangement, q: int) -> CoefficientVector:
    """Unsigned coefficients of the counting quasi-polynomial at modulus q."""
    _positive(q)
    return _coefficients(arr, q)


def gamma(arr: TruncatedArrangement, a: int) -> CoefficientVector:
    """Unsigned coefficients of the constituent for residue a."""
    _positive(a, "residue")
    return _coefficients(arr, a)


def solvable_subsets(arr: TruncatedArrangement, q: int) -> frozenset[int]:
    """Masks of rank-preserving ``J`` whose intersection is nonempty mod q."""
    _positive(q)
    return frozenset(
        p.J
        for p in subset_profiles(arr)
        if p.rank_preserving and solvable_from_forms(p.dJ, p.dbarJ, q)
    )


def combinatorially_equivalent(arr: TruncatedArrangement, a: int, b: int) -> bool:
    return solvable_subsets(arr, a) == solvable_subsets(arr, b)


def solvability_transfers(arr: TruncatedArrangement, a: int, b: int) -> bool:
    """Every rank-preserving ``J`` solvable mod a is also solvable mod b.

    Under ``gcd(a, rho) | gcd(b, rho)`` and ``a, b > q0`` this one-sided
    condition is an alternative characterization of equivalence.
    """
    return solvable_subsets(arr, a) <= solvable_subsets(arr, b)


def _divides(x, y):
    return y % x == 0


def _compare(left: CoefficientVector, right: CoefficientVector, hyp: bool) -> ComparisonVerdict:
    witness = None
    for (j, x), (_, y) in zip(left.items(), right.items()):
        if not 0 <= x <= y:
            witness = j
            break
    return ComparisonVerdict(hyp, witness is None, witness, left, right)


def check_main3(arr: TruncatedArrangement, a: int, b: int) -> ComparisonVerdict:
    """``0 <= beta_j(a) <= beta_j(b)`` for moduli above the threshold."""
    q0 = q_zero(arr)
    if a <= q0 or b <= q0:
        raise PreconditionError(f"moduli must exceed q0={q0}, got {a}, {b}")
    rho = lcm_period(arr)
    hyp = _divides(gcd(a, rho), gcd(b, rho)) and combinatorially_equivalent(arr, a, b)
    return _compare(beta(arr, a), beta(arr, b), hyp)


def check_main4(arr: TruncatedArrangement, a: int, b: int) -> ComparisonVerdict:
    """``0 <= gamma_j(a) <= gamma_j(b)`` for residues in ``1..rho``."""
    rho = lcm_period(arr)
    if not (1 <= a <= rho and 1 <= b <= rho):
        raise RangeError(f"residues must lie in 1..{rho}, got {a}, {b}")
    ga, gb = gcd(a, rho), gcd(b, rho)
    hyp = _divides(ga, gb) and combinatorially_equivalent(arr, ga, gb)
    return _compare(gamma(arr, a), gamma(arr, b), hyp)


def surjectivity_predicate(factors: Sequence[int], p: int, q: int) -> bool:
    return all(d % (gcd(p, d) * gcd(q, d)) == 0 for d in factors)


def check_main5(arr: TruncatedArrangement, p: int, q: int) -> ComparisonVerdict:
    """``#M(q) <= #M(pq)`` when reduction mod q is onto from the pq solutions of ``Bx = b``."""
    _positive(p)
    _positive(q)
    factors = smith_normal_form(arr.B).factors
    hyp = surjectivity_predicate(factors, p, q) and is_solvable_mod_q(arr.B, arr.b, p * q)
    small, large = count_complement(arr, q), count_complement(arr, p * q)
    return ComparisonVerdict(hyp, small <= large, None, small, large)


def surjectivity_check(M: IntMatrix, c: Sequence[int], p: int, q: int) -> bool:
    """Brute force: does reduction mod q map ``V_pq(M, c)`` onto ``V_q(M, c)``?"""
    _positive(p)
    _positive(q)
    upper = solution_set(M, c, p * q)
    if not upper:
        raise PreconditionError(f"system is unsolvable mod {p * q}")
    image = {tuple(x % q for x in v) for v in upper}
    return image == set(solution_set(M, c, q))


def deletion_restriction(
    arr: TruncatedArrangement, i: int
) -> tuple[TruncatedArrangement, TruncatedArrangement]:
    """Split off hyperplane ``i`` (1-based).

    Returns the deletion (row removed from ``[A, a]``) and the restriction
    (same remaining hyperplanes, with the removed row appended to ``[B, b]``).
    Their complement counts satisfy ``count = count(del) - count(restr)``.
    """
    if not 1 <= i <= arr.m:
        raise RangeError(f"hyperplane index {i} outside 1..{arr.m}")
    keep = [k for k in range(arr.m) if k != i - 1]
    A = arr.A.select_rows(keep)
    a = tuple(arr.a[k] for k in keep)
    deletion = TruncatedArrangement(A, a, arr.B, arr.b)
    restriction = TruncatedArrangement(
        A, a, arr.B.vstack(arr.A.select_rows([i - 1])), arr.b + (arr.a[i - 1],)
    )
    return deletion, restriction

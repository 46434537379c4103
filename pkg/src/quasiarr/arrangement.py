"""Truncated integral arrangements and their characteristic quasi-polynomials.

A truncated arrangement is given by integer data ``(A, a, B, b)``: the
hyperplanes ``A_i . x = a_i`` restricted to the affine set ``Bx = b``.  For a
modulus q everything is reduced into ``Z_q^n`` and we count the points of the
ambient set lying on no hyperplane.

For every row subset ``J`` we stack ``C_J = [B; A_J]`` and its augmentation
``[C_J, c_J]`` with ``c_J = [b; a_J]``; the Smith forms of these two matrices
determine everything else by inclusion-exclusion.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, prod

from .errors import InvalidModulusError, RangeError, ShapeError, SizeLimitError
from .linalg import IntMatrix, SmithForm, smith_normal_form
from .polynomial import Polynomial

DEFAULT_MAX_M = 24


@dataclass(frozen=True)
class TruncatedArrangement:
    A: IntMatrix
    a: tuple[int, ...]
    B: IntMatrix
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if self.A.cols != self.B.cols:
            raise ShapeError(f"A has {self.A.cols} columns but B has {self.B.cols}")
        if len(self.a) != self.A.rows:
            raise ShapeError(f"a has length {len(self.a)}, A has {self.A.rows} rows")
        if len(self.b) != self.B.rows:
            raise ShapeError(f"b has length {len(self.b)}, B has {self.B.rows} rows")

    @classmethod
    def build(cls, A, a, B=None, b=None, n=None) -> "TruncatedArrangement":
        """Convenience constructor from nested lists.

        ``n`` is only needed when neither ``A`` nor ``B`` has a row.
        """
        A = list(A)
        B = [] if B is None else list(B)
        if n is None:
            if A:
                n = len(A[0])
            elif B:
                n = len(B[0])
            else:
                raise ShapeError("dimension n is required when A and B are both empty")
        return cls(
            IntMatrix.from_rows(A, cols=n),
            tuple(a),
            IntMatrix.from_rows(B, cols=n),
            tuple([] if b is None else b),
        )

    @property
    def m(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols

    @property
    def l(self) -> int:  # noqa: E743
        return self.B.rows

    def is_central(self) -> bool:
        return not any(self.a) and not any(self.b)

    def system(self, J: int) -> tuple[IntMatrix, tuple[int, ...]]:
        """``(C_J, c_J)`` for the subset encoded by bit mask ``J``."""
        idx = [i for i in range(self.m) if J >> i & 1]
        C = self.B.vstack(self.A.select_rows(idx))
        c = self.b + tuple(self.a[i] for i in idx)
        return C, c


@dataclass(frozen=True)
class SubsetProfile:
    J: int
    size: int
    rJ: int
    rbarJ: int
    dJ: SmithForm
    dbarJ: SmithForm

    @property
    def rank_preserving(self) -> bool:
        """True when augmenting by ``c_J`` does not raise the rank."""
        return self.rbarJ == self.rJ

    @property
    def sign(self) -> int:
        return -1 if self.size % 2 else 1


def _profile(arr: TruncatedArrangement, J: int) -> SubsetProfile:
    C, c = arr.system(J)
    d = smith_normal_form(C)
    dbar = smith_normal_form(C.augment(c))
    return SubsetProfile(J, bin(J).count("1"), d.rank, dbar.rank, d, dbar)


def _profile_chunk(args):
    arr, masks = args
    return [_profile(arr, J) for J in masks]


_PROFILE_CACHE: dict[TruncatedArrangement, tuple[SubsetProfile, ...]] = {}
_PROFILE_CACHE_SIZE = 512


def subset_profiles(
    arr: TruncatedArrangement, max_m: int | None = None, workers: int | None = None
) -> tuple[SubsetProfile, ...]:
    """Smith-form data for every subset ``J`` of the hyperplanes, indexed by mask.

    With ``workers > 1`` the subsets are split across a process pool.  Results
    are memoized per arrangement, so the cap only guards fresh computations.
    """
    cached = _PROFILE_CACHE.get(arr)
    if cached is not None:
        return cached
    cap = DEFAULT_MAX_M if max_m is None else max_m
    if arr.m > cap:
        raise SizeLimitError(f"arrangement has m={arr.m} hyperplanes, cap is {cap}", cap)
    total = 1 << arr.m
    if workers and workers > 1 and total >= 256:
        step = -(-total // (workers * 4))
        chunks = [(arr, range(s, min(s + step, total))) for s in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            profiles = tuple(p for part in pool.map(_profile_chunk, chunks) for p in part)
    else:
        profiles = tuple(_profile(arr, J) for J in range(total))
    if len(_PROFILE_CACHE) >= _PROFILE_CACHE_SIZE:
        _PROFILE_CACHE.pop(next(iter(_PROFILE_CACHE)))
    _PROFILE_CACHE[arr] = profiles
    return profiles


def _check_q(q):
    if q < 1:
        raise InvalidModulusError(f"modulus must be a positive integer, got {q}")


def tilde_d(p: SubsetProfile, q: int) -> int:
    """``prod gcd(d_{J,j}, q)`` if ``C_J x = c_J`` is solvable mod q, else 0.

    Solvability is read off the Smith forms: the gcds with q of the invariant
    factors of ``C_J`` and ``[C_J, c_J]`` must agree position by position, a
    missing factor of ``C_J`` counting as 0 (so ``gcd(q, 0) = q``).
    """
    _check_q(q)
    d, dbar = p.dJ.factors, p.dbarJ.factors
    for j in range(p.rbarJ):
        dj = d[j] if j < p.rJ else 0
        if gcd(q, dj) != gcd(q, dbar[j]):
            return 0
    return prod(gcd(x, q) for x in d)


def count_complement(arr: TruncatedArrangement, q: int, max_m: int | None = None) -> int:
    """Exact number of points of ``V_q(B, b)`` on none of the reduced hyperplanes."""
    _check_q(q)
    n = arr.n
    return sum(
        p.sign * tilde_d(p, q) * q ** (n - p.rJ)
        for p in subset_profiles(arr, max_m)
    )


def lcm_period(arr: TruncatedArrangement, max_m: int | None = None) -> int:
    maxima = [p.dJ.maximal for p in subset_profiles(arr, max_m) if p.rank_preserving]
    # rank-0 subsets contribute the empty product 1
    return reduce(lambda x, y: x * y // gcd(x, y), (d or 1 for d in maxima), 1)


def q_zero(arr: TruncatedArrangement, max_m: int | None = None) -> int:
    return max(
        (p.dbarJ.maximal for p in subset_profiles(arr, max_m) if not p.rank_preserving),
        default=0,
    )


def divisors(k: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= k:
        if k % i == 0:
            small.append(i)
            if i * i != k:
                large.append(k // i)
        i += 1
    return small + large[::-1]


@dataclass(frozen=True)
class QuasiPolynomial:
    """Characteristic quasi-polynomial, one constituent per divisor of the period.

    For every integer ``q > threshold`` the number of complement points mod q
    equals ``constituent(q)(q)``.
    """

    period: int
    threshold: int
    constituents: dict[int, Polynomial] = field(compare=True)
    rank_B: int = 0
    rank_all: int = 0
    real_solution_empty: bool = False

    def constituent(self, a: int) -> Polynomial:
        if a < 1:
            raise RangeError(f"residue must be a positive integer, got {a}")
        return self.constituents[gcd(a, self.period)]

    def __call__(self, q: int) -> int:
        return self.constituent(q)(q)

    def to_dict(self) -> dict:
        return {
            "period": self.period,
            "q0": self.threshold,
            "constituents": {
                str(g): poly.descending() for g, poly in sorted(self.constituents.items())
            },
            "real_solution_empty": self.real_solution_empty,
        }


def constituent_at(arr: TruncatedArrangement, g: int, max_m: int | None = None) -> Polynomial:
    """Constituent selected by residue ``g``; only rank-preserving subsets contribute."""
    return Polynomial.from_terms(
        (arr.n - p.rJ, p.sign * tilde_d(p, g))
        for p in subset_profiles(arr, max_m)
        if p.rank_preserving
    )


def characteristic_quasi_polynomial(
    arr: TruncatedArrangement, max_m: int | None = None
) -> QuasiPolynomial:
    profiles = subset_profiles(arr, max_m)
    rho = lcm_period(arr, max_m)
    empty = profiles[0]
    return QuasiPolynomial(
        period=rho,
        threshold=q_zero(arr, max_m),
        constituents={g: constituent_at(arr, g, max_m) for g in divisors(rho)},
        rank_B=empty.rJ,
        rank_all=profiles[-1].rJ,
        real_solution_empty=not empty.rank_preserving,
    )


def constituent(qp: QuasiPolynomial, a: int) -> Polynomial:
    return qp.constituent(a)


def characteristic_polynomial(arr: TruncatedArrangement, max_m: int | None = None) -> Polynomial:
    return characteristic_quasi_polynomial(arr, max_m).constituent(1)

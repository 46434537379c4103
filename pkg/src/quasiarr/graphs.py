"""Group colorings and nowhere-zero group flows of directed multigraphs.

A ``(Z_q, w)``-coloring assigns ``c: V -> Z_q`` with ``c(head) - c(tail) != w_e``
for every edge; these are exactly the complement points of the affinographic
arrangement ``x_head - x_tail = w_e``.  Nowhere-zero ``(Z_q, b)``-flows are
the complement points of the coordinate arrangement ``x_e = 0`` truncated by
the conservation law ``M_G f = b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arrangement import (
    QuasiPolynomial,
    TruncatedArrangement,
    characteristic_quasi_polynomial,
    count_complement,
    subset_profiles,
)
from .errors import ShapeError
from .linalg import IntMatrix
from .polynomial import Polynomial


@dataclass(frozen=True)
class DirectedMultigraph:
    """Vertices ``1..n``; ``edges`` are ``(tail, head)`` pairs, loops and repeats allowed."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        for t, h in edges:
            if not (1 <= t <= self.n and 1 <= h <= self.n):
                raise ShapeError(f"edge ({t}, {h}) has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def reversed_edge(self, k: int) -> "DirectedMultigraph":
        edges = list(self.edges)
        t, h = edges[k]
        edges[k] = (h, t)
        return DirectedMultigraph(self.n, tuple(edges))


def _check_length(values, expected, name):
    if len(values) != expected:
        raise ShapeError(f"{name} has length {len(values)}, expected {expected}")


def incidence_matrix(G: DirectedMultigraph) -> IntMatrix:
    rows = [[0] * G.m for _ in range(G.n)]
    for e, (t, h) in enumerate(G.edges):
        if t != h:
            rows[h - 1][e] = 1
            rows[t - 1][e] = -1
    return IntMatrix.from_rows(rows, cols=G.m)


def affinographic_arrangement(G: DirectedMultigraph, w: Sequence[int]) -> TruncatedArrangement:
    _check_length(w, G.m, "w")
    A = incidence_matrix(G).transpose()
    return TruncatedArrangement(A, tuple(w), IntMatrix.zeros(0, G.n), ())


def flow_arrangement(G: DirectedMultigraph, b: Sequence[int]) -> TruncatedArrangement:
    """Coordinate hyperplanes ``f_e = 0`` inside ``{f : M_G f = b}``."""
    _check_length(b, G.n, "b")
    return TruncatedArrangement(
        IntMatrix.identity(G.m), (0,) * G.m, incidence_matrix(G), tuple(b)
    )


def count_colorings(G: DirectedMultigraph, w: Sequence[int], q: int, max_m: int | None = None) -> int:
    return count_complement(affinographic_arrangement(G, w), q, max_m)


def modular_chromatic_polynomial(
    G: DirectedMultigraph, w: Sequence[int], max_m: int | None = None
) -> tuple[QuasiPolynomial, Polynomial, int]:
    """Quasi-polynomial, modular chromatic polynomial, and the threshold ``q_w``."""
    qp = characteristic_quasi_polynomial(affinographic_arrangement(G, w), max_m)
    return qp, qp.constituent(1), qp.threshold


def count_flows(G: DirectedMultigraph, b: Sequence[int], q: int, max_m: int | None = None) -> int:
    return count_complement(flow_arrangement(G, b), q, max_m)


def flow_polynomial(
    G: DirectedMultigraph, b: Sequence[int], max_m: int | None = None
) -> tuple[QuasiPolynomial, Polynomial, int]:
    """Quasi-polynomial, flow polynomial ``tau(G, b; t)``, and the threshold ``q_b``."""
    qp = characteristic_quasi_polynomial(flow_arrangement(G, b), max_m)
    return qp, qp.constituent(1), qp.threshold


def balanced_subsets(G: DirectedMultigraph, w: Sequence[int], max_m: int | None = None) -> frozenset[int]:
    """Edge masks ``S`` whose weighted incidence rows keep the graphic rank.

    Two orientations (with weights negated on reversed edges or not) give the
    same modular chromatic polynomial whenever these families coincide.
    """
    profiles = subset_profiles(affinographic_arrangement(G, w), max_m)
    return frozenset(p.J for p in profiles if p.rank_preserving)

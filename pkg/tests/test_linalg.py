import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiarr.errors import InvalidModulusError, RangeError, ShapeError
from quasiarr.linalg import (
    IntMatrix,
    SmithForm,
    count_solutions_mod_q,
    gcd_of_minors,
    is_solvable_mod_q,
    modq_factors,
    smith_normal_form,
)


def M(rows, cols=None):
    return IntMatrix.from_rows(rows, cols)


@st.composite
def small_matrices(draw, max_dim=4, bound=9):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r))
    return IntMatrix.from_rows(rows, cols=c)


def brute_solutions(mat, c, q):
    rows = mat.to_rows()
    return sum(
        all((sum(a * v for a, v in zip(row, x)) - ci) % q == 0 for row, ci in zip(rows, c))
        for x in product(range(q), repeat=mat.cols)
    )


class TestIntMatrix:
    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            IntMatrix(2, 2, (1, 2, 3))

    def test_ragged_rows(self):
        with pytest.raises(ShapeError):
            M([[1, 2], [3]])

    def test_empty_needs_cols(self):
        with pytest.raises(ShapeError):
            M([])
        assert M([], 3).cols == 3

    def test_transpose_and_augment(self):
        m = M([[1, 2, 3], [4, 5, 6]])
        assert m.transpose().to_rows() == [[1, 4], [2, 5], [3, 6]]
        assert m.augment([7, 8]).to_rows() == [[1, 2, 3, 7], [4, 5, 6, 8]]


@pytest.mark.parametrize(
    "rows, cols, rank, factors",
    [
        ([[1, 0], [0, 1]], 2, 2, (1, 1)),
        ([[2, 0], [0, 3]], 2, 2, (1, 6)),
        ([[2, 0], [2, 2]], 2, 2, (2, 2)),
        ([], 3, 0, ()),
        ([[0, 0], [0, 0]], 2, 0, ()),
        ([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]], 4, 3, (1, 10, 30)),
        ([[2, 0, 0], [2, 2, 3]], 3, 2, (1, 2)),
    ],
)
def test_smith_examples(rows, cols, rank, factors):
    assert smith_normal_form(M(rows, cols)) == SmithForm(rank, factors)


def test_smith_large_entries():
    # intermediate growth must not matter with exact integers
    big = 10**30
    sf = smith_normal_form(M([[big, big + 1], [big - 1, big]]))
    assert sf == SmithForm(2, (1, 1))


@settings(max_examples=300, deadline=None)
@given(small_matrices())
def test_smith_matches_minors(mat):
    sf = smith_normal_form(mat)
    assert all(d > 0 for d in sf.factors)
    assert all(y % x == 0 for x, y in zip(sf.factors, sf.factors[1:]))
    running = 1
    for j in range(1, min(mat.rows, mat.cols) + 1):
        g = gcd_of_minors(mat, j)
        if j <= sf.rank:
            running *= sf.factors[j - 1]
            assert g == running
        else:
            assert g == 0


@settings(max_examples=150, deadline=None)
@given(small_matrices(), st.randoms(use_true_random=False))
def test_smith_invariant_under_signed_permutations(mat, rnd):
    rows = mat.to_rows()
    rnd.shuffle(rows)
    perm = list(range(mat.cols))
    rnd.shuffle(perm)
    rs = [rnd.choice((-1, 1)) for _ in rows]
    cs = [rnd.choice((-1, 1)) for _ in perm]
    moved = [[rs[i] * cs[j] * row[perm[j]] for j in range(mat.cols)] for i, row in enumerate(rows)]
    assert smith_normal_form(M(moved, mat.cols)) == smith_normal_form(mat)


def test_interlacing_divisibility():
    rng = random.Random(7)
    for _ in range(300):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        base = M([[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)])
        extra = M([[rng.randint(-6, 6) for _ in range(c)]])
        dm = smith_normal_form(base)
        dn = smith_normal_form(base.vstack(extra))
        fm = list(dm.factors) + [0]
        fn = list(dn.factors) + [0] * (dm.rank + 2 - dn.rank)
        for i in range(dm.rank):
            # 0 is divisible by everything; x | 0 always holds
            assert fm[i] % fn[i] == 0
            assert fn[i + 1] % fm[i] == 0


class TestModq:
    def test_examples(self):
        assert modq_factors(SmithForm(2, (1, 6)), 4).factors == (1, 2)
        assert modq_factors(SmithForm(2, (1, 6)), 4).count == 2
        assert modq_factors(SmithForm(2, (2, 2)), 2).factors == ()
        assert modq_factors(SmithForm(0, ()), 5).factors == ()

    def test_stops_at_first_multiple(self):
        assert modq_factors(SmithForm(3, (1, 3, 6)), 3).factors == (1,)

    def test_invalid_modulus(self):
        with pytest.raises(InvalidModulusError):
            modq_factors(SmithForm(1, (1,)), 0)


class TestSolvability:
    def test_examples(self):
        assert is_solvable_mod_q(M([[2, 0]]), [0], 6)
        assert not is_solvable_mod_q(M([[2, 0], [2, 2]]), [0, 3], 2)
        assert is_solvable_mod_q(M([[2, 0], [2, 2]]), [0, 3], 3)
        assert brute_solutions(M([[2, 0], [2, 2]]), [0, 3], 2) == 0

    def test_counts(self):
        assert count_solutions_mod_q(M([], 2), [], 5) == 25
        assert count_solutions_mod_q(M([[2, 0]]), [0], 4) == 8
        assert count_solutions_mod_q(M([[2, 0]]), [0], 5) == 5

    def test_errors(self):
        with pytest.raises(ShapeError):
            is_solvable_mod_q(M([[1, 2]]), [1, 2], 3)
        with pytest.raises(InvalidModulusError):
            count_solutions_mod_q(M([[1]]), [1], 0)
        with pytest.raises(ShapeError):
            count_solutions_mod_q(M([[1]]), [], 3)

    @settings(max_examples=250, deadline=None)
    @given(small_matrices(max_dim=3, bound=6), st.integers(1, 10), st.data())
    def test_count_matches_enumeration(self, mat, q, data):
        c = data.draw(st.lists(st.integers(-6, 6), min_size=mat.rows, max_size=mat.rows))
        expected = brute_solutions(mat, c, q)
        assert count_solutions_mod_q(mat, c, q) == expected
        assert is_solvable_mod_q(mat, c, q) == (expected > 0)


class TestMinors:
    def test_examples(self):
        assert gcd_of_minors(M([[2, 0], [0, 3]]), 1) == 1
        assert gcd_of_minors(M([[2, 0], [0, 3]]), 2) == 6
        assert gcd_of_minors(M([[1, 2], [2, 4]]), 2) == 0

    def test_range(self):
        with pytest.raises(RangeError):
            gcd_of_minors(M([[1, 2]]), 2)
        with pytest.raises(RangeError):
            gcd_of_minors(M([[1, 2]]), 0)

import random
from fractions import Fraction

import pytest

from cusplab.linalg import RationalMatrix, rank_and_kernel, rref, solve_linear


class TestRankAndKernel:
    def test_identity(self):
        rank, kernel = rank_and_kernel([[1, 0], [0, 1]])
        assert rank == 2
        assert kernel == []

    def test_rectangular_with_kernel(self):
        rank, kernel = rank_and_kernel([[1, 2, 3], [2, 4, 6]])
        assert rank == 1
        assert len(kernel) == 2
        for vec in kernel:
            assert sum(Fraction(1) * a * b for a, b in zip([1, 2, 3], vec)) == 0

    def test_kernel_annihilates_random_matrices(self):
        rng = random.Random(2)
        for _ in range(25):
            rows = rng.randint(1, 6)
            cols = rng.randint(1, 6)
            m = [[Fraction(rng.randint(-5, 5)) for _ in range(cols)] for _ in range(rows)]
            rank, kernel = rank_and_kernel(m)
            assert rank + len(kernel) == cols
            for vec in kernel:
                for row in m:
                    assert sum(a * b for a, b in zip(row, vec)) == 0

    def test_kernel_normalization(self):
        # free column gets coefficient 1, other free columns 0
        _, kernel = rank_and_kernel([[1, 1, 0, 0]])
        assert kernel[0][1] == 1 and kernel[0][2] == 0 and kernel[0][3] == 0
        assert kernel[1][2] == 1 and kernel[1][1] == 0


class TestSolveLinear:
    def test_unique(self):
        sol, kernel = solve_linear([[2, 0], [0, 3]], [4, 9])
        assert sol == (2, 3)
        assert kernel == []

    def test_inconsistent(self):
        assert solve_linear([[1, 1], [1, 1]], [0, 1]) is None

    def test_underdetermined(self):
        sol, kernel = solve_linear([[1, 1]], [3])
        assert sum(sol) == 3
        assert len(kernel) == 1


class TestMatrixShell:
    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            RationalMatrix.from_rows([[1, 2], [3]])

    def test_rref_pivots(self):
        m, pivots = rref([[0, 2], [1, 1]])
        assert pivots == [0, 1]
        assert m[0][0] == 1 and m[1][1] == 1

import numpy as np
import pytest

from cusplab import oracle
from cusplab.tripleplane import build_condition_system, solve_projection_centers


@pytest.fixture(scope="module")
def paper_system(paper_f2, paper_f3):
    return build_condition_system(paper_f2, paper_f3, "corollary")


class TestKnownCounts:
    # frozen from a direct per-v linear solve over F_p written independently
    # of the package (plain modular Gaussian elimination, all reps enumerated)
    EXPECTED = {7: (3, 1), 11: (1, 1), 13: (1, 1)}

    def test_numpy_path(self, paper_system):
        for p, expect in self.EXPECTED.items():
            rows = oracle.system_rows_mod_p(paper_system, p)
            nz, z, *_ = oracle._numpy_enumerate(rows, p)
            assert (nz, z) == expect

    def test_numba_path(self, paper_system):
        for p, expect in self.EXPECTED.items():
            rows = oracle.system_rows_mod_p(paper_system, p)
            nz, z, *_ = oracle._numba_enumerate(rows, p)
            assert (nz, z) == expect

    def test_paths_agree_everywhere(self, paper_system):
        for p in (5, 7, 11, 13, 17, 19):
            rows = oracle.system_rows_mod_p(paper_system, p)
            a = oracle._numpy_enumerate(rows, p)
            b = oracle._numba_enumerate(rows, p)
            assert a[:4] == b[:4]
            assert a[5] == b[5]
            assert np.array_equal(a[4][:a[5]], b[4][:b[5]])


class TestAcceptancePrimes:
    def test_unique_center_mod_101_103_107(self, paper_system):
        for p in (101, 103, 107):
            counts = oracle.count_solutions_mod_p(paper_system, p)
            assert counts.pairs_lambda_nonzero == 1
            assert counts.pairs_lambda_zero == 1
            assert counts.v_points_lambda_nonzero == 1
            assert counts.sample_solutions[0][:4] == (0, 0, 0, 1)
            assert counts.sample_solutions[0][4:] == (0, 0, 0, 0, 0)


class TestPrediction:
    def test_exact_solution_set_predicts_counts(self, paper_system):
        sol = solve_projection_centers(paper_system)
        for p in (101, 103, 107):
            assert oracle.predicted_pair_counts(sol, p) == (1, 1)

    def test_prime_cap(self, paper_system):
        with pytest.raises(ValueError):
            oracle.system_rows_mod_p(paper_system, 30011)


class TestEnvFlag:
    def test_flag_selects_numpy(self, monkeypatch):
        monkeypatch.setenv("CUSPLAB_NO_NUMBA", "1")
        assert not oracle.use_numba()
        monkeypatch.setenv("CUSPLAB_NO_NUMBA", "0")
        assert oracle.use_numba()
        monkeypatch.delenv("CUSPLAB_NO_NUMBA")
        assert oracle.use_numba()

    def test_count_through_fallback(self, paper_system, monkeypatch):
        monkeypatch.setenv("CUSPLAB_NO_NUMBA", "1")
        counts = oracle.count_solutions_mod_p(paper_system, 11)
        assert (counts.pairs_lambda_nonzero, counts.pairs_lambda_zero) == (1, 1)

import pytest

from cusplab.numerology import (CurveClass, NumerologyError, brill_noether,
                                format_stratification_table, moduli_report,
                                plucker_dual, stratification_table)


class TestModuliReport:
    def test_six_cusp_sextic(self):
        rep = moduli_report(CurveClass(6, 0, 6))
        assert rep.g == 4
        assert rep.rho == 4
        assert rep.dim_moduli == 9
        assert rep.expected_severi_dim == 15
        assert rep.moduli_upper_bound == 7
        assert rep.fiber_lower_bound == 8

    def test_nine_cusp_sextic(self):
        rep = moduli_report(CurveClass(6, 0, 9))
        assert rep.g == 1
        assert rep.rho == 10
        assert rep.dim_moduli == 1
        assert rep.moduli_upper_bound == 1

    def test_eight_cusp_sextic(self):
        rep = moduli_report(CurveClass(6, 0, 8))
        assert rep.g == 2
        assert rep.rho == 8
        assert rep.rho - rep.k == 0
        assert rep.moduli_upper_bound == 3

    def test_seven_cusp_sextic(self):
        rep = moduli_report(CurveClass(6, 0, 7))
        assert rep.moduli_upper_bound == 5

    def test_negative_genus_rejected(self):
        with pytest.raises(NumerologyError):
            CurveClass(3, 2, 0)


class TestBrillNoether:
    def test_two_formula_forms_agree(self):
        for g in range(0, 12):
            for n in range(1, 12):
                assert brill_noether(g, n) == g - 3 * (g - n + 2)

    def test_bound_vs_moduli_dimension(self):
        for n in range(3, 9):
            for k in range(0, 3 * n):
                for d in range(0, 4):
                    try:
                        c = CurveClass(n, d, k)
                    except NumerologyError:
                        continue
                    rep = moduli_report(c)
                    assert rep.moduli_upper_bound <= rep.dim_moduli
                    assert (rep.moduli_upper_bound == rep.dim_moduli) == (rep.rho >= rep.k)


class TestPlucker:
    def test_smooth_cubic_dualizes_to_nine_cusp_sextic(self):
        dual = plucker_dual(CurveClass(3, 0, 0))
        assert (dual.n_star, dual.d_star, dual.k_star) == (6, 0, 9)

    def test_biduality_of_the_pair(self):
        dual = plucker_dual(CurveClass(6, 0, 9))
        assert (dual.n_star, dual.d_star, dual.k_star) == (3, 0, 0)

    def test_conic_self_dual(self):
        dual = plucker_dual(CurveClass(2, 0, 0))
        assert (dual.n_star, dual.d_star, dual.k_star) == (2, 0, 0)

    def test_genus_preserved(self):
        for n, d, k in ((3, 0, 0), (6, 0, 9), (2, 0, 0), (4, 0, 0), (5, 1, 2)):
            c = CurveClass(n, d, k)
            dual = plucker_dual(c)
            dual_class = CurveClass(dual.n_star, dual.d_star, dual.k_star)
            assert dual_class.genus() == c.genus()

    def test_biduality_sweep(self):
        hits = 0
        for n in range(2, 8):
            for d in range(0, 5):
                for k in range(0, 12):
                    try:
                        c = CurveClass(n, d, k)
                        dual = plucker_dual(c)
                        dd = CurveClass(dual.n_star, dual.d_star, dual.k_star)
                        back = plucker_dual(dd)
                    except NumerologyError:
                        continue
                    # biduality holds whenever the dual data is itself consistent
                    if (back.n_star, back.d_star, back.k_star) == (n, d, k):
                        hits += 1
        assert hits >= 10  # the classical pairs above are all in the sweep

    def test_inconsistent_rejected(self):
        with pytest.raises(NumerologyError):
            plucker_dual(CurveClass(2, 0, 1))


class TestStratification:
    def test_table_rows(self):
        rows = stratification_table()
        ks = [r["report"].k for r in rows]
        bounds = [r["report"].moduli_upper_bound for r in rows]
        assert ks == [9, 8, 7, 6]
        assert bounds == [1, 3, 5, 7]
        dominant = [r["report"].k for r in rows if r["dominant_expected"]]
        assert dominant == [8]

    def test_text_rendering(self):
        text = format_stratification_table()
        assert "dominant" in text
        assert text.count("\n") >= 5

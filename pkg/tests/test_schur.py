import pytest

from heckekit.laurent import vpow
from heckekit.schur import (G2_LABELS, DomainError, MTooSmall, RegimeNotCovered,
                            Symbol, bipartitions, conjugate, dominance_leq,
                            dominance_leq_multi, e_regular, f4_invariants,
                            f4_labels, g2_invariants, g2_schur, invariants_A,
                            invariants_asymptotic, invariants_azero,
                            invariants_B, l_good, min_symbol_size, nfun,
                            partitions, schur_element_B, standard_tableaux,
                            symbol_of, typeD_invariants, typeD_invariants_split)

# Table of alpha values per weight pair, one block per even b
TABLE3_ALPHA = {
    (1, 0): {((3,), ()): 0, ((), (3,)): 0, ((1,), (2,)): 1, ((2,), (1,)): 1,
             ((2, 1), ()): 2, ((), (2, 1)): 2, ((1, 1), (1,)): 3,
             ((1,), (1, 1)): 3, ((1, 1, 1), ()): 6, ((), (1, 1, 1)): 6},
    (1, 2): {((3,), ()): 0, ((2, 1), ()): 1, ((2,), (1,)): 2, ((1, 1), (1,)): 3,
             ((1, 1, 1), ()): 3, ((), (3,)): 3, ((1,), (2,)): 3,
             ((1,), (1, 1)): 6, ((), (2, 1)): 7, ((), (1, 1, 1)): 12},
    (1, 4): {((3,), ()): 0, ((2, 1), ()): 1, ((1, 1, 1), ()): 3, ((2,), (1,)): 4,
             ((1, 1), (1,)): 5, ((1,), (2,)): 7, ((), (3,)): 9,
             ((1,), (1, 1)): 10, ((), (2, 1)): 13, ((), (1, 1, 1)): 18},
}


class TestPartitionBasics:
    def test_nfun_and_conjugate(self):
        assert nfun((1, 1, 1)) == 3
        assert nfun((3,)) == 0
        assert conjugate((2, 1)) == (2, 1)
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate(()) == ()

    def test_dominance_chain(self):
        assert dominance_leq((1, 1, 1), (2, 1))
        assert dominance_leq((2, 1), (3,))
        assert not dominance_leq((3,), (2, 1))

    def test_dominance_monotone_under_nfun(self):
        # nu <= nu' in dominance forces n(nu') <= n(nu), equal only when equal
        for n in range(1, 9):
            parts = list(partitions(n))
            for nu in parts:
                for nu2 in parts:
                    if dominance_leq(nu, nu2):
                        assert nfun(nu2) <= nfun(nu)
                        if nfun(nu2) == nfun(nu):
                            assert nu == nu2

    def test_e_regular(self):
        assert [nu for nu in partitions(5) if e_regular(nu, 2)] == \
            [(5,), (4, 1), (3, 2)]
        assert all(e_regular(nu, None) for nu in partitions(6))

    def test_counts(self):
        assert len(list(partitions(8))) == 22
        assert len(list(bipartitions(3))) == 10

    def test_standard_tableaux(self):
        assert standard_tableaux((2, 1)) == 2
        assert standard_tableaux((3,)) == 1
        assert standard_tableaux((2, 2)) == 2
        assert standard_tableaux(()) == 1


class TestSymbols:
    def test_empty_padding(self):
        sym = symbol_of(((), ()), 1)
        assert sym == Symbol((0, 1), (0,), 1)

    def test_direct_evaluation(self):
        sym = symbol_of(((2,), (1,)), 1)
        assert sym.top == (0, 3) and sym.bottom == (1,)

    def test_single_row(self):
        sym = symbol_of(((4,), ()), 0)
        assert sym.top == (4,) and sym.bottom == ()

    def test_too_small(self):
        with pytest.raises(MTooSmall):
            symbol_of(((1, 1), (1,)), 0)


class TestSchurElementB:
    @pytest.mark.parametrize("ab", sorted(TABLE3_ALPHA))
    def test_alpha_columns(self, ab):
        for lam, alpha in TABLE3_ALPHA[ab].items():
            assert invariants_B(lam, *ab).alpha == alpha

    def test_asymptotic_agrees_with_formula(self):
        for n in range(1, 6):
            for lam in bipartitions(n):
                assert invariants_B(lam, 1, n) == invariants_asymptotic(lam, 1, n)

    def test_asymptotic_closed_form_example(self):
        assert invariants_asymptotic(((1,), (2,)), 1, 4) == (7, 1)

    def test_asymptotic_precondition(self):
        with pytest.raises(DomainError):
            invariants_asymptotic(((1,), (2,)), 1, 2)

    def test_m_independence(self):
        for lam in bipartitions(3):
            m0 = min_symbol_size(lam)
            for (a, b) in [(1, 1), (1, 2), (2, 1), (1, 0), (0, 1)]:
                vals = {schur_element_B(lam, a, b, m) for m in range(m0, m0 + 3)}
                assert len(vals) == 1

    def test_trivial_is_poincare_b2(self):
        # a = b = 1: the Poincare polynomial (1+v^2)^2 (1+v^4)
        c = schur_element_B(((2,), ()), 1, 1)
        assert c == (vpow(2) + 1) ** 2 * (vpow(4) + 1)

    def test_sign_alpha_is_longest_weight(self):
        for n in range(1, 5):
            for (a, b) in [(1, 1), (2, 3), (1, 0), (0, 2)]:
                got = invariants_B(((), (1,) * n), a, b)
                assert got.alpha == n * b + (n * n - n) * a

    def test_type_a_restriction(self):
        for n in range(1, 6):
            for nu in partitions(n):
                assert invariants_A(nu, 1) == (nfun(nu), 1)
                assert invariants_asymptotic((nu, ()), 1, n) == (nfun(nu) * 1, 1)

    def test_azero(self):
        assert invariants_azero(((2,), (1,)), 5).alpha == 5
        for lam in bipartitions(3):
            assert invariants_azero(lam, 2).alpha == 2 * sum(lam[1])

    def test_bad_weights(self):
        with pytest.raises(DomainError):
            schur_element_B(((1,), ()), 0, 0)


class TestTypeD:
    def test_pair_inherits_b0(self):
        assert typeD_invariants((2,), (1,), 1).alpha == 1

    def test_split_doubles_f(self):
        base = invariants_B(((1,), (1,)), 1, 0)
        split = typeD_invariants_split((1,), 1)
        assert split == (base.alpha, 2 * base.f)

    def test_unordered_symmetry(self):
        for (lam, mu) in [((2,), (1,)), ((3,), ()), ((2, 1), (1,))]:
            assert typeD_invariants(lam, mu, 1) == typeD_invariants(mu, lam, 1)


class TestG2:
    def test_table_rows_all_regimes(self):
        expected = {
            # regime: {label: (alpha, f)}
            (1, 2): {"1": (0, 1), "eps": (9, 1), "eps1": (4, 1), "eps2": (1, 1),
                     "E+": (2, 2), "E-": (2, 2)},
            (1, 1): {"1": (0, 1), "eps": (6, 1), "eps1": (1, 3), "eps2": (1, 3),
                     "E+": (1, 6), "E-": (1, 2)},
            (0, 1): {"1": (0, 2), "eps": (3, 2), "eps1": (3, 2), "eps2": (0, 2),
                     "E+": (1, 2), "E-": (1, 2)},
        }
        for (a, b), rows in expected.items():
            for lab, pair in rows.items():
                assert g2_invariants(lab, a, b) == pair

    def test_table_agrees_with_closed_forms(self):
        for (a, b) in [(1, 2), (2, 7), (1, 1), (4, 4), (0, 1), (0, 3)]:
            for lab in G2_LABELS:
                lo, coeff, _, _ = g2_schur(lab, a, b).extremal()
                assert (-lo // 2, coeff) == tuple(g2_invariants(lab, a, b))

    def test_regime_not_covered(self):
        with pytest.raises(RegimeNotCovered):
            g2_invariants("1", 2, 1)
        with pytest.raises(RegimeNotCovered):
            g2_schur("eps", 1, 0)


class TestF4:
    def test_spot_rows(self):
        assert f4_invariants("1_2", 1, 3) == (12 * 3 - 9 * 1, 1)
        assert f4_invariants("12_1", 1, 1) == (4, 24)
        assert f4_invariants("9_1", 0, 1) == (2, 2)
        assert f4_invariants("1_1", 2, 3) == (0, 1)    # 2a>b>a>0 column
        assert f4_invariants("8_3", 1, 2) == (3, 2)    # b=2a column

    def test_label_count(self):
        assert len(f4_labels()) == 25

    def test_uncovered(self):
        with pytest.raises(RegimeNotCovered):
            f4_invariants("1_1", 2, 1)
        with pytest.raises(RegimeNotCovered):
            f4_invariants("1_1", 1, 0)


class TestLGood:
    def test_asymptotic_b_all_good(self):
        for p in (2, 3, 5, 7):
            assert l_good(p, "B", 1, 3, 3)

    def test_g2_equal_parameters(self):
        assert not l_good(2, "G2", 1, 1)
        assert not l_good(3, "G2", 1, 1)
        assert l_good(5, "G2", 1, 1)

    def test_f4_large_b(self):
        assert l_good(5, "F4", 1, 3)
        assert not l_good(3, "F4", 1, 3)

    def test_type_a(self):
        for p in (2, 3, 5):
            assert l_good(p, "A", 1, n=4)

    def test_type_d(self):
        assert not l_good(2, "D", 1, n=2)  # split labels double f

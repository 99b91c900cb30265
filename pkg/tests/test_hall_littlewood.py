import pytest

from cmpplab.hall_littlewood import (bailey_beta_check, hl_chain_sum,
                                     hl_inf_spec, hl_ls_2r1s,
                                     hl_principal_finite,
                                     hl_sum_over_bounded, hl_symmetrization,
                                     hl_weighted_chain, prop_gow_sum)
from cmpplab.multisums import ag_sum
from cmpplab.series import QSeries, qbin


def test_principal_finite_examples():
    assert hl_principal_finite((2,), 3, 1, 6).q_coeffs(3) == [1, 1, 1, 0]
    assert hl_principal_finite((), 4, 3, 5).q_coeffs(2) == [1, 0, 0]
    # stability: too-long shape gives the zero series
    assert hl_principal_finite((1, 1, 1), 2, 1, 5).terms == {}


def test_elementary_specialisation():
    # shape (1^r): q^{m binom(r,2)} [k, r] in base q^m
    for k in (3, 5):
        for r in range(k + 1):
            for m in (1, 2):
                got = hl_principal_finite((1,) * r, k, m, 40)
                want = QSeries.monomial(1, dq=m * (r * (r - 1) // 2)) * \
                    qbin(k, r, m)
                assert got.compare(want, 40) is None


def test_symmetrization_small():
    assert hl_symmetrization((1,), 2, 1, 5).q_coeffs(2) == [1, 1, 0]
    assert hl_symmetrization((1, 1), 2, 1, 5).q_coeffs(2) == [0, 1, 0]
    assert hl_symmetrization((2,), 2, 2, 5).q_coeffs(4) == [1, 1, 1, -1, 0]
    with pytest.raises(ValueError):
        hl_symmetrization((1,), 10, 1, 5)


def test_oracle_triangle():
    # definition == single sum at x_i = q^{i-1}; closed form == definition
    # at the fully principal point x_i = t^{i-1}
    N = 25
    for L in (2, 4, 6):
        for (r, s) in [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 2),
                       (1, 3), (3, 1)]:
            if r + s > 4 or r + s > L:
                continue
            shape = (2,) * r + (1,) * s
            for m in (1, 2, 3, 4):
                sym = hl_symmetrization(shape, L, m, N)
                ls = hl_ls_2r1s(r, s, L, m, N)
                assert sym.compare(ls, N) is None, (L, r, s, m)
                pf = hl_principal_finite(shape, L, m, N)
                symp = hl_symmetrization(shape, L, m, N, xstep=m)
                assert pf.compare(symp, N) is None, (L, r, s, m)


def test_inf_spec_examples():
    assert hl_inf_spec((2,), 3, 3).q_coeffs(3) == [1, 1, 2, 2]
    assert hl_inf_spec((), 2, 4).q_coeffs(2) == [1, 0, 0]
    # P_{(2)}(1,q,...;q) = 1/(1-q)
    assert hl_inf_spec((2,), 1, 8).q_coeffs(8) == [1] * 9


def test_inf_spec_stability_against_symmetrization():
    for lam in [(2,), (2, 1), (2, 2), (3, 1)]:
        for m in (1, 2, 3):
            a = hl_inf_spec(lam, m, 8)
            b = hl_symmetrization(lam, 9, m, 8)
            assert a.compare(b, 8) is None, (lam, m)


def test_gow_sum_examples():
    assert prop_gow_sum(0, 2, 1, 6).q_coeffs(2) == [1, 0, 0]
    assert prop_gow_sum(1, 1, 1, 3).q_coeffs(3) == [1, 1, 2, 2]
    assert prop_gow_sum(1, 0, 1, 6).q_coeffs(6) == [1] * 7


def test_gow_equals_branching():
    for r in range(5):
        for n in (0, 1, 2):
            for d in (0, 1):
                if 2 * n + d < 1:
                    continue
                a = prop_gow_sum(r, n, d, 18)
                b = hl_inf_spec((2,) * r, 2 * n + d, 18)
                assert a.compare(b, 18) is None, (r, n, d)


def test_chain_sum_small():
    assert hl_chain_sum(0, 2, 10).terms == {(0, 0, 0): 1}
    assert hl_chain_sum(1, 2, 4).at_one().q_coeffs(4) == [1, 1, 1, 2, 2]


def test_chain_sum_is_ag_at_base_q():
    for k in (1, 2, 3):
        a = hl_chain_sum(k, 1, 16)
        b = ag_sum(k, k, 16)
        assert a.compare(b, 16) is None


def test_chain_sum_equals_bounded_hl_sum():
    for k in (1, 2):
        for n in (1, 2, 3):
            a = hl_chain_sum(k, n, 16)
            b = hl_sum_over_bounded(k, n, 16, z_shift=1)
            assert a.compare(b, 16) is None, (k, n)


def test_weighted_chain_small():
    # v1 at n=1 is the two-variable first Rogers-Ramanujan series
    v = hl_weighted_chain("v1", 1, 10)
    rr = ag_sum(1, 1, 10)
    assert v.compare(rr, 10) is None
    with pytest.raises(ValueError):
        hl_weighted_chain("v1", 0, 5)
    with pytest.raises(ValueError):
        hl_weighted_chain("v3", 1, 5)


def test_v1_v2_consistency():
    # mu0 has equal pairs, so the two weighted sums coincide at k=1, n=2
    a = hl_weighted_chain("v1", 2, 14)
    b = hl_weighted_chain("v2", 1, 14)
    assert a.compare(b, 14) is None


def test_bailey_check():
    for s in (0, 1):
        for m in (1, 2, 3):
            res = bailey_beta_check(s, m, 4, 25)
            assert all(eq for (_, eq, _) in res), (s, m, res)
    with pytest.raises(ValueError):
        bailey_beta_check(0, 1, 7, 10)

import pytest

from cmpplab.cmpp import (FrequencyArray, family_rows, gen_fun,
                          gordon_series, max_path_sum)


def test_family_rows():
    assert family_rows("A", 2) == 4
    assert family_rows("C", 0) == 1
    assert family_rows("D", 1) == 1
    with pytest.raises(ValueError):
        family_rows("A", 0)
    with pytest.raises(ValueError):
        family_rows("D", 0)


def test_max_path_boundary_zigzag():
    # the boundary-only path collects every k_i
    arr = FrequencyArray("A", 2, {})
    assert max_path_sum(arr, (1, 2, 3)) == 6
    arr = FrequencyArray("C", 2, {})
    assert max_path_sum(arr, (2, 0, 1)) == 3
    arr = FrequencyArray("D", 2, {})
    assert max_path_sum(arr, (1, 1, 1)) == 3


def test_max_path_colour_asymmetry():
    # one part of size 1: colour 1 can be combined with the k_n boundary,
    # colour n cannot
    arr1 = FrequencyArray("A", 2, {(1, 1): 1})
    assert max_path_sum(arr1, (0, 0, 2)) == 3
    arr2 = FrequencyArray("A", 2, {(2, 1): 1})
    assert max_path_sum(arr2, (0, 0, 2)) == 2


def test_parity_validation():
    with pytest.raises(ValueError):
        FrequencyArray("C", 1, {(1, 2): 1})  # odd colour, even size
    with pytest.raises(ValueError):
        FrequencyArray("D", 2, {(1, 1): 1})  # odd colour needs even size
    FrequencyArray("C", 1, {(1, 1): 1, (2, 2): 2})
    FrequencyArray("D", 2, {(1, 2): 1, (2, 1): 2})


def test_gen_fun_rogers_ramanujan():
    g = gen_fun("A", 1, (0, 1), 6).at_one()
    assert g.q_coeffs(6) == [1, 1, 1, 1, 2, 2, 3]
    g = gen_fun("A", 1, (1, 0), 6).at_one()
    assert g.q_coeffs(6) == [1, 0, 1, 1, 1, 1, 2]


def test_gen_fun_zero_boundary():
    for fam, n in (("A", 2), ("C", 1), ("D", 2)):
        g = gen_fun(fam, n, (0,) * (n + 1), 8)
        assert g.terms == {(0, 0, 0): 1}


def test_gen_fun_d_even_parts():
    g = gen_fun("D", 1, (1, 0), 6).at_one()
    assert g.q_coeffs(6) == [1, 0, 1, 0, 1, 0, 2]


def test_gen_fun_matches_gordon():
    # two-variable identity for every boundary with k0 + k1 <= 3
    for k0 in range(4):
        for k1 in range(4 - k0):
            a = gen_fun("A", 1, (k0, k1), 30)
            b = gordon_series(k0 + k1, k1, 30)
            assert a.compare(b, 30) is None


def test_d_n1_depends_on_sum_only():
    a = gen_fun("D", 1, (2, 1), 14)
    b = gen_fun("D", 1, (0, 3), 14)
    c = gen_fun("D", 1, (3, 0), 14)
    assert a.compare(b, 14) is None and b.compare(c, 14) is None


def test_automorphism_reversal():
    for fam, n in (("C", 2), ("D", 2), ("C", 3), ("D", 3)):
        for w in [(1, 0, 1), (2, 1, 0), (0, 1, 2)]:
            w = w + (0,) * (n + 1 - len(w))
            a = gen_fun(fam, n, w, 10)
            b = gen_fun(fam, n, tuple(reversed(w)), 10)
            assert a.compare(b, 10) is None


def test_monotone_in_boundary():
    base = gen_fun("A", 2, (1, 0, 1), 10)
    for bump in ((2, 0, 1), (1, 1, 1), (1, 0, 2)):
        bigger = gen_fun("A", 2, bump, 10)
        for key, c in base.terms.items():
            assert bigger.terms.get(key, 0) >= c


def test_z_grading_invariants():
    for fam, n, w in (("A", 2, (1, 0, 1)), ("C", 1, (1, 1)),
                      ("D", 2, (0, 2, 0))):
        g = gen_fun(fam, n, w, 12)
        assert g.coeff(0, 0, 0) == 1
        for (dz, dw, dq) in g.terms:
            assert dw == 0
            assert dz <= dq
            assert (dz >= 1) == (dq >= 1)


def test_truncation_stability():
    a = gen_fun("C", 2, (1, 0, 1), 15)
    b = gen_fun("C", 2, (1, 0, 1), 9)
    assert a.compare(b, 9) is None


def test_shape_errors():
    with pytest.raises(ValueError):
        gen_fun("A", 1, (1, 0, 1), 5)
    with pytest.raises(ValueError):
        gen_fun("D", 1, (-1, 1), 5)
    with pytest.raises(ValueError):
        max_path_sum(FrequencyArray("A", 2, {}), (1, 1))


def test_brute_force_oracle_small():
    # independent check of the enumerator on tiny instances: enumerate all
    # frequency assignments with weight <= N directly
    fam, n, boundary, N = "A", 2, (0, 1, 1), 7
    level = sum(boundary)
    sizes = range(1, N + 1)
    colours = range(1, n + 1)
    cells = [(c, i) for i in sizes for c in colours]
    counts = {}

    def rec(idx, budget, freq):
        if idx == len(cells):
            arr = FrequencyArray(fam, n, dict(freq))
            if max_path_sum(arr, boundary) <= level:
                key = (arr.length(), arr.weight())
                counts[key] = counts.get(key, 0) + 1
            return
        c, i = cells[idx]
        f = 0
        while f * i <= budget:
            if f:
                freq[(c, i)] = f
            rec(idx + 1, budget - f * i, freq)
            freq.pop((c, i), None)
            f += 1

    rec(0, N, {})
    g = gen_fun(fam, n, boundary, N)
    assert {(z, d): c for (z, _, d), c in g.terms.items()} == counts

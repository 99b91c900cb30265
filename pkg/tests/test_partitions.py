import pytest

from cmpplab.partitions import (conjugate, n_stat, partition_stats,
                                partitions_iter, sub_partitions)
from cmpplab.series import poch


def test_stats_example():
    st = partition_stats((5, 3, 3, 2, 2, 2, 1))
    assert st.frequencies == {5: 1, 3: 2, 2: 3, 1: 1}
    assert st.weight == 18
    assert st.length == 7


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert n_stat((2, 2)) == 2


def test_conjugate_involution_exhaustive():
    for lam in partitions_iter(30):
        cj = conjugate(lam)
        assert conjugate(cj) == lam
        assert sum(cj) == sum(lam)
        assert (len(cj) == lam[0]) if lam else cj == ()


def test_frequencies_sum_to_weight():
    for lam in partitions_iter(20):
        st = partition_stats(lam)
        assert sum(i * f for i, f in st.frequencies.items()) == st.weight
        assert st.n_stat == sum(i * p for i, p in enumerate(lam))


def test_iter_counts_match_euler_product():
    n = 25
    inv = poch(1, 1, None, n).invert()
    counts = [0] * (n + 1)
    for lam in partitions_iter(n):
        counts[sum(lam)] += 1
    assert counts == inv.q_coeffs(n)


def test_iter_bounded():
    got = list(partitions_iter(4, part_max=2))
    assert got == [(), (1,), (2,), (1, 1), (2, 1), (1, 1, 1), (2, 2),
                   (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_iter(0)) == [()]


def test_iter_len_max():
    for lam in partitions_iter(12, len_max=3):
        assert len(lam) <= 3
    two_rows = sum(1 for _ in partitions_iter(10, len_max=2))
    # 1 + floor(n/2)+1 partitions of n into <= 2 parts
    assert two_rows == sum(n // 2 + 1 for n in range(11))


def test_validation():
    with pytest.raises(ValueError):
        partition_stats((1, 2))
    with pytest.raises(ValueError):
        partition_stats((0,))


def test_sub_partitions():
    subs = sub_partitions((2, 1))
    assert sorted(subs) == [(), (1,), (1, 1), (2,), (2, 1)]
    assert sub_partitions(()) == [()]
    box = sub_partitions((2, 2, 2))
    assert len(box) == 10  # partitions inside a 3x2 box: C(5,2)

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphqec.errors import CompositeModulus
from graphqec.modular import (
    ModMatrix,
    is_prime,
    kernel_trivial,
    rank_prime,
    rank_prime_batch,
    smith_normal_form,
)

from conftest import brute_force_kernel_trivial


def test_is_prime_small_values():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
    for n in range(2, 30):
        assert is_prime(n) == (n in primes)
    assert not is_prime(0)
    assert not is_prime(1)


def test_modmatrix_validates_entry_range():
    with pytest.raises(ValueError):
        ModMatrix(2, np.array([[0, 2]]))
    with pytest.raises(ValueError):
        ModMatrix(1, np.array([[0]]))
    m = ModMatrix.reduce(3, np.array([[-1, 7]]))
    assert m.entries.tolist() == [[2, 1]]


def test_modmatrix_is_immutable():
    m = ModMatrix(5, np.array([[1, 2], [3, 4]]))
    with pytest.raises(ValueError):
        m.entries[0, 0] = 0


def test_rank_prime_identity():
    assert rank_prime(ModMatrix(2, np.eye(2, dtype=int))) == 2


def test_rank_prime_zero_matrix():
    assert rank_prime(ModMatrix(3, np.zeros((3, 3), dtype=int))) == 0


def test_rank_prime_dependent_rows():
    # second row eliminates against the first over Z_2
    assert rank_prime(ModMatrix(2, np.array([[1, 1], [1, 1]]))) == 1


def test_rank_prime_rejects_composite():
    with pytest.raises(CompositeModulus):
        rank_prime(ModMatrix(4, np.array([[1]])))


def test_rank_prime_row_swap_and_scaling_invariance():
    rng = np.random.default_rng(11)
    for d in (2, 3, 5):
        a = rng.integers(0, d, size=(6, 4))
        base = rank_prime(ModMatrix(d, a))
        swapped = a[[1, 0, 2, 3, 4, 5], :]
        assert rank_prime(ModMatrix(d, swapped)) == base
        for scale in range(1, d):
            scaled = a.copy()
            scaled[2] = (scaled[2] * scale) % d
            assert rank_prime(ModMatrix(d, scaled)) == base


def test_rank_prime_batch_matches_scalar():
    rng = np.random.default_rng(7)
    for d in (2, 3, 7):
        mats = rng.integers(0, d, size=(50, 5, 4))
        batch = rank_prime_batch(mats, d)
        for i in range(50):
            assert batch[i] == rank_prime(ModMatrix(d, mats[i]))


def test_kernel_trivial_unit_entry():
    assert kernel_trivial(ModMatrix(2, np.array([[1]])))


def test_kernel_trivial_zero_divisor():
    # 2 * 2 = 0 mod 4, so h = 2 is a nonzero kernel vector
    assert not kernel_trivial(ModMatrix(4, np.array([[2]])))


def test_kernel_trivial_composite_example():
    m = ModMatrix(6, np.array([[1, 0], [0, 1], [1, 1]]))
    assert kernel_trivial(m)
    assert brute_force_kernel_trivial(m.entries, 6)


def test_kernel_trivial_zero_columns():
    assert kernel_trivial(ModMatrix(2, np.zeros((3, 0), dtype=int)))


def test_kernel_trivial_wide_matrix_always_fails():
    assert not kernel_trivial(ModMatrix(5, np.ones((1, 2), dtype=int)))


@settings(max_examples=150, deadline=None)
@given(
    d=st.sampled_from([2, 3, 4, 5, 6, 8, 9, 12]),
    rows=st.integers(1, 5),
    cols=st.integers(1, 3),
    seed=st.integers(0, 2**32 - 1),
)
def test_kernel_trivial_matches_brute_force(d, rows, cols, seed):
    if d**cols > 10_000:
        return
    rng = np.random.default_rng(seed)
    m = ModMatrix(d, rng.integers(0, d, size=(rows, cols)))
    assert kernel_trivial(m) == brute_force_kernel_trivial(m.entries, d)


def test_smith_normal_form_identity():
    assert smith_normal_form(np.eye(2, dtype=int)) == [1, 1]


def test_smith_normal_form_diagonal():
    assert smith_normal_form(np.array([[2, 0], [0, 4]])) == [2, 4]


def test_smith_normal_form_dense_example():
    # det = -8, gcd of entries = 2 -> invariant factors (2, 4)
    assert smith_normal_form(np.array([[2, 4], [6, 8]])) == [2, 4]


def test_smith_normal_form_zero_matrix_and_rectangles():
    assert smith_normal_form(np.zeros((2, 3), dtype=int)) == [0, 0]
    assert smith_normal_form(np.array([[0, 3], [0, 0], [0, 0]])) == [3, 0]


@settings(max_examples=100, deadline=None)
@given(
    rows=st.integers(1, 4),
    cols=st.integers(1, 4),
    seed=st.integers(0, 2**32 - 1),
)
def test_smith_normal_form_matches_sympy(rows, cols, seed):
    from sympy import Matrix
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    rng = np.random.default_rng(seed)
    a = rng.integers(-9, 10, size=(rows, cols))
    ours = smith_normal_form(a)
    ref = sympy_snf(Matrix(a.tolist()))
    ref_diag = [abs(int(ref[i, i])) for i in range(min(ref.shape))]
    ref_diag += [0] * (min(rows, cols) - len(ref_diag))
    assert ours == ref_diag


def test_smith_normal_form_divisibility_chain():
    rng = np.random.default_rng(3)
    for _ in range(30):
        a = rng.integers(-20, 21, size=(4, 4))
        f = smith_normal_form(a)
        for x, y in zip(f, f[1:]):
            if x != 0:
                assert y % x == 0
            else:
                assert y == 0

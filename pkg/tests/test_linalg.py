import math

import numpy as np
import pytest

from normsum import (
    DIMENSION_CAP,
    DenseMatrix,
    KOutOfRangeError,
    NonSquareError,
    NonSymmetricError,
    SizeOverflowError,
    SplitMix64,
    ky_fan_norm,
    kronecker,
    operator_norm,
    svd,
    sym_eigen,
    trace_norm,
)


def random_symmetric(rng, n):
    a = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            a[i, j] = a[j, i] = rng.next_double() * 2 - 1
    return a


def test_dense_matrix_basics():
    m = DenseMatrix([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m.rows == 2 and m.cols == 3
    assert m.entries == [1, 2, 3, 4, 5, 6]
    assert m.entry_min == 1 and m.entry_max == 6
    assert DenseMatrix.from_flat(2, 3, [1, 2, 3, 4, 5, 6]) == m
    assert DenseMatrix.from_json(m.to_json()) == m


def test_dense_matrix_is_immutable():
    m = DenseMatrix([[1.0]])
    with pytest.raises((ValueError, RuntimeError)):
        m.array[0, 0] = 2.0


def test_dense_matrix_rejects_bad_input():
    with pytest.raises(ValueError):
        DenseMatrix([1, 2, 3])  # 1-d
    with pytest.raises(ValueError):
        DenseMatrix([[np.nan]])
    with pytest.raises(ValueError):
        DenseMatrix([[np.inf, 0.0]])
    with pytest.raises(ValueError):
        DenseMatrix.from_flat(2, 2, [1, 2, 3])
    with pytest.raises(SizeOverflowError):
        DenseMatrix(np.zeros((1, DIMENSION_CAP + 1)))


def test_sym_eigen_small_exact():
    eig = sym_eigen([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert np.allclose(eig.values, [2, -1, -1], atol=1e-12)
    assert eig.offdiag_residual < 1e-12

    eig = sym_eigen(np.eye(5))
    assert np.allclose(eig.values, np.ones(5), atol=0)

    eig = sym_eigen(np.diag([3.0, -1.0, 2.0]))
    assert np.allclose(eig.values, [3, 2, -1], atol=0)


def test_sym_eigen_sorted_descending_and_trace():
    rng = SplitMix64(11)
    for _ in range(20):
        n = 2 + rng.next_below(10)
        a = random_symmetric(rng, n)
        vals = sym_eigen(a).values
        assert all(vals[i] >= vals[i + 1] for i in range(n - 1))
        assert abs(sum(vals) - np.trace(a)) <= 1e-9 * (1 + abs(np.trace(a)))


def test_sym_eigen_rejects_bad_shapes():
    with pytest.raises(NonSquareError):
        sym_eigen([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(NonSymmetricError):
        sym_eigen([[0, 1], [0.5, 0]])


def test_svd_small_exact():
    eig = svd([[1, 1, 1], [1, 1, 1]])
    assert np.allclose(eig.values, [math.sqrt(6), 0], atol=1e-12)
    assert eig.residual < 1e-12

    h4 = np.array([[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]], float)
    assert np.allclose(svd(h4).values, [2, 2, 2, 2], atol=1e-12)


def test_svd_matches_eigen_absolute_values():
    # for symmetric input the singular values are the |eigenvalues|
    rng = SplitMix64(5)
    for _ in range(20):
        n = 2 + rng.next_below(12)
        a = random_symmetric(rng, n)
        sing = np.array(svd(a).values)
        eig = np.sort(np.abs(sym_eigen(a).values))[::-1]
        assert np.max(np.abs(sing - eig)) <= 1e-8


def test_svd_square_identity():
    # sum of squared singular values equals the squared frobenius norm
    rng = SplitMix64(17)
    for _ in range(20):
        m = 1 + rng.next_below(10)
        n = 1 + rng.next_below(10)
        a = np.array([[rng.next_double() * 4 - 2 for _ in range(n)] for _ in range(m)])
        s = np.array(svd(a).values)
        lhs = float((s * s).sum())
        rhs = float((a * a).sum())
        assert abs(lhs - rhs) <= 1e-9 * (1 + rhs)


def test_ky_fan_norms():
    c5 = np.zeros((5, 5))
    for i in range(5):
        c5[i, (i + 1) % 5] = c5[(i + 1) % 5, i] = 1
    assert abs(ky_fan_norm(c5, 5) - (2 + 2 * math.sqrt(5))) < 1e-12
    assert abs(ky_fan_norm(c5, 1) - operator_norm(c5)) == 0
    assert abs(trace_norm(c5) - ky_fan_norm(c5, 5)) == 0
    # monotone nondecreasing in k
    vals = [ky_fan_norm(c5, k) for k in range(1, 6)]
    assert all(vals[i] <= vals[i + 1] + 1e-15 for i in range(4))


def test_ky_fan_k_validation():
    a = np.ones((3, 4))
    for bad in (0, -1, 4, 10):
        with pytest.raises(KOutOfRangeError):
            ky_fan_norm(a, bad)
    with pytest.raises(KOutOfRangeError):
        ky_fan_norm(a, 1.5)


def test_operator_norm_power_iteration_oracle():
    # independent largest-singular-value estimate via power iteration on A^T A
    rng = SplitMix64(23)
    for _ in range(5):
        m = 3 + rng.next_below(6)
        n = 3 + rng.next_below(6)
        a = np.array([[rng.next_double() for _ in range(n)] for _ in range(m)])
        x = np.array([rng.next_double() + 0.1 for _ in range(n)])
        for _ in range(2000):
            x = a.T @ (a @ x)
            x /= np.linalg.norm(x)
        est = math.sqrt(float(x @ (a.T @ (a @ x))))
        assert abs(operator_norm(a) - est) <= 1e-7 * (1 + est)


def test_kronecker_structure():
    a = np.array([[1.0, 2.0], [0.0, 1.0]])
    b = np.array([[3.0, 1.0, 0.0]])
    k = kronecker(a, b)
    assert k.shape == (2, 6)
    # block (i, j) of the result is a[i, j] * b
    assert np.array_equal(k.array[0, :3], b[0])
    assert np.array_equal(k.array[0, 3:], 2 * b[0])
    assert np.array_equal(k.array[1, :3], np.zeros(3))
    # singular values multiply pairwise
    rng = SplitMix64(31)
    a = np.array([[rng.next_double() for _ in range(3)] for _ in range(3)])
    b = np.array([[rng.next_double() for _ in range(2)] for _ in range(4)])
    sk = np.array(svd(kronecker(a, b)).values)
    prods = np.sort(np.outer(svd(a).values, svd(b).values).ravel())[::-1][: len(sk)]
    assert np.max(np.abs(sk - prods)) <= 1e-8


def test_kronecker_size_cap():
    with pytest.raises(SizeOverflowError):
        kronecker(np.ones((100, 1)), np.ones((100, 1)))


def test_residual_certificates_reported():
    a = random_symmetric(SplitMix64(3), 20)
    assert 0 <= sym_eigen(a).offdiag_residual <= 1e-12 * (1 + np.linalg.norm(a))
    assert 0 <= svd(a).residual <= 1e-12 * (1 + np.linalg.norm(a))

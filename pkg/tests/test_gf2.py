import numpy as np
import pytest

from shyps import gf2


def rand_mat(rng, m, n):
    return rng.integers(0, 2, size=(m, n), dtype=np.uint8)


def rand_invertible(rng, n):
    while True:
        M = rand_mat(rng, n, n)
        if gf2.is_invertible(M):
            return M


def test_identity_kron():
    assert np.array_equal(gf2.kron(gf2.identity(2), gf2.identity(3)), gf2.identity(6))


def test_add_self_inverse():
    rng = np.random.default_rng(0)
    M = rand_mat(rng, 5, 7)
    assert not gf2.add(M, M).any()


def test_kron_product_law():
    rng = np.random.default_rng(1)
    for _ in range(20):
        A, B, C, D = (rand_mat(rng, 3, 3) for _ in range(4))
        lhs = gf2.mul(gf2.kron(A, B), gf2.kron(C, D))
        rhs = gf2.kron(gf2.mul(A, C), gf2.mul(B, D))
        assert np.array_equal(lhs, rhs)


def test_kron_explicit_block_structure():
    A = [[1, 1], [0, 1]]
    B = [[1, 0], [1, 1]]
    K = gf2.kron(A, B)
    assert K.shape == (4, 4)
    assert np.array_equal(K[:2, 2:], gf2.asmat(B))
    assert np.array_equal(K[2:, 2:], gf2.asmat(B))
    assert not K[2:, :2].any()


def test_invert_identity_and_random():
    assert np.array_equal(gf2.invert(gf2.identity(4)), gf2.identity(4))
    rng = np.random.default_rng(2)
    for _ in range(20):
        M = rand_invertible(rng, 5)
        assert np.array_equal(gf2.mul(gf2.invert(M), M), gf2.identity(5))
    # invert of invert is the identity map on GL
    M = rand_invertible(rng, 6)
    assert np.array_equal(gf2.invert(gf2.invert(M)), M)


def test_invert_singular_raises():
    with pytest.raises(ValueError):
        gf2.invert(gf2.zeros(3, 3))


def test_rank_transpose_invariance():
    rng = np.random.default_rng(3)
    for _ in range(10):
        M = rand_mat(rng, 4, 7)
        assert gf2.rank(M) == gf2.rank(M.T)


def test_solve_consistent_and_inconsistent():
    rng = np.random.default_rng(4)
    A = rand_mat(rng, 6, 4)
    x = rng.integers(0, 2, size=4, dtype=np.uint8)
    b = gf2.mul(A, x.reshape(-1, 1)).reshape(-1)
    y = gf2.solve(A, b)
    assert np.array_equal(gf2.mul(A, y.reshape(-1, 1)).reshape(-1), b)
    A2 = gf2.zeros(3, 3)
    with pytest.raises(ValueError):
        gf2.solve(A2, np.array([1, 0, 0], dtype=np.uint8))


def test_kernel():
    rng = np.random.default_rng(5)
    M = rand_mat(rng, 5, 9)
    K = gf2.kernel(M)
    assert K.shape[0] == 9 - gf2.rank(M)
    assert not gf2.mul(M, K.T).any()
    assert gf2.rank(K) == K.shape[0]


def test_plu_trivial_cases():
    p, L, U = gf2.plu(gf2.identity(5))
    assert np.array_equal(p, np.arange(5))
    assert np.array_equal(L, gf2.identity(5))
    assert np.array_equal(U, gf2.identity(5))
    # a pure permutation factors as (that permutation, I, I)
    q = np.array([2, 0, 3, 1])
    Q = gf2.perm_matrix(q)
    p, L, U = gf2.plu(Q)
    assert np.array_equal(gf2.perm_matrix(p), Q)
    assert np.array_equal(L, gf2.identity(4))
    assert np.array_equal(U, gf2.identity(4))


def test_plu_reconstruction():
    rng = np.random.default_rng(6)
    for _ in range(20):
        M = rand_invertible(rng, 9)
        p, L, U = gf2.plu(M)
        assert np.array_equal(gf2.mulv(gf2.perm_matrix(p), L, U), M)
        assert np.array_equal(np.triu(L, 1), np.zeros_like(L))
        assert (np.diag(L) == 1).all()
        assert np.array_equal(np.tril(U, -1), np.zeros_like(U))
        assert (np.diag(U) == 1).all()


def test_perm_matrix_convention_and_composition():
    s = np.array([1, 2, 0])
    M = gf2.perm_matrix(s)
    for j in range(3):
        assert M[s[j], j] == 1
    t = np.array([0, 2, 1])
    assert np.array_equal(
        gf2.mul(gf2.perm_matrix(s), gf2.perm_matrix(t)),
        gf2.perm_matrix(gf2.perm_compose(s, t)),
    )
    assert np.array_equal(
        gf2.mul(gf2.perm_matrix(s), gf2.perm_matrix(gf2.perm_inverse(s))),
        gf2.identity(3),
    )


def test_tau_swaps_kron_factors():
    rng = np.random.default_rng(7)
    a = 4
    T = gf2.tau_matrix(a)
    for _ in range(10):
        A = rand_mat(rng, a, a)
        B = rand_mat(rng, a, a)
        assert np.array_equal(gf2.mulv(T, gf2.kron(A, B), T), gf2.kron(B, A))
    assert np.array_equal(gf2.mul(T, T), gf2.identity(a * a))
    assert np.array_equal(T, T.T)


def test_reshape_worked_example():
    M = gf2.asmat(
        [[1, 0, 1, 1],
         [1, 0, 1, 0],
         [1, 1, 1, 1],
         [0, 0, 0, 0]]
    )
    expected = gf2.asmat(
        [[1, 0, 1, 0],
         [1, 1, 1, 0],
         [1, 1, 0, 0],
         [1, 1, 0, 0]]
    )
    assert np.array_equal(gf2.reshape_blocks(M), expected)


def test_reshape_involution_and_linearity():
    rng = np.random.default_rng(8)
    for _ in range(10):
        M = rand_mat(rng, 9, 9)
        N = rand_mat(rng, 9, 9)
        assert np.array_equal(gf2.reshape_blocks(gf2.reshape_blocks(M)), M)
        assert np.array_equal(
            gf2.reshape_blocks(gf2.add(M, N)),
            gf2.add(gf2.reshape_blocks(M), gf2.reshape_blocks(N)),
        )


def test_reshape_entry_identity():
    rng = np.random.default_rng(9)
    r = 3
    M = rand_mat(rng, r * r, r * r)
    R = gf2.reshape_blocks(M)
    for i1 in range(r):
        for i2 in range(r):
            for j1 in range(r):
                for j2 in range(r):
                    assert R[i1 * r + i2, j1 * r + j2] == M[i1 * r + j1, i2 * r + j2]


def test_flatten_transpose_via_tau():
    rng = np.random.default_rng(10)
    r = 4
    T = gf2.tau_matrix(r)
    for _ in range(10):
        M = rand_mat(rng, r, r)
        assert np.array_equal(gf2.flatten(M.T), gf2.mul(gf2.flatten(M), T))
    v = rng.integers(0, 2, size=r * r, dtype=np.uint8)
    assert np.array_equal(gf2.flatten(gf2.unflatten(v)).reshape(-1), v)

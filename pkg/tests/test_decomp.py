"""Invertible-sum and Kronecker-sum decomposition certificates."""

import itertools

import numpy as np
import pytest

from shyps import gf2
from shyps import decomp as dc


def _unit(r, i, j):
    E = gf2.zeros(r, r)
    E[i, j] = 1
    return E


def _sym_value(terms, r, tau=True):
    acc = gf2.zeros(r * r, r * r)
    for A in terms:
        acc ^= gf2.kron(A, A.T)
    if tau:
        acc = gf2.mul(acc, gf2.tau_matrix(r))
    return acc


# ---------------------------------------------------------------------------
# sums of two invertibles
# ---------------------------------------------------------------------------


def test_identity_pairs_frozen():
    # the fixed tiles behind every identity-block split
    for X, Y in (dc._I2_PAIR, dc._I3_PAIR):
        assert gf2.is_invertible(X) and gf2.is_invertible(Y)
        assert np.array_equal(gf2.add(X, Y), gf2.identity(X.shape[0]))


def test_sum_two_trivial_cases():
    assert dc.sum_two_invertibles(gf2.zeros(3, 3)) == ()
    M = gf2.identity(4)
    (only,) = dc.sum_two_invertibles(M)
    assert np.array_equal(only, M)
    (only,) = dc.sum_two_invertibles([[1]])
    assert only[0, 0] == 1
    with pytest.raises(ValueError):
        dc.sum_two_invertibles([[0]])
    with pytest.raises(ValueError):
        dc.sum_two_invertibles(gf2.zeros(2, 3))


def test_sum_two_random_roundtrip():
    rng = np.random.default_rng(2)
    for r in range(2, 7):
        for _ in range(60):
            M = gf2.random_matrix(rng, r, r)
            parts = dc.sum_two_invertibles(M)
            assert len(parts) <= 2
            if not gf2.is_invertible(M) and M.any():
                assert len(parts) == 2
            tot = gf2.zeros(r, r)
            for p in parts:
                assert gf2.is_invertible(p)
                tot = gf2.add(tot, p)
            assert np.array_equal(tot, M)


def test_sum_two_low_rank():
    # every rank, including the rank-one widening trick
    for r in (2, 3, 5):
        for l in range(1, r):
            M = gf2.zeros(r, r)
            M[:l, :l] = gf2.identity(l)
            X, Y = dc.sum_two_invertibles(M)
            assert gf2.is_invertible(X) and gf2.is_invertible(Y)
            assert np.array_equal(gf2.add(X, Y), M)


# ---------------------------------------------------------------------------
# spanning sets
# ---------------------------------------------------------------------------


def test_spanning_set_keeps_invertible_basis():
    rng = np.random.default_rng(3)
    mats = [gf2.random_invertible(rng, 3) for _ in range(4)]
    while gf2.rank(np.concatenate([gf2.flatten(m) for m in mats])) < 4:
        mats = [gf2.random_invertible(rng, 3) for _ in range(4)]
    out = dc.invertible_spanning_set(mats)
    assert len(out) == 4
    for got, want in zip(out, mats):
        assert np.array_equal(got, want)


def test_spanning_set_random():
    rng = np.random.default_rng(4)
    for r in (3, 4):
        for trial in range(25):
            d = int(rng.integers(1, r * r + 1))
            stack = gf2.random_matrix(rng, d, r * r)
            if gf2.rank(stack) < d:
                continue
            mats = [gf2.unflatten(row) for row in stack]
            out = dc.invertible_spanning_set(mats, seed=trial)
            assert len(out) <= min(2 * d, r * r, d + 2)
            rows = np.concatenate([gf2.flatten(t) for t in out])
            assert gf2.in_rowspace(rows, stack)
            assert all(gf2.is_invertible(t) for t in out)


def test_spanning_set_rejects_dependent_input():
    mats = [gf2.identity(3), gf2.identity(3)]
    with pytest.raises(ValueError):
        dc.invertible_spanning_set(mats)


def test_spanning_set_empty():
    assert dc.invertible_spanning_set([]) == []


# ---------------------------------------------------------------------------
# diagonal repairs
# ---------------------------------------------------------------------------


def test_diagonal_complement_exhaustive_3x3():
    for bits in range(512):
        A = gf2.unflatten([(bits >> k) & 1 for k in range(9)])
        D = dc.diagonal_complement(A)
        assert np.array_equal(D, np.diag(np.diag(D)))
        assert gf2.is_invertible(gf2.add(A, D))
        if gf2.is_invertible(A):
            assert not D.any()


def test_diagonal_complement_random():
    rng = np.random.default_rng(5)
    for _ in range(100):
        A = gf2.random_matrix(rng, 6, 6)
        D = dc.diagonal_complement(A)
        assert gf2.is_invertible(gf2.add(A, D))


def test_cycle_complement_exhaustive():
    for r in (3, 4, 5):
        P = dc.canonical_cycle(r)
        for bits in range(1 << r):
            D = gf2.zeros(r, r)
            for k in range(r):
                D[k, k] = (bits >> k) & 1
            out = dc.cycle_complement(D, P)
            assert gf2.is_invertible(out)
            diff = gf2.add(out, D)
            assert not diff.any() or np.array_equal(diff, P)


def test_cycle_complement_rejects_bad_input():
    with pytest.raises(ValueError):
        dc.cycle_complement(gf2.identity(3), gf2.identity(3))  # not a 3-cycle
    # transposition + fixed point is not a single cycle either
    T = gf2.perm_matrix([1, 0, 2])
    with pytest.raises(ValueError):
        dc.cycle_complement(gf2.zeros(3, 3), T)
    with pytest.raises(ValueError):
        dc.cycle_complement(_unit(3, 0, 1), dc.canonical_cycle(3))


def test_canonical_cycle_shape():
    P = dc.canonical_cycle(4)
    assert np.array_equal(gf2.mulv(P, P, P, P), gf2.identity(4))
    assert list(gf2.perm_from_matrix(P)) == [1, 2, 3, 0]


# ---------------------------------------------------------------------------
# general Kronecker decomposition
# ---------------------------------------------------------------------------


def test_tensor_decompose_zero_and_rank_one():
    r = 3
    assert dc.tensor_decompose(gf2.zeros(9, 9)).weight == 0
    rng = np.random.default_rng(6)
    g, h = gf2.random_invertible(rng, r), gf2.random_invertible(rng, r)
    ts = dc.tensor_decompose(gf2.kron(g, h))
    assert ts.weight == 1
    assert np.array_equal(ts.reconstruct(), gf2.kron(g, h))
    # rank-one but singular factors: falls back to a cross split
    A = gf2.kron(_unit(r, 1, 1), _unit(r, 1, 1))
    ts = dc.tensor_decompose(A)
    assert ts.weight <= 4
    assert np.array_equal(ts.reconstruct(), A)


def test_tensor_decompose_random():
    rng = np.random.default_rng(7)
    for r in (3, 4):
        n = r * r
        for trial in range(15):
            A = gf2.random_matrix(rng, n, n)
            ts = dc.tensor_decompose(A, seed=trial)
            assert np.array_equal(ts.reconstruct(), A)
            assert ts.weight <= r * r + r + 4


def test_tensor_decompose_sparse_uses_block_count():
    # two nonzero blocks -> at most 8 terms regardless of r
    rng = np.random.default_rng(8)
    for r in (3, 4, 5):
        A = gf2.zeros(r * r, r * r)
        for i, j in ((0, 1), (2, 0)):
            A[i * r : (i + 1) * r, j * r : (j + 1) * r] = gf2.random_matrix(rng, r, r)
        ts = dc.tensor_decompose(A)
        assert np.array_equal(ts.reconstruct(), A)
        assert ts.weight <= 8


def test_tensor_decompose_minimize_rank():
    rng = np.random.default_rng(9)
    r = 4
    A = gf2.add(
        gf2.kron(gf2.random_invertible(rng, r), gf2.random_matrix(rng, r, r)),
        gf2.kron(gf2.random_matrix(rng, r, r), gf2.random_invertible(rng, r)),
    )
    t = gf2.rank(gf2.reshape_blocks(A))
    ts = dc.tensor_decompose(A, minimize_rank=True)
    assert np.array_equal(ts.reconstruct(), A)
    assert ts.weight <= min(4 * t, 2 * t + 8, t + r + 6, r * r + r + 4)


def test_tensor_decompose_deterministic():
    rng = np.random.default_rng(10)
    A = gf2.random_matrix(rng, 16, 16)
    a = dc.tensor_decompose(A, seed=5)
    b = dc.tensor_decompose(A, seed=5)
    assert a.weight == b.weight
    for (m1, n1), (m2, n2) in zip(a.terms, b.terms):
        assert np.array_equal(m1, m2) and np.array_equal(n1, n2)


def test_tensor_decompose_upper_triangular():
    rng = np.random.default_rng(11)
    for r in (3, 4):
        n = r * r
        for trial in range(10):
            A = np.triu(gf2.random_matrix(rng, n, n), 1).astype(np.uint8)
            np.fill_diagonal(A, 1)
            ts = dc.tensor_decompose_upper_triangular(A, seed=trial)
            assert np.array_equal(ts.reconstruct(), A)
            assert ts.weight <= r * (r + 1) // 2 + 6
    assert dc.tensor_decompose_upper_triangular(gf2.identity(9)).weight <= 2


def test_upper_triangular_rejects_bad_diagonal():
    A = gf2.identity(9)
    A[0, 0] = 0
    with pytest.raises(ValueError):
        dc.tensor_decompose_upper_triangular(A)
    with pytest.raises(ValueError):
        dc.tensor_decompose_upper_triangular(_unit(9, 3, 0) ^ gf2.identity(9))


# ---------------------------------------------------------------------------
# symmetric decompositions
# ---------------------------------------------------------------------------


def test_binary_cholesky_worked_example():
    S = np.array(
        [[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0], [1, 1, 0, 1]], dtype=np.uint8
    )
    L = dc.binary_cholesky(S)
    assert np.array_equal(gf2.mulv(L, L.T), S)
    assert L.shape[1] == 2
    cols = {tuple(int(x) for x in L[:, k]) for k in range(2)}
    assert cols == {(1, 1, 0, 1), (1, 1, 0, 0)}


def test_binary_cholesky_random_exact_width():
    rng = np.random.default_rng(12)
    for n in (2, 5, 9, 12):
        for trial in range(30):
            B = gf2.random_matrix(rng, n, n)
            S = gf2.mulv(B, B.T) if trial % 2 else gf2.add(B, B.T)
            L = dc.binary_cholesky(S)
            assert np.array_equal(gf2.mulv(L, L.T), S)
            hollow = S.any() and not S.diagonal().any()
            assert L.shape[1] == gf2.rank(S) + (1 if hollow else 0)


def test_binary_cholesky_alternating_form():
    # hollow symmetric matrices force the extra column
    J = np.array([[0, 1], [1, 0]], dtype=np.uint8)
    L = dc.binary_cholesky(J)
    assert np.array_equal(gf2.mulv(L, L.T), J)
    assert L.shape[1] == 3


def test_binary_cholesky_rejects_asymmetric():
    with pytest.raises(ValueError):
        dc.binary_cholesky([[0, 1], [0, 0]])


def test_symmetric_tensor_worked_example():
    S = np.array(
        [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 0, 0], [0, 1, 0, 1]], dtype=np.uint8
    )
    out = dc.symmetric_tensor_decompose(S)
    assert len(out) == 2
    got = {tuple(gf2.flatten(M).ravel().tolist()) for M in out}
    assert got == {(1, 1, 0, 0), (1, 1, 0, 1)}
    assert np.array_equal(_sym_value(out, 2), S)


def test_symmetric_tensor_random():
    rng = np.random.default_rng(13)
    for r in (2, 3, 4):
        n = r * r
        for _ in range(12):
            B = gf2.random_matrix(rng, n, n)
            S = gf2.add(B, B.T)
            out = dc.symmetric_tensor_decompose(S)
            assert len(out) <= n + 1
            assert np.array_equal(_sym_value(out, r), S)


def test_invertible_symmetric_random():
    rng = np.random.default_rng(14)
    for r, bound in ((3, 35), (4, 38)):
        n = r * r
        for trial in range(12):
            B = gf2.random_matrix(rng, n, n)
            S = gf2.add(B, B.T)
            ts = dc.invertible_symmetric_decompose(S, seed=trial)
            assert np.array_equal(ts.reconstruct(), S)
            assert ts.weight <= bound


def test_invertible_symmetric_shortcuts():
    rng = np.random.default_rng(15)
    assert dc.invertible_symmetric_decompose(gf2.zeros(9, 9)).weight == 0
    for r in (3, 4):
        A = gf2.random_invertible(rng, r)
        S = gf2.mul(gf2.kron(A, A.T), gf2.tau_matrix(r))
        ts = dc.invertible_symmetric_decompose(S)
        assert ts.weight == 1
        assert np.array_equal(ts.terms[0], A)


def test_invertible_symmetric_deterministic():
    rng = np.random.default_rng(16)
    B = gf2.random_matrix(rng, 9, 9)
    S = gf2.add(B, B.T)
    a = dc.invertible_symmetric_decompose(S, seed=1)
    b = dc.invertible_symmetric_decompose(S, seed=1)
    assert a.weight == b.weight
    for m1, m2 in zip(a.terms, b.terms):
        assert np.array_equal(m1, m2)


# ---------------------------------------------------------------------------
# grid-diagonal (xi) decomposition
# ---------------------------------------------------------------------------


def _xi_matrix(r, gamma):
    D = gf2.zeros(r * r, r * r)
    for i in range(r):
        for j in range(r):
            D[i * r + j, i * r + j] = gamma[i, j]
    return D


def test_xi_all_inputs_r3():
    # the whole group: symmetric 3x3 gamma, free diagonal
    spots = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)]
    for bits in range(64):
        gamma = gf2.zeros(3, 3)
        for k, (i, j) in enumerate(spots):
            if (bits >> k) & 1:
                gamma[i, j] = gamma[j, i] = 1
        D = _xi_matrix(3, gamma)
        ts = dc.xi_decompose(D)
        assert np.array_equal(ts.reconstruct(), D)
        assert ts.weight <= 12


def test_xi_random_r4():
    rng = np.random.default_rng(17)
    for trial in range(40):
        gamma = gf2.random_matrix(rng, 4, 4)
        gamma = gf2.add(gamma, gamma.T)
        np.fill_diagonal(gamma, rng.integers(0, 2, 4))
        D = _xi_matrix(4, gamma)
        ts = dc.xi_decompose(D, seed=trial)
        assert np.array_equal(ts.reconstruct(), D)
        assert ts.weight <= 5 * 4 + 1


def test_xi_identity_is_one_term():
    for r in (3, 4):
        ts = dc.xi_decompose(gf2.identity(r * r))
        assert ts.weight == 1


def test_xi_rejects_invalid():
    # diagonal but gamma not symmetric: entry (0,1) set, (1,0) clear
    D = gf2.zeros(9, 9)
    D[1, 1] = 1
    with pytest.raises(ValueError):
        dc.xi_decompose(D)
    with pytest.raises(ValueError):
        dc.xi_decompose(_unit(9, 0, 1))


# ---------------------------------------------------------------------------
# cross terms
# ---------------------------------------------------------------------------


def test_cross_e00_exhaustive_r3():
    # every 3x3 B, including the exceptional orbit with no four-term
    # certificate
    rng = np.random.default_rng(18)
    e00 = _unit(3, 0, 0)
    long = 0
    for bits in range(512):
        B = gf2.unflatten([(bits >> k) & 1 for k in range(9)])
        terms = dc._cross_e00(3, B, rng)
        want = dc._cross_value(e00, B)
        assert np.array_equal(_sym_value(terms, 3), want)
        assert len(terms) <= 7
        if len(terms) > 4:
            long += 1
    assert long > 0  # the seven-term fallback really is exercised


def test_cross_term_moves_the_anchor():
    rng = np.random.default_rng(19)
    for r in (3, 4):
        for j in range(r):
            B = gf2.random_matrix(rng, r, r)
            terms = dc._cross_term(r, j, B, rng)
            want = dc._cross_value(_unit(r, j, j), B)
            assert np.array_equal(_sym_value(terms, r), want)


# ---------------------------------------------------------------------------
# single-gate certificates
# ---------------------------------------------------------------------------


def test_single_cnot_cross():
    for r in (3, 4):
        for ctrl, tgt in (((0, 0), (0, 0)), ((1, 2), (0, 1))):
            ts = dc.single_cnot_cross(r, ctrl, tgt)
            want = gf2.kron(_unit(r, ctrl[0], tgt[0]), _unit(r, ctrl[1], tgt[1]))
            assert np.array_equal(ts.reconstruct(), want)
            assert ts.weight <= 4


def test_single_cnot_in_block():
    for r in (3, 4):
        pts = [(i, j) for i in range(r) for j in range(r)]
        for (a, b), (c, d) in itertools.product(pts[: r + 2], repeat=2):
            if (a, b) == (c, d):
                continue
            ts = dc.single_cnot_in_block(r, (a, b), (c, d))
            want = gf2.identity(r * r)
            want[a * r + b, c * r + d] = 1
            assert np.array_equal(ts.reconstruct(), want)
            assert ts.weight <= (3 if a != c and b != d else 4)
    with pytest.raises(ValueError):
        dc.single_cnot_in_block(3, (1, 1), (1, 1))


def test_single_s_all_points():
    for r in (3, 4):
        for i in range(r):
            for j in range(r):
                ts = dc.single_s(r, (i, j))
                want = gf2.zeros(r * r, r * r)
                want[i * r + j, i * r + j] = 1
                assert np.array_equal(ts.reconstruct(), want)
                assert ts.weight <= (9 if r == 3 else 6)
    with pytest.raises(ValueError):
        dc.single_s(2, (0, 0))


def test_single_cz_all_pairs_r3():
    pts = [(i, j) for i in range(3) for j in range(3)]
    for q1, q2 in itertools.permutations(pts, 2):
        ts = dc.single_cz(3, q1, q2)
        assert ts.weight == 4
        want = gf2.zeros(9, 9)
        want[q1[0] * 3 + q1[1], q2[0] * 3 + q2[1]] = 1
        want[q2[0] * 3 + q2[1], q1[0] * 3 + q1[1]] = 1
        assert np.array_equal(ts.reconstruct(), want)


def test_single_cz_rejects():
    with pytest.raises(ValueError):
        dc.single_cz(3, (1, 1), (1, 1))
    with pytest.raises(ValueError):
        dc.single_cz(2, (0, 0), (0, 1))


# ---------------------------------------------------------------------------
# certificate containers
# ---------------------------------------------------------------------------


def test_containers_reject_singular_terms():
    with pytest.raises(ValueError):
        dc.TensorSum(2, ((gf2.zeros(2, 2), gf2.identity(2)),))
    with pytest.raises(ValueError):
        dc.SymTensorSum(2, (gf2.zeros(2, 2),), tau=True)

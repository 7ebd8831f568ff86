"""Generator layers, sequence accounting, and depth-bounded compilation."""

import numpy as np
import pytest

from shyps import compiler as cp
from shyps import decomp, gf2, symplectic
from shyps.code import build_shyps
from shyps.symplectic import (from_cnot, from_diagonal, from_hadamard,
                              from_x_diagonal, random_symplectic)


@pytest.fixture(scope="module")
def shyps3():
    return build_shyps(3)


@pytest.fixture(scope="module")
def shyps4():
    return build_shyps(4)


def _cnot_target(b, k, off=None, diag=None):
    C = gf2.identity(b * k)
    for (i, j), M in (off or {}).items():
        C[i * k:(i + 1) * k, j * k:(j + 1) * k] ^= gf2.asmat(M)
    for i, M in (diag or {}).items():
        C[i * k:(i + 1) * k, i * k:(i + 1) * k] = gf2.asmat(M)
    return from_cnot(C)


def _diag_target(b, k, pieces, x_side=False):
    B = gf2.zeros(b * k, b * k)
    for (i, j), M in pieces.items():
        M = gf2.asmat(M)
        B[i * k:(i + 1) * k, j * k:(j + 1) * k] ^= M
        if i != j:
            B[j * k:(j + 1) * k, i * k:(i + 1) * k] ^= M.T
    return from_x_diagonal(B) if x_side else from_diagonal(B)


def _perm_target(images):
    return from_cnot(gf2.perm_matrix(gf2.perm_inverse(images)))


# ---------------------------------------------------------------------------
# cost bounds
# ---------------------------------------------------------------------------


def test_bound_values_frozen():
    assert cp.cross_block_cnot_bound(3) == 16
    assert cp.cross_block_cnot_bound(4) == 24
    assert cp.in_block_diagonal_bound(3) == 35
    assert cp.in_block_diagonal_bound(4) == 38
    assert cp.in_block_permutation_bound(3) == 15
    assert cp.in_block_permutation_bound(4) == 18
    assert cp.hadamard_bound(3) == 48
    assert cp.multiblock_cnot_bound(3, 1) == 16
    assert cp.multiblock_cnot_bound(3, 2) == 48
    assert cp.multiblock_cnot_bound(3, 3) == 112  # padded to 4 blocks
    assert cp.multiblock_diagonal_bound(3, 1) == 57
    assert cp.multiblock_diagonal_bound(3, 2) == 57
    assert cp.multiblock_diagonal_bound(3, 3) == 89


def test_clifford_bound_values():
    assert cp.clifford_depth_bound(3, 1) == (263, "")
    assert cp.clifford_depth_bound(3, 2) == (263, "")
    assert cp.clifford_depth_bound(3, 3) == (391, "")
    bound, note = cp.clifford_depth_bound(4, 1)
    assert bound == 290
    assert "fold" in note


# ---------------------------------------------------------------------------
# generator layers
# ---------------------------------------------------------------------------


def test_cross_cnot_layer(shyps3):
    c = shyps3
    rng = np.random.default_rng(5)
    for _ in range(5):
        g1 = gf2.random_invertible(rng, 3)
        g2 = gf2.random_invertible(rng, 3)
        layer = cp.gen_cross_block_cnot(c, 2, g1, g2, 0, 1)
        assert np.array_equal(layer.coupling, gf2.kron(g1, g2))
        assert sorted(layer.pairing) == list(range(c.n))
        expected = _cnot_target(2, c.k, off={(0, 1): gf2.kron(g1, g2)})
        assert np.array_equal(layer.logical.mat, expected.mat)
        assert layer.cost == 1 and layer.blocks == {0, 1}


def test_cross_cnot_layer_congruences(shyps3):
    # re-derive the logical coupling from the physical pairing
    c = shyps3
    g1 = gf2.asmat([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    g2 = gf2.asmat([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    layer = cp.gen_cross_block_cnot(c, 2, g1, g2, 0, 1)
    W = gf2.perm_matrix(gf2.perm_inverse(layer.pairing))
    gf2.solve_left(c.G_X, gf2.mul(c.G_X, W))  # gauge X flows to gauge X
    gf2.solve_left(c.G_Z, gf2.mul(c.G_Z, W.T))
    sol = gf2.solve_left(np.vstack([c.L_X, c.G_X]), gf2.mul(c.L_X, W))
    assert np.array_equal(sol[:, :c.k], layer.coupling)
    sol = gf2.solve_left(np.vstack([c.L_Z, c.G_Z]), gf2.mul(c.L_Z, W.T))
    assert np.array_equal(sol[:, :c.k], layer.coupling.T)


def test_cross_cnot_layer_rejects_bad_blocks(shyps3):
    I = gf2.identity(3)
    with pytest.raises(ValueError):
        cp.gen_cross_block_cnot(shyps3, 2, I, I, 1, 1)
    with pytest.raises(ValueError):
        cp.gen_cross_block_cnot(shyps3, 2, I, I, 0, 2)


def test_cross_cz_layer(shyps3):
    c = shyps3
    rng = np.random.default_rng(6)
    g1 = gf2.random_invertible(rng, 3)
    g2 = gf2.random_invertible(rng, 3)
    layer = cp.gen_cross_block_cz(c, 2, g1, g2, 0, 1)
    B = gf2.mulv(gf2.kron(g1, g2), gf2.tau_matrix(3))
    assert np.array_equal(layer.coupling, B)
    assert sorted(layer.pairing) == list(range(c.n))
    expected = _diag_target(2, c.k, {(0, 1): B})
    assert np.array_equal(layer.logical.mat, expected.mat)
    assert layer.se_cost == 1


def test_phase_layer_pairing(shyps3):
    c = shyps3
    rng = np.random.default_rng(7)
    for _ in range(4):
        g = gf2.random_invertible(rng, 3)
        layer = cp.gen_diagonal(c, 1, g, 0)
        p = layer.pairing
        assert np.array_equal(p[p], np.arange(c.n))  # symmetric pairing
        assert int(np.sum(p == np.arange(c.n))) == c.n_r  # S gates
        C = gf2.mulv(gf2.kron(g, g.T), gf2.tau_matrix(3))
        assert np.array_equal(layer.coupling, C)
        assert np.array_equal(layer.logical.mat,
                              _diag_target(1, c.k, {(0, 0): C}).mat)


def test_phase_layer_x_side(shyps3):
    c = shyps3
    g = gf2.asmat([[1, 0, 0], [1, 1, 0], [0, 0, 1]])
    plain = cp.gen_diagonal(c, 1, g, 0)
    flipped = cp.gen_diagonal(c, 1, g, 0, x_side=True)
    assert np.array_equal(flipped.coupling, plain.coupling)
    assert np.array_equal(flipped.logical.mat,
                          _diag_target(1, c.k, {(0, 0): plain.coupling},
                                       x_side=True).mat)
    assert plain.se_cost == 1 and flipped.se_cost == 3


def test_fold_layer(shyps3):
    c = shyps3
    layer = cp.gen_fold_hadamard(c, 2, 1)
    k, tau = c.k, gf2.tau_matrix(3)
    M = gf2.identity(4 * k)
    M[k:2 * k, :] = 0
    M[3 * k:, :] = 0
    M[k:2 * k, 3 * k:] = tau
    M[3 * k:, k:2 * k] = tau
    assert np.array_equal(layer.logical.mat, M)
    assert layer.cost == 1 and layer.blocks == {1}


def test_relabel_layer(shyps3):
    c = shyps3
    rng = np.random.default_rng(8)
    g1 = gf2.random_invertible(rng, 3)
    g2 = gf2.random_invertible(rng, 3)
    layer = cp.gen_relabel(c, 1, g1, g2, 0)
    A = gf2.kron(gf2.invert(g1).T, g2)
    assert np.array_equal(layer.coupling, A)
    assert np.array_equal(layer.logical.mat,
                          _cnot_target(1, c.k, diag={0: A}).mat)
    assert layer.cost == 0 and layer.se_cost == 0


# ---------------------------------------------------------------------------
# sequence accounting
# ---------------------------------------------------------------------------


def test_rounds_must_touch_disjoint_blocks(shyps3):
    c = shyps3
    I = gf2.identity(3)
    a = cp.gen_diagonal(c, 2, I, 0)
    b = cp.gen_diagonal(c, 2, I, 0)
    with pytest.raises(ValueError):
        cp.GeneratorSequence(c, 2, [[a, b]])
    # teleport occupies its auxiliary block too
    tele = cp.compile_in_block_cnot(c, 2, gf2.random_invertible(
        np.random.default_rng(0), 9), 0, aux=2).rounds[0][0]
    other = cp.gen_diagonal(c, 3, I, 2)
    with pytest.raises(ValueError):
        cp.GeneratorSequence(c, 3, [[tele, other]])


def test_depth_and_se_accounting(shyps3):
    c = shyps3
    I = gf2.identity(3)
    relabel = cp.gen_relabel(c, 1, I, I, 0)
    z = cp.gen_diagonal(c, 1, I, 0)
    x = cp.gen_diagonal(c, 1, I, 0, x_side=True)
    assert cp.GeneratorSequence(c, 1, [[relabel]]).depth == 0
    assert cp.GeneratorSequence(c, 1, [[z], [z]]).se_rounds == 2
    # adjacent X-type rounds on the same block share their fold pair
    assert cp.GeneratorSequence(c, 1, [[x], [x]]).se_rounds == 4
    assert cp.GeneratorSequence(c, 1, [[x], [z], [x]]).se_rounds == 7


def test_then_and_parallel(shyps3):
    c = shyps3
    z0 = cp.gen_diagonal(c, 2, gf2.identity(3), 0)
    z1 = cp.gen_diagonal(c, 2, gf2.identity(3), 1)
    s0 = cp.GeneratorSequence(c, 2, [[z0]])
    s1 = cp.GeneratorSequence(c, 2, [[z1]])
    both = cp.GeneratorSequence.parallel([s0, s1])
    assert both.depth == 1 and len(both.rounds[0]) == 2
    assert np.array_equal(both.net.mat, (z0.logical @ z1.logical).mat)
    assert s0.then(s1).depth == 2
    with pytest.raises(ValueError):
        s0.then(cp.GeneratorSequence(c, 3))
    with pytest.raises(ValueError):
        cp.GeneratorSequence.parallel([])


def test_aux_block_counting(shyps3):
    c = shyps3
    rng = np.random.default_rng(1)
    C1 = gf2.random_invertible(rng, 9)
    C2 = gf2.random_invertible(rng, 9)
    t0 = cp.compile_in_block_cnot(c, 2, C1, 0, aux=2)
    t1 = cp.compile_in_block_cnot(c, 2, C2, 1, aux=3)
    assert cp.GeneratorSequence.parallel([t0, t1]).aux_blocks == 2
    assert t0.then(t1).aux_blocks == 1
    assert t0.frame == [("teleport", 0, 2)]


# ---------------------------------------------------------------------------
# cross-block CNOT compilation
# ---------------------------------------------------------------------------


def test_cross_cnot_random(shyps3):
    c = shyps3
    rng = np.random.default_rng(11)
    for _ in range(8):
        A = gf2.random_matrix(rng, 9, 9)
        if not A.any():
            continue
        seq = cp.compile_cross_block_cnot(c, 2, A, 0, 1, seed=3)
        assert np.array_equal(seq.net.mat,
                              _cnot_target(2, c.k, off={(0, 1): A}).mat)
        assert seq.depth <= 16
        assert seq.aux_blocks == 0


def test_cross_cnot_single_entry(shyps3):
    c = shyps3
    rng = np.random.default_rng(12)
    for _ in range(6):
        p, q = rng.integers(0, 9, size=2)
        A = gf2.zeros(9, 9)
        A[p, q] = 1
        seq = cp.compile_cross_block_cnot(c, 2, A, 1, 0)
        assert np.array_equal(seq.net.mat,
                              _cnot_target(2, c.k, off={(1, 0): A}).mat)
        assert seq.depth <= 4


def test_cross_cnot_zero_and_thin(shyps3):
    c = shyps3
    assert cp.compile_cross_block_cnot(shyps3, 2, gf2.zeros(9, 9), 0, 1).depth == 0
    A = gf2.zeros(9, 9)
    for p, q in ((0, 3), (4, 4), (7, 1)):
        A[p, q] = 1
    for optimize in (True, False):
        seq = cp.compile_cross_block_cnot(c, 2, A, 0, 1, optimize=optimize)
        assert np.array_equal(seq.net.mat,
                              _cnot_target(2, c.k, off={(0, 1): A}).mat)
        assert seq.depth <= 16


# ---------------------------------------------------------------------------
# in-block CNOT compilation
# ---------------------------------------------------------------------------


def test_in_block_cnot(shyps3):
    c = shyps3
    assert cp.compile_in_block_cnot(c, 1, gf2.identity(9), 0).depth == 0
    rng = np.random.default_rng(13)
    for _ in range(4):
        C = gf2.random_invertible(rng, 9)
        seq = cp.compile_in_block_cnot(c, 1, C, 0, seed=1)
        assert np.array_equal(seq.net.mat, _cnot_target(1, c.k, diag={0: C}).mat)
        assert seq.depth <= 16
        assert seq.aux_blocks == 1
    with pytest.raises(ValueError):
        cp.compile_in_block_cnot(c, 2, C, 0, aux=1)


def test_in_block_single_cnot_pin(shyps3):
    c = shyps3
    for p, q in ((0, 1), (3, 7), (8, 2)):
        C = gf2.identity(9)
        C[p, q] = 1
        seq = cp.compile_in_block_cnot(c, 1, C, 0)
        assert np.array_equal(seq.net.mat, _cnot_target(1, c.k, diag={0: C}).mat)
        assert seq.depth <= 4
        assert seq.frame == [("teleport", 0, 1)]


# ---------------------------------------------------------------------------
# in-block permutations
# ---------------------------------------------------------------------------


def test_in_block_permutation(shyps3):
    c = shyps3
    rng = np.random.default_rng(14)
    assert cp.compile_in_block_permutation(c, 1, np.arange(9), 0).depth == 0
    for _ in range(8):
        images = rng.permutation(9)
        seq = cp.compile_in_block_permutation(c, 1, images, 0)
        assert np.array_equal(
            seq.net.mat,
            _cnot_target(1, c.k,
                         diag={0: gf2.perm_matrix(gf2.perm_inverse(images))}).mat)
        assert seq.depth <= 15


def test_in_block_permutation_grid_transpose(shyps3):
    seq = cp.compile_in_block_permutation(shyps3, 1, gf2.tau_perm(3), 0)
    assert seq.depth <= 15


def test_in_block_permutation_r4(shyps4):
    c = shyps4
    rng = np.random.default_rng(15)
    for _ in range(2):
        images = rng.permutation(16)
        seq = cp.compile_in_block_permutation(c, 1, images, 0)
        assert np.array_equal(
            seq.net.mat,
            _cnot_target(1, c.k,
                         diag={0: gf2.perm_matrix(gf2.perm_inverse(images))}).mat)
        assert seq.depth <= 18


# ---------------------------------------------------------------------------
# phase-type compilation
# ---------------------------------------------------------------------------


def test_single_s_pin(shyps3):
    c = shyps3
    for q in (0, 4, 8):
        S = gf2.zeros(9, 9)
        S[q, q] = 1
        seq = cp.compile_in_block_diagonal(c, 1, S, 0)
        assert np.array_equal(seq.net.mat, _diag_target(1, c.k, {(0, 0): S}).mat)
        assert seq.depth <= 9


def test_single_cz_pin(shyps3):
    c = shyps3
    S = gf2.zeros(9, 9)
    S[2, 6] = S[6, 2] = 1
    seq = cp.compile_in_block_diagonal(c, 1, S, 0)
    assert np.array_equal(seq.net.mat, _diag_target(1, c.k, {(0, 0): S}).mat)
    assert seq.depth == 4
    # cross-block single CZ matches the same budget
    A = gf2.zeros(9, 9)
    A[5, 1] = 1
    seq = cp.compile_cross_block_cz(c, 2, A, 0, 1)
    assert np.array_equal(seq.net.mat, _diag_target(2, c.k, {(0, 1): A}).mat)
    assert seq.depth <= 4


def test_in_block_diagonal_random(shyps3):
    c = shyps3
    rng = np.random.default_rng(16)
    for _ in range(4):
        S = symplectic.random_symmetric(rng, 9)
        if not S.any():
            continue
        seq = cp.compile_in_block_diagonal(c, 1, S, 0, seed=2)
        assert np.array_equal(seq.net.mat, _diag_target(1, c.k, {(0, 0): S}).mat)
        assert seq.depth <= 35
        flip = cp.compile_in_block_diagonal(c, 1, S, 0, seed=2, x_side=True)
        assert np.array_equal(flip.net.mat,
                              _diag_target(1, c.k, {(0, 0): S}, x_side=True).mat)
    with pytest.raises(ValueError):
        cp.compile_in_block_diagonal(c, 1, gf2.asmat([[0, 1], [0, 0]]), 0)


def test_cross_block_cz_random(shyps3):
    c = shyps3
    rng = np.random.default_rng(17)
    A = gf2.random_matrix(rng, 9, 9)
    seq = cp.compile_cross_block_cz(c, 2, A, 0, 1, seed=1)
    assert np.array_equal(seq.net.mat, _diag_target(2, c.k, {(0, 1): A}).mat)
    assert seq.depth <= 16


def test_multiblock_diagonal(shyps3):
    c = shyps3
    rng = np.random.default_rng(18)
    for b in (2, 3):
        S = symplectic.random_symmetric(rng, b * 9)
        seq = cp.compile_multiblock_diagonal(c, b, S, seed=4)
        assert np.array_equal(seq.net.mat, from_diagonal(S).mat)
        assert seq.depth <= cp.multiblock_diagonal_bound(3, b)


def test_round_robin_classes():
    for b in (2, 3, 4, 5):
        classes = cp._round_robin(b)
        seen = [p for cls in classes for p in cls]
        assert len(seen) == len(set(seen)) == b * (b - 1) // 2
        for cls in classes:
            used = [x for p in cls for x in p]
            assert len(used) == len(set(used))


# ---------------------------------------------------------------------------
# multi-block CNOT and permutation compilation
# ---------------------------------------------------------------------------


def test_multiblock_cnot(shyps3):
    c = shyps3
    rng = np.random.default_rng(19)
    for b in (2, 3):
        X = gf2.random_invertible(rng, b * 9)
        seq, residual = cp.compile_multiblock_cnot(c, b, X, seed=5)
        assert seq.depth <= cp.multiblock_cnot_bound(3, b)
        front = cp.compile_multiblock_permutation(c, b, residual, seed=5)
        full = front.then(seq)
        assert np.array_equal(full.net.mat, from_cnot(X).mat)


def test_multiblock_permutation(shyps3):
    c = shyps3
    rng = np.random.default_rng(20)
    images = rng.permutation(18)
    seq = cp.compile_multiblock_permutation(c, 2, images, seed=6)
    assert np.array_equal(seq.net.mat, _perm_target(images).mat)
    assert seq.depth <= cp.multiblock_permutation_bound(3)


def test_multiblock_permutation_in_block_fast_path(shyps3):
    c = shyps3
    rng = np.random.default_rng(21)
    images = np.concatenate([rng.permutation(9), 9 + rng.permutation(9)])
    seq = cp.compile_multiblock_permutation(c, 2, images)
    assert np.array_equal(seq.net.mat, _perm_target(images).mat)
    assert seq.depth <= cp.in_block_permutation_bound(3)
    assert seq.aux_blocks <= 2


def test_edge_coloring_helpers():
    rng = np.random.default_rng(22)
    # r-regular bipartite multigraph from r random permutations
    for r in (3, 4):
        pairs = [(u, int(p[u])) for p in (rng.permutation(r) for _ in range(r))
                 for u in range(r)]
        color = cp._bipartite_edge_color(pairs, r)
        assert sorted(set(color)) == list(range(r))
        for i, e in enumerate(pairs):
            for j, f in enumerate(pairs):
                if i < j and color[i] == color[j]:
                    assert e[0] != f[0] and e[1] != f[1]
    # loose multigraph stays within the floor(3*delta/2) cap
    edges = [(0, 1), (0, 1), (1, 2), (2, 0), (2, 3), (3, 0)]
    deg = np.bincount([x for e in edges for x in e])
    cap = (3 * int(deg.max())) // 2
    color = cp._multigraph_edge_color(edges, cap)
    assert max(color) < cap
    for i, e in enumerate(edges):
        for j, f in enumerate(edges):
            if i < j and color[i] == color[j]:
                assert not set(e) & set(f)


# ---------------------------------------------------------------------------
# Hadamard compilation
# ---------------------------------------------------------------------------


def test_hadamard_zero_and_full(shyps3):
    c = shyps3
    assert cp.compile_hadamard(c, 1, gf2.zeros(3, 3), 0).depth == 0
    V = np.ones((3, 3), dtype=np.uint8)
    seq = cp.compile_hadamard(c, 1, V, 0)
    assert np.array_equal(seq.net.mat, from_hadamard(np.ones(9, np.uint8)).mat)
    assert seq.depth <= 3 * 3 + 10


def test_hadamard_single_pin(shyps3):
    c = shyps3
    for i, j in ((0, 0), (1, 2), (2, 0)):
        V = gf2.zeros(3, 3)
        V[i, j] = 1
        seq = cp.compile_hadamard(c, 1, V, 0)
        assert np.array_equal(seq.net.mat, from_hadamard(gf2.flatten(V)[0]).mat)
        assert seq.depth <= 11


def test_hadamard_single_pin_r4(shyps4):
    V = gf2.zeros(4, 4)
    V[1, 3] = 1
    seq = cp.compile_hadamard(shyps4, 1, V, 0)
    assert np.array_equal(seq.net.mat, from_hadamard(gf2.flatten(V)[0]).mat)
    assert seq.depth <= 8


def test_hadamard_symmetric_and_general(shyps3):
    c = shyps3
    V = gf2.zeros(3, 3)
    V[0, 1] = V[1, 0] = V[2, 2] = 1
    seq = cp.compile_hadamard(c, 1, V, 0)
    assert np.array_equal(seq.net.mat, from_hadamard(gf2.flatten(V)[0]).mat)
    assert seq.depth <= 8 * 3 + 9
    rng = np.random.default_rng(23)
    for w in (2, 4, 7):
        v = np.zeros(9, dtype=np.uint8)
        v[rng.choice(9, size=w, replace=False)] = 1
        seq = cp.compile_hadamard(c, 1, gf2.unflatten(v), 0, seed=1)
        assert np.array_equal(seq.net.mat, from_hadamard(v).mat)
        assert seq.depth <= cp.hadamard_bound(3)


def test_symmetric_mask_shapes():
    for m in range(10):
        V = cp._symmetric_mask(3, m)
        assert int(V.sum()) == m
        assert np.array_equal(V, V.T)


# ---------------------------------------------------------------------------
# full Clifford compilation
# ---------------------------------------------------------------------------


def test_clifford_identity(shyps3):
    seq, report = cp.compile_clifford(shyps3, 2, symplectic.identity(18))
    assert seq.depth == 0 and report.layers == 0
    assert report.bound == 263 and report.aux_blocks == 0


def test_clifford_random_single_block(shyps3):
    c = shyps3
    rng = np.random.default_rng(24)
    for _ in range(3):
        chi = random_symplectic(rng, 9)
        seq, report = cp.compile_clifford(c, 1, chi, seed=7)
        assert np.array_equal(seq.net.mat, chi.mat)
        assert report.layers <= report.bound == 263
        assert report.aux_blocks == 0


def test_clifford_random_two_blocks(shyps3):
    c = shyps3
    rng = np.random.default_rng(25)
    for _ in range(2):
        chi = random_symplectic(rng, 18)
        seq, report = cp.compile_clifford(c, 2, chi, seed=8)
        assert np.array_equal(seq.net.mat, chi.mat)
        assert report.layers <= report.bound == 263
        assert report.aux_blocks == 0
        assert report.se_rounds >= report.layers


def test_clifford_cnot_route(shyps3):
    c = shyps3
    rng = np.random.default_rng(26)
    chi = random_symplectic(rng, 18)
    seq, report = cp.compile_clifford(c, 2, chi, method="dz-cx", seed=9)
    assert np.array_equal(seq.net.mat, chi.mat)
    assert report.aux_blocks <= 2


def test_clifford_structured_targets(shyps3):
    c = shyps3
    rng = np.random.default_rng(27)
    k = c.k
    # pure qubit permutation
    images = rng.permutation(2 * k)
    seq, report = cp.compile_clifford(c, 2, _perm_target(images))
    assert np.array_equal(seq.net.mat, _perm_target(images).mat)
    assert report.layers <= cp.multiblock_permutation_bound(3)
    # pure Z-type diagonal
    S = symplectic.random_symmetric(rng, 2 * k)
    seq, report = cp.compile_clifford(c, 2, from_diagonal(S))
    assert np.array_equal(seq.net.mat, from_diagonal(S).mat)
    assert report.layers <= cp.multiblock_diagonal_bound(3, 2)
    # pure X-type diagonal pays at most the two extra fold rounds
    seq, report = cp.compile_clifford(c, 2, from_x_diagonal(S))
    assert np.array_equal(seq.net.mat, from_x_diagonal(S).mat)
    assert report.layers <= cp.multiblock_diagonal_bound(3, 2) + 4
    # per-block Hadamard masks
    v = np.zeros(2 * k, dtype=np.uint8)
    v[[0, 3, 5, 9, 10]] = 1
    seq, report = cp.compile_clifford(c, 2, from_hadamard(v))
    assert np.array_equal(seq.net.mat, from_hadamard(v).mat)
    assert report.layers <= cp.hadamard_bound(3)


def test_clifford_argument_validation(shyps3):
    c = shyps3
    with pytest.raises(ValueError):
        cp.compile_clifford(c, 1, symplectic.identity(18))
    with pytest.raises(ValueError):
        cp.compile_clifford(c, 2, symplectic.identity(18), method="xz")
    bad = symplectic.identity(9)
    bad.mat[0, 1] = 1
    with pytest.raises(ValueError):
        cp.compile_clifford(c, 1, bad)


def test_clifford_r4(shyps4):
    rng = np.random.default_rng(28)
    chi = random_symplectic(rng, 16)
    seq, report = cp.compile_clifford(shyps4, 1, chi, seed=10)
    assert np.array_equal(seq.net.mat, chi.mat)
    assert report.layers <= report.bound == 290
    assert "fold" in report.note

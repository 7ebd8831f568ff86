"""Decompositions of GF(2) matrices into sums of invertible matrices.

Every routine here returns an exact algebraic certificate: a sum of
invertible matrices, a sum of Kronecker products of invertible pairs, or a
sum of symmetric squares A (x) A^T.  Downstream, each invertible summand is
realized by one depth-1 layer of physical two-qubit gates, so the term
counts bounded here are circuit depths; the bounds are asserted, not just
documented.

All matrices are numpy uint8 arrays over GF(2).  Routines with a random
search take an explicit ``seed`` and are deterministic for a fixed seed.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from . import gf2
from ._fixtures import DIAGONAL_TABLE_R3, EXCEPTIONAL_CROSS_R3


# ---------------------------------------------------------------------------
# Certificate containers
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TensorSum:
    """A sum  sum_i M_i (x) N_i  with every factor in GL_r(2)."""

    r: int
    terms: tuple

    def __post_init__(self):
        for M, N in self.terms:
            if not (gf2.is_invertible(M) and gf2.is_invertible(N)):
                raise ValueError("TensorSum factors must be invertible")

    @property
    def weight(self) -> int:
        return len(self.terms)

    def reconstruct(self) -> np.ndarray:
        n = self.r * self.r
        acc = gf2.zeros(n, n)
        for M, N in self.terms:
            acc ^= gf2.kron(M, N)
        return acc


@dataclass(frozen=True, eq=False)
class SymTensorSum:
    """A sum  sum_i A_i (x) A_i^T  (right-multiplied by the grid transpose
    when ``tau`` is set) with every A_i in GL_r(2)."""

    r: int
    terms: tuple
    tau: bool

    def __post_init__(self):
        for A in self.terms:
            if not gf2.is_invertible(A):
                raise ValueError("SymTensorSum terms must be invertible")

    @property
    def weight(self) -> int:
        return len(self.terms)

    def reconstruct(self) -> np.ndarray:
        n = self.r * self.r
        acc = gf2.zeros(n, n)
        for A in self.terms:
            acc ^= gf2.kron(A, A.T)
        if self.tau:
            acc = gf2.mul(acc, gf2.tau_matrix(self.r))
        return acc


# ---------------------------------------------------------------------------
# Small helpers
# ---------------------------------------------------------------------------


def _unit(r: int, i: int, j: int) -> np.ndarray:
    E = gf2.zeros(r, r)
    E[i, j] = 1
    return E


def canonical_cycle(r: int) -> np.ndarray:
    """The r-cycle permutation matrix j -> j+1 (mod r)."""
    return gf2.perm_matrix([(j + 1) % r for j in range(r)])


def _sym_square(A: np.ndarray) -> np.ndarray:
    """A (x) A^T followed by the grid transpose."""
    r = A.shape[0]
    return gf2.mul(gf2.kron(A, A.T), gf2.tau_matrix(r))


def _cross_value(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """(A (x) B^T + B (x) A^T) tau — the cross term of (A+B) (x) (A+B)^T tau."""
    r = A.shape[0]
    acc = gf2.add(gf2.kron(A, B.T), gf2.kron(B, A.T))
    return gf2.mul(acc, gf2.tau_matrix(r))


# Fixed invertible pairs summing to I_2 and I_3; every identity block is
# tiled from these two.
_I2_PAIR = (
    np.array([[1, 1], [1, 0]], dtype=np.uint8),
    np.array([[0, 1], [1, 1]], dtype=np.uint8),
)
_I3_PAIR = (
    np.array([[1, 1, 1], [0, 1, 1], [1, 0, 1]], dtype=np.uint8),
    np.array([[0, 1, 1], [0, 0, 1], [1, 0, 0]], dtype=np.uint8),
)


def _block_diag(blocks) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = gf2.zeros(n, n)
    pos = 0
    for b in blocks:
        k = b.shape[0]
        out[pos : pos + k, pos : pos + k] = b
        pos += k
    return out


def _identity_pair(l: int) -> tuple[np.ndarray, np.ndarray]:
    """Invertible (X, Y) with X + Y = I_l, for l >= 2."""
    tiles_x, tiles_y = [], []
    rest = l
    if rest % 2 == 1:
        tiles_x.append(_I3_PAIR[0])
        tiles_y.append(_I3_PAIR[1])
        rest -= 3
    while rest:
        tiles_x.append(_I2_PAIR[0])
        tiles_y.append(_I2_PAIR[1])
        rest -= 2
    return _block_diag(tiles_x), _block_diag(tiles_y)


# ---------------------------------------------------------------------------
# Sums of two invertibles
# ---------------------------------------------------------------------------


def sum_two_invertibles(M) -> tuple:
    """Write M as a sum of at most two invertible matrices.

    Returns (M,) when M is already invertible, () for M = 0, and an
    invertible pair otherwise.  The 1x1 zero matrix is the one genuinely
    impossible input.
    """
    M = gf2.asmat(M)
    r = M.shape[0]
    if M.shape != (r, r):
        raise ValueError("sum_two_invertibles needs a square matrix")
    if gf2.is_invertible(M):
        return (M.copy(),)
    if r == 1:
        raise ValueError("the 1x1 zero matrix is not a sum of invertibles")
    if not M.any():
        return ()

    # Row-reduce [M | I] to read off U with U M in RREF, then column
    # operations g' bring U M g' to diag(I_l, 0).
    aug = np.concatenate([M, gf2.identity(r)], axis=1)
    red, _ = gf2.rref(aug)
    U = red[:, r:]
    R = red[:, :r]
    _, pivots = gf2.rref(M)
    l = len(pivots)
    col_images = list(pivots) + [c for c in range(r) if c not in pivots]
    V1 = gf2.perm_matrix(col_images)  # column j of R V1 is column col_images[j] of R
    R1 = gf2.mul(R, V1)
    V2 = gf2.identity(r)
    V2[:l, l:] = R1[:l, l:]
    gprime = gf2.mul(V1, V2)
    N = gf2.mul(R1, V2)
    assert np.array_equal(N, _block_diag([gf2.identity(l), gf2.zeros(r - l, r - l)]))

    if l == 1:
        X = _block_diag([_I2_PAIR[0], gf2.identity(r - 2)])
        Y = _block_diag([np.array([[0, 1], [1, 0]], dtype=np.uint8), gf2.identity(r - 2)])
    else:
        Xl, Yl = _identity_pair(l)
        X = _block_diag([Xl, gf2.identity(r - l)])
        Y = _block_diag([Yl, gf2.identity(r - l)])

    Ui = gf2.invert(U)
    gi = gf2.invert(gprime)
    T1 = gf2.mulv(Ui, X, gi)
    T2 = gf2.mulv(Ui, Y, gi)
    assert np.array_equal(gf2.add(T1, T2), M)
    return (T1, T2)


# ---------------------------------------------------------------------------
# Invertible spanning sets
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _full_space_basis(r: int) -> tuple:
    """r^2 linearly independent invertible matrices spanning all of M_r(2)."""
    rng = np.random.default_rng(12345)
    rows = gf2.zeros(0, r * r)
    out = []
    while len(out) < r * r:
        g = gf2.random_invertible(rng, r)
        cand = np.concatenate([rows, gf2.flatten(g)], axis=0)
        if gf2.rank(cand) > rows.shape[0]:
            rows = cand
            out.append(g)
    return tuple(out)


def _independent_invertibles_in_coset(sing, rng) -> list:
    """d linearly independent invertible elements of some coset M + <sing>."""
    d = len(sing)
    r = sing[0].shape[0]
    exhaustive = d <= 12
    for _ in range(64):
        M = gf2.random_matrix(rng, r, r)
        found = []
        rows = gf2.zeros(0, r * r)
        if exhaustive:
            masks = range(1 << d)
        else:
            masks = (int(m) for m in rng.integers(0, 1 << d, size=4096, dtype=np.int64))
        for mask in masks:
            g = M.copy()
            for b in range(d):
                if (mask >> b) & 1:
                    g ^= sing[b]
            if not gf2.is_invertible(g):
                continue
            cand = np.concatenate([rows, gf2.flatten(g)], axis=0)
            if gf2.rank(cand) > rows.shape[0]:
                rows = cand
                found.append(g)
                if len(found) == d:
                    return found
    raise RuntimeError("coset search for invertible representatives failed")


def invertible_spanning_set(basis, seed: int = 0) -> list:
    """A small set T of invertible matrices with span(T) containing span(basis).

    |T| <= min(2 d, r^2, d + 2) for d = len(basis); the input matrices must
    be linearly independent.  A basis of invertible matrices is returned
    unchanged.
    """
    basis = [gf2.asmat(b) for b in basis]
    if not basis:
        return []
    r = basis[0].shape[0]
    stack = np.concatenate([gf2.flatten(b) for b in basis], axis=0)
    d = len(basis)
    if gf2.rank(stack) != d:
        raise ValueError("spanning-set input must be linearly independent")

    good = [b.copy() for b in basis if gf2.is_invertible(b)]
    sing = [b for b in basis if not gf2.is_invertible(b)]
    d2 = len(sing)
    if d2 == 0:
        return good

    cost_split = (d - d2) + 2 * d2
    cost_full = r * r
    cost_coset = d + 2 if d2 >= 3 else cost_split

    if cost_full < min(cost_split, cost_coset):
        # Spanning all of M_r(2) with invertibles is cheaper than covering
        # this particular space.
        return list(_full_space_basis(r))
    if d2 < 3 or cost_split <= cost_coset:
        out = good
        for s in sing:
            out.extend(sum_two_invertibles(s))
        return out

    rng = np.random.default_rng(seed)
    gs = _independent_invertibles_in_coset(sing, rng)
    # The pairwise sums g_1 + g_i span a hyperplane of <sing>; one basis
    # element lies outside it and is split into two invertibles.
    vrows = np.concatenate([gf2.flatten(gf2.add(gs[0], g)) for g in gs[1:]], axis=0)
    A = next(s for s in sing if not gf2.in_rowspace(vrows, gf2.flatten(s)))
    out = good + gs + list(sum_two_invertibles(A))

    allrows = np.concatenate([gf2.flatten(t) for t in out], axis=0)
    assert gf2.in_rowspace(allrows, stack)
    return out


# ---------------------------------------------------------------------------
# Diagonal repairs
# ---------------------------------------------------------------------------


def diagonal_complement(A) -> np.ndarray:
    """A diagonal D with A + D invertible (D = 0 when A already is).

    Built inductively: D[l,l] is chosen so each leading minor of A + D has
    Schur complement 1.
    """
    A = gf2.asmat(A)
    r = A.shape[0]
    if A.shape != (r, r):
        raise ValueError("diagonal_complement needs a square matrix")
    if gf2.is_invertible(A):
        return gf2.zeros(r, r)
    D = gf2.zeros(r, r)
    for l in range(r):
        if l == 0:
            D[0, 0] = A[0, 0] ^ 1
            continue
        lead = gf2.add(A, D)[:l, :l]
        u = A[l, :l].reshape(1, -1)
        v = A[:l, l].reshape(-1, 1)
        s = gf2.mulv(u, gf2.invert(lead), v)[0, 0]
        D[l, l] = A[l, l] ^ s ^ 1
    assert gf2.is_invertible(gf2.add(A, D))
    return D


def cycle_complement(D, P) -> np.ndarray:
    """Whichever of D, D + P is invertible, for diagonal D and an r-cycle P.

    det(D + P) = det(D) + 1 over GF(2), so exactly one of the two works.
    """
    D = gf2.asmat(D)
    P = gf2.asmat(P)
    r = D.shape[0]
    if np.any(D != np.diag(np.diag(D))):
        raise ValueError("cycle_complement needs a diagonal matrix")
    images = gf2.perm_from_matrix(P)
    seen, j = 1, images[0]
    while j != 0:
        seen += 1
        j = images[j]
    if seen != r:
        raise ValueError("cycle_complement needs a single r-cycle")
    if gf2.is_invertible(D):
        return D.copy()
    out = gf2.add(D, P)
    assert gf2.is_invertible(out)
    return out


# ---------------------------------------------------------------------------
# Kronecker decompositions
# ---------------------------------------------------------------------------


def _kron_rank_one(A: np.ndarray, r: int):
    """(g, h) with A = g (x) h, if the reshaped matrix has rank one."""
    R = gf2.reshape_blocks(A)
    if gf2.rank(R) != 1:
        return None
    i = next(k for k in range(R.shape[0]) if R[k].any())
    j = next(k for k in range(R.shape[1]) if R[:, k].any())
    g = gf2.unflatten(R[:, j])
    h = gf2.unflatten(R[i, :])
    if not np.array_equal(gf2.kron(g, h), A):
        return None
    return g, h


def _split_pair(M: np.ndarray, N: np.ndarray) -> list:
    """M (x) N as <= 4 invertible Kronecker terms."""
    return [(X, Y) for X in sum_two_invertibles(M) for Y in sum_two_invertibles(N)]


def tensor_decompose(A, seed: int = 0, minimize_rank: bool = False) -> TensorSum:
    """Write an r^2 x r^2 matrix as a short sum of g (x) h with g, h invertible.

    The weight is at most min(4t, 2t + 8, t + r + 6, r^2 + r + 4) where t is
    the number of Kronecker terms in the starting decomposition: nonzero
    r x r blocks by default, or a rank factorization of the block-reshaped
    matrix when ``minimize_rank`` is set (that rank is the true minimum).
    """
    A = gf2.asmat(A)
    n = A.shape[0]
    r = int(round(n**0.5))
    if A.shape != (n, n) or r * r != n:
        raise ValueError("tensor_decompose needs an r^2 x r^2 matrix")
    if not A.any():
        return TensorSum(r, ())

    rank1 = _kron_rank_one(A, r)
    if rank1 is not None:
        g, h = rank1
        if gf2.is_invertible(g) and gf2.is_invertible(h):
            return TensorSum(r, ((g, h),))
        pairs = [rank1]
    elif minimize_rank:
        R = gf2.reshape_blocks(A)
        Rr, pivots = gf2.rref(R)
        C = R[:, pivots]
        V = Rr[: len(pivots), :]
        assert np.array_equal(gf2.mul(C, V), R)
        pairs = [(gf2.unflatten(C[:, k]), gf2.unflatten(V[k, :])) for k in range(len(pivots))]
    else:
        pairs = []
        for i in range(r):
            for j in range(r):
                blk = A[i * r : (i + 1) * r, j * r : (j + 1) * r]
                if blk.any():
                    pairs.append((_unit(r, i, j), blk.copy()))

    t = len(pairs)
    if t <= 3:
        terms = [term for M, N in pairs for term in _split_pair(M, N)]
    else:
        terms = []
        B = invertible_spanning_set([M for M, _ in pairs], seed=seed)
        Bmat = np.concatenate([gf2.flatten(b) for b in B], axis=0)
        nprime = [gf2.zeros(r, r) for _ in B]
        for M, N in pairs:
            mu = gf2.solve_left(Bmat, gf2.flatten(M))[0]
            for j in range(len(B)):
                if mu[j]:
                    nprime[j] ^= N
        diag_pairs = []
        for j, Nj in enumerate(nprime):
            if not Nj.any():
                continue
            Dj = diagonal_complement(Nj)
            terms.append((B[j], gf2.add(Nj, Dj)))
            if Dj.any():
                diag_pairs.append((B[j], Dj))
        if diag_pairs:
            dstack = np.stack([np.diag(D) for _, D in diag_pairs]).astype(np.uint8)
            Rr, piv = gf2.rref(dstack)
            erows = Rr[: len(piv), :]
            svals = [gf2.zeros(r, r) for _ in range(len(piv))]
            for Bj, Dj in diag_pairs:
                delta = gf2.solve_left(erows, np.diag(Dj).reshape(1, -1))[0]
                for l in range(len(piv)):
                    if delta[l]:
                        svals[l] ^= Bj
            sub = []
            rows = gf2.zeros(0, r * r)
            for S in svals:
                cand = np.concatenate([rows, gf2.flatten(S)], axis=0)
                if gf2.rank(cand) > rows.shape[0]:
                    rows = cand
                    sub.append(S)
            F = invertible_spanning_set(sub, seed=seed + 1) if sub else []
            P = canonical_cycle(r)
            gsum = gf2.zeros(r, r)
            if F:
                Fmat = np.concatenate([gf2.flatten(f) for f in F], axis=0)
                deltas = [gf2.zeros(r, r) for _ in F]
                for l, S in enumerate(svals):
                    beta = gf2.solve_left(Fmat, gf2.flatten(S))[0]
                    for a in range(len(F)):
                        if beta[a]:
                            deltas[a] ^= np.diag(erows[l]).astype(np.uint8)
                for a, Fa in enumerate(F):
                    Da = deltas[a]
                    if not Da.any():
                        continue
                    if np.array_equal(Da, gf2.identity(r)):
                        terms.append((Fa, gf2.identity(r)))
                    else:
                        terms.append((Fa, cycle_complement(Da, P)))
                        gsum ^= Fa
            for X in sum_two_invertibles(gsum):
                terms.append((X, P))

    out = TensorSum(r, tuple(terms))
    assert np.array_equal(out.reconstruct(), A)
    bound = min(4 * t, 2 * t + 8, t + r + 6, r * r + r + 4)
    assert out.weight <= bound, (out.weight, bound)
    return out


def tensor_decompose_upper_triangular(A, seed: int = 0) -> TensorSum:
    """Kronecker decomposition of an invertible upper-triangular matrix.

    Weight at most r(r+1)/2 + 6, beating the general bound for most r.
    """
    A = gf2.asmat(A)
    n = A.shape[0]
    r = int(round(n**0.5))
    if A.shape != (n, n) or r * r != n:
        raise ValueError("expected an r^2 x r^2 matrix")
    if np.any(np.tril(A, -1)):
        raise ValueError("expected an upper-triangular matrix")
    if not np.all(np.diag(A) == 1):
        raise ValueError("expected an invertible (unit-diagonal) matrix")

    rank1 = _kron_rank_one(A, r)
    if rank1 is not None and gf2.is_invertible(rank1[0]) and gf2.is_invertible(rank1[1]):
        out = TensorSum(r, (rank1,))
        assert np.array_equal(out.reconstruct(), A)
        return out

    terms = []
    upper = []
    for i in range(r):
        for j in range(i + 1, r):
            blk = A[i * r : (i + 1) * r, j * r : (j + 1) * r]
            if blk.any():
                upper.append(((i, j), blk.copy()))
    if upper:
        rows = gf2.zeros(0, r * r)
        sub = []
        for _, N in upper:
            cand = np.concatenate([rows, gf2.flatten(N)], axis=0)
            if gf2.rank(cand) > rows.shape[0]:
                rows = cand
                sub.append(N)
        G = invertible_spanning_set(sub, seed=seed)
        Gmat = np.concatenate([gf2.flatten(g) for g in G], axis=0)
        W = [gf2.zeros(r, r) for _ in G]
        for (i, j), N in upper:
            nu = gf2.solve_left(Gmat, gf2.flatten(N))[0]
            for k in range(len(G)):
                if nu[k]:
                    W[k] ^= _unit(r, i, j)
        gsum = gf2.zeros(r, r)
        for k, Gk in enumerate(G):
            terms.append((gf2.add(gf2.identity(r), W[k]), Gk))
            gsum ^= Gk
        for X in sum_two_invertibles(gsum):
            terms.append((gf2.identity(r), X))

    C = canonical_cycle(r)
    usum = gf2.zeros(r, r)
    for i in range(r):
        Ui = A[i * r : (i + 1) * r, i * r : (i + 1) * r]
        terms.append((cycle_complement(_unit(r, i, i), C), Ui.copy()))
        usum ^= Ui
    for X in sum_two_invertibles(usum):
        terms.append((C, X))

    out = TensorSum(r, tuple(terms))
    assert np.array_equal(out.reconstruct(), A)
    assert out.weight <= r * (r + 1) // 2 + 6
    return out


# ---------------------------------------------------------------------------
# Symmetric squares
# ---------------------------------------------------------------------------


def binary_cholesky(S) -> np.ndarray:
    """L with L L^T = S for symmetric S over GF(2).

    The column count is exactly rank(S), plus one when the diagonal of a
    nonzero S vanishes (then the form is alternating and rank(S) columns
    cannot suffice).
    """
    S = gf2.asmat(S)
    n = S.shape[0]
    if S.shape != (n, n) or np.any(S != S.T):
        raise ValueError("binary_cholesky needs a symmetric matrix")
    work = S.copy()
    cols = []
    while True:
        d = np.flatnonzero(np.diag(work))
        if d.size == 0:
            break
        l = work[:, d[0]].copy()
        cols.append(l)
        work ^= (l[:, None] & l[None, :])
    pairs = []
    while work.any():
        i = int(np.flatnonzero(work.any(axis=1))[0])
        j = int(np.flatnonzero(work[i])[0])
        u = work[:, i].copy()
        v = work[:, j].copy()
        pairs.append((u, v))
        work ^= (u[:, None] & v[None, :]) ^ (v[:, None] & u[None, :])
    s, m = len(cols), len(pairs)

    if m == 0:
        L = np.stack(cols, axis=1) if cols else gf2.zeros(n, 0)
    else:
        # Realize diag(1) (+) J_2m (or J_2m alone) as K K^T using the
        # even-weight subspace of F_2^(2m+1): all-ones is the odd vector,
        # and a symplectic basis of the even vectors hits the J blocks.
        F = gf2.zeros(2 * m, 2 * m + 1)
        for i in range(2 * m):
            F[i, i] = 1
            F[i, 2 * m] = 1
        form = gf2.mul(F, F.T)
        T = _symplectic_basis(form)
        KF = gf2.mul(T, F)
        flat = [c for pair in pairs for c in pair]
        if s:
            W = np.stack([cols.pop()] + flat, axis=1)
            K = np.concatenate([np.ones((1, 2 * m + 1), dtype=np.uint8), KF], axis=0)
        else:
            W = np.stack(flat, axis=1)
            K = KF
        part = gf2.mul(W, K)
        L = np.concatenate([np.stack(cols, axis=1) if cols else gf2.zeros(n, 0), part], axis=1)

    assert np.array_equal(gf2.mul(L, L.T), S)
    expect = s + 2 * m + (1 if (m and s == 0) else 0)
    assert L.shape[1] == expect
    return L


def _symplectic_basis(form: np.ndarray) -> np.ndarray:
    """T with T form T^T hyperbolic ((0,1), (2,3), ...) for a nondegenerate
    alternating form."""
    k = form.shape[0]
    fi = form.astype(np.int64)

    def bracket(u, w):
        return int(u.astype(np.int64) @ fi @ w.astype(np.int64)) & 1

    vecs = [gf2.identity(k)[i] for i in range(k)]
    rows = []
    while vecs:
        u = vecs.pop(0)
        pick = next((t for t, w in enumerate(vecs) if bracket(u, w)), None)
        if pick is None:
            raise ValueError("form is degenerate")
        w = vecs.pop(pick)
        rows.extend([u, w])
        vecs = [
            (v ^ (bracket(v, w) * u) ^ (bracket(v, u) * w)).astype(np.uint8)
            for v in vecs
        ]
    return np.stack(rows).astype(np.uint8)


def symmetric_tensor_decompose(S) -> list:
    """Matrices M_k with  sum_k (M_k (x) M_k^T) tau = S, for symmetric S.

    At most r^2 + 1 terms; the M_k need not be invertible.
    """
    S = gf2.asmat(S)
    n = S.shape[0]
    r = int(round(n**0.5))
    if S.shape != (n, n) or r * r != n or np.any(S != S.T):
        raise ValueError("expected a symmetric r^2 x r^2 matrix")
    tau = gf2.tau_matrix(r)
    gram = gf2.mul(gf2.reshape_blocks(gf2.mul(S, tau)), tau)
    assert np.array_equal(gram, gram.T)
    L = binary_cholesky(gram)
    out = [gf2.unflatten(L[:, k]) for k in range(L.shape[1])]
    acc = gf2.zeros(n, n)
    for M in out:
        acc ^= gf2.kron(M, M.T)
    assert np.array_equal(gf2.mul(acc, tau), S)
    assert len(out) <= r * r + 1
    return out


# ---------------------------------------------------------------------------
# Cross terms D(E_jj, B) and the trick-2 search
# ---------------------------------------------------------------------------

_X1_R3 = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=np.uint8)
_X2_R3 = np.array([[1, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=np.uint8)


@functools.lru_cache(maxsize=None)
def _gl_cached(r: int) -> tuple:
    return tuple(M for M in gf2.enumerate_invertible(r))


@functools.lru_cache(maxsize=None)
def _stabilizer_pairs_r3() -> tuple:
    """All (P, Q, P^-1, Q^-1) with P E00 Q = E00, P row-0-unitriangular and
    Q column-0-unitriangular over GF(2), 576 pairs."""
    gl2 = _gl_cached(2)
    Ps, Qs = [], []
    for bits in range(4):
        p = np.array([(bits >> 0) & 1, (bits >> 1) & 1], dtype=np.uint8)
        for B in gl2:
            P = gf2.identity(3)
            P[0, 1:] = p
            P[1:, 1:] = B
            Ps.append(P)
            Q = gf2.identity(3)
            Q[1:, 0] = p
            Q[1:, 1:] = B
            Qs.append(Q)
    return tuple(
        (P, Q, gf2.invert(P), gf2.invert(Q)) for P in Ps for Q in Qs
    )


def _find_partner(A: np.ndarray, B: np.ndarray, r: int, rng) -> np.ndarray | None:
    """Invertible C with A+C, B+C, A+B+C all invertible, or None."""
    AB = gf2.add(A, B)

    def ok(C):
        return (
            gf2.is_invertible(gf2.add(A, C))
            and gf2.is_invertible(gf2.add(B, C))
            and gf2.is_invertible(gf2.add(AB, C))
        )

    if r <= 4:
        for C in _gl_cached(r):
            if ok(C):
                return C
        return None
    for _ in range(2000):
        C = gf2.random_invertible(rng, r)
        if ok(C):
            return C
    return None


def _transposition(r: int, j: int) -> np.ndarray:
    if j == 0:
        return gf2.identity(r)
    return gf2.perm_matrix([j if k == 0 else 0 if k == j else k for k in range(r)])


def _cross_e00(r: int, B: np.ndarray, rng) -> list:
    """Invertible A_i with sum_i A_i (x) A_i^T = E_00 (x) B^T + B (x) E_00.

    Four terms via a common partner C of E_00 and B; the one r=3 orbit
    without such a partner falls back to the precomputed seven-term
    certificate, reached by normalizing B inside the stabilizer of E_00.
    Multiplying both sides by tau on the right turns the same list into a
    certificate for the tau-carrying cross value.
    """
    e00 = _unit(r, 0, 0)
    Bt = B.copy()
    if Bt[0, 0]:
        Bt = gf2.add(Bt, e00)
    if not Bt.any():
        return []

    C = _find_partner(e00, Bt, r, rng)
    if C is not None:
        return [gf2.add(e00, C), gf2.add(Bt, C), gf2.add(gf2.add(e00, Bt), C), C]
    if r != 3:
        raise RuntimeError("no trick-2 partner found")
    for P, Q, Pi, Qi in _stabilizer_pairs_r3():
        NF = gf2.mulv(P, Bt, Q)
        if np.array_equal(NF, _X1_R3) or np.array_equal(NF, _X2_R3):
            return [
                gf2.mulv(Pi, np.array(Fm, dtype=np.uint8), Qi)
                for Fm in EXCEPTIONAL_CROSS_R3
            ]
    raise RuntimeError("exceptional cross term did not normalize")


def _cross_term(r: int, j: int, B: np.ndarray, rng) -> list:
    """Invertible A_i with sum_i A_i (x) A_i^T = E_jj (x) B^T + B (x) E_jj."""
    if j == 0:
        return _cross_e00(r, B, rng)
    T = _transposition(r, j)
    return [gf2.mulv(T, M, T) for M in _cross_e00(r, gf2.mulv(T, B, T), rng)]


# ---------------------------------------------------------------------------
# Symmetric-coupling decompositions
# ---------------------------------------------------------------------------


def invertible_symmetric_decompose(S, seed: int = 0) -> SymTensorSum:
    """Invertible A_i with  sum_i (A_i (x) A_i^T) tau = S for symmetric S.

    Weight at most r^2 + 5r + 2 for r >= 4 and r^2 + 8r + 2 = 35 for r = 3
    (one cross-term orbit at r = 3 needs seven terms instead of four).
    """
    S = gf2.asmat(S)
    n = S.shape[0]
    r = int(round(n**0.5))
    if S.shape != (n, n) or r * r != n or np.any(S != S.T):
        raise ValueError("expected a symmetric r^2 x r^2 matrix")
    if not S.any():
        return SymTensorSum(r, (), tau=True)
    rng = np.random.default_rng(seed)

    RB = gf2.reshape_blocks(gf2.mul(S, gf2.tau_matrix(r)))
    if gf2.rank(RB) == 1:
        i = next(k for k in range(n) if RB[k].any())
        A = gf2.unflatten(RB[i, :]).T
        if gf2.is_invertible(A) and np.array_equal(_sym_square(A), S):
            return SymTensorSum(r, (A,), tau=True)

    heads = symmetric_tensor_decompose(S)
    terms = []
    e = [0] * r
    bs = [gf2.zeros(r, r) for _ in range(r)]
    for M in heads:
        Dm = diagonal_complement(M)
        Am = gf2.add(M, Dm)
        terms.append(Am)
        d = np.diag(Dm)
        for j in range(r):
            if not d[j]:
                continue
            e[j] ^= 1
            contrib = Am.copy()
            for k in range(j + 1, r):
                if d[k]:
                    contrib ^= _unit(r, k, k)
            bs[j] ^= contrib

    sigma = canonical_cycle(r)
    for j in range(r):
        if e[j]:
            terms.append(gf2.add(_unit(r, j, j), sigma))
            bs[j] ^= sigma
    if sum(e) % 2:
        terms.append(sigma)
    for j in range(r):
        terms.extend(_cross_term(r, j, bs[j], rng))

    out = SymTensorSum(r, tuple(terms), tau=True)
    assert np.array_equal(out.reconstruct(), S)
    bound = r * r + 8 * r + 2 if r == 3 else r * r + 5 * r + 2
    assert out.weight <= bound, (out.weight, bound)
    return out


def xi_decompose(D, seed: int = 0) -> SymTensorSum:
    """Invertible A_i with  sum_i A_i (x) A_i^T = D  for diagonal D whose
    coefficient matrix gamma[i,j] = D[(i,j),(i,j)] is symmetric.

    Weight at most 5r + 1 for r >= 4; at r = 3 a precomputed table keeps
    every certificate at weight <= 12 (where the pipeline bound would allow
    more).
    """
    D = gf2.asmat(D)
    n = D.shape[0]
    r = int(round(n**0.5))
    if D.shape != (n, n) or r * r != n or np.any(D != np.diag(np.diag(D))):
        raise ValueError("expected a diagonal r^2 x r^2 matrix")
    gamma = np.diag(D).reshape(r, r).copy()
    if np.any(gamma != gamma.T):
        raise ValueError("diagonal is not grid-transpose symmetric")

    if r == 3:
        key = 0
        for i in range(3):
            for j in range(3):
                if gamma[i, j]:
                    key |= 1 << (i * 3 + j)
        terms = tuple(np.array(M, dtype=np.uint8) for M in DIAGONAL_TABLE_R3[key])
        out = SymTensorSum(3, terms, tau=False)
        assert np.array_equal(out.reconstruct(), D)
        assert out.weight <= 12
        return out

    if np.array_equal(D, gf2.identity(n)):
        return SymTensorSum(r, (gf2.identity(r),), tau=False)

    rng = np.random.default_rng(seed)
    terms = []
    sigma = canonical_cycle(r)
    parity = 0
    for j in range(r):
        cross = gf2.zeros(r, r)
        for k in range(j + 1, r):
            if gamma[j, k]:
                cross ^= _unit(r, k, k)
        if gamma[j, j]:
            terms.append(gf2.add(_unit(r, j, j), sigma))
            cross ^= sigma
            parity ^= 1
        if cross.any():
            terms.extend(_cross_term(r, j, cross, rng))
    if parity:
        terms.append(sigma)

    out = SymTensorSum(r, tuple(terms), tau=False)
    assert np.array_equal(out.reconstruct(), D)
    assert out.weight <= 5 * r + 1
    return out


# ---------------------------------------------------------------------------
# Single-gate couplings
# ---------------------------------------------------------------------------


def single_cnot_cross(r: int, ctrl: tuple, tgt: tuple) -> TensorSum:
    """Kronecker certificate for the one-entry coupling of a single CNOT
    between two code blocks: ctrl = (a, b), tgt = (c, d) as grid points."""
    (a, b), (c, d) = ctrl, tgt
    A = gf2.kron(_unit(r, a, c), _unit(r, b, d))
    out = TensorSum(r, tuple(_split_pair(_unit(r, a, c), _unit(r, b, d))))
    assert np.array_equal(out.reconstruct(), A)
    assert out.weight <= 4
    return out


def single_cnot_in_block(r: int, ctrl: tuple, tgt: tuple) -> TensorSum:
    """Kronecker certificate for I + E_ac (x) E_bd, the addressing matrix of
    one CNOT inside a block.  Three terms when control and target share
    neither grid row nor column, four otherwise."""
    (a, b), (c, d) = ctrl, tgt
    if ctrl == tgt:
        raise ValueError("control and target coincide")
    U = _unit(r, a, c)
    V = _unit(r, b, d)
    I = gf2.identity(r)
    if a != c and b != d:
        terms = [(I, gf2.add(I, V))] + [(gf2.add(I, U), Y) for Y in sum_two_invertibles(V)]
    elif a == c:
        terms = [(X, I) for X in sum_two_invertibles(gf2.add(I, U))]
        terms += [(X, gf2.add(I, V)) for X in sum_two_invertibles(U)]
    else:
        terms = [(I, Y) for Y in sum_two_invertibles(gf2.add(I, V))]
        terms += [(gf2.add(I, U), Y) for Y in sum_two_invertibles(V)]
    out = TensorSum(r, tuple(terms))
    assert np.array_equal(out.reconstruct(), gf2.add(gf2.identity(r * r), gf2.kron(U, V)))
    assert out.weight <= (3 if (a != c and b != d) else 4)
    return out


def single_s(r: int, q: tuple, seed: int = 0) -> SymTensorSum:
    """Certificate for the rank-one coupling of a single S gate at grid
    point q = (i, j): weight <= 6 for r >= 4, <= 9 at r = 3."""
    if r < 3:
        raise ValueError("needs r >= 3")
    i, j = q
    rng = np.random.default_rng(seed)
    E = _unit(r, i, j)
    X1, X2 = sum_two_invertibles(E)
    terms = [X1, X2]
    # remaining cross value D(E_ij, X1), pushed to the (0,0) spot by row and
    # column transpositions
    P = _transposition(r, i)
    Q = _transposition(r, j)
    terms.extend(
        gf2.mulv(P, M, Q) for M in _cross_e00(r, gf2.mulv(P, X1, Q), rng)
    )

    out = SymTensorSum(r, tuple(terms), tau=True)
    want = gf2.zeros(r * r, r * r)
    want[i * r + j, i * r + j] = 1
    assert np.array_equal(out.reconstruct(), want)
    assert out.weight <= (9 if r == 3 else 6)
    return out


def single_cz(r: int, q1: tuple, q2: tuple) -> SymTensorSum:
    """Certificate for the two-entry coupling of one CZ between distinct
    grid points; always exactly four terms."""
    if r < 3:
        raise ValueError("needs r >= 3")
    if q1 == q2:
        raise ValueError("CZ endpoints coincide")
    (a, b), (c, d) = q1, q2
    # Route both spots strictly below the diagonal by permutations, where
    # the identity is a valid trick-2 partner.
    pi = _route(r, a, c, high=True)
    rhoinv = _route(r, b, d, high=False)
    rho = gf2.perm_inverse(rhoinv)
    P = gf2.perm_matrix(pi)
    Q = gf2.perm_matrix(rho)
    A1 = gf2.mulv(P, _unit(r, a, d), Q)
    A2 = gf2.mulv(P, _unit(r, c, b), Q)
    assert not np.triu(A1).any() and not np.triu(A2).any()
    I = gf2.identity(r)
    base = [gf2.add(A1, I), gf2.add(A2, I), gf2.add(gf2.add(A1, A2), I), I]
    Pi, Qi = P.T, Q.T
    terms = [gf2.mulv(Pi, M, Qi) for M in base]

    out = SymTensorSum(r, tuple(terms), tau=True)
    want = gf2.zeros(r * r, r * r)
    want[a * r + b, c * r + d] = 1
    want[c * r + d, a * r + b] = 1
    assert np.array_equal(out.reconstruct(), want)
    assert out.weight == 4
    return out


def _route(r: int, x: int, y: int, high: bool) -> list:
    """A permutation (as images) sending x, y to the two extreme indices:
    r-1, r-2 when ``high``, else 0, 1.  x == y allowed (single image)."""
    if high:
        targets = [r - 1, r - 2]
    else:
        targets = [0, 1]
    images = [-1] * r
    images[x] = targets[0]
    if y != x:
        images[y] = targets[1]
    free = [t for t in range(r) if t not in set(images)]
    for k in range(r):
        if images[k] == -1:
            images[k] = free.pop(0)
    return images

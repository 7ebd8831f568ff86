"""
Binary symplectic representation of Clifford operators.

Paulis are row vectors (u | v) over GF(2) and Cliffords act on them from
the right, so a time-ordered gate list [g_1, ..., g_T] has net matrix
mat(g_1) * ... * mat(g_T), and operator products map to matrix products in
reversed order.  The factorizations at the bottom of the module rewrite an
arbitrary symplectic matrix into diagonal / CNOT factors, the workhorse
being the fact that every square matrix over a field is a product of two
symmetric ones (proved via the rational canonical form).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2


@dataclass(frozen=True, eq=False)
class SymplecticMatrix:
    m: int
    mat: np.ndarray

    def blocks(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        m = self.m
        return (self.mat[:m, :m], self.mat[:m, m:],
                self.mat[m:, :m], self.mat[m:, m:])

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        return SymplecticMatrix(self.m, gf2.mul(self.mat, other.mat))


def omega(m: int) -> np.ndarray:
    Z = gf2.zeros(m, m)
    I = gf2.identity(m)
    return np.block([[Z, I], [I, Z]]).astype(np.uint8)


def is_symplectic(chi) -> bool:
    mat = chi.mat if isinstance(chi, SymplecticMatrix) else gf2.asmat(chi)
    m = mat.shape[0] // 2
    return np.array_equal(gf2.mul(gf2.mul(mat.T, omega(m)), mat), omega(m))


def identity(m: int) -> SymplecticMatrix:
    return SymplecticMatrix(m, gf2.identity(2 * m))


def from_cnot(C) -> SymplecticMatrix:
    """CNOT circuit acting as x -> xC on the X side."""
    C = gf2.asmat(C)
    m = C.shape[0]
    out = gf2.zeros(2 * m, 2 * m)
    out[:m, :m] = C
    out[m:, m:] = gf2.invert(C).T
    return SymplecticMatrix(m, out)


def from_diagonal(B) -> SymplecticMatrix:
    """Z-diagonal circuit: S_i on diagonal support, CZ_ij off-diagonal."""
    B = gf2.asmat(B)
    if not np.array_equal(B, B.T):
        raise ValueError("diagonal Cliffords need a symmetric coupling matrix")
    m = B.shape[0]
    out = gf2.identity(2 * m)
    out[:m, m:] = B
    return SymplecticMatrix(m, out)


def from_x_diagonal(B) -> SymplecticMatrix:
    B = gf2.asmat(B)
    if not np.array_equal(B, B.T):
        raise ValueError("diagonal Cliffords need a symmetric coupling matrix")
    m = B.shape[0]
    out = gf2.identity(2 * m)
    out[m:, :m] = B
    return SymplecticMatrix(m, out)


def from_hadamard(v) -> SymplecticMatrix:
    """Hadamard on the support of v, swapping X and Z there."""
    v = np.asarray(v, dtype=np.uint8).ravel() & 1
    m = v.shape[0]
    keep = np.diag((v ^ 1).astype(np.uint8))
    swap = np.diag(v)
    return SymplecticMatrix(
        m, np.block([[keep, swap], [swap, keep]]).astype(np.uint8))


def pauli_image(chi: SymplecticMatrix, p) -> np.ndarray:
    p = np.asarray(p, dtype=np.uint8) & 1
    if p.ndim == 1:
        return gf2.mul(p[None, :], chi.mat)[0]
    return gf2.mul(p, chi.mat)


def symplectic_form(p, q) -> int:
    p = np.asarray(p, dtype=np.uint8).ravel()
    q = np.asarray(q, dtype=np.uint8).ravel()
    m = p.shape[0] // 2
    return int(p[:m] @ q[m:] + p[m:] @ q[:m]) & 1


# ---------------------------------------------------------------------------
# GF(2)[x] scalars as int bitmasks (bit k = coefficient of x^k)
# ---------------------------------------------------------------------------


def _pdeg(p: int) -> int:
    return p.bit_length() - 1


def _pmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _pdivmod(p: int, q: int) -> tuple[int, int]:
    dq = _pdeg(q)
    quo = 0
    while _pdeg(p) >= dq:
        s = _pdeg(p) - dq
        quo |= 1 << s
        p ^= q << s
    return quo, p


def _smith(A: list[list[int]]) -> tuple[list[int], list[list[int]]]:
    """Smith normal form of a polynomial matrix over GF(2)[x].

    Diagonalizes A in place by row and column operations and returns the
    diagonal plus the inverse of the accumulated row transform, so that
    A_original = W * diag * (column transform).  Only W is tracked; the
    column transform is never needed.
    """
    n = len(A)
    W = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_add(dst: int, src: int, q: int) -> None:
        # A[dst] += q * A[src]; undone on W by the inverse column op
        Ad, As = A[dst], A[src]
        for j in range(n):
            if As[j]:
                Ad[j] ^= _pmul(q, As[j])
        for i in range(n):
            if W[i][dst]:
                W[i][src] ^= _pmul(q, W[i][dst])

    for t in range(n):
        while True:
            pivot = None
            pdeg = -1
            for i in range(t, n):
                for j in range(t, n):
                    e = A[i][j]
                    if e and (pivot is None or _pdeg(e) < pdeg):
                        pivot, pdeg = (i, j), _pdeg(e)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                A[t], A[pi] = A[pi], A[t]
                for row in W:
                    row[t], row[pi] = row[pi], row[t]
            if pj != t:
                for row in A:
                    row[t], row[pj] = row[pj], row[t]
            dirty = False
            for i in range(t + 1, n):
                if A[i][t]:
                    q, _ = _pdivmod(A[i][t], A[t][t])
                    row_add(i, t, q)
                    dirty |= bool(A[i][t])
            for j in range(t + 1, n):
                if A[t][j]:
                    q, _ = _pdivmod(A[t][j], A[t][t])
                    for row in A:
                        if row[t]:
                            row[j] ^= _pmul(q, row[t])
                    dirty |= bool(A[t][j])
            if dirty:
                continue
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if A[i][j] and _pdivmod(A[i][j], A[t][t])[1]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, 1)
    return [A[i][i] for i in range(n)], W


def rational_canonical_form(M) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Similarity M = S Lambda S^{-1} with Lambda block companion.

    Returns (S, Lambda, invariant factors as int bitmasks) with the
    factors in ascending divisibility order f_1 | f_2 | ...
    """
    M = gf2.asmat(M)
    n = M.shape[0]
    # xI - M entry-wise: diagonal gets the polynomial x (= bit 1)
    A = [[(2 if i == j else 0) ^ int(M[i, j]) for j in range(n)]
         for i in range(n)]
    diag, W = _smith(A)
    factors = [d for d in diag if _pdeg(d) >= 1]
    S_cols = []
    Lam = gf2.zeros(n, n)
    pos = 0
    for idx, d in enumerate(diag):
        deg = _pdeg(d)
        if deg < 1:
            continue
        # generator: column idx of W evaluated at M (Horner)
        v = np.zeros(n, dtype=np.uint8)
        for k in range(max(_pdeg(W[i][idx]) for i in range(n)), -1, -1):
            v = gf2.mul(M, v[:, None])[:, 0]
            v ^= np.array([(W[i][idx] >> k) & 1 for i in range(n)],
                          dtype=np.uint8)
        for j in range(deg):
            S_cols.append(v)
            if j + 1 < deg:
                Lam[pos + j + 1, pos + j] = 1
                v = gf2.mul(M, v[:, None])[:, 0]
        for j in range(deg):
            Lam[pos + j, pos + deg - 1] = (d >> j) & 1
        pos += deg
    S = np.stack(S_cols, axis=1).astype(np.uint8)
    if pos != n or not gf2.is_invertible(S):
        raise RuntimeError("rational canonical form construction failed")
    return S, Lam, factors


def _companion_symmetric_pair(f: int) -> tuple[np.ndarray, np.ndarray]:
    """Companion(f) = U * V with U, V symmetric and V invertible."""
    d = _pdeg(f)
    c = [(f >> k) & 1 for k in range(d + 1)]
    U = gf2.zeros(d, d)
    U[0, 0] = c[0]
    for i in range(1, d):
        for j in range(1, d):
            if i + j <= d:
                U[i, j] = c[i + j]
    Hk = gf2.zeros(d, d)
    for i in range(d):
        for j in range(d):
            if i + j + 1 <= d:
                Hk[i, j] = c[i + j + 1]
    return U, gf2.invert(Hk)


def product_of_two_symmetrics(M) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric S1, S2 with S1 S2 = M; M may be singular."""
    M = gf2.asmat(M)
    if np.array_equal(M, M.T):
        return M.copy(), gf2.identity(M.shape[0])
    S, _, factors = rational_canonical_form(M)
    n = M.shape[0]
    U = gf2.zeros(n, n)
    V = gf2.zeros(n, n)
    pos = 0
    for f in factors:
        d = _pdeg(f)
        Uf, Vf = _companion_symmetric_pair(f)
        U[pos:pos + d, pos:pos + d] = Uf
        V[pos:pos + d, pos:pos + d] = Vf
        pos += d
    Sinv = gf2.invert(S)
    S1 = gf2.mul(gf2.mul(S, U), S.T)
    S2 = gf2.mul(gf2.mul(Sinv.T, V), Sinv)
    return S1, S2


# ---------------------------------------------------------------------------
# Clifford factorizations
# ---------------------------------------------------------------------------


def make_top_left_invertible(chi: SymplecticMatrix,
                             cz_pairing: bool = False) -> SymplecticMatrix:
    """Depth-1 Z-diagonal zeta with zeta*chi having invertible A block.

    The coupling matrix is a diagonal picked on rows where the C block
    completes the column space of A; with cz_pairing the S gates are
    merged into CZ gates pairwise where possible.
    """
    A, B, C, D = chi.blocks()
    m = chi.m
    if gf2.is_invertible(A):
        return identity(m)
    ker = gf2.kernel(A)  # rows v with A v^T = 0
    C_R = gf2.mul(C, ker.T)
    _, pivot_rows = gf2.rref(C_R.T)
    K = gf2.zeros(m, m)
    rows = list(pivot_rows)
    if cz_pairing:
        for a, b in zip(rows[0::2], rows[1::2]):
            K[a, b] = K[b, a] = 1
        if len(rows) % 2:
            K[rows[-1], rows[-1]] = 1
    else:
        for i in rows:
            K[i, i] = 1
    zeta = from_diagonal(K)
    if not gf2.is_invertible((zeta @ chi).blocks()[0]):
        raise RuntimeError("first-quadrant repair failed")
    return zeta


def xzxz_factor(chi: SymplecticMatrix):
    """Symmetric (L, M, N, P) with X(L) Z(M) X(N) Z(P) = chi; needs A invertible."""
    A, B, C, D = chi.blocks()
    Ainv = gf2.invert(A)
    M, N = product_of_two_symmetrics(gf2.add(A, gf2.identity(chi.m)))
    L = gf2.mul(gf2.add(C, N), Ainv)
    P = gf2.mul(Ainv, gf2.add(B, M))
    return L, M, N, P


def clifford_decompose_1(chi: SymplecticMatrix):
    """Five diagonal factors (DZ, DX, DZ', DX', DZ1), DZ1 depth-1.

    Named in operator order, so the matrix product runs reversed:
    mat(DZ1) mat(DX') mat(DZ') mat(DX) mat(DZ) = mat(chi).
    """
    zeta = make_top_left_invertible(chi)
    L, M, N, P = xzxz_factor(zeta @ chi)
    return (from_diagonal(P), from_x_diagonal(N), from_diagonal(M),
            from_x_diagonal(L), zeta)


def clifford_decompose_2(chi: SymplecticMatrix):
    """(DZ, CX, DX, DZ1) in operator order; matrix product reversed."""
    zeta = make_top_left_invertible(chi)
    A, B, C, D = (zeta @ chi).blocks()
    Ainv = gf2.invert(A)
    E = gf2.mul(C, Ainv)
    G = gf2.mul(Ainv, B)
    return (from_diagonal(G), from_cnot(A), from_x_diagonal(E), zeta)


def random_symmetric(rng, m: int) -> np.ndarray:
    B = gf2.random_matrix(rng, m, m)
    S = gf2.add(B, B.T)
    S[np.diag_indices(m)] = rng.integers(0, 2, size=m)
    return S


def random_symplectic(rng, m: int, length: int | None = None
                      ) -> SymplecticMatrix:
    """Product of random generator factors; not Haar-uniform."""
    if length is None:
        length = 2 * m + int(rng.integers(0, m + 1))
    chi = identity(m)
    for _ in range(length):
        kind = int(rng.integers(0, 4))
        if kind == 0:
            chi = chi @ from_cnot(gf2.random_invertible(rng, m))
        elif kind == 1:
            chi = chi @ from_diagonal(random_symmetric(rng, m))
        elif kind == 2:
            chi = chi @ from_x_diagonal(random_symmetric(rng, m))
        else:
            chi = chi @ from_hadamard(rng.integers(0, 2, size=m))
    return chi

"""
Dense linear algebra over GF(2) on numpy uint8 arrays.

All matrices are 2-D uint8 arrays with entries in {0, 1}; all arithmetic is
mod 2.  Permutations are int arrays in one-line notation (images), with the
matrix convention ``perm_matrix(s)[i, j] = 1  iff  i = s[j]``.
"""

from __future__ import annotations

import numpy as np


def asmat(M) -> np.ndarray:
    """Coerce to a 2-D uint8 matrix reduced mod 2."""
    A = np.atleast_2d(np.asarray(M, dtype=np.uint8)) & 1
    return A


def zeros(m: int, n: int) -> np.ndarray:
    return np.zeros((m, n), dtype=np.uint8)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def add(A, B) -> np.ndarray:
    return (asmat(A) ^ asmat(B)).astype(np.uint8)


def mul(A, B) -> np.ndarray:
    """Matrix product mod 2."""
    A, B = asmat(A), asmat(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch: {A.shape} @ {B.shape}")
    return (A.astype(np.uint32) @ B.astype(np.uint32) & 1).astype(np.uint8)


def mulv(*Ms) -> np.ndarray:
    """Product of several matrices mod 2, left to right."""
    out = asmat(Ms[0])
    for M in Ms[1:]:
        out = mul(out, M)
    return out


def kron(A, B) -> np.ndarray:
    return (np.kron(asmat(A), asmat(B)) & 1).astype(np.uint8)


def transpose(A) -> np.ndarray:
    return asmat(A).T.copy()


def row_echelon(M, ncols: int | None = None):
    """Row echelon form via Gaussian elimination (leftmost pivot, first row).

    Args:
        M: binary matrix.
        ncols: restrict pivot search to the first `ncols` columns (row
            operations still apply to the full width).

    Returns:
        (R, pivot_cols): echelon form and the list of pivot column indices.
    """
    R = asmat(M).copy()
    m, n = R.shape
    if ncols is None:
        ncols = n
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == m:
            break
        hit = np.nonzero(R[row:, col])[0]
        if hit.size == 0:
            continue
        piv = row + hit[0]
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        below = np.nonzero(R[row + 1 :, col])[0]
        if below.size:
            R[row + 1 + below] ^= R[row]
        pivots.append(col)
        row += 1
    return R, pivots


def rref(M, ncols: int | None = None):
    """Reduced row echelon form (entries above pivots also cleared)."""
    R, pivots = row_echelon(M, ncols)
    for i in reversed(range(len(pivots))):
        col = pivots[i]
        above = np.nonzero(R[:i, col])[0]
        if above.size:
            R[above] ^= R[i]
    return R, pivots


def rank(M) -> int:
    _, pivots = row_echelon(M)
    return len(pivots)


def is_invertible(M) -> bool:
    M = asmat(M)
    return M.shape[0] == M.shape[1] and rank(M) == M.shape[0]


def invert(M) -> np.ndarray:
    """Inverse over GF(2); raises ValueError on singular input."""
    M = asmat(M)
    n = M.shape[0]
    if M.shape[0] != M.shape[1]:
        raise ValueError("invert requires a square matrix")
    aug = np.concatenate([M, identity(n)], axis=1)
    R, pivots = rref(aug, ncols=n)
    if len(pivots) != n:
        raise ValueError("singular matrix over GF(2)")
    return R[:, n:].copy()


def solve(A, b) -> np.ndarray:
    """Any solution x of A x = b (mod 2); raises ValueError if inconsistent.

    `b` may be a vector or a matrix of stacked column right-hand sides.
    """
    A = asmat(A)
    b = np.asarray(b, dtype=np.uint8) & 1
    vec = b.ndim == 1
    B = b.reshape(-1, 1) if vec else b
    if A.shape[0] != B.shape[0]:
        raise ValueError("shape mismatch in solve")
    m, n = A.shape
    R, pivots = rref(np.concatenate([A, B], axis=1), ncols=n)
    X = zeros(n, B.shape[1])
    for i, col in enumerate(pivots):
        X[col] = R[i, n:]
    # Rows of R beyond the pivot count must have zero right-hand side.
    if len(pivots) < m and R[len(pivots) :, n:].any():
        raise ValueError("inconsistent linear system over GF(2)")
    return X[:, 0] if vec else X


def solve_left(A, B) -> np.ndarray:
    """Any X with X A = B (mod 2); raises ValueError if inconsistent."""
    return solve(asmat(A).T, asmat(B).T).T.copy()


def in_rowspace(A, v) -> bool:
    """True iff every row of v lies in the row space of A."""
    try:
        solve_left(A, asmat(v))
        return True
    except ValueError:
        return False


def kernel(M) -> np.ndarray:
    """Basis (stacked as rows) of the right null space {x : M x = 0}."""
    M = asmat(M)
    m, n = M.shape
    R, pivots = rref(M)
    free = [c for c in range(n) if c not in pivots]
    K = zeros(len(free), n)
    for k, fc in enumerate(free):
        K[k, fc] = 1
        for i, pc in enumerate(pivots):
            K[k, pc] = R[i, fc]
    return K


def plu(M):
    """PLU decomposition of an invertible matrix: perm_matrix(p) @ L @ U = M.

    Returns:
        (p, L, U): permutation images p, unit lower triangular L, invertible
        upper triangular U.
    """
    M = asmat(M)
    n = M.shape[0]
    if M.shape[0] != M.shape[1]:
        raise ValueError("plu requires a square matrix")
    U = M.copy()
    L = identity(n)
    p = np.arange(n)
    for col in range(n):
        hit = np.nonzero(U[col:, col])[0]
        if hit.size == 0:
            raise ValueError("singular matrix over GF(2)")
        piv = col + hit[0]
        if piv != col:
            U[[col, piv]] = U[[piv, col]]
            p[[col, piv]] = p[[piv, col]]
            if col > 0:
                L[[col, piv], :col] = L[[piv, col], :col]
        below = np.nonzero(U[col + 1 :, col])[0]
        for i in col + 1 + below:
            L[i, col] = 1
            U[i] ^= U[col]
    return p, L, U


def random_matrix(rng, m: int, n: int) -> np.ndarray:
    return rng.integers(0, 2, size=(m, n), dtype=np.uint8)


def random_invertible(rng, n: int) -> np.ndarray:
    """Uniform-ish invertible matrix by rejection (density > 1/4)."""
    while True:
        M = random_matrix(rng, n, n)
        if is_invertible(M):
            return M


def enumerate_invertible(n: int):
    """Yield every element of GL_n(2) (feasible for n <= 4)."""
    for bits in range(1 << (n * n)):
        M = np.array(
            [(bits >> k) & 1 for k in range(n * n)], dtype=np.uint8
        ).reshape(n, n)
        if is_invertible(M):
            yield M


# ---------------------------------------------------------------------------
# Permutations (one-line notation: images[j] = sigma(j))
# ---------------------------------------------------------------------------


def perm_matrix(images) -> np.ndarray:
    images = np.asarray(images, dtype=np.int64)
    n = images.size
    M = zeros(n, n)
    M[images, np.arange(n)] = 1
    return M


def perm_from_matrix(M) -> np.ndarray:
    """Inverse of perm_matrix; raises ValueError for non-permutation input."""
    M = asmat(M)
    n = M.shape[0]
    if M.shape[0] != M.shape[1] or (M.sum(axis=0) != 1).any() or (M.sum(axis=1) != 1).any():
        raise ValueError("not a permutation matrix")
    return np.nonzero(M.T)[1].copy()


def perm_identity(n: int) -> np.ndarray:
    return np.arange(n)


def perm_inverse(images) -> np.ndarray:
    images = np.asarray(images, dtype=np.int64)
    inv = np.empty_like(images)
    inv[images] = np.arange(images.size)
    return inv


def perm_compose(s1, s2) -> np.ndarray:
    """Composition s1 o s2 (apply s2 first); matches perm_matrix products."""
    s1 = np.asarray(s1, dtype=np.int64)
    s2 = np.asarray(s2, dtype=np.int64)
    return s1[s2]


def tau_perm(a: int) -> np.ndarray:
    """The grid-transpose involution on a*a points: (i, j) -> (j, i)."""
    idx = np.arange(a * a)
    return (idx % a) * a + idx // a


def tau_matrix(a: int) -> np.ndarray:
    return perm_matrix(tau_perm(a))


# ---------------------------------------------------------------------------
# Flatten / reshape on square matrices
# ---------------------------------------------------------------------------


def flatten(M) -> np.ndarray:
    """Row vector of length r^2 concatenating the rows of an r x r matrix."""
    M = asmat(M)
    if M.shape[0] != M.shape[1]:
        raise ValueError("flatten requires a square matrix")
    return M.reshape(1, -1).copy()


def unflatten(v) -> np.ndarray:
    """Inverse of flatten: length-r^2 row vector back to an r x r matrix."""
    v = np.asarray(v, dtype=np.uint8).reshape(-1) & 1
    r = int(round(v.size ** 0.5))
    if r * r != v.size:
        raise ValueError("length is not a perfect square")
    return v.reshape(r, r).copy()


def reshape_blocks(M) -> np.ndarray:
    """The involution re() on r^2 x r^2 matrices.

    Defined entrywise by re(M)[(i1,i2),(j1,j2)] = M[(i1,j1),(i2,j2)] for the
    row-major pair indexing (a,b) -> a*r + b.
    """
    M = asmat(M)
    n = M.shape[0]
    r = int(round(n ** 0.5))
    if M.shape != (n, n) or r * r != n:
        raise ValueError("reshape_blocks requires an r^2 x r^2 matrix")
    return M.reshape(r, r, r, r).transpose(0, 2, 1, 3).reshape(n, n).copy()

"""
Classical simplex codes with cyclic weight-3 parity checks.

The (2^r - 1, r, 2^{r-1}) simplex code is constructed from an overcomplete
cyclic parity check matrix whose rows are the cyclic shifts of a three-term
polynomial h(x) = 1 + x^a + x^b chosen so that gcd(h, x^{n}-1) is primitive
of degree r.  The generator basis is kept in reduced row echelon form, which
exposes a pivot matrix P with P G^T = I_r.  Code automorphisms correspond
one-to-one to GL_r(2) via g G = G sigma.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sympy import factorint

from . import gf2

# ---------------------------------------------------------------------------
# GF(2)[x] arithmetic on int bitmasks (bit k = coefficient of x^k)
# ---------------------------------------------------------------------------


def _poly_deg(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(p: int, m: int) -> int:
    dm = _poly_deg(m)
    while _poly_deg(p) >= dm:
        p ^= m << (_poly_deg(p) - dm)
    return p


def _poly_gcd(p: int, q: int) -> int:
    while q:
        p, q = q, _poly_mod(p, q)
    return p


def _poly_mulmod(p: int, q: int, m: int) -> int:
    out = 0
    while q:
        if q & 1:
            out ^= p
        q >>= 1
        p = _poly_mod(p << 1, m)
    return out


def _x_pow_mod(e: int, m: int) -> int:
    """x^e mod m(x) by square and multiply (e may be a huge integer)."""
    result = 1
    base = _poly_mod(2, m)  # the polynomial x
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m)
        base = _poly_mulmod(base, base, m)
        e >>= 1
    return result


def _is_primitive(m: int, r: int, order_primes) -> bool:
    """True iff deg m = r and the order of x modulo m(x) is 2^r - 1.

    Requiring the full multiplicative order forces irreducibility, so no
    separate factorization of m is needed.  order_primes holds the prime
    factors of 2^r - 1.
    """
    if _poly_deg(m) != r or not (m & 1):
        return False
    order = (1 << r) - 1
    if _x_pow_mod(order, m) != 1:
        return False
    for p in order_primes:
        if _x_pow_mod(order // p, m) == 1:
            return False
    return True


def find_check_polynomial(r: int) -> tuple[int, int]:
    """Exponents (a, b) of a weight-3 check polynomial h = 1 + x^a + x^b.

    Scans pairs in lexicographic order and returns the first h whose gcd
    with x^{2^r-1} - 1 is primitive of degree r.  Deterministic, since the
    choice fixes all downstream qubit indexing.
    """
    if not 3 <= r < 500:
        raise ValueError("r must satisfy 3 <= r < 500")
    n = (1 << r) - 1
    xn1 = (1 << n) | 1  # x^n - 1
    order_primes = list(factorint(n))
    for a in range(1, n - 1):
        for b in range(a + 1, n):
            h = 1 | (1 << a) | (1 << b)
            g = _poly_gcd(xn1, h)
            if _poly_deg(g) == r and _is_primitive(g, r, order_primes):
                return a, b
    raise RuntimeError(f"no valid three-term check polynomial for r={r}")


# ---------------------------------------------------------------------------
# Code construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimplexCode:
    r: int
    n: int
    a: int
    b: int
    H: np.ndarray  # n x n overcomplete cyclic parity checks, weight 3
    G: np.ndarray  # r x n generator in reduced row echelon form
    P: np.ndarray  # r x n pivot indicators, P G^T = I_r
    pivots: tuple[int, ...]
    _col_index: dict = field(repr=False, hash=False, compare=False, default=None)

    def column_index(self) -> dict:
        """Map from generator column (as bytes) to its column position."""
        if self._col_index is None:
            idx = {self.G[:, j].tobytes(): j for j in range(self.n)}
            object.__setattr__(self, "_col_index", idx)
        return self._col_index


def build_simplex(r: int) -> SimplexCode:
    a, b = find_check_polynomial(r)
    n = (1 << r) - 1
    H = gf2.zeros(n, n)
    rows = np.arange(n)
    for off in (0, a, b):
        H[rows, (rows + off) % n] = 1
    K = gf2.kernel(H)
    G, pivots = gf2.rref(K)
    G = G[: len(pivots)]
    if len(pivots) != r:
        raise RuntimeError("kernel of H does not have dimension r")
    P = gf2.zeros(r, n)
    for i, c in enumerate(pivots):
        P[i, c] = 1
    return SimplexCode(r=r, n=n, a=a, b=b, H=H, G=G, P=P, pivots=tuple(pivots))


def aut_permutation(code: SimplexCode, g) -> np.ndarray:
    """The unique bit permutation sigma with g G = G sigma.

    The columns of G are distinct nonzero vectors of F_2^r, so sigma is
    found by matching each column's image under g.  The map g -> sigma is a
    group homomorphism for perm_compose.
    """
    g = gf2.asmat(g)
    if not gf2.is_invertible(g):
        raise ValueError("automorphism source matrix must be invertible")
    idx = code.column_index()
    gG = gf2.mul(g, code.G)
    images = np.empty(code.n, dtype=np.int64)
    for j in range(code.n):
        images[j] = idx[gG[:, j].tobytes()]
    return images


def dual_action(code: SimplexCode, sigma) -> np.ndarray:
    """Some h with H sigma = h H (row-space preservation of the checks).

    H is overcomplete, so h is not unique and the particular solution
    returned here need not be invertible.
    """
    HS = gf2.mul(code.H, gf2.perm_matrix(sigma))
    return gf2.solve_left(code.H, HS)

#!/usr/bin/env python3
"""Search for the small hard-coded r=3 decomposition tables.

Two artifacts, both written into src/shyps/_fixtures.py:

  * a seven-term decomposition of the one exceptional cross term at r=3,
    i.e. invertible A_1..A_7 with

        sum_i A_i (x) A_i^T  =  E00 (x) X1^T + X1 (x) E00

    where X1 is the 3x3 transposition [[0,1,0],[1,0,0],[0,0,1]].  No
    four-term certificate exists for this value (the script proves that by
    exhausting all sums of <= 6 terms), which is why it is special-cased.

  * minimal invertible-square decompositions for all 64 diagonal matrices D
    (9x9) whose coefficient matrix gamma[i,j] = D[(i,j),(i,j)] is symmetric:

        sum_i A_i (x) A_i^T  =  D,   A_i in GL_3(2).

The search space is the 168-element set {A (x) A^T : A in GL_3(2)} combined
by XOR; meet-in-the-middle over subset sizes <= 3 makes exhaustion up to
weight 6 cheap, and one weight-7 pass handles the exceptional value.

Runtime is a couple of minutes; the output is committed, so this only needs
rerunning if the table format changes.
"""

import itertools
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from shyps import gf2  # noqa: E402

R = 3
N2 = R * R * R * R  # 81 bits per packed value


def pack(M: np.ndarray) -> int:
    bits = 0
    flat = M.reshape(-1)
    for k in range(flat.size):
        if flat[k]:
            bits |= 1 << k
    return bits


def main() -> None:
    t0 = time.time()
    gl3 = [M for M in gf2.enumerate_invertible(R)]
    assert len(gl3) == 168
    vals = [pack(gf2.kron(A, A.T)) for A in gl3]
    assert len(set(vals)) == len(vals), "A (x) A^T should be injective on GL_3"

    n = len(vals)
    # Subset-XOR dictionaries by exact size (value -> index tuple, first wins).
    d0 = {0: ()}
    d1 = {}
    for i in range(n):
        d1.setdefault(vals[i], (i,))
    d2 = {}
    for i, j in itertools.combinations(range(n), 2):
        d2.setdefault(vals[i] ^ vals[j], (i, j))
    d3 = {}
    for i, j, k in itertools.combinations(range(n), 3):
        d3.setdefault(vals[i] ^ vals[j] ^ vals[k], (i, j, k))
    by_size = [d0, d1, d2, d3]
    print(f"[{time.time()-t0:6.1f}s] dictionaries: {len(d2)} pairs, {len(d3)} triples")

    def search_upto6(target: int):
        """Minimal subset (as index tuple) with XOR == target, weight <= 6."""
        for w in range(0, 7):
            best = None
            for a in range(max(0, w - 3), min(3, w) + 1):
                b = w - a
                if a > b:
                    break
                small, large = by_size[a], by_size[b]
                for x, left in small.items():
                    right = large.get(target ^ x)
                    if right is not None and not set(left) & set(right):
                        cand = tuple(sorted(left + right))
                        if best is None or cand < best:
                            best = cand
                            break  # first hit per split is fine
            if best is not None:
                return best
        return None

    def search_exactly7(target: int):
        """One weight-7 subset with XOR == target (3+4 meet in the middle)."""
        merged = {}
        for d in by_size:
            for x, idxs in d.items():
                merged.setdefault(x, idxs)
        for quad in itertools.combinations(range(n), 4):
            x = vals[quad[0]] ^ vals[quad[1]] ^ vals[quad[2]] ^ vals[quad[3]]
            rest = merged.get(target ^ x)
            if rest is not None and len(rest) == 3 and not set(rest) & set(quad):
                return tuple(sorted(quad + rest))
        return None

    # ---- exceptional cross term -------------------------------------------
    e00 = np.zeros((R, R), dtype=np.uint8)
    e00[0, 0] = 1
    x1 = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=np.uint8)
    target_exc = pack(gf2.add(gf2.kron(e00, x1.T), gf2.kron(x1, e00)))

    assert search_upto6(target_exc) is None, "exceptional value should need 7 terms"
    print(f"[{time.time()-t0:6.1f}s] confirmed: no certificate of weight <= 6")
    exc = search_exactly7(target_exc)
    assert exc is not None, "no weight-7 certificate found"
    acc = 0
    for i in exc:
        acc ^= vals[i]
    assert acc == target_exc
    print(f"[{time.time()-t0:6.1f}s] exceptional cross term: indices {exc}")

    # ---- the 64-entry diagonal table --------------------------------------
    # Basis of the symmetric-coefficient diagonal space: three single-spot
    # elements gamma = E_jj and three pair elements gamma = E_ij + E_ji.
    def diag_target(gamma: np.ndarray) -> int:
        D = np.zeros((R * R, R * R), dtype=np.uint8)
        for i in range(R):
            for j in range(R):
                if gamma[i, j]:
                    D[i * R + j, i * R + j] = 1
        return pack(D)

    basis_gammas = []
    for j in range(R):
        g = np.zeros((R, R), dtype=np.uint8)
        g[j, j] = 1
        basis_gammas.append(g)
    for i, j in itertools.combinations(range(R), 2):
        g = np.zeros((R, R), dtype=np.uint8)
        g[i, j] = g[j, i] = 1
        basis_gammas.append(g)

    def gamma_of_mask(mask: int) -> np.ndarray:
        g = np.zeros((R, R), dtype=np.uint8)
        for b in range(6):
            if (mask >> b) & 1:
                g = gf2.add(g, basis_gammas[b])
        return g

    targets = {mask: diag_target(gamma_of_mask(mask)) for mask in range(64)}

    # Pass 1: direct search up to weight 6 (some entries genuinely need 7).
    certs = {0: frozenset()}
    for mask in range(1, 64):
        sol = search_upto6(targets[mask])
        if sol is not None:
            certs[mask] = frozenset(sol)
    print(f"[{time.time()-t0:6.1f}s] weight <= 6 certificates: {len(certs)}/64")

    # Pass 2: close under the group law.  XOR of two certificates (duplicate
    # terms cancel) certifies the sum of their gammas; iterate to fixpoint.
    def close(certs):
        changed = True
        while changed:
            changed = False
            known = list(certs.items())
            for m1, c1 in known:
                for m2, c2 in known:
                    m, c = m1 ^ m2, c1 ^ c2
                    if m not in certs or len(c) < len(certs[m]):
                        certs[m] = c
                        changed = True
        return certs

    certs = close(certs)

    # Pass 3: targeted weight-7 searches for anything missing or above 12.
    for mask in range(64):
        if mask not in certs or len(certs[mask]) > 12:
            sol = search_exactly7(targets[mask])
            if sol is not None:
                certs[mask] = frozenset(sol)
                print(f"[{time.time()-t0:6.1f}s] mask {mask}: weight-7 certificate")
    certs = close(certs)

    table = {}
    for mask in range(64):
        assert mask in certs, f"mask {mask}: no certificate found"
        sol = tuple(sorted(certs[mask]))
        acc = 0
        for i in sol:
            acc ^= vals[i]
        assert acc == targets[mask]
        assert len(sol) <= 12, f"mask {mask}: weight {len(sol)} exceeds 12"
        gamma = gamma_of_mask(mask)
        key = 0
        for i in range(R):
            for j in range(R):
                if gamma[i, j]:
                    key |= 1 << (i * R + j)
        table[key] = sol
    worst = max(len(s) for s in table.values())
    print(f"[{time.time()-t0:6.1f}s] diagonal table complete, worst weight {worst}")

    # ---- emit ---------------------------------------------------------------
    def mat_tuple(i: int):
        return tuple(tuple(int(x) for x in row) for row in gl3[i])

    out = Path(__file__).resolve().parent.parent / "src" / "shyps" / "_fixtures.py"
    with out.open("w") as fh:
        fh.write(
            '"""Hard-coded r=3 decomposition tables (see scripts/precompute_fixtures.py).\n'
            "\n"
            "Matrices are 3x3 nested int tuples.  EXCEPTIONAL_CROSS_R3 lists seven\n"
            "invertible A with  sum A (x) A^T = E00 (x) X1^T + X1 (x) E00  for the\n"
            "transposition X1 = [[0,1,0],[1,0,0],[0,0,1]]; no shorter certificate\n"
            "exists.  DIAGONAL_TABLE_R3 maps the 9-bit diagonal of each symmetric-\n"
            "coefficient diagonal matrix D (bit i*3+j set iff D[(i,j),(i,j)] = 1) to\n"
            'a minimal tuple of invertible A with  sum A (x) A^T = D.\n"""\n\n'
        )
        fh.write("EXCEPTIONAL_CROSS_R3 = (\n")
        for i in exc:
            fh.write(f"    {mat_tuple(i)},\n")
        fh.write(")\n\n")
        fh.write("DIAGONAL_TABLE_R3 = {\n")
        for key in sorted(table):
            fh.write(f"    {key}: (\n")
            for i in table[key]:
                fh.write(f"        {mat_tuple(i)},\n")
            fh.write("    ),\n")
        fh.write("}\n")
    print(f"[{time.time()-t0:6.1f}s] wrote {out}")


if __name__ == "__main__":
    main()

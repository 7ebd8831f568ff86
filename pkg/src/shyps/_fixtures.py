"""Hard-coded r=3 decomposition tables (see scripts/precompute_fixtures.py).

Matrices are 3x3 nested int tuples.  EXCEPTIONAL_CROSS_R3 lists seven
invertible A with  sum A (x) A^T = E00 (x) X1^T + X1 (x) E00  for the
transposition X1 = [[0,1,0],[1,0,0],[0,0,1]]; no shorter certificate
exists.  DIAGONAL_TABLE_R3 maps the 9-bit diagonal of each symmetric-
coefficient diagonal matrix D (bit i*3+j set iff D[(i,j),(i,j)] = 1) to
a minimal tuple of invertible A with  sum A (x) A^T = D.
"""

EXCEPTIONAL_CROSS_R3 = (
    ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
    ((0, 0, 1), (1, 0, 1), (0, 1, 0)),
    ((1, 0, 0), (1, 1, 1), (1, 1, 0)),
    ((1, 1, 0), (1, 0, 0), (0, 0, 1)),
    ((1, 1, 1), (1, 1, 0), (1, 0, 1)),
    ((1, 1, 1), (0, 0, 1), (0, 1, 1)),
    ((0, 1, 0), (0, 1, 1), (1, 1, 1)),
)

DIAGONAL_TABLE_R3 = {
    0: (
    ),
    1: (
        ((1, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 1), (0, 1, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((0, 0, 1), (1, 1, 1), (0, 1, 1)),
        ((0, 1, 0), (0, 0, 1), (1, 1, 1)),
    ),
    10: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
    ),
    11: (
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((1, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((0, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((1, 1, 1), (1, 0, 0), (1, 0, 1)),
    ),
    16: (
        ((0, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((0, 0, 1), (1, 1, 1), (0, 1, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 1, 1), (1, 1, 0), (1, 0, 1)),
        ((1, 0, 1), (1, 1, 1), (0, 1, 1)),
        ((1, 1, 0), (0, 1, 1), (1, 1, 1)),
    ),
    17: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
    ),
    26: (
        ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
        ((1, 0, 0), (0, 1, 1), (0, 1, 0)),
        ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((0, 1, 0), (1, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (1, 0, 1), (0, 1, 1)),
        ((0, 1, 0), (1, 1, 1), (0, 1, 1)),
    ),
    27: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((0, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
    ),
    68: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
    ),
    69: (
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((0, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((1, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((1, 1, 0), (1, 0, 0), (0, 0, 1)),
    ),
    78: (
        ((0, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((1, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((0, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((1, 1, 1), (1, 0, 0), (1, 0, 1)),
    ),
    79: (
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((0, 1, 0), (1, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (1, 0, 1), (1, 0, 0)),
        ((0, 1, 1), (1, 0, 1), (0, 0, 1)),
        ((1, 1, 1), (1, 0, 1), (0, 0, 1)),
    ),
    84: (
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    85: (
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
    ),
    94: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 0, 0), (1, 0, 1), (0, 1, 0)),
        ((1, 0, 0), (1, 1, 1), (0, 1, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
        ((0, 1, 0), (1, 0, 0), (1, 1, 1)),
        ((0, 1, 0), (1, 1, 0), (1, 1, 1)),
    ),
    95: (
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
        ((1, 0, 1), (0, 0, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 0, 1), (0, 1, 0), (1, 0, 1)),
        ((1, 0, 0), (0, 0, 1), (0, 1, 1)),
        ((1, 0, 1), (0, 0, 1), (1, 1, 1)),
    ),
    160: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    161: (
        ((1, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((1, 1, 0), (1, 0, 1), (0, 1, 0)),
        ((1, 0, 1), (0, 0, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((1, 1, 0), (1, 1, 1), (0, 1, 1)),
        ((1, 0, 1), (0, 1, 1), (1, 1, 1)),
    ),
    170: (
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    171: (
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    176: (
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 0), (1, 0, 1), (0, 1, 0)),
        ((1, 0, 0), (1, 1, 1), (0, 1, 0)),
        ((0, 1, 0), (1, 0, 0), (1, 1, 1)),
        ((0, 1, 0), (1, 1, 0), (1, 1, 1)),
    ),
    177: (
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    186: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 0), (1, 0, 1), (0, 1, 0)),
        ((1, 0, 0), (1, 1, 1), (0, 1, 0)),
        ((0, 1, 0), (1, 0, 0), (1, 1, 1)),
        ((0, 1, 0), (1, 1, 0), (1, 1, 1)),
    ),
    187: (
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
        ((0, 0, 1), (0, 1, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 0, 1), (0, 1, 0), (1, 0, 1)),
        ((1, 0, 0), (0, 0, 1), (0, 1, 1)),
        ((0, 0, 1), (0, 1, 1), (1, 1, 1)),
    ),
    228: (
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    229: (
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    238: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    239: (
        ((0, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((1, 1, 0), (1, 0, 1), (0, 1, 0)),
        ((1, 0, 1), (0, 0, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((1, 1, 0), (1, 1, 1), (0, 1, 1)),
        ((1, 0, 1), (0, 1, 1), (1, 1, 1)),
    ),
    244: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 0), (1, 0, 1), (0, 1, 0)),
        ((1, 0, 0), (1, 1, 1), (0, 1, 0)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (1, 0, 0), (1, 1, 1)),
        ((0, 1, 0), (1, 1, 0), (1, 1, 1)),
    ),
    245: (
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 1)),
        ((0, 0, 1), (1, 1, 0), (0, 1, 1)),
    ),
    254: (
        ((1, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 1, 0), (1, 1, 1), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 0, 1), (0, 1, 0), (1, 0, 1)),
        ((0, 1, 0), (1, 1, 1), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    255: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 1)),
        ((0, 0, 1), (1, 1, 0), (0, 1, 1)),
    ),
    256: (
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    257: (
        ((1, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 1, 0), (1, 1, 1), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 0, 1), (0, 1, 0), (1, 0, 1)),
        ((0, 1, 0), (1, 1, 1), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    266: (
        ((1, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((0, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    267: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    272: (
        ((0, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((1, 1, 0), (1, 0, 1), (0, 1, 0)),
        ((1, 0, 1), (0, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((1, 1, 0), (1, 1, 1), (0, 1, 1)),
        ((1, 0, 1), (0, 1, 1), (1, 1, 1)),
    ),
    273: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    282: (
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    283: (
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    324: (
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
        ((0, 0, 1), (0, 1, 1), (1, 1, 0)),
        ((0, 0, 1), (0, 1, 0), (1, 0, 1)),
        ((1, 0, 0), (0, 0, 1), (0, 1, 1)),
        ((0, 0, 1), (0, 1, 1), (1, 1, 1)),
    ),
    325: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    334: (
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    335: (
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 0), (1, 0, 1), (0, 1, 0)),
        ((1, 0, 0), (1, 1, 1), (0, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (1, 0, 0), (1, 1, 1)),
        ((0, 1, 0), (1, 1, 0), (1, 1, 1)),
    ),
    340: (
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    341: (
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    350: (
        ((0, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((1, 0, 0), (0, 1, 1), (0, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((1, 0, 0), (0, 0, 1), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    351: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    416: (
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
        ((1, 0, 1), (0, 0, 1), (1, 1, 0)),
        ((0, 0, 1), (0, 1, 0), (1, 0, 1)),
        ((1, 0, 0), (0, 0, 1), (0, 1, 1)),
        ((1, 0, 1), (0, 0, 1), (1, 1, 1)),
    ),
    417: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    426: (
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
    ),
    427: (
        ((1, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 1, 0), (1, 0, 1), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 0, 1), (0, 1, 0), (1, 0, 1)),
        ((0, 1, 0), (1, 0, 1), (0, 1, 1)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)),
    ),
    432: (
        ((0, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 1), (0, 1, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((0, 0, 1), (1, 1, 1), (0, 1, 1)),
        ((0, 1, 0), (0, 0, 1), (1, 1, 1)),
    ),
    433: (
        ((0, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((1, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((1, 1, 1), (1, 0, 0), (1, 0, 1)),
    ),
    442: (
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((0, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((1, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((1, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ),
    443: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 1)),
    ),
    484: (
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 1, 0), (0, 0, 1), (0, 1, 0)),
        ((0, 1, 1), (0, 0, 1), (1, 1, 0)),
        ((0, 0, 1), (0, 1, 0), (1, 0, 1)),
        ((1, 1, 0), (0, 0, 1), (0, 1, 1)),
        ((0, 1, 1), (0, 0, 1), (1, 1, 1)),
    ),
    485: (
        ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
        ((1, 0, 0), (0, 1, 1), (0, 1, 0)),
        ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (1, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (1, 0, 1), (0, 1, 1)),
        ((0, 1, 0), (1, 1, 1), (0, 1, 1)),
    ),
    494: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((1, 0, 1), (1, 1, 0), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ),
    495: (
        ((0, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((0, 0, 1), (1, 1, 1), (0, 1, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 1, 0)),
        ((1, 1, 1), (1, 1, 0), (1, 0, 1)),
        ((1, 0, 1), (1, 1, 1), (0, 1, 1)),
        ((1, 1, 0), (0, 1, 1), (1, 1, 1)),
    ),
    500: (
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((1, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((1, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((1, 1, 1), (1, 0, 0), (1, 0, 1)),
    ),
    501: (
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 0)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ),
    510: (
        ((1, 1, 1), (1, 1, 0), (1, 0, 0)),
        ((0, 0, 1), (1, 0, 1), (0, 1, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 1, 0)),
        ((1, 1, 1), (1, 0, 0), (1, 0, 1)),
        ((0, 0, 1), (1, 1, 1), (0, 1, 1)),
        ((0, 1, 0), (0, 0, 1), (1, 1, 1)),
    ),
    511: (
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ),
}

"""Shared frozen tables and small helpers for the test suite.

The golden bracket tables were computed independently (by hand from the
flat-index definition) before the expansion code existed; the tests compare
library output against them verbatim.
"""

from fractions import Fraction as F

from liex import linalg

# Flat index convention: E_{(i-1)N + alpha} = (generator i, semigroup
# element alpha).  All brackets below are (i, j, {k: coeff}) with i < j and
# every unlisted pair zero.

# S2 x sl2R, dimension 6.
GOLDEN_S2_SL2R = [
    (1, 3, {2: F(1)}), (1, 4, {2: F(1)}), (1, 5, {4: F(2)}), (1, 6, {4: F(2)}),
    (2, 3, {2: F(1)}), (2, 4, {2: F(1)}), (2, 5, {4: F(2)}), (2, 6, {4: F(2)}),
    (3, 5, {6: F(1)}), (3, 6, {6: F(1)}), (4, 5, {6: F(1)}), (4, 6, {6: F(1)}),
]

# S3 x sl2R, dimension 9.
GOLDEN_S3_SL2R = [
    (1, 4, {1: F(1)}), (1, 5, {1: F(1)}), (1, 6, {1: F(1)}),
    (1, 7, {4: F(2)}), (1, 8, {4: F(2)}), (1, 9, {4: F(2)}),
    (2, 4, {1: F(1)}), (2, 5, {1: F(1)}), (2, 6, {2: F(1)}),
    (2, 7, {4: F(2)}), (2, 8, {4: F(2)}), (2, 9, {5: F(2)}),
    (3, 4, {1: F(1)}), (3, 5, {2: F(1)}), (3, 6, {3: F(1)}),
    (3, 7, {4: F(2)}), (3, 8, {5: F(2)}), (3, 9, {6: F(2)}),
    (4, 7, {7: F(1)}), (4, 8, {7: F(1)}), (4, 9, {7: F(1)}),
    (5, 7, {7: F(1)}), (5, 8, {7: F(1)}), (5, 9, {8: F(1)}),
    (6, 7, {7: F(1)}), (6, 8, {8: F(1)}), (6, 9, {9: F(1)}),
]

# Zero reduction of S3 x sl2R: the six survivors lambda_2 e_i, lambda_3 e_i
# in flat order, with every product through the absorbing element cut.
GOLDEN_ZR_S3_SL2R = [
    (1, 4, {1: F(1)}), (1, 6, {3: F(2)}), (2, 3, {1: F(1)}),
    (2, 4, {2: F(1)}), (2, 5, {3: F(2)}), (2, 6, {4: F(2)}),
    (3, 6, {5: F(1)}), (4, 5, {5: F(1)}), (4, 6, {6: F(1)}),
]

# Killing forms in the canonical bases.
KILLING_SL2R = [[F(0), F(0), F(-4)], [F(0), F(2), F(0)], [F(-4), F(0), F(0)]]
KILLING_SO3 = [[F(-2), F(0), F(0)], [F(0), F(-2), F(0)], [F(0), F(0), F(-2)]]

RATIONAL_POOL = [F(n, d) for n in range(-3, 4) for d in (1, 2, 3)]


def rand_invertible(rng, n=3):
    """Random rational n x n matrix with nonzero determinant."""
    while True:
        m = [[rng.choice(RATIONAL_POOL) for _ in range(n)] for _ in range(n)]
        if linalg.det(m) != 0:
            return m


def unit_rows(n, idxs):
    """Coordinate vectors e_i (0-based idxs) as tuples, the span shape the
    connection search reports."""
    return tuple(tuple(1 if i == k else 0 for i in range(n)) for k in idxs)

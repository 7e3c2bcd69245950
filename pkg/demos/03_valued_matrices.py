"""
Valued occurrence matrices
==========================

At institution or country level an entity can occur several times on one
paper. With n - 1 in the denominator the numerator grows with the square of
those counts while the denominator grows linearly, so the network total of
a paper is no longer fixed. The n ** 2 scheme keeps it at one.
"""

import numpy as np

from fracnet import OccurrenceMatrix, Scheme, cooccurrence, grand_total

# one paper: three addresses in country 0, one in country 1
paper = OccurrenceMatrix(np.array([[3], [1]]))
for scheme in Scheme:
    U = cooccurrence(paper, scheme)
    print(f"{scheme.value:5s} total {grand_total(U):7.4f}  off-diagonal {grand_total(U, False):7.4f}")

###############################################################################
# The same holds for any random valued matrix: the n ** 2 total equals the
# number of papers that have at least one entity.
rng = np.random.default_rng(1)
dense = rng.integers(0, 4, size=(6, 10))
A = OccurrenceMatrix(dense)
print("non-empty papers:", np.count_nonzero(dense.sum(axis=0)))
print("eq2 total:", grand_total(cooccurrence(A, Scheme.EQ2)))

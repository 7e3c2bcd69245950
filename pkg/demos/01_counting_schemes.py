"""
Full and fractional counting on a toy authorship matrix
=======================================================

Four researchers, three papers. We build the occurrence matrix, project it
with each counting scheme and compare the resulting networks.
"""

import numpy as np

from fracnet import (
    DiagonalPolicy,
    OccurrenceMatrix,
    Scheme,
    consistency_report,
    cooccurrence,
    fractionated_occurrence,
    grand_total,
    row_totals,
)

np.set_printoptions(precision=3, suppress=True)

# rows are researchers R1..R4, columns are papers P1..P3
A = OccurrenceMatrix(np.array([
    [1, 1, 0],
    [1, 0, 1],
    [1, 1, 0],
    [0, 0, 1],
]))
print("paper sizes n_k:", A.column_sizes)

###############################################################################
# Fractional credit per paper: every column sums to one.
F = fractionated_occurrence(A).toarray()
print(F)
print("credit per researcher:", F.sum(axis=1))

###############################################################################
# Whole-number counting is A times its transpose. The fractional schemes
# divide each paper's contribution by n - 1, n ** 2 or n (n - 1) / 2.
for scheme in Scheme:
    U = cooccurrence(A, scheme)
    print(f"\n{scheme.value}  (diagonal {U.diagonal_policy.value})")
    print(U.toarray())
    print("row totals:", row_totals(U, U.diagonal_policy is DiagonalPolicy.INCLUDE))
    print("grand total:", grand_total(U), " off-diagonal:", grand_total(U, False))

###############################################################################
# Only the n ** 2 scheme keeps the network total equal to the number of
# papers, and only when the self-relations stay in.
for scheme in Scheme:
    rep = consistency_report(A, cooccurrence(A, scheme))
    print(f"{scheme.value:5s} expected {rep.analytic_expectation} -> matches: {rep.matches}")

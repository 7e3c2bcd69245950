"""Brute-force dense evaluation of the counting formulas.

Used by the test-suite as an independent check on :mod:`fracnet.counting`:
a literal triple loop over i, j and k on a plain list-of-lists matrix, with
no sparsity and no shared helpers.
"""

from fractions import Fraction

import numpy as np

from .schemes import DiagonalPolicy, Scheme

__all__ = ["dense_cooccurrence", "MAX_ORACLE_SIZE"]

MAX_ORACLE_SIZE = 32


def _term(scheme, a_i, a_j, n):
    if scheme is Scheme.FULL:
        return Fraction(a_i * a_j)
    if scheme is Scheme.EQ1:
        if n <= 1:
            return Fraction(0)
        return Fraction(a_i * a_j, n - 1)
    if scheme is Scheme.EQ2:
        if n == 0:
            return Fraction(0)
        return Fraction(a_i * a_j, n * n)
    if scheme is Scheme.EQ3:
        if n <= 1:
            return Fraction(0)
        return Fraction(a_i * a_j * 2, n * (n - 1))
    raise ValueError(scheme)


def dense_cooccurrence(A, scheme, diagonal_policy=DiagonalPolicy.INCLUDE):
    """Return the full E x E matrix u_ij = sum_k term(a_ik, a_jk, n_k).

    Sums are exact rationals, converted to float at the end. The diagonal is
    zeroed when excluded, and always for Eq1.
    """
    A = [[int(x) for x in row] for row in np.asarray(A).tolist()]
    E = len(A)
    N = len(A[0]) if E else 0
    if E > MAX_ORACLE_SIZE or N > MAX_ORACLE_SIZE:
        raise ValueError("oracle is meant for small matrices only")

    n = [sum(A[i][k] for i in range(E)) for k in range(N)]
    keep_diag = diagonal_policy is DiagonalPolicy.INCLUDE and scheme is not Scheme.EQ1

    U = np.zeros((E, E))
    for i in range(E):
        for j in range(E):
            if i == j and not keep_diag:
                continue
            total = Fraction(0)
            for k in range(N):
                total += _term(scheme, A[i][k], A[j][k], n[k])
            U[i, j] = float(total)
    return U

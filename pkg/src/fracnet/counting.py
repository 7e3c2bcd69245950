"""One-mode projection of an occurrence matrix under full and fractional counting.

All schemes share one accumulator. For every publication k (in column
order) and every stored pair of entities ``i <= j`` on it (in row order),
``a_ik * a_jk * weight(n_k)`` is added to cell ``(i, j)``. Only the upper
triangle is stored, so the result is symmetric by construction, and the
fixed summation order makes the floats bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.sparse as sp

from .occurrence import OccurrenceMatrix
from .schemes import DiagonalPolicy, Scheme

__all__ = [
    "CoOccurrenceMatrix",
    "ConsistencyReport",
    "CONSISTENCY_TOL",
    "full_count",
    "fractional_eq1",
    "fractional_eq2",
    "fractional_eq3",
    "cooccurrence",
    "grand_total",
    "row_totals",
    "consistency_report",
]

CONSISTENCY_TOL = 1e-9

INCLUDE = DiagonalPolicy.INCLUDE
EXCLUDE = DiagonalPolicy.EXCLUDE


@dataclass
class CoOccurrenceMatrix:
    """Symmetric entity x entity weights, upper triangle only.

    ``weights[(i, j)]`` with ``i <= j`` holds u_ij = u_ji. Diagonal keys
    are present only under ``DiagonalPolicy.INCLUDE``.
    """

    weights: dict[tuple[int, int], float]
    scheme: Scheme
    diagonal_policy: DiagonalPolicy
    num_entities: int

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        if i > j:
            i, j = j, i
        return self.weights.get((i, j), 0.0)

    def edges(self):
        """Stored ``(i, j, w)`` with ``i < j``, sorted by ``(i, j)``."""
        return [(i, j, w) for (i, j), w in sorted(self.weights.items()) if i != j]

    def loops(self):
        return [(i, w) for (i, j), w in sorted(self.weights.items()) if i == j]

    def toarray(self) -> np.ndarray:
        U = np.zeros((self.num_entities, self.num_entities))
        for (i, j), w in self.weights.items():
            U[i, j] = U[j, i] = w
        return U

    def tocsr(self) -> sp.csr_array:
        return sp.csr_array(self.toarray())


def _weight_function(scheme: Scheme):
    """Per-publication weight as ``(numerator_factor, denominator)``.

    Returns None for publications that contribute nothing under the scheme.
    """
    if scheme is Scheme.FULL:
        return lambda n: (1, 1) if n >= 1 else None
    if scheme is Scheme.EQ1:
        return lambda n: (1, n - 1) if n >= 2 else None
    if scheme is Scheme.EQ2:
        return lambda n: (1, n * n) if n >= 1 else None
    if scheme is Scheme.EQ3:
        return lambda n: (2, n * (n - 1)) if n >= 2 else None
    raise ValueError(f"unsupported scheme {scheme!r}")


def cooccurrence(
    A: OccurrenceMatrix, scheme: Scheme, diagonal_policy: DiagonalPolicy = INCLUDE
) -> CoOccurrenceMatrix:
    """Project ``A`` onto its rows under ``scheme``.

    Eq1 never keeps the diagonal: its (n - 1) denominator already removes
    the self-link.
    """
    if scheme is Scheme.EQ1:
        diagonal_policy = EXCLUDE
    keep_diag = diagonal_policy is INCLUDE
    weight = _weight_function(scheme)

    acc: dict[tuple[int, int], float] = {}
    for k, rows, counts in A.columns():
        w = weight(int(A.column_sizes[k]))
        if w is None:
            continue
        factor, denom = w
        rows = rows.tolist()
        counts = counts.tolist()
        m = len(rows)
        for p in range(m):
            i, ai = rows[p], counts[p]
            start = p if keep_diag else p + 1
            for q in range(start, m):
                key = (i, rows[q])
                # integer numerator, single rounding per contribution
                acc[key] = acc.get(key, 0.0) + (ai * counts[q] * factor) / denom

    weights = {key: val for key, val in acc.items() if val > 0.0}
    return CoOccurrenceMatrix(weights, scheme, diagonal_policy, A.num_entities)


def full_count(A: OccurrenceMatrix, diagonal_policy: DiagonalPolicy = INCLUDE) -> CoOccurrenceMatrix:
    """Whole-number counts U = A A^T."""
    return cooccurrence(A, Scheme.FULL, diagonal_policy)


def fractional_eq1(A: OccurrenceMatrix) -> CoOccurrenceMatrix:
    return cooccurrence(A, Scheme.EQ1, EXCLUDE)


def fractional_eq2(A: OccurrenceMatrix, diagonal_policy: DiagonalPolicy = INCLUDE) -> CoOccurrenceMatrix:
    return cooccurrence(A, Scheme.EQ2, diagonal_policy)


def fractional_eq3(A: OccurrenceMatrix, diagonal_policy: DiagonalPolicy = INCLUDE) -> CoOccurrenceMatrix:
    return cooccurrence(A, Scheme.EQ3, diagonal_policy)


def grand_total(U: CoOccurrenceMatrix, include_diagonal: bool = True) -> float:
    """Sum over all ordered cells; off-diagonal weights count twice."""
    terms = []
    for (i, j), w in sorted(U.weights.items()):
        if i != j:
            terms.append(2.0 * w)
        elif include_diagonal:
            terms.append(w)
    return math.fsum(terms)


def row_totals(U: CoOccurrenceMatrix, include_diagonal: bool = True) -> np.ndarray:
    terms: list[list[float]] = [[] for _ in range(U.num_entities)]
    for (i, j), w in sorted(U.weights.items()):
        if i != j:
            terms[i].append(w)
            terms[j].append(w)
        elif include_diagonal:
            terms[i].append(w)
    return np.array([math.fsum(t) for t in terms], dtype=np.float64)


@dataclass
class ConsistencyReport:
    scheme: Scheme
    grand_total_with_diagonal: float
    grand_total_off_diagonal: float
    row_totals: np.ndarray
    analytic_expectation: Optional[float] = None
    # which grand total the expectation refers to
    expectation_includes_diagonal: Optional[bool] = None
    matches: Optional[bool] = None
    tolerance: float = CONSISTENCY_TOL
    note: str = ""

    @property
    def compared_total(self) -> Optional[float]:
        if self.expectation_includes_diagonal is None:
            return None
        if self.expectation_includes_diagonal:
            return self.grand_total_with_diagonal
        return self.grand_total_off_diagonal

    def as_dict(self) -> dict:
        return {
            "scheme": self.scheme.value,
            "grand_total_with_diagonal": self.grand_total_with_diagonal,
            "grand_total_off_diagonal": self.grand_total_off_diagonal,
            "analytic_expectation": self.analytic_expectation,
            "expectation_includes_diagonal": self.expectation_includes_diagonal,
            "matches": self.matches,
            "tolerance": self.tolerance,
            "note": self.note,
        }


def _expectation(A: OccurrenceMatrix, U: CoOccurrenceMatrix):
    """Closed-form grand total for ``U``'s scheme, or ``(None, None, why)``."""
    n = A.column_sizes
    binary = A.is_binary
    scheme = U.scheme
    if scheme is Scheme.EQ2:
        if U.diagonal_policy is EXCLUDE:
            return None, None, "eq2 identity needs the diagonal"
        return float(np.count_nonzero(n >= 1)), True, "total equals number of non-empty publications"
    if not binary:
        return None, None, "identity holds for binary occurrence matrices only"
    if scheme is Scheme.FULL:
        return float(np.sum(n * (n - 1))), False, "off-diagonal total equals sum of n_k(n_k - 1)"
    if scheme is Scheme.EQ1:
        return float(np.sum(n[n >= 2])), False, "off-diagonal total equals sum of n_k over multi-entity publications"
    if scheme is Scheme.EQ3:
        return 2.0 * float(np.count_nonzero(n >= 2)), False, "off-diagonal total equals 2 per multi-entity publication"
    return None, None, ""


def consistency_report(A: OccurrenceMatrix, U: CoOccurrenceMatrix) -> ConsistencyReport:
    """Check ``U``'s grand total against the closed form for its scheme.

    A mismatch is reported through ``matches``, never raised.
    """
    expected, with_diag, note = _expectation(A, U)
    report = ConsistencyReport(
        scheme=U.scheme,
        grand_total_with_diagonal=grand_total(U, True),
        grand_total_off_diagonal=grand_total(U, False),
        row_totals=row_totals(U, U.diagonal_policy is INCLUDE),
        analytic_expectation=expected,
        expectation_includes_diagonal=with_diag,
        note=note,
    )
    if expected is not None:
        report.matches = abs(report.compared_total - expected) <= report.tolerance
    return report

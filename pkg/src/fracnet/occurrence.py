"""The entity x publication occurrence matrix."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from .entities import AggregationLevel, extract_entities
from .wos import PublicationRecord

__all__ = [
    "EntityCatalog",
    "OccurrenceMatrix",
    "build_occurrence",
    "fractionated_occurrence",
]


@dataclass
class EntityCatalog:
    """Dense 0-based numbering of entity labels in first-seen order."""

    labels: list[str] = field(default_factory=list)
    index: dict[str, int] = field(default_factory=dict)

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> "EntityCatalog":
        cat = cls()
        for label in labels:
            cat.add(label)
        return cat

    def add(self, label: str) -> int:
        i = self.index.get(label)
        if i is None:
            i = self.index[label] = len(self.labels)
            self.labels.append(label)
        return i

    def lookup(self, label: str) -> int:
        return self.index[label]

    def __len__(self) -> int:
        return len(self.labels)


class OccurrenceMatrix:
    """Sparse matrix A with ``a[i, k]`` = count of entity i on publication k.

    Stored column-compressed with sorted row indices; zeros are never
    stored. ``column_sizes[k]`` is n_k, the column sum.
    """

    def __init__(self, matrix):
        csc = sp.csc_array(matrix, dtype=np.int64)
        csc.sum_duplicates()
        csc.eliminate_zeros()
        if csc.nnz and csc.data.min() < 0:
            raise ValueError("occurrence counts must be non-negative")
        csc.data.setflags(write=False)
        self._csc = csc
        self.column_sizes = np.asarray(csc.sum(axis=0), dtype=np.int64).reshape(-1)
        self.column_sizes.setflags(write=False)

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[tuple[int, int]]], num_entities: int
    ) -> "OccurrenceMatrix":
        """Build from per-publication lists of ``(entity, count)``."""
        indptr = [0]
        rows, data = [], []
        for col in columns:
            for i, a in col:
                rows.append(i)
                data.append(a)
            indptr.append(len(rows))
        shape = (num_entities, len(columns))
        return cls(sp.csc_array(
            (np.asarray(data, dtype=np.int64), np.asarray(rows, dtype=np.int64),
             np.asarray(indptr, dtype=np.int64)),
            shape=shape,
        ))

    @property
    def num_entities(self) -> int:
        return self._csc.shape[0]

    @property
    def num_publications(self) -> int:
        return self._csc.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._csc.shape

    @property
    def nnz(self) -> int:
        return self._csc.nnz

    def column(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        """Row indices (ascending) and counts stored in column ``k``."""
        lo, hi = self._csc.indptr[k], self._csc.indptr[k + 1]
        return self._csc.indices[lo:hi], self._csc.data[lo:hi]

    def columns(self):
        for k in range(self.num_publications):
            rows, counts = self.column(k)
            yield k, rows, counts

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return {
            (int(i), k): int(a)
            for k, rows, counts in self.columns()
            for i, a in zip(rows, counts)
        }

    @property
    def is_binary(self) -> bool:
        return bool(self.nnz == 0 or self._csc.data.max() == 1)

    @property
    def empty_columns(self) -> int:
        return int(np.count_nonzero(self.column_sizes == 0))

    def tocsc(self) -> sp.csc_array:
        return self._csc.copy()

    def toarray(self) -> np.ndarray:
        return self._csc.toarray()

    def __repr__(self):
        return (f"OccurrenceMatrix(E={self.num_entities}, N={self.num_publications}, "
                f"nnz={self.nnz})")


def build_occurrence(
    records: Iterable[PublicationRecord], agg: AggregationLevel
) -> tuple[EntityCatalog, OccurrenceMatrix]:
    """One column per record, including records without entities."""
    catalog = EntityCatalog()
    columns = []
    for rec in records:
        columns.append([(catalog.add(label), n) for label, n in extract_entities(rec, agg)])
    return catalog, OccurrenceMatrix.from_columns(columns, len(catalog))


def fractionated_occurrence(A: OccurrenceMatrix) -> sp.csc_array:
    """Credit shares ``a[i, k] / n_k``; every non-empty column sums to 1."""
    csc = A.tocsc().astype(np.float64)
    sizes = np.repeat(A.column_sizes, np.diff(csc.indptr))
    csc.data = csc.data / sizes
    return csc

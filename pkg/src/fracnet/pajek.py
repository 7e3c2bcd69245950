"""Pajek ``.net`` edge lists and CSV dumps of co-occurrence matrices."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .counting import CoOccurrenceMatrix
from .occurrence import EntityCatalog
from .schemes import DiagonalPolicy

__all__ = ["PajekWriteOptions", "write_pajek", "write_matrix_csv", "save_pajek"]


@dataclass(frozen=True)
class PajekWriteOptions:
    weight_decimals: int = 6
    emit_loops: bool = False

    def __post_init__(self):
        if not 1 <= self.weight_decimals <= 12:
            raise ValueError("weight_decimals must be between 1 and 12")


def _check_sizes(catalog, U):
    if U.num_entities != len(catalog):
        raise ValueError(
            f"matrix has {U.num_entities} entities but the catalog has {len(catalog)}"
        )


def write_pajek(
    catalog: EntityCatalog, U: CoOccurrenceMatrix, opts: PajekWriteOptions = PajekWriteOptions()
) -> str:
    """Render ``U`` as an undirected Pajek network.

    Vertices are numbered from 1 in catalog order. Edges ``i < j`` come
    sorted by ``(i, j)``; loops follow them only when ``opts.emit_loops``
    is set and ``U`` keeps its diagonal.
    """
    _check_sizes(catalog, U)
    fmt = f"{{:.{opts.weight_decimals}f}}"
    lines = [f"*Vertices {len(catalog)}"]
    for n, label in enumerate(catalog.labels, 1):
        lines.append(f'{n} "{label.replace(chr(34), chr(39))}"')
    lines.append("*Edges")
    for i, j, w in U.edges():
        lines.append(f"{i + 1} {j + 1} {fmt.format(w)}")
    if opts.emit_loops and U.diagonal_policy is DiagonalPolicy.INCLUDE:
        for i, w in U.loops():
            lines.append(f"{i + 1} {i + 1} {fmt.format(w)}")
    return "\n".join(lines) + "\n"


def save_pajek(path, catalog, U, opts: PajekWriteOptions = PajekWriteOptions()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_pajek(catalog, U, opts))


def write_matrix_csv(
    catalog: EntityCatalog,
    U: CoOccurrenceMatrix,
    include_diagonal: bool = True,
    decimals: int = 6,
) -> str:
    """Dense square CSV with labels along the first row and column."""
    _check_sizes(catalog, U)
    dense = U.toarray()
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["label"] + list(catalog.labels))
    for i, label in enumerate(catalog.labels):
        row = [
            0.0 if (i == j and not include_diagonal) else dense[i, j]
            for j in range(len(catalog))
        ]
        writer.writerow([label] + [f"{w:.{decimals}f}" for w in row])
    return out.getvalue()

import numpy as np
import pytest

from fracnet import (
    AggregationLevel,
    EntityCatalog,
    Level,
    OccurrenceMatrix,
    PublicationRecord,
    build_occurrence,
    fractionated_occurrence,
)

AUTHOR = AggregationLevel(Level.AUTHOR)


def toy_records():
    return [
        PublicationRecord(0, ["R1", "R2", "R3"]),
        PublicationRecord(1, ["R1", "R3"]),
        PublicationRecord(2, ["R2", "R4"]),
    ]


def test_toy_shape_and_sizes():
    catalog, A = build_occurrence(toy_records(), AUTHOR)
    assert catalog.labels == ["R1", "R2", "R3", "R4"]
    assert (A.num_entities, A.num_publications) == (4, 3)
    assert A.column_sizes.tolist() == [3, 2, 2]


def test_empty_input():
    catalog, A = build_occurrence([], AUTHOR)
    assert len(catalog) == 0
    assert (A.num_entities, A.num_publications) == (0, 0)


def test_single_author():
    _, A = build_occurrence([PublicationRecord(0, ["SOLO"])], AUTHOR)
    assert A.toarray().tolist() == [[1]]
    assert A.column_sizes.tolist() == [1]


def test_records_without_entities_keep_their_column():
    recs = [PublicationRecord(0, ["A"]), PublicationRecord(1, []), PublicationRecord(2, ["A", "B"])]
    _, A = build_occurrence(recs, AUTHOR)
    assert A.num_publications == 3
    assert A.column_sizes.tolist() == [1, 0, 2]
    assert A.empty_columns == 1


def test_valued_country_column():
    rec = PublicationRecord(0, [], ["A, X, MA 1 USA", "B, Y, CA 2 USA", "C, Amsterdam, Netherlands."])
    catalog, A = build_occurrence([rec], AggregationLevel(Level.COUNTRY))
    assert catalog.labels == ["NETHERLANDS", "USA"]
    assert A.toarray().tolist() == [[1], [2]]
    assert A.column_sizes.tolist() == [3]
    assert not A.is_binary


def test_catalog_lookup():
    cat = EntityCatalog.from_labels(["B", "A", "B"])
    assert cat.labels == ["B", "A"]
    assert [cat.lookup(l) for l in cat.labels] == [0, 1]


def test_zeros_are_not_stored(toy):
    assert toy.nnz == 7
    assert all(a >= 1 for a in toy.entries.values())


def test_negative_counts_rejected():
    with pytest.raises(ValueError):
        OccurrenceMatrix(np.array([[1, -1]]))


def test_fractionated_shares(toy):
    F = fractionated_occurrence(toy).toarray()
    assert round(F[0, 0], 2) == 0.33
    assert round(F[0, 1], 2) == 0.50
    np.testing.assert_allclose(F.sum(axis=0), [1, 1, 1])
    np.testing.assert_allclose(np.round(F.sum(axis=1), 2), [0.83, 0.83, 0.83, 0.50])


def test_fractionated_single_author():
    F = fractionated_occurrence(OccurrenceMatrix(np.array([[1]])))
    assert F.toarray().tolist() == [[1.0]]


def test_fractionated_empty_column_stays_empty():
    F = fractionated_occurrence(OccurrenceMatrix(np.array([[1, 0], [2, 0]]))).toarray()
    np.testing.assert_allclose(F, [[1 / 3, 0], [2 / 3, 0]])


def test_column_sizes_match_recomputation():
    rng = np.random.default_rng(7)
    dense = rng.integers(0, 4, size=(6, 9))
    A = OccurrenceMatrix(dense)
    assert A.column_sizes.tolist() == dense.sum(axis=0).tolist()
    assert int(A.column_sizes.sum()) == sum(A.entries.values())

import numpy as np
import pytest
from hypothesis import given, settings

from fracnet import (
    DiagonalPolicy,
    EntityCatalog,
    OccurrenceMatrix,
    PajekWriteOptions,
    Scheme,
    cooccurrence,
    fractional_eq1,
    fractional_eq2,
    write_matrix_csv,
    write_pajek,
)
from fracnet.counting import CoOccurrenceMatrix

from strategies import occurrence_arrays

TOY_LABELS = ["R1", "R2", "R3", "R4"]


def read_pajek(text):
    """Minimal reader for round-trip checks: returns labels, weights."""
    lines = text.split("\n")
    assert lines[-1] == ""
    header, count = lines[0].split()
    assert header == "*Vertices"
    count = int(count)
    labels = []
    for n, line in enumerate(lines[1:1 + count], 1):
        num, label = line.split(" ", 1)
        assert int(num) == n
        labels.append(label.strip('"'))
    assert lines[1 + count] == "*Edges"
    weights = {}
    for line in lines[2 + count:-1]:
        i, j, w = line.split()
        weights[(int(i) - 1, int(j) - 1)] = float(w)
    return labels, weights


def one_edge(w=0.5):
    return CoOccurrenceMatrix({(0, 1): w}, Scheme.EQ1, DiagonalPolicy.EXCLUDE, 2)


def test_single_edge():
    text = write_pajek(EntityCatalog.from_labels(["R1", "R2"]), one_edge())
    assert text == '*Vertices 2\n1 "R1"\n2 "R2"\n*Edges\n1 2 0.500000\n'


def test_empty():
    U = CoOccurrenceMatrix({}, Scheme.FULL, DiagonalPolicy.INCLUDE, 0)
    assert write_pajek(EntityCatalog(), U) == "*Vertices 0\n*Edges\n"


def test_eq1_fixture_edge(toy):
    text = write_pajek(EntityCatalog.from_labels(TOY_LABELS), fractional_eq1(toy))
    assert "\n1 3 1.500000\n" in text


def test_quotes_in_labels():
    text = write_pajek(EntityCatalog.from_labels(['A "B"', "C"]), one_edge())
    assert "1 \"A 'B'\"" in text


def test_decimals():
    text = write_pajek(EntityCatalog.from_labels("ab"), one_edge(1 / 3), PajekWriteOptions(2))
    assert text.endswith("1 2 0.33\n")


@pytest.mark.parametrize("d", [0, 13])
def test_decimals_bounds(d):
    with pytest.raises(ValueError):
        PajekWriteOptions(weight_decimals=d)


def test_size_mismatch():
    with pytest.raises(ValueError):
        write_pajek(EntityCatalog.from_labels(["only"]), one_edge())


def test_loops_after_edges(toy):
    cat = EntityCatalog.from_labels(TOY_LABELS)
    U = fractional_eq2(toy)
    plain = write_pajek(cat, U)
    looped = write_pajek(cat, U, PajekWriteOptions(emit_loops=True))
    assert looped.startswith(plain)
    extra = looped[len(plain):].splitlines()
    assert extra == ["1 1 0.361111", "2 2 0.361111", "3 3 0.361111", "4 4 0.250000"]


def test_no_loops_when_diagonal_excluded(toy):
    cat = EntityCatalog.from_labels(TOY_LABELS)
    U = fractional_eq2(toy, DiagonalPolicy.EXCLUDE)
    text = write_pajek(cat, U, PajekWriteOptions(emit_loops=True))
    _, weights = read_pajek(text)
    assert all(i != j for i, j in weights)


def test_edges_sorted_and_in_range(toy):
    text = write_pajek(EntityCatalog.from_labels(TOY_LABELS), cooccurrence(toy, Scheme.FULL))
    labels, weights = read_pajek(text)
    keys = list(weights)
    assert keys == sorted(keys)
    assert all(0 <= i < j < len(labels) for i, j in keys)


@settings(max_examples=100, deadline=None)
@given(occurrence_arrays())
def test_roundtrip(dense):
    A = OccurrenceMatrix(dense)
    cat = EntityCatalog.from_labels([f"E{i}" for i in range(A.num_entities)])
    for scheme in Scheme:
        U = cooccurrence(A, scheme)
        text = write_pajek(cat, U, PajekWriteOptions(emit_loops=True))
        assert text == write_pajek(cat, U, PajekWriteOptions(emit_loops=True))
        labels, weights = read_pajek(text)
        assert labels == cat.labels
        assert set(weights) == set(U.weights)
        for key, w in U.weights.items():
            assert weights[key] == float(f"{w:.6f}")


def test_csv_single():
    U = CoOccurrenceMatrix({(0, 0): 1.0}, Scheme.EQ2, DiagonalPolicy.INCLUDE, 1)
    assert write_matrix_csv(EntityCatalog.from_labels(["R1"]), U) == "label,R1\nR1,1.000000\n"


def test_csv_empty():
    U = CoOccurrenceMatrix({}, Scheme.EQ2, DiagonalPolicy.INCLUDE, 0)
    assert write_matrix_csv(EntityCatalog(), U) == "label\n"


def test_csv_eq2_cells(toy):
    text = write_matrix_csv(EntityCatalog.from_labels(TOY_LABELS), fractional_eq2(toy))
    rows = [line.split(",") for line in text.splitlines()[1:]]
    cells = [[round(float(x), 2) for x in row[1:]] for row in rows]
    assert cells == [
        [0.36, 0.11, 0.36, 0.00],
        [0.11, 0.36, 0.11, 0.25],
        [0.36, 0.11, 0.36, 0.00],
        [0.00, 0.25, 0.00, 0.25],
    ]


def test_csv_without_diagonal(toy):
    text = write_matrix_csv(EntityCatalog.from_labels(TOY_LABELS), fractional_eq2(toy),
                            include_diagonal=False)
    assert text.splitlines()[1] == "R1,0.000000,0.111111,0.361111,0.000000"

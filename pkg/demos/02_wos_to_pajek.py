"""
From a Web of Science export to Pajek files
===========================================

Parse a tagged plain-text export, build co-authorship and country networks
and write them in Pajek format. The same pipeline is available from the
command line as ``fracnet --input FILE --level a``.
"""

from pathlib import Path
import tempfile

from fracnet import (
    AggregationLevel,
    Level,
    Mode,
    PajekWriteOptions,
    build_occurrence,
    fractional_eq3,
    read_wos_file,
    write_pajek,
)

here = Path(__file__).resolve().parent
export = here.parent / "tests" / "data" / "parser_conformance.txt"
records = read_wos_file(export)
print(f"{len(records)} records")
for rec in records[:3]:
    print(rec.seq_id, rec.authors, rec.addresses)

###############################################################################
# Co-authorship network. The editorial without authors keeps its (empty)
# column so that publication numbers follow the file.
catalog, A = build_occurrence(records, AggregationLevel(Level.AUTHOR))
print(A, "empty columns:", A.empty_columns)
print(write_pajek(catalog, fractional_eq3(A)))

###############################################################################
# Country network. In valued mode a paper with two US addresses counts the
# USA twice; ``Mode.BINARY`` counts it once.
for mode in Mode:
    catalog, A = build_occurrence(records, AggregationLevel(Level.COUNTRY, mode))
    print(mode.value, dict(zip(catalog.labels, A.toarray().sum(axis=1))))

###############################################################################
# Write the country network with self-loops shown.
out = Path(tempfile.mkdtemp()) / "countries.net"
out.write_text(write_pajek(catalog, fractional_eq3(A), PajekWriteOptions(emit_loops=True)))
print("wrote", out)

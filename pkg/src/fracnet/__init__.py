"""Full and fractional counting of bibliometric co-occurrence networks."""

from .counting import (
    CoOccurrenceMatrix,
    ConsistencyReport,
    consistency_report,
    cooccurrence,
    fractional_eq1,
    fractional_eq2,
    fractional_eq3,
    full_count,
    grand_total,
    row_totals,
)
from .entities import (
    AggregationLevel,
    Level,
    Mode,
    extract_country,
    extract_entities,
    extract_institution,
)
from .occurrence import (
    EntityCatalog,
    OccurrenceMatrix,
    build_occurrence,
    fractionated_occurrence,
)
from .pajek import PajekWriteOptions, write_matrix_csv, write_pajek
from .schemes import DiagonalPolicy, Scheme
from .wos import (
    PublicationRecord,
    WosDecodeError,
    WosParseError,
    iter_wos_records,
    parse_wos_export,
    read_wos_file,
)

__version__ = "0.1.0"

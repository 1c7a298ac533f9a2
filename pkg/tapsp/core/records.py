"""tapsp experiment records and their CSV form"""
import csv
from dataclasses import astuple, dataclass
from typing import Optional

from tapsp.core.exc import TAInputError
from tapsp.core.variables import TAVar


@dataclass
class ExperimentRecord:
    """One CSV row, fields in header order"""
    experiment_id: str
    v: int
    algorithm: str
    seed: int
    correlation: Optional[float] = None
    mean_iterations: Optional[float] = None
    exact_expectation: Optional[float] = None
    upper_bound: Optional[float] = None
    wall_clock_ns: int = 0
    checksum: Optional[float] = None

    def __post_init__(self):
        if self.mean_iterations is not None and self.mean_iterations < 1:
            raise TAInputError("mean_iterations must be at least 1, got {0!r}"
                               .format(self.mean_iterations))
        if self.wall_clock_ns < 0:
            raise TAInputError("wall_clock_ns must not be negative")

    def as_row(self):
        return [TARecordWriter.format_field(value) for value in astuple(self)]


class TARecordWriter():
    """Writes ExperimentRecords under the fixed CSV header"""

    def __init__(self, stream):
        self.writer = csv.writer(stream, lineterminator='\n')
        self.writer.writerow(TAVar.ta_csv_header)

    @staticmethod
    def format_field(value):
        if value is None:
            return ''
        if isinstance(value, float):
            return repr(float(value))
        return str(value)

    def write(self, record):
        self.writer.writerow(record.as_row())

    def write_all(self, records):
        for record in records:
            self.write(record)

    @staticmethod
    def read(stream):
        """Rows of a records CSV as dicts, empty fields become None"""
        reader = csv.DictReader(stream)
        if tuple(reader.fieldnames or ()) != TAVar.ta_csv_header:
            raise TAInputError("unexpected CSV header {0}"
                               .format(reader.fieldnames))
        return [{key: (value if value != '' else None)
                 for key, value in row.items()} for row in reader]

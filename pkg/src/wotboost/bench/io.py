"""Delimited-text dataset ingestion."""

import csv
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..data import MAJORITY, MINORITY, Dataset, make_dataset
from ..exceptions import InvertedClassesError, ParseError, UnknownLabelValueError


@dataclass(frozen=True)
class CsvSchema:
    """How to read one CSV file.

    ``label_column`` is a header name or a 0-based column index (negative
    indices count from the end). Every other column must be numeric.
    """

    label_column: Union[str, int] = -1
    minority_value: str = "1"
    delimiter: str = ","


def _label_index(header, label_column):
    if isinstance(label_column, int):
        idx = label_column if label_column >= 0 else len(header) + label_column
        if not 0 <= idx < len(header):
            raise ParseError(f"label column index {label_column} out of range")
        return idx
    if label_column in header:
        return header.index(label_column)
    try:
        return _label_index(header, int(label_column))
    except ValueError:
        raise ParseError(f"label column {label_column!r} not in header {header}") from None


def load_csv(path, schema: CsvSchema = CsvSchema()) -> Dataset:
    """Read a header-first CSV into a :class:`Dataset`.

    Raises
    ------
    ParseError
        A non-label cell is not a finite real, or a row has the wrong
        number of cells. The message names the file line and column.
    UnknownLabelValueError
        The minority value never occurs, or the label column has more than
        two distinct values.
    InvertedClassesError
        The declared minority outnumbers the other class.
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh, delimiter=schema.delimiter)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise ParseError(f"{path}: empty file") from None
        li = _label_index(header, schema.label_column)
        feature_cols = [j for j in range(len(header)) if j != li]
        rows, raw_labels = [], []
        for line_no, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(header):
                raise ParseError(f"{path}: line {line_no} has {len(row)} cells, "
                                 f"expected {len(header)}", row=line_no)
            values = []
            for j in feature_cols:
                cell = row[j].strip()
                try:
                    v = float(cell)
                except ValueError:
                    v = None
                if v is None or not np.isfinite(v):
                    raise ParseError(f"{path}: line {line_no}, column {header[j]!r}: "
                                     f"cannot parse {cell!r} as a finite number",
                                     row=line_no, column=header[j])
                values.append(v)
            rows.append(values)
            raw_labels.append(row[li].strip())

    raw_labels = np.array(raw_labels, dtype=object)
    minority = str(schema.minority_value).strip()
    distinct = sorted(set(raw_labels))
    if minority not in distinct:
        raise UnknownLabelValueError(
            f"{path}: minority value {minority!r} not found among {distinct}")
    if len(distinct) > 2:
        raise UnknownLabelValueError(
            f"{path}: expected a binary label column, found values {distinct}")
    labels = np.where(raw_labels == minority, MINORITY, MAJORITY).astype(np.int8)
    n_min = int(labels.sum())
    if n_min > labels.size - n_min:
        raise InvertedClassesError(
            f"{path}: declared minority {minority!r} has {n_min} of {labels.size} rows")
    features = np.array(rows, dtype=np.float64).reshape(len(rows), len(feature_cols))
    return make_dataset(features, labels, [header[j] for j in feature_cols])

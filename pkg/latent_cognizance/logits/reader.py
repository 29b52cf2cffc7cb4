import csv
import re
import warnings
from typing import List, Optional, Sequence

from ..shared.data import LatentCognizanceError, LogitParseError, LogitRecord, make_logit_record

ANNOTATION_COLUMNS = ['sample_id', 'group_id', 'true_class', 'is_novel']
LOGIT_COLUMN_PATTERN = re.compile(r'^a_(\d+)$')


def _logit_columns(header: Sequence[str]) -> List[int]:
    """
    @return: The column indices holding a_0..a_{K-1}, in class order.
    """
    if list(header[:len(ANNOTATION_COLUMNS)]) != ANNOTATION_COLUMNS:
        raise LogitParseError(1, f'Header must start with {",".join(ANNOTATION_COLUMNS)} (got {",".join(header)})')
    columns = dict()
    for index, name in enumerate(header[len(ANNOTATION_COLUMNS):], start=len(ANNOTATION_COLUMNS)):
        match = LOGIT_COLUMN_PATTERN.match(name)
        if match is None:
            warnings.warn(f'Ignoring unrecognized column "{name}"')
            continue
        columns[int(match.group(1))] = index
    if sorted(columns.keys()) != list(range(len(columns))):
        raise LogitParseError(1, f'Logit columns must be a_0..a_K-1 without gaps (got {sorted(columns.keys())})')
    if len(columns) < 2:
        raise LogitParseError(1, f'At least 2 logit columns are required (got {len(columns)})')
    return [columns[k] for k in range(len(columns))]


def _parse_true_class(line_number: int, text: str) -> Optional[int]:
    if text == '':
        return None
    try:
        return int(text)
    except ValueError:
        raise LogitParseError(line_number, f'true_class must be an integer or empty (got "{text}")')


def _parse_is_novel(line_number: int, text: str) -> bool:
    match text:
        case '1':
            return True
        case '0':
            return False
        case _:
            raise LogitParseError(line_number, f'is_novel must be 0 or 1 (got "{text}")')


def _parse_logit(line_number: int, name: str, text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise LogitParseError(line_number, f'{name} is not a number (got "{text}")')
    if value != value or value in (float('inf'), float('-inf')):
        raise LogitParseError(line_number, f'{name} is not finite (got "{text}")')
    return value


def read_logit_csv(path: str) -> List[LogitRecord]:
    """
    Reads a logit file: a header `sample_id,group_id,true_class,is_novel,a_0,...,a_{K-1}` followed by one row per
    sample. `true_class` is empty for novel samples.

    @param path: The path of the UTF-8 CSV file.
    @return: The records, in file order.
    """
    records = []
    with open(path, 'r', encoding='utf-8', newline='') as fp:
        reader = csv.reader(fp)
        header = next(reader, None)
        if header is None:
            raise LogitParseError(1, 'File is empty; expected a header row')
        logit_columns = _logit_columns(header)
        for row in reader:
            line_number = reader.line_num
            if len(row) == 0:
                continue
            if len(row) != len(header):
                raise LogitParseError(line_number, f'Expected {len(header)} fields, got {len(row)}')
            sample_id, group_id, true_class_text, is_novel_text = row[:len(ANNOTATION_COLUMNS)]
            true_class = _parse_true_class(line_number, true_class_text)
            is_novel = _parse_is_novel(line_number, is_novel_text)
            logits = [_parse_logit(line_number, header[column], row[column]) for column in logit_columns]
            try:
                records.append(make_logit_record(sample_id, group_id, true_class, is_novel, logits, line_number))
            except LatentCognizanceError as e:
                raise LogitParseError(line_number, str(e)) from e
    return records

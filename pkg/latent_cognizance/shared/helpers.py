import csv
import io
import os
import tempfile
from typing import Iterable, Optional, Sequence

SIGNIFICANT_DIGITS = 17


def format_float(value: float) -> str:
    """
    Formats a real number with 17 significant digits, which round-trips every float64 exactly.
    Infinities are written as `inf` / `-inf`.
    """
    return format(float(value), f'.{SIGNIFICANT_DIGITS}g')


def format_cell(value) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return '1' if value else '0'
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def write_text_atomic(path: str, contents: str):
    """
    Writes `contents` to `path` through a temporary file in the same directory followed by a rename, so readers
    never observe a partially written file.
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, temp_path = tempfile.mkstemp(prefix='.tmp-', dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as fp:
            fp.write(contents)
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise


def csv_text(header: Optional[Sequence[str]], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    if header is not None:
        writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])
    return buffer.getvalue()


def write_csv(path: str, header: Optional[Sequence[str]], rows: Iterable[Sequence]):
    write_text_atomic(path, csv_text(header, rows))

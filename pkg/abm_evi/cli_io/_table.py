"""result tables and their on-disk formats"""

from dataclasses import dataclass, field
import csv
import hashlib
import io
import json
import logging
import math
from pathlib import Path


import numpy as np


from ..errors import InvalidArgument


log = logging.getLogger(__name__)


FORMATS = ('csv', 'json')


def git_blob_sha1(text) -> str:
    """hash of text as git would store it, so `git hash-object` agrees"""
    data = text.encode('utf-8')
    return hashlib.sha1(b'blob %d\0' % len(data) + data).hexdigest()


def format_value(value) -> str:
    """CSV cell for a value, floats with 17 significant digits so they read back exactly"""
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), '.17g')
    return str(value)


def parse_value(text):
    """inverse of format_value, falling back to the string itself"""
    if text == '':
        return None
    if text in ('true', 'false'):
        return text == 'true'
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def _json_value(value):
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


@dataclass(frozen=True)
class ResultTable:
    """rows of values under a fixed list of column names

    Attributes
    ----------
    schema: tuple[str]
        column names in output order
    rows: tuple[tuple]
        one tuple per row, each as long as the schema
    manifest: dict
        description of how the table was made (config, seed, version)
    """

    schema: tuple
    rows: tuple
    manifest: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'schema', tuple(self.schema))
        object.__setattr__(self, 'rows', tuple(tuple(row) for row in self.rows))
        for i, row in enumerate(self.rows):
            if len(row) != len(self.schema):
                raise InvalidArgument(
                    f'row {i} has {len(row)} values but the schema has {len(self.schema)} columns'
                )

    @classmethod
    def from_records(cls, schema, records, manifest = None):
        """build from dicts keyed by column name, missing keys become empty cells"""
        return cls(
            schema=schema,
            rows=[[record.get(column) for column in schema] for record in records],
            manifest=manifest or {},
        )

    def records(self):
        return [dict(zip(self.schema, row)) for row in self.rows]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(self.schema)
        writer.writerows([format_value(v) for v in row] for row in self.rows)
        return buffer.getvalue()

    @property
    def content_hash(self) -> str:
        """git blob SHA-1 of the CSV form of schema and rows"""
        return git_blob_sha1(self.to_csv())

    def full_manifest(self):
        """the manifest with the content hash added"""
        return {**self.manifest, 'content_hash': self.content_hash}

    def to_json(self) -> str:
        records = [
            {column: _json_value(value) for column, value in zip(self.schema, row)}
            for row in self.rows
        ]
        return json.dumps(
            {'schema': list(self.schema), 'rows': records, 'manifest': self.full_manifest()},
            indent=2,
        ) + '\n'

    def serialize(self, fmt = 'csv') -> str:
        if fmt not in FORMATS:
            raise InvalidArgument(f'unknown table format {fmt!r}, options are {list(FORMATS)}')
        return self.to_csv() if fmt == 'csv' else self.to_json()


def write_table(table, path, fmt = 'csv'):
    """write the table to path as CSV or JSON

    Raises
    ------
    OSError
        if the file cannot be written
    """
    text = table.serialize(fmt)
    Path(path).write_text(text, encoding='utf-8')
    log.info('wrote %d rows to %s', len(table.rows), path)


def read_table(path) -> ResultTable:
    """read a table written by write_table, the format follows the suffix"""
    path = Path(path)
    text = path.read_text(encoding='utf-8')
    if path.suffix == '.json':
        content = json.loads(text)
        schema = content['schema']
        manifest = dict(content.get('manifest', {}))
        manifest.pop('content_hash', None)
        return ResultTable.from_records(schema, content['rows'], manifest)
    reader = csv.reader(io.StringIO(text))
    schema = next(reader, None)
    if schema is None:
        raise InvalidArgument(f'{path} is empty, expected at least a header row')
    return ResultTable(schema=schema, rows=[[parse_value(v) for v in row] for row in reader])


def read_observations(path) -> np.ndarray:
    """one number per line, blank lines and lines starting with # skipped

    Raises
    ------
    InvalidArgument
        naming the line of the first entry that is not a finite number
    OSError
        if the file cannot be read
    """
    values = []
    with open(path, 'rb') as f:
        for lineno, raw_line in enumerate(f, start=1):
            try:
                entry = raw_line.decode('utf-8').strip()
            except UnicodeDecodeError:
                raise InvalidArgument(f'{path}:{lineno}: not UTF-8') from None
            if not entry or entry.startswith('#'):
                continue
            try:
                value = float(entry)
            except ValueError:
                raise InvalidArgument(f'{path}:{lineno}: {entry!r} is not a number') from None
            if not math.isfinite(value):
                raise InvalidArgument(f'{path}:{lineno}: {entry!r} is not finite')
            values.append(value)
    if not values:
        raise InvalidArgument(f'{path} holds no observations')
    return np.array(values)

"""command line surface, experiment files and result tables

    from abm_evi import cli_io
    config = cli_io.parse_config('experiment.json')   # or 'fig3a-student-t2'
    table = cli_io.ResultTable(('index', 'weight'), [(1, 0.5), (2, 0.5)])
    cli_io.write_table(table, 'weights.csv')
    table.content_hash

The command line itself is `python -m abm_evi --help`.
"""

from ._table import (
    FORMATS,
    ResultTable,
    git_blob_sha1,
    format_value,
    parse_value,
    write_table,
    read_table,
    read_observations,
)
from ._config import parse_config, parse_dgp
from ._cli import main, build_parser, EXIT_OK, EXIT_INVALID, EXIT_FIT, EXIT_IO

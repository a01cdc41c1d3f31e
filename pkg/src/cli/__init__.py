"""
Command-line handlers
"""

from .commands import (
    COMMANDS,
    TableRequest,
    build_table,
    parse_n_range,
    cmd_read,
    cmd_dist,
    cmd_decompose,
    cmd_check,
    cmd_enum,
    cmd_verify,
    cmd_bounds,
    cmd_table,
)

__all__ = [
    'COMMANDS',
    'TableRequest',
    'build_table',
    'parse_n_range',
    'cmd_read',
    'cmd_dist',
    'cmd_decompose',
    'cmd_check',
    'cmd_enum',
    'cmd_verify',
    'cmd_bounds',
    'cmd_table',
]

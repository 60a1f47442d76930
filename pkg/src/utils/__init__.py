"""
Make utils a package.
"""
from .config import (
    load_config, get_settings, env_overrides, load_reference_tables
)
from .helpers import (
    VERSION, set_quiet, log, warn, error, to_jsonable, format_millis, format_witness,
    render_report, process_stats, format_duration
)
from .report import ClaimRecord, ClaimReport, save_report, load_report

__all__ = [
    'load_config', 'get_settings', 'env_overrides', 'load_reference_tables',
    'VERSION', 'set_quiet', 'log', 'warn', 'error', 'to_jsonable', 'format_millis', 'format_witness',
    'render_report', 'process_stats', 'format_duration',
    'ClaimRecord', 'ClaimReport', 'save_report', 'load_report'
]

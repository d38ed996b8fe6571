"""
Spec files, the example catalog, job dispatch and report emission
"""
from .spec_format import JobKind, JobSpec, WindowSequence, check_spec, format_spec, parse_spec
from .catalog import examples_catalog, get_example
from .jobs import JobResult, Regions, TilingResult, config_for, run_job
from .report import ReportFormat, emit_report

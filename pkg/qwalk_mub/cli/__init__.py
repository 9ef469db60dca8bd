"""Command-line interface: argument parsing, run configuration and table writers."""

from .config import RunConfig, resolve_output_dir
from .main import build_parser, main
from .writers import render_csv, render_dat, render_json, write_table

__all__ = [
    'RunConfig',
    'resolve_output_dir',
    'build_parser',
    'main',
    'render_json',
    'render_csv',
    'render_dat',
    'write_table',
]

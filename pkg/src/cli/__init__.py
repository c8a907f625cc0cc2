"""
hardy-verify Command Line Module
"""

from .io import load_config, load_sequence, parse_rule, write_csv, write_json
from .main import RunOutcome, cli, main

__all__ = [
    "cli",
    "main",
    "RunOutcome",
    "load_sequence",
    "load_config",
    "parse_rule",
    "write_csv",
    "write_json",
]

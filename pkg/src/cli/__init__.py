"""
Command Line Module

Configuration, subcommand handlers and the ``gsemi`` entry point.
"""

from .commands import COMMANDS, SCHEMAS, CommandResult, parse_indec, parse_sn_object
from .config import Config, default_config_document, load_config
from .main import build_parser, main, run

__all__ = [
    'Config',
    'load_config',
    'default_config_document',
    'CommandResult',
    'COMMANDS',
    'SCHEMAS',
    'parse_indec',
    'parse_sn_object',
    'build_parser',
    'run',
    'main',
]

"""
Command-line entry point
"""

from .commands import main, build_parser, CommandRunner, CommandOutcome, EXIT_PASS, EXIT_FAIL, EXIT_USAGE

__all__ = ['main', 'build_parser', 'CommandRunner', 'CommandOutcome', 'EXIT_PASS', 'EXIT_FAIL', 'EXIT_USAGE']

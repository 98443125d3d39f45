"""
wlpkit Testing Package.

Provides utilities for testing the wlpkit command line in-process:
- CliRunner: runs ``wlpkit`` with an argument list
- CliResult: captured exit code, stdout and stderr
"""

from .runner import CliResult, CliRunner

__all__ = ["CliRunner", "CliResult"]

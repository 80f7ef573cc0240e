"""
Command-line interface for hyperck.
"""

from hyperck.cli.main import cli

__all__ = ["cli"]

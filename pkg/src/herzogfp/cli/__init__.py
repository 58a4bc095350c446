"""Command-line front end and the text formats it reads."""

from .main import build_parser, main, run

__all__ = ["build_parser", "main", "run"]

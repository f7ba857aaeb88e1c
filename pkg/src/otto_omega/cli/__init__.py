from __future__ import annotations

from otto_omega.cli.main import build_parser, main

__all__ = ["build_parser", "main"]

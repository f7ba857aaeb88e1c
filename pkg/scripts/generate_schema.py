"""
Write the JSON Schema of `otto --config` files to docs/config_schema.yaml.

Usage (repo checkout):
  - uv run python scripts/generate_schema.py
  - python scripts/generate_schema.py --out /tmp/config_schema.yaml
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import yaml

HEADER = (
    "# GENERATED FILE - DO NOT EDIT BY HAND\n"
    "# Source: otto_omega.io.config.ConfigFile.model_json_schema()\n"
)


def _bootstrap() -> Path:
    """Put the checkout's src/ on sys.path and return the checkout root."""
    here = Path(__file__).resolve()
    root = next(
        (p for p in here.parents if (p / "pyproject.toml").exists()), here.parent
    )
    src = root / "src"
    if src.is_dir() and str(src) not in sys.path:
        sys.path.insert(0, str(src))
    return root


def render_schema() -> str:
    from otto_omega.io.config import CONFIG_SCHEMA
    from otto_omega.schema.validator import check_schema

    body = yaml.safe_dump(
        check_schema(CONFIG_SCHEMA),
        sort_keys=False,
        default_flow_style=False,
        allow_unicode=True,
    )
    return HEADER + body


def main() -> int:
    root = _bootstrap()

    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument(
        "--out",
        type=Path,
        default=root / "docs" / "config_schema.yaml",
        help="Output path (default: docs/config_schema.yaml)",
    )
    args = parser.parse_args()

    text = render_schema()
    out_path = args.out.expanduser().resolve()
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(text, encoding="utf-8")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

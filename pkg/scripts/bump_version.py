"""
Bump the hyperck version and open a CHANGELOG section for it.

The version lives only in hyperck/__init__.py; pyproject.toml reads it
dynamically.

Usage:
    python scripts/bump_version.py 0.2.0
    python scripts/bump_version.py 0.2.0 --dry-run
"""

from __future__ import annotations

import re
from pathlib import Path

import click

ROOT = Path(__file__).resolve().parents[1]
INIT_PATH = ROOT / "hyperck" / "__init__.py"
CHANGELOG_PATH = ROOT / "CHANGELOG.md"

VERSION_PATTERN = re.compile(r'__version__\s*=\s*"([^"]+)"')
VERSION_SHAPE = re.compile(r"^\d+\.\d+\.\d+([.-]?[A-Za-z0-9]+)*$")


def current_version() -> str:
    match = VERSION_PATTERN.search(INIT_PATH.read_text())
    if match is None:
        raise click.ClickException(f"No __version__ in {INIT_PATH}")
    return match.group(1)


def bumped_init(text: str, new_version: str) -> str:
    return VERSION_PATTERN.sub(f'__version__ = "{new_version}"', text, count=1)


def bumped_changelog(text: str, new_version: str) -> str:
    """Insert an empty `## <version>` section under the title unless it exists."""
    heading = f"## {new_version}"
    if heading in text.splitlines():
        return text
    title, _, rest = text.partition("\n")
    return f"{title}\n\n{heading}\n- \n{rest}"


@click.command()
@click.argument("new_version")
@click.option("--dry-run", is_flag=True, help="Show the change without writing")
def main(new_version: str, dry_run: bool) -> None:
    """Set hyperck.__version__ to NEW_VERSION."""
    if not VERSION_SHAPE.match(new_version):
        raise click.BadParameter(f"{new_version!r} is not MAJOR.MINOR.PATCH[-suffix]")
    old_version = current_version()
    click.echo(f"{old_version} -> {new_version}")
    if dry_run:
        return
    INIT_PATH.write_text(bumped_init(INIT_PATH.read_text(), new_version))
    if CHANGELOG_PATH.exists():
        CHANGELOG_PATH.write_text(bumped_changelog(CHANGELOG_PATH.read_text(), new_version))


if __name__ == "__main__":
    main()

"""Bundled operator records."""
from __future__ import annotations

from importlib import resources

from ..cli.records import OperatorRecord, parse_record


def names() -> list[str]:
    return sorted(p.name[:-3] for p in resources.files(__name__).iterdir() if p.name.endswith(".op"))


def record_text(name: str) -> str:
    path = resources.files(__name__) / f"{name}.op"
    if not path.is_file():
        raise KeyError(f"no bundled record {name!r}; known: {', '.join(names())}")
    return path.read_text(encoding="utf-8")


def load(name: str) -> OperatorRecord:
    return parse_record(record_text(name))

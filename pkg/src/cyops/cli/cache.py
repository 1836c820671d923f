"""Content-addressed JSON result cache with atomic writes."""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable


def encode(value: Any) -> Any:
    """Exact rationals become "p/q" strings; containers are walked."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot cache {type(value).__name__}")


def decode_fraction(s: str) -> Fraction:
    return Fraction(s)


def cache_key(record_text: str, command: str, params: dict) -> str:
    payload = json.dumps({"record": record_text, "command": command, "params": encode(params)},
                         sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class ResultCache:
    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> Any | None:
        p = self.path(key)
        if not p.exists():
            return None
        try:
            return json.loads(p.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError):
            return None  # a damaged entry is a miss

    def put(self, key: str, value: Any) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        data = json.dumps(encode(value), sort_keys=True, indent=1)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(data)
            os.replace(tmp, self.path(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def cached(self, record_text: str, command: str, params: dict,
               compute: Callable[[], Any]) -> Any:
        key = cache_key(record_text, command, params)
        hit = self.get(key)
        if hit is not None:
            return hit
        value = encode(compute())
        self.put(key, value)
        return value


def default_cache_dir() -> Path:
    env = os.environ.get("CYOPS_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "cyops"

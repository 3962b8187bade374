"""Flat-file result cache: one JSON file per content-hash key."""

from __future__ import annotations

import hashlib
import os
from pathlib import Path

__all__ = ["ResultCache", "default_cache_dir"]


def default_cache_dir() -> Path:
    env = os.environ.get("FINFRAME_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "finframe"


class ResultCache:
    """Caches serialized command results keyed by input-content hashes."""

    def __init__(self, root: Path | None = None, enabled: bool = True):
        self.enabled = enabled
        self.root = Path(root) if root is not None else default_cache_dir()

    @staticmethod
    def key(material: str) -> str:
        return hashlib.sha256(material.encode("utf-8")).hexdigest()

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, key: str) -> str | None:
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            return path.read_text(encoding="utf-8")
        except OSError:
            return None

    def put(self, key: str, text: str) -> None:
        if not self.enabled:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        self._path(key).write_text(text, encoding="utf-8")

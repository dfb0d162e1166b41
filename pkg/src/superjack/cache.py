"""Content-addressed on-disk store for computed coefficients.

Each entry is one JSON file named by the sha256 of its key.  The file
carries a checksum of its payload; a mismatch, unreadable file or any
filesystem error is reported as a miss, so the cache can only cost time,
never correctness.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any

from .partitions import Partition
from .symfunc import POWERSUM, SymFunc

ENV_VAR = "SUPERJACK_CACHE_DIR"
DEFAULT_DIR = ".superjack-cache"

log = logging.getLogger(__name__)


def _canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _digest(obj: Any) -> str:
    return hashlib.sha256(_canonical(obj).encode()).hexdigest()


def default_cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR) or DEFAULT_DIR)


class DiskCache:
    """JSON entries keyed by arbitrary JSON-serializable keys."""

    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()

    def path_for(self, key: Any) -> Path:
        return self.root / f"{_digest(key)}.json"

    def load(self, key: Any) -> Any | None:
        path = self.path_for(key)
        try:
            with open(path, encoding="utf-8") as fh:
                entry = json.load(fh)
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            log.warning("cache read failed for %s: %s", path, exc)
            return None
        if not isinstance(entry, dict) or entry.get("key") != key:
            log.warning("cache entry %s does not match its key; ignoring", path)
            return None
        payload = entry.get("payload")
        if entry.get("checksum") != _digest(payload):
            log.warning("cache entry %s failed its checksum; ignoring", path)
            return None
        return payload

    def store(self, key: Any, payload: Any) -> bool:
        entry = {"key": key, "payload": payload, "checksum": _digest(payload)}
        path = self.path_for(key)
        tmp = None
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(_canonical(entry))
            os.replace(tmp, path)
            return True
        except OSError as exc:
            log.warning("cache write failed for %s: %s", path, exc)
            if tmp is not None:
                try:
                    os.unlink(tmp)
                except OSError:
                    pass
            return False

    # -- Jack store interface -----------------------------------------------
    @staticmethod
    def jack_key(lam: Partition) -> dict:
        return {"kind": "jack", "partition": list(lam), "basis": POWERSUM}

    def load_jack(self, lam: Partition) -> SymFunc | None:
        payload = self.load(self.jack_key(lam))
        if payload is None:
            return None
        try:
            return SymFunc.from_json(payload)
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("cached Jack function for %s is malformed: %s", tuple(lam), exc)
            return None

    def store_jack(self, lam: Partition, value: SymFunc) -> None:
        self.store(self.jack_key(lam), value.to_json())

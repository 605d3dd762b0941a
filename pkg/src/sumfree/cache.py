"""Append-only JSON-lines result cache. The latest record for a key wins."""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__

CACHE_ENV = "SUMFREE_CACHE"


def cache_key(command: str, n: int, algorithm: str, mode: str = "") -> dict:
    return {"command": command, "n": n, "algorithm": algorithm, "mode": mode, "version": __version__}


def _canon(key: dict) -> str:
    return json.dumps(key, sort_keys=True)


@dataclass
class ResultCache:
    path: Path

    @classmethod
    def from_env(cls, explicit: str | None = None) -> ResultCache | None:
        target = explicit or os.environ.get(CACHE_ENV)
        return cls(Path(target)) if target else None

    def _load(self) -> dict[str, dict]:
        table: dict[str, dict] = {}
        if not self.path.exists():
            return table
        with self.path.open(encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError:
                    # a torn final line from an interrupted write
                    continue
                table[_canon(rec["key"])] = rec["value"]
        return table

    def get(self, key: dict) -> dict | None:
        return self._load().get(_canon(key))

    def put(self, key: dict, value: dict) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        rec = {"key": key, "value": value, "timestamp": time.time()}
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")

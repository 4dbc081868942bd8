"""On-disk invariant cache.

One JSON file per (canonical_key, invariant, params) under a two-level hex
directory.  Writes are atomic (temp file + rename) so concurrent writers of
identical keys race benignly; corrupt or unreadable entries are ignored and
recomputed by the caller.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Optional


class InvariantCache:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, canonical_key: bytes, invariant: str, params: Any) -> Path:
        h = hashlib.sha256()
        h.update(canonical_key)
        h.update(invariant.encode())
        h.update(json.dumps(params, sort_keys=True, default=str).encode())
        digest = h.hexdigest()
        return self.root / digest[:2] / digest[2:4] / f"{digest}.json"

    def get(self, canonical_key: bytes, invariant: str, params: Any) -> Optional[dict]:
        path = self._path(canonical_key, invariant, params)
        try:
            with open(path) as fh:
                payload = json.load(fh)
        except (OSError, json.JSONDecodeError):
            return None
        if not isinstance(payload, dict) or payload.get("invariant") != invariant:
            return None
        return payload.get("record")

    def put(self, canonical_key: bytes, invariant: str, params: Any, record: dict) -> None:
        path = self._path(canonical_key, invariant, params)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"invariant": invariant, "params": params, "record": record}
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh)
            os.replace(tmp, path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass

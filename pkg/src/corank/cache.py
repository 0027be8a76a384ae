"""Decision cache keyed by canonical form, operation, domain and budgets.

Budget fields are part of every key so changed budgets can never serve a
stale decision.  The optional directory back-end stores one JSON file per
entry; writes go through a single process (the CLI parent).
"""

import hashlib
import json
from pathlib import Path


class DecisionCache:
    def __init__(self, directory=None):
        self._mem = {}
        self._dir = Path(directory) if directory else None
        if self._dir:
            self._dir.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def _filename(key):
        blob = json.dumps(key, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest() + ".json"

    def get(self, key):
        if key in self._mem:
            return self._mem[key]
        if self._dir:
            path = self._dir / self._filename(key)
            if path.exists():
                value = json.loads(path.read_text())
                self._mem[key] = value
                return value
        return None

    def put(self, key, value):
        self._mem[key] = value
        if self._dir:
            path = self._dir / self._filename(key)
            path.write_text(json.dumps(value, sort_keys=True))

    def __len__(self):
        return len(self._mem)

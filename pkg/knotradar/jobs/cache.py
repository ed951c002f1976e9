"""
Result cache

One JSON file per record, named by the record digest. Writes go through a
temporary file in the cache directory and os.replace, so readers never see
a partial record.
"""

import json
import logging
import os
import tempfile
from pathlib import Path
from threading import Lock
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


class ResultCache:
    """Flat-file cache of result records"""

    def __init__(self, cache_dir: str):
        self.cache_dir = Path(cache_dir)
        self._lock = Lock()
        self._hits = 0
        self._misses = 0

    def _path(self, key: str) -> Path:
        return self.cache_dir / f"{key}.json"

    def get(self, key: str) -> Optional[Dict[str, Any]]:
        """
        Look up a record

        Returns:
            the stored dict, or None when absent or unreadable
        """
        path = self._path(key)
        with self._lock:
            try:
                data = json.loads(path.read_text(encoding="utf-8"))
            except FileNotFoundError:
                self._misses += 1
                return None
            except (OSError, ValueError) as e:
                logger.warning("cache.get unreadable key=%s error=%s", key, e)
                self._misses += 1
                return None
            self._hits += 1
            return data

    def set(self, key: str, value: Dict[str, Any]) -> None:
        text = json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
        with self._lock:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.cache_dir, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as f:
                    f.write(text)
                os.replace(tmp, self._path(key))
            except BaseException:
                Path(tmp).unlink(missing_ok=True)
                raise
        logger.debug("cache.set key=%s", key)

    def delete(self, key: str) -> bool:
        with self._lock:
            try:
                self._path(key).unlink()
            except FileNotFoundError:
                return False
            return True

    def clear(self) -> int:
        """Remove every record; returns how many were removed"""
        removed = 0
        with self._lock:
            if not self.cache_dir.is_dir():
                return 0
            for path in self.cache_dir.glob("*.json"):
                path.unlink(missing_ok=True)
                removed += 1
        return removed

    def get_stats(self) -> Dict[str, Any]:
        with self._lock:
            entries = len(list(self.cache_dir.glob("*.json"))) if self.cache_dir.is_dir() else 0
            return {
                "dir": str(self.cache_dir),
                "total_entries": entries,
                "hits": self._hits,
                "misses": self._misses,
            }


# one instance per directory
_caches: Dict[str, ResultCache] = {}
_caches_lock = Lock()


def get_cache(cache_dir: str) -> ResultCache:
    key = str(Path(cache_dir).resolve())
    with _caches_lock:
        if key not in _caches:
            _caches[key] = ResultCache(cache_dir)
        return _caches[key]

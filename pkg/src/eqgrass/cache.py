"""Content-addressed on-disk cache for solver reports.

Reports are stored as byte-stable JSON in files named by a hash of the
parameters, the strategy, and a format version, so stale entries from
older releases simply miss.  Writes go through a temp file and rename,
and corrupt entries are treated as misses.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path

from .search import SolveReport, Strategy

CACHE_ENV_VAR = "EQGRASS_CACHE_DIR"
CACHE_VERSION = 1


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "eqgrass"


def cache_key(k: int, p: int, q: int, strategy: Strategy, version: int = CACHE_VERSION) -> str:
    payload = json.dumps(
        {
            "k": k,
            "p": p,
            "q": q,
            "strategy": strategy.kind,
            "depth": strategy.depth,
            "version": version,
        },
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode()).hexdigest()


def _entry_path(cache_dir: Path, key: str) -> Path:
    return cache_dir / f"{key}.json"


def store(cache_dir: Path, report: SolveReport, version: int = CACHE_VERSION) -> Path:
    cache_dir.mkdir(parents=True, exist_ok=True)
    key = cache_key(report.k, report.p, report.q, report.strategy, version)
    path = _entry_path(cache_dir, key)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(report.to_json_bytes())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load(
    cache_dir: Path,
    k: int,
    p: int,
    q: int,
    strategy: Strategy,
    version: int = CACHE_VERSION,
) -> SolveReport | None:
    path = _entry_path(cache_dir, cache_key(k, p, q, strategy, version))
    if not path.exists():
        return None
    try:
        with open(path, "rb") as fh:
            return SolveReport.from_json(json.loads(fh.read()))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"warning: ignoring corrupt cache entry {path}: {exc}", file=sys.stderr)
        return None

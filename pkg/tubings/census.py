"""Labeled connected graph census and an on-disk cache of tubing enumerations.

The cache stores one JSON file per graph, named by the SHA-256 of the graph's
canonical encoding. Each file carries a checksum of its payload; a file that
fails to parse or to verify is ignored and recomputed.
"""

from __future__ import annotations

from collections import Counter
import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Iterator

from tubings.errors import CapExceededError
from tubings.graph import Graph
from tubings.tubing import Tubing, enumerate_tubings

logger = logging.getLogger(__name__)

CENSUS_CAP = 6
CACHE_ENV_VAR = "TUBINGS_CACHE_DIR"


def graphs_with_nodes(n: int) -> Iterator[Graph]:
    """All labeled connected graphs on n nodes, by increasing edge bitmask."""
    if n > CENSUS_CAP:
        raise CapExceededError("graph census node count", n, CENSUS_CAP)
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if bits >> k & 1])
        if g.is_connected():
            yield g


def graph_census(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """Connected labeled graphs with min_n..max_n nodes, smallest first."""
    if max_n > CENSUS_CAP:
        raise CapExceededError("graph census node count", max_n, CENSUS_CAP)
    for n in range(min_n, max_n + 1):
        count = 0
        for g in graphs_with_nodes(n):
            count += 1
            yield g
        logger.info(f"Census: {count} connected graphs on {n} nodes")


def census_counts(max_n: int) -> dict[int, int]:
    return dict(Counter(g.n for g in graph_census(max_n)))


def graph_key(g: Graph) -> str:
    """SHA-256 of the canonical encoding of a graph."""
    canonical = json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _checksum(payload: list) -> str:
    return hashlib.sha256(json.dumps(payload, separators=(",", ":")).encode("utf-8")).hexdigest()


def resolve_cache_dir(cache_dir: str | None) -> Path | None:
    """The explicit directory, else the environment override, else no cache."""
    chosen = cache_dir or os.environ.get(CACHE_ENV_VAR)
    return Path(chosen) if chosen else None


class TubingCache:
    """Memoises ``enumerate_tubings`` on disk, keyed by graph."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.hits = 0
        self.misses = 0

    def _path(self, g: Graph) -> Path:
        return self.directory / f"{graph_key(g)}.json"

    def _load(self, g: Graph) -> tuple[Tubing, ...] | None:
        path = self._path(g)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
            payload = data["tubings"]
            if data.get("checksum") != _checksum(payload):
                logger.debug(f"Cache checksum mismatch for {path.name}, recomputing")
                return None
            return tuple(Tubing(g, tuple(tubes)) for tubes in payload)
        except (OSError, ValueError, KeyError, TypeError) as e:
            logger.debug(f"Unreadable cache entry {path.name} ({e}), recomputing")
            return None

    def _store(self, g: Graph, tubings: tuple[Tubing, ...]) -> None:
        payload = [list(T.tubes) for T in tubings]
        data = {"graph": {"n": g.n, "edges": [list(e) for e in g.edges]},
                "tubings": payload, "checksum": _checksum(payload)}
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            tmp = self._path(g).with_suffix(".tmp")
            tmp.write_text(json.dumps(data, separators=(",", ":")), encoding="utf-8")
            tmp.replace(self._path(g))
        except OSError as e:
            logger.debug(f"Could not write cache entry for {g!r}: {e}")

    def tubings(self, g: Graph, workers: int | None = None) -> tuple[Tubing, ...]:
        """Cached tubings of ``g``; a miss enumerates them on ``workers`` threads."""
        cached = self._load(g)
        if cached is not None:
            self.hits += 1
            return cached
        self.misses += 1
        result = enumerate_tubings(g, workers)
        self._store(g, result)
        return result

"""Shipped data files: named clusters, bubble trees, golden drawings.

Resolution order for the data directory: explicit argument, then the
GRAPECALC_DATA environment variable, then the files packaged with the
library.
"""

from __future__ import annotations

import os
from pathlib import Path

from .hexgrapes import GrapeCluster

_PACKAGED = Path(__file__).parent / "data"


def data_dir(override: str | os.PathLike | None = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get("GRAPECALC_DATA")
    if env:
        return Path(env)
    return _PACKAGED


def cluster_path(name: str, override=None) -> Path:
    return data_dir(override) / f"{name}.grapes"


def load_named_cluster(name: str, override=None) -> GrapeCluster:
    path = cluster_path(name, override)
    if not path.exists():
        raise FileNotFoundError(f"no cluster data file {path}")
    return GrapeCluster.from_text(path.read_text(encoding="utf-8"))


def load_cluster_ref(ref: str, override=None) -> GrapeCluster:
    """A cluster reference is either a named data file or a path."""
    p = Path(ref)
    if p.suffix == ".grapes" or p.exists():
        return GrapeCluster.from_text(p.read_text(encoding="utf-8"))
    return load_named_cluster(ref, override)


def list_clusters(override=None) -> list[str]:
    d = data_dir(override)
    if not d.exists():
        return []
    return sorted(p.stem for p in d.glob("*.grapes"))


def tree_path(name: str, override=None) -> Path:
    return data_dir(override) / "trees" / f"{name}.tree"

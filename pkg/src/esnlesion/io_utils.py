"""Shared file-format helpers: round-trip float formatting, CSV/JSON writing,
and content digests for run manifests."""

from __future__ import annotations

import csv
import hashlib
import json
import os
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "fmt17",
    "write_csv",
    "read_csv_rows",
    "write_json",
    "read_json",
    "sha256_file",
    "write_matrix_csv",
    "read_matrix_csv",
]


def fmt17(x: float) -> str:
    """Format a float with 17 significant digits (exact float64 round trip)."""
    return format(float(x), ".17g")


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def read_csv_rows(path: str | Path) -> tuple[list[str], list[list[str]]]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        return header, [row for row in reader]


def write_json(path: str | Path, obj) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_json(path: str | Path):
    with open(path) as fh:
        return json.load(fh)


def sha256_file(path: str | Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def write_matrix_csv(path: str | Path, matrix: np.ndarray) -> None:
    """Dense matrix as CSV, one row per line, 17 significant digits."""
    m = np.atleast_2d(np.asarray(matrix, dtype=float))
    write_csv(path, [f"c{j}" for j in range(m.shape[1])],
              ([fmt17(v) for v in row] for row in m))


def read_matrix_csv(path: str | Path) -> np.ndarray:
    _, rows = read_csv_rows(path)
    return np.array([[float(v) for v in row] for row in rows], dtype=float)


def ensure_dir(path: str | Path) -> Path:
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p

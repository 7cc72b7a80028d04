"""Immutable point-set container and its text file format.

File format: lines starting with ``#`` are comments; the first other line is
``N s``; then N lines of s space-separated decimals (17 significant digits,
enough to round-trip any double).
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DimensionMismatch, PointSetFormatError


@dataclass(frozen=True, eq=False)
class PointSet:
    """A multi-set of N points in [0, 1)^s, stored as a read-only (N, s) array."""

    coords: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coords, dtype=np.float64, copy=True)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"point set needs shape (N, s) with N, s >= 1, got {arr.shape}")
        if not np.all(np.isfinite(arr)) or arr.min() < 0.0 or arr.max() >= 1.0:
            raise ValueError("every coordinate must lie in [0, 1)")
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    @property
    def N(self) -> int:
        return self.coords.shape[0]

    @property
    def s(self) -> int:
        return self.coords.shape[1]

    def __len__(self):
        return self.N

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.coords.shape == other.coords.shape and bool(np.array_equal(self.coords, other.coords))

    def __hash__(self):
        return hash((self.coords.shape, self.coords.tobytes()))

    def __repr__(self):
        return f"PointSet(N={self.N}, s={self.s})"

    def concat(self, other: "PointSet") -> "PointSet":
        if other.s != self.s:
            raise DimensionMismatch(f"cannot concatenate s={self.s} with s={other.s}")
        return PointSet(np.vstack([self.coords, other.coords]))


def format_pointset(P: PointSet, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append(f"{P.N} {P.s}")
    for row in P.coords:
        lines.append(" ".join(format(float(x), ".17g") for x in row))
    return "\n".join(lines) + "\n"


def write_pointset(P: PointSet, path, comment: str | None = None) -> None:
    Path(path).write_text(format_pointset(P, comment), encoding="utf-8")


def parse_pointset(text: str) -> PointSet:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise PointSetFormatError("empty point-set file")
    header = rows[0].split()
    if len(header) != 2:
        raise PointSetFormatError(f"header must be 'N s', got {rows[0]!r}")
    try:
        N, s = int(header[0]), int(header[1])
    except ValueError as exc:
        raise PointSetFormatError(f"bad header {rows[0]!r}") from exc
    if N < 1 or s < 1:
        raise PointSetFormatError(f"header needs N, s >= 1, got N={N}, s={s}")
    body = rows[1:]
    if len(body) != N:
        raise PointSetFormatError(f"header says N={N} but file has {len(body)} point rows")
    data = np.empty((N, s), dtype=np.float64)
    for i, ln in enumerate(body):
        fields = ln.split()
        if len(fields) != s:
            raise PointSetFormatError(f"row {i + 1} has {len(fields)} values, expected s={s}")
        try:
            data[i] = [float(f) for f in fields]
        except ValueError as exc:
            raise PointSetFormatError(f"row {i + 1}: {exc}") from exc
    try:
        return PointSet(data)
    except ValueError as exc:
        raise PointSetFormatError(str(exc)) from exc


def read_pointset(path) -> PointSet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PointSetFormatError(f"cannot read {path}: {exc}") from exc
    return parse_pointset(text)

"""Complete uniform distribution tests for pseudo-random streams.

A stream u_1, u_2, ... is cut into non-overlapping s-blocks
(u_{(n-1)s+1}, ..., u_{ns}); it is completely uniformly distributed when the
star-discrepancy of the first N blocks tends to 0 for every s.

Stream spec strings: ``lcg:a,c,m,x0``, ``vdc:base``, ``random:seed``.
"""
from __future__ import annotations

import csv
import io
import math

import numpy as np

from .discrepancy import DEFAULT_BUDGET, star_discrepancy_exact, star_discrepancy_lower
from .errors import BadBase, BudgetExceeded, StreamSpecError
from .generators import vdc_array
from .pointset import PointSet


class Stream:
    """Stateful, replayable stream in [0, 1). ``position`` is the 1-based index of the next value."""

    def __init__(self, spec: str):
        self.spec = spec
        kind, _, args = spec.partition(":")
        try:
            vals = [int(a) for a in args.split(",")] if args else []
        except ValueError as exc:
            raise StreamSpecError(f"bad stream spec {spec!r}: {exc}") from exc
        if kind == "lcg":
            if len(vals) != 4:
                raise StreamSpecError("lcg spec is lcg:a,c,m,x0")
            self.a, self.c, self.m, x0 = vals
            if self.m < 1 or not 0 <= x0 < self.m:
                raise StreamSpecError("lcg needs m >= 1 and 0 <= x0 < m")
            self._state = x0
        elif kind == "vdc":
            if len(vals) != 1:
                raise StreamSpecError("vdc spec is vdc:base")
            if vals[0] < 2:
                raise BadBase(f"base must be >= 2, got {vals[0]}")
            self.base = vals[0]
        elif kind == "random":
            if len(vals) != 1:
                raise StreamSpecError("random spec is random:seed")
            self._rng = np.random.Generator(np.random.PCG64(vals[0]))
        else:
            raise StreamSpecError(f"unknown stream kind {kind!r}; use lcg, vdc or random")
        self.kind = kind
        self.position = 1

    def __repr__(self):
        return f"Stream({self.spec!r}, position={self.position})"

    def fresh(self) -> "Stream":
        return Stream(self.spec)

    def take(self, k: int) -> np.ndarray:
        """Next k values u_position .. u_{position+k-1}."""
        k = int(k)
        if self.kind == "lcg":
            out = np.empty(k)
            x = self._state
            for i in range(k):
                out[i] = x / self.m
                x = (self.a * x + self.c) % self.m
            self._state = x
        elif self.kind == "vdc":
            out = vdc_array(np.arange(self.position, self.position + k), self.base)
        else:
            out = self._rng.random(k)
        self.position += k
        return out


def blocks(stream: Stream, s: int, N: int) -> PointSet:
    """N consecutive non-overlapping s-blocks, continuing from the stream's position."""
    return PointSet(stream.take(int(N) * int(s)).reshape(int(N), int(s)))


def _cell(stream, s, N, method, budget, restarts, seed):
    P = blocks(stream.fresh(), s, N)
    if method == "exact":
        try:
            res = star_discrepancy_exact(P, budget)
        except BudgetExceeded:
            return None, "budget-exceeded"
    else:
        res = star_discrepancy_lower(P, restarts, seed)
    return res.value, res.method


def cud_profile(stream: Stream, dims, Ns, method: str = "exact", budget=DEFAULT_BUDGET, restarts=32, seed=0):
    """Rows (s, N, dstar, method); each cell restarts the stream from u_1.

    Cells over budget are kept with ``dstar=None`` and method ``budget-exceeded``.
    """
    if method not in ("exact", "lower"):
        raise ValueError("method is 'exact' or 'lower'")
    rows = []
    for s in dims:
        for N in Ns:
            d, m = _cell(stream, s, N, method, budget, restarts, seed)
            rows.append({"s": int(s), "N": int(N), "dstar": d, "method": m})
    return rows


def growing_dimension(N: int, c: float) -> int:
    """s_N = max(1, ceil(c ln N))."""
    return max(1, math.ceil(c * math.log(N)))


def growing_dim_profile(stream: Stream, c: float, Ns, method: str = "exact", budget=DEFAULT_BUDGET, restarts=32, seed=0):
    """Rows (N, s_N, dstar, envelope, ratio) with envelope sqrt(s_N ln N / N)."""
    rows = []
    for N in Ns:
        s = growing_dimension(N, c)
        d, m = _cell(stream, s, N, method, budget, restarts, seed)
        env = math.sqrt(s * math.log(N) / N) if N > 1 else float("nan")
        ratio = d / env if (d is not None and env > 0) else None
        rows.append({"N": int(N), "s": s, "dstar": d, "method": m, "envelope": env, "ratio": ratio})
    return rows


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def rows_to_csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(r[c]) for c in columns])
    return buf.getvalue()


PROFILE_COLUMNS = ("s", "N", "dstar", "method")
GROWING_COLUMNS = ("N", "s", "dstar", "method", "envelope", "ratio")


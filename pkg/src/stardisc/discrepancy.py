"""Local, star and weighted star-discrepancy.

The star-discrepancy is a supremum over anchored boxes [0, t). It is reached
on the critical grid: in each dimension j the candidate values of t_j are the
j-th coordinates of the points together with 1. At a grid corner q the
supremum is the larger of

* the open-box deficit  vol(q) - #{x : x < q}/N      (strict in every coordinate)
* the closed-box excess #{x : x <= q}/N - vol(q)     (limit of open boxes from above)

which is what :func:`star_discrepancy_exact` enumerates.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptySubset,
    IndexOutOfRange,
    NotFound,
    NotOneDimensional,
    WeightsTooShort,
)
from .pointset import PointSet

DEFAULT_BUDGET = 10 ** 9
EXACT, LOWER = "exact", "lower-bound"
# rounding allowance when comparing computed discrepancies to thresholds
VALUE_TOL = 1e-12


@dataclass(frozen=True)
class AnchoredBox:
    corner: tuple
    side: str = "open"  # "open" = prod [0, t_j), "closed" = prod [0, t_j]

    def __post_init__(self):
        if self.side not in ("open", "closed"):
            raise ValueError(f"side must be 'open' or 'closed', got {self.side!r}")
        c = tuple(float(x) for x in self.corner)
        if any(not 0.0 <= x <= 1.0 for x in c):
            raise ValueError("box corner must lie in [0, 1]^s")
        object.__setattr__(self, "corner", c)

    def volume(self) -> float:
        v = 1.0
        for x in self.corner:
            v *= x
        return v

    def count(self, P: PointSet) -> int:
        t = np.asarray(self.corner)
        if self.side == "open":
            inside = np.all(P.coords < t, axis=1)
        else:
            inside = np.all(P.coords <= t, axis=1)
        return int(inside.sum())

    def local_value(self, P: PointSet) -> float:
        """|count/N - volume| under this box's side convention."""
        return abs(self.count(P) / P.N - self.volume())


@dataclass(frozen=True)
class DiscrepancyResult:
    value: float
    witness: AnchoredBox
    method: str
    boxes_evaluated: int = 0

    def to_record(self) -> str:
        """One-line JSON record: value, method, witness corner, side."""
        return json.dumps(
            {
                "value": self.value,
                "method": self.method,
                "witness": list(self.witness.corner),
                "side": self.witness.side,
                "boxes_evaluated": self.boxes_evaluated,
            }
        )


@dataclass(frozen=True)
class ProductWeights:
    gammas: tuple = field(default_factory=tuple)

    def __post_init__(self):
        g = tuple(float(x) for x in self.gammas)
        if any(not (x >= 0.0) or math.isinf(x) for x in g):
            raise ValueError("weights must be finite and non-negative")
        object.__setattr__(self, "gammas", g)

    @classmethod
    def ones(cls, s):
        return cls((1.0,) * s)

    def check(self, s):
        if len(self.gammas) < s:
            raise WeightsTooShort(f"need {s} weights, got {len(self.gammas)}")

    def subset_weight(self, u) -> float:
        """gamma_u for 1-based indices u; the empty product is one."""
        w = 1.0
        for j in u:
            w *= self.gammas[j - 1]
        return w


# ---------------------------------------------------------------- helpers

def _check_dim(P, t):
    t = np.asarray(t, dtype=np.float64).reshape(-1)
    if t.shape[0] != P.s:
        raise DimensionMismatch(f"corner has {t.shape[0]} coordinates, point set has s={P.s}")
    if np.any(t < 0.0) or np.any(t > 1.0):
        raise ValueError("corner must lie in [0, 1]^s")
    return t


def critical_grid(P: PointSet):
    """Per-dimension sorted grids (point coordinates plus 1) and integer ranks."""
    grids = []
    ranks = np.empty(P.coords.shape, dtype=np.int64)
    for j in range(P.s):
        g = np.unique(np.append(P.coords[:, j], 1.0))
        grids.append(g)
        ranks[:, j] = np.searchsorted(g, P.coords[:, j])
    return grids, ranks


def exact_cost(P: PointSet, grids=None) -> int:
    """Box-point operations of the sweep: every outer corner scans all N points in s coordinates."""
    if grids is None:
        grids, _ = critical_grid(P)
    outer = 1
    for g in grids[:-1]:
        outer *= len(g)
    return outer * (P.N * P.s + len(grids[-1]))


def local_discrepancy(P: PointSet, t) -> float:
    """Signed local discrepancy #{x in [0, t)}/N - prod t_j (open box)."""
    t = _check_dim(P, t)
    inside = np.all(P.coords < t, axis=1)
    return float(inside.sum()) / P.N - float(np.prod(t))


# ---------------------------------------------------------------- star discrepancy

def star_discrepancy_exact(P: PointSet, budget: float = DEFAULT_BUDGET, backend=None) -> DiscrepancyResult:
    """Exact D* by enumerating the critical grid.

    Raises :class:`BudgetExceeded` when :func:`exact_cost` is above ``budget``;
    fall back to :func:`star_discrepancy_lower` in that case.
    """
    grids, ranks = critical_grid(P)
    cost = exact_cost(P, grids)
    if cost > budget:
        raise BudgetExceeded(cost, budget)
    value, idx, side = _kernels.exact_max_local(ranks, grids, backend)
    corner = tuple(float(grids[j][k]) for j, k in enumerate(idx))
    n_corners = 1
    for g in grids:
        n_corners *= len(g)
    return DiscrepancyResult(
        value=value,
        witness=AnchoredBox(corner, "open" if side == _kernels.OPEN else "closed"),
        method=EXACT,
        boxes_evaluated=2 * n_corners,
    )


def star_discrepancy_1d(P: PointSet) -> float:
    """Closed form 1/(2N) + max_i |x_(i) - (2i - 1)/(2N)| for one-dimensional sets."""
    if P.s != 1:
        raise NotOneDimensional(f"need s = 1, got s={P.s}")
    x = np.sort(P.coords[:, 0])
    N = x.shape[0]
    centers = (2.0 * np.arange(1, N + 1) - 1.0) / (2.0 * N)
    return 1.0 / (2.0 * N) + float(np.max(np.abs(x - centers)))


def _corner_value(grids, ranks, cur, N):
    """Two-sided local discrepancy at one grid corner; open side wins ties."""
    vol = 1.0
    for j, k in enumerate(cur):
        vol *= grids[j][k]
    c = np.asarray(cur)
    n_open = int(np.all(ranks < c, axis=1).sum())
    n_closed = int(np.all(ranks <= c, axis=1).sum())
    d_open, d_closed = vol - n_open / N, n_closed / N - vol
    return (d_open, _kernels.OPEN) if d_open >= d_closed else (d_closed, _kernels.CLOSED)


def star_discrepancy_lower(P: PointSet, restarts: int = 32, seed: int = 0, backend=None) -> DiscrepancyResult:
    """Lower bound on D* from multistart coordinate-wise hill climbing on the critical grid.

    Each restart draws a random grid corner, then repeatedly replaces one
    coordinate by its best grid value (both box sides scored) until a full pass
    brings no strict improvement. Starting corners come from one PCG64 stream in
    order, so the value is non-decreasing in ``restarts`` for a fixed seed.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    grids, ranks = critical_grid(P)
    sizes = [len(g) for g in grids]
    N, s = P.N, P.s
    rng = np.random.Generator(np.random.PCG64(int(seed)))
    best_val, best_corner, best_side = -np.inf, None, _kernels.OPEN
    evaluated = 0
    for _ in range(restarts):
        cur = [int(rng.integers(0, n)) for n in sizes]
        val, side = _corner_value(grids, ranks, cur, N)
        evaluated += 2
        improved = True
        while improved:
            improved = False
            for j in range(s):
                h_open, h_closed = _kernels.line_counts(ranks, cur, j, sizes[j], backend)
                others = 1.0
                for k in range(s):
                    if k != j:
                        others *= grids[k][cur[k]]
                vol = others * grids[j]
                d_open = vol - (np.cumsum(h_open) - h_open) / N
                d_closed = np.cumsum(h_closed) / N - vol
                evaluated += 2 * sizes[j]
                cand, k, cand_side = _kernels._first_max_2d(d_open, d_closed)
                if cand > val:
                    val, side = cand, cand_side
                    cur[j] = k
                    improved = True
        if val > best_val:
            best_val, best_corner, best_side = val, tuple(cur), side
    corner = tuple(float(grids[j][k]) for j, k in enumerate(best_corner))
    witness = AnchoredBox(corner, "open" if best_side == _kernels.OPEN else "closed")
    # report the value recomputed from the witness so it is re-checkable verbatim
    return DiscrepancyResult(witness.local_value(P), witness, LOWER, evaluated)


def star_discrepancy(P: PointSet, budget: float = DEFAULT_BUDGET, restarts: int = 32, seed: int = 0, backend=None):
    """Exact D* when affordable, otherwise the multistart lower bound."""
    try:
        return star_discrepancy_exact(P, budget, backend)
    except BudgetExceeded:
        return star_discrepancy_lower(P, restarts, seed, backend)


# ---------------------------------------------------------------- projections, weights

def project(P: PointSet, u) -> PointSet:
    """Keep the coordinates with (1-based) indices in ``u``; duplicates are kept."""
    u = sorted(set(int(j) for j in u))
    if not u:
        raise EmptySubset("projection needs a non-empty coordinate subset")
    if u[0] < 1 or u[-1] > P.s:
        raise IndexOutOfRange(f"subset {u} not within 1..{P.s}")
    return PointSet(P.coords[:, [j - 1 for j in u]])


@dataclass(frozen=True)
class WeightedResult:
    value: float
    subset: tuple
    method: str
    subsets_evaluated: int


def subset_order(w: ProductWeights, s: int):
    """Non-empty subsets of 1..s in visiting order: weight desc, size desc, then lexicographic."""
    subs = [u for k in range(1, s + 1) for u in combinations(range(1, s + 1), k)]
    return sorted(subs, key=lambda u: (-w.subset_weight(u), -len(u), u))


def _subset_disc(P, u, budget, restarts, seed, backend):
    Q = project(P, u)
    try:
        return star_discrepancy_exact(Q, budget, backend)
    except BudgetExceeded:
        return star_discrepancy_lower(Q, restarts, seed, backend)


def weighted_star_discrepancy(
    P: PointSet,
    w: ProductWeights,
    budget: float = DEFAULT_BUDGET,
    prune: bool = True,
    restarts: int = 32,
    seed: int = 0,
    backend=None,
) -> WeightedResult:
    """max over non-empty u of gamma_u * D*(project(P, u)).

    This equals the sup over z of the max over u of gamma_u |Delta((z_u, 1))|
    because Delta((z_u, 1)) is the local discrepancy of the projection at z_u,
    so the sup can be taken per subset.

    Subsets are visited in :func:`subset_order`; with ``prune`` the search
    stops once gamma_u <= best so far (D* never exceeds 1). Among equal
    values the first subset in visiting order is reported, which makes the
    pruned and exhaustive searches agree.
    """
    w.check(P.s)
    best_val, best_u, method, evaluated = 0.0, None, EXACT, 0
    for u in subset_order(w, P.s):
        g = w.subset_weight(u)
        if prune and best_u is not None and g <= best_val:
            break
        res = _subset_disc(P, u, budget, restarts, seed, backend)
        evaluated += 1
        if res.method != EXACT:
            method = LOWER
        val = g * res.value
        if best_u is None or val > best_val:
            best_val, best_u = val, u
    return WeightedResult(best_val, best_u, method, evaluated)


# ---------------------------------------------------------------- inverse search

def admissible_sizes(family: str, s: int, N_max: int, seed: int = 0):
    """(N, build) pairs in increasing N for the family, up to N_max."""
    from . import generators as gen
    from .ntheory import primes_up_to

    if family in ("korobov-P", "P"):
        for p in primes_up_to(N_max):
            if s < p:
                yield p, (lambda p=p: gen.generate_pset("P", p, s))
    elif family in ("korobov-Q", "Q", "huawang-R", "R"):
        fam = "Q" if family in ("korobov-Q", "Q") else "R"
        for p in primes_up_to(math.isqrt(N_max)):
            if s < p:
                yield p * p, (lambda p=p: gen.generate_pset(fam, p, s))
    elif family == "vdc":
        if s != 1:
            raise DimensionMismatch("vdc family is one-dimensional")
        for N in range(1, N_max + 1):
            yield N, (lambda N=N: gen.GeneratorSpec("vdc", 1, N=N).build())
    else:
        for N in range(1, N_max + 1):
            yield N, (lambda N=N: gen.generate_reference(family, N, s, seed=seed))


def inverse_discrepancy_search(family: str, s: int, eps: float, N_max: int, budget: float = DEFAULT_BUDGET, seed: int = 0, backend=None):
    """Smallest admissible N <= N_max whose set has exact D* <= eps.

    Returns ``(N, DiscrepancyResult)``. Random sets use the given seed for
    every N. The comparison allows ``VALUE_TOL`` of rounding, so that e.g. the
    centered set with D* = 1/(2N) meets eps = 1/(2N) (0.4 - 0.3 != 0.1 in
    binary floating point).
    """
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must lie in (0, 1]")
    for N, build in admissible_sizes(family, s, N_max, seed):
        res = star_discrepancy_exact(build(), budget, backend)
        if res.value <= eps + VALUE_TOL:
            return N, res
    raise NotFound(f"no admissible N <= {N_max} reaches D* <= {eps}")

"""Equal-weight quadrature with Koksma-Hlawka error certification.

Shipped integrands have closed-form integrals and Hardy-Krause variations
(anchored at 1):

=========  =====================  ==========  ==============
id         f(x)                   integral    variation
=========  =====================  ==========  ==============
prod       prod_j x_j             2^-s        2^s - 1
sum-sq     (1/s) sum_j x_j^2      1/3         1
linear-1d  x  (s = 1 only)        1/2         1
=========  =====================  ==========  ==============

For prod, every restriction of f to a face x_{-u} = 1 is prod_{j in u} x_j
whose mixed derivative is 1, giving one unit per non-empty u. For sum-sq only
singleton faces have a non-zero mixed derivative, each contributing 1/s.
:func:`hk_variation_grid` recomputes these by finite differences.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from .discrepancy import DEFAULT_BUDGET, star_discrepancy_exact
from .errors import DimensionMismatch
from .pointset import PointSet


@dataclass(frozen=True)
class TestFunction:
    id: str
    f: Callable[[np.ndarray], np.ndarray]  # (N, s) -> (N,)
    exact_integral: Callable[[int], float]
    variation: Callable[[int], float]
    dims: tuple | None = None  # allowed dimensions; None = any

    __test__ = False  # not a pytest class

    def check_dim(self, s: int):
        if self.dims is not None and s not in self.dims:
            raise DimensionMismatch(f"{self.id} is defined for s in {self.dims}, got s={s}")


TEST_FUNCTIONS = {
    "prod": TestFunction(
        "prod",
        lambda x: np.prod(x, axis=1),
        lambda s: 2.0 ** -s,
        lambda s: 2.0 ** s - 1.0,
    ),
    "sum-sq": TestFunction(
        "sum-sq",
        lambda x: np.mean(x * x, axis=1),
        lambda s: 1.0 / 3.0,
        lambda s: 1.0,
    ),
    "linear-1d": TestFunction(
        "linear-1d",
        lambda x: x[:, 0],
        lambda s: 0.5,
        lambda s: 1.0,
        dims=(1,),
    ),
}


def get_function(fid: str) -> TestFunction:
    try:
        return TEST_FUNCTIONS[fid]
    except KeyError:
        raise KeyError(f"unknown test function {fid!r}; choose from {', '.join(TEST_FUNCTIONS)}") from None


def integrate(P: PointSet, f) -> float:
    """Equal-weight average (1/N) sum f(x_n)."""
    if isinstance(f, str):
        f = get_function(f)
    f.check_dim(P.s)
    return float(np.mean(f.f(P.coords)))


@dataclass(frozen=True)
class KHCheck:
    estimate: float
    exact: float
    abs_error: float
    dstar: float
    variation: float
    bound: float
    holds: bool


def kh_check(P: PointSet, f, budget=DEFAULT_BUDGET, backend=None) -> KHCheck:
    """|integral - estimate| <= V(f) D*(P), with D* computed exactly."""
    if isinstance(f, str):
        f = get_function(f)
    est = integrate(P, f)
    exact = f.exact_integral(P.s)
    err = abs(exact - est)
    d = star_discrepancy_exact(P, budget, backend).value
    V = f.variation(P.s)
    bound = V * d
    return KHCheck(est, exact, err, d, V, bound, err <= bound + 1e-12)


def hk_variation_grid(f, s: int, m: int = 64) -> float:
    """Hardy-Krause variation (anchored at 1) from mixed differences on an m^s grid.

    Sums, over every non-empty face u, the absolute |u|-fold mixed differences
    of f restricted to x_j = 1 for j not in u. Exact for integrands whose
    mixed partials do not change sign, a lower bound in general.
    """
    if isinstance(f, str):
        f = get_function(f)
    g = np.linspace(0.0, 1.0, m + 1)
    total = 0.0
    for k in range(1, s + 1):
        for u in combinations(range(s), k):
            axes = [g if j in u else np.array([1.0]) for j in range(s)]
            mesh = np.meshgrid(*axes, indexing="ij")
            pts = np.stack([a.reshape(-1) for a in mesh], axis=1)
            vals = f.f(pts).reshape([len(a) for a in axes])
            for j in u:
                vals = np.diff(vals, axis=j)
            total += float(np.abs(vals).sum())
    return total

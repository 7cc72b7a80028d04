"""Closed-form discrepancy rates and bounds.

Rates are returned as shapes only: the leading constants of the underlying
existence results are not known, so nothing here should be read as a
certified numerical bound except :func:`hoeffding_bound`, whose constants
are all explicit. Logarithms are natural throughout.
"""
from __future__ import annotations

import math

import numpy as np

from .discrepancy import ProductWeights
from .errors import BadKind, MissingConstant, NotPrimePower
from .ntheory import prime_power_base

RATE_KINDS = ("hnww", "thm2", "asymptotic-upper")


def rate(kind: str, N: int, s: int) -> float:
    """Rate shapes: sqrt(s/N), sqrt(s/N) sqrt(ln s + ln N), (ln N)^(s-1)/N."""
    if N < 1 or s < 1:
        raise ValueError("N and s must be >= 1")
    if kind == "hnww":
        return math.sqrt(s / N)
    if kind == "thm2":
        return math.sqrt(s / N) * math.sqrt(math.log(s) + math.log(N))
    if kind == "asymptotic-upper":
        if N < 2:
            raise ValueError("asymptotic-upper needs N >= 2")
        return math.log(N) ** (s - 1) / N
    raise BadKind(f"unknown rate kind {kind!r}; choose from {', '.join(RATE_KINDS)}")


def _log_union(eps, N, s):
    """log of 2 (ceil(s/eps) + 1)^s exp(-N eps^2 / 2); vectorised over eps."""
    m = np.ceil(s / np.asarray(eps, dtype=np.float64))
    return math.log(2.0) + s * np.log(m + 1.0) - N * np.asarray(eps) ** 2 / 2.0


def hoeffding_feasible(eps: float, N: int, s: int) -> bool:
    return bool(_log_union(eps, N, s) <= 0.0)


def hoeffding_epsilon(N: int, s: int, tol: float = 1e-12) -> float:
    """Smallest eps in (0, 1] with 2 (ceil(s/eps)+1)^s exp(-N eps^2/2) <= 1.

    Returns 1.0 when even eps = 1 fails (the bound is then trivial). The left
    side is non-increasing in eps, so plain bisection applies.
    """
    if N < 1 or s < 1:
        raise ValueError("N and s must be >= 1")
    if not hoeffding_feasible(1.0, N, s):
        return 1.0
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid > 0.0 and hoeffding_feasible(mid, N, s):
            hi = mid
        else:
            lo = mid
    return hi


def hoeffding_bound(N: int, s: int) -> float:
    """min(1, 2 eps*): a fully explicit upper bound on the N-th minimal star-discrepancy."""
    return min(1.0, 2.0 * hoeffding_epsilon(N, s))


def _sorted_weights(w: ProductWeights, s: int):
    w.check(s)
    return sorted(w.gammas[:s], reverse=True)


def hps_inner_max(w: ProductWeights, s: int) -> float:
    """max over non-empty u of gamma_u sqrt(|u|) for product weights.

    For a fixed size k the largest gamma_u is the product of the k largest
    weights, so only the s sorted prefixes need checking.
    """
    best, prod = 0.0, 1.0
    for k, g in enumerate(_sorted_weights(w, s), start=1):
        prod *= g
        best = max(best, prod * math.sqrt(k))
    return best


def hps_weighted_rate(N: int, s: int, w: ProductWeights) -> float:
    """sqrt(ln s'/N) * max_u gamma_u sqrt(|u|), with s' = max(s, 2)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return math.sqrt(math.log(max(s, 2)) / N) * hps_inner_max(w, s)


def wang_terms(N: int, s: int, q: int, w: ProductWeights, C: float):
    """Per-coordinate factors gamma_j C j ln(j + q) ln(qN), j = 1..s."""
    if C is None:
        raise MissingConstant("wang_bound needs an explicit constant C > 0")
    if not C > 0:
        raise ValueError("C must be positive")
    if prime_power_base(q) is None:
        raise NotPrimePower(f"q={q} is not a prime power")
    w.check(s)
    lq = math.log(q * N)
    return [w.gammas[j - 1] * C * j * math.log(j + q) * lq for j in range(1, s + 1)]


def wang_bound(N: int, s: int, q: int, w: ProductWeights, C: float) -> float:
    """(1/N) max over non-empty u of prod_{j in u} t_j.

    The maximising subset is exactly the set of factors above 1; if there is
    none, the best single factor.
    """
    t = wang_terms(N, s, q, w, C)
    big = [x for x in t if x > 1.0]
    if not big:
        return max(t) / N
    prod = 1.0
    for x in big:
        prod *= x
    return prod / N

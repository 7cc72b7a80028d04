"""Exponential sums behind the p-set discrepancy estimates, and their Weil-type bounds.

Family P:  |sum_{n<p}   e((h_1 n + ... + h_s n^s)/p)|         <= (s-1) sqrt(p)
Family Q:  |sum_{n<p^2} e((h_1 n + ... + h_s n^s)/p^2)|       <= (s-1) p
Family R:  |sum_{a,k<p} e(k (h_1 + h_2 a + ... + h_s a^(s-1))/p)| <= (s-1) p

each for h with p not dividing at least one h_j. Polynomial arguments are
reduced in integer arithmetic before indexing a table of roots of unity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import _kernels
from .errors import BadFamily, BudgetExceeded, NotPrime
from .ntheory import is_prime

FAMILIES = ("P", "Q", "R")
DEFAULT_TOL = 1e-6
DEFAULT_BUDGET = 10 ** 9


@dataclass(frozen=True)
class ExpSumReport:
    family: str
    p: int
    h: tuple
    magnitude: float
    bound: float
    admissible: bool  # p does not divide every h_j, so the bound applies
    tight: bool

    @property
    def within_bound(self) -> bool:
        return (not self.admissible) or self.magnitude <= self.bound + DEFAULT_TOL

    def to_record(self) -> str:
        return (
            f"family={self.family} p={self.p} h={','.join(map(str, self.h))} "
            f"magnitude={self.magnitude!r} bound={self.bound!r} "
            f"admissible={str(self.admissible).lower()} tight={str(self.tight).lower()}"
        )


def weil_bound(family: str, p: int, s: int) -> float:
    if family == "P":
        return (s - 1) * math.sqrt(p)
    if family in ("Q", "R"):
        return float((s - 1) * p)
    raise BadFamily(f"unknown family {family!r}; choose from P, Q, R")


def _magnitudes(family, p, H, backend=None):
    if family == "P":
        return _kernels.poly_sum_magnitudes(H, p, backend)
    if family == "Q":
        return _kernels.poly_sum_magnitudes(H, p * p, backend)
    if family == "R":
        return _kernels.r_sum_magnitudes(H, p, backend)
    raise BadFamily(f"unknown family {family!r}; choose from P, Q, R")


def exp_sum(family: str, p: int, h, tol: float = DEFAULT_TOL, backend=None) -> ExpSumReport:
    """Evaluate one sum and compare it with its bound.

    A vector h with every entry divisible by p is still evaluated, but flagged
    ``admissible=False``: the bound says nothing about it.
    """
    if family not in FAMILIES:
        raise BadFamily(f"unknown family {family!r}; choose from P, Q, R")
    p = int(p)
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    h = tuple(int(x) for x in h)
    if not h:
        raise ValueError("h must have at least one entry")
    mag = float(_magnitudes(family, p, np.array([h], dtype=np.int64), backend)[0])
    bound = weil_bound(family, p, len(h))
    return ExpSumReport(
        family=family,
        p=p,
        h=h,
        magnitude=mag,
        bound=bound,
        admissible=any(x % p for x in h),
        tight=abs(mag - bound) < tol,
    )


@dataclass
class FamilyCheck:
    family: str
    s: int
    checked: int = 0
    violations: int = 0
    max_ratio: float = 0.0
    max_magnitude: float = 0.0
    worst_h: tuple = ()
    bound: float = 0.0


@dataclass
class WeilReport:
    p: int
    s: int
    tol: float
    families: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(fc.violations == 0 for fc in self.families.values())

    def summary_lines(self):
        for fam, fc in self.families.items():
            yield (
                f"family={fam} p={self.p} s={fc.s} checked={fc.checked} violations={fc.violations} "
                f"bound={fc.bound!r} max_magnitude={fc.max_magnitude!r} max_ratio={fc.max_ratio!r}"
            )


def _ratio(mag, bound, tol):
    if bound > 0:
        return mag / bound
    return 0.0 if mag <= tol else math.inf


def admissible_vectors(p: int, s: int, modulus: int) -> np.ndarray:
    """All h in {0..modulus-1}^s except those with every entry divisible by p."""
    H = np.array(list(product(range(modulus), repeat=s)), dtype=np.int64).reshape(-1, s)
    keep = np.any(H % p != 0, axis=1)
    return H[keep]


def weil_cost(p: int, s: int, families=FAMILIES) -> int:
    """Number of summand evaluations an exhaustive check performs."""
    cost = 0
    if "P" in families:
        cost += p ** s * p
    if "R" in families:
        cost += p ** s * p * p
    if "Q" in families and s <= 2:
        cost += p ** (2 * s) * p * p
    return cost


def verify_weil(p: int, s: int, tol: float = DEFAULT_TOL, families=FAMILIES, budget: float = DEFAULT_BUDGET, backend=None) -> WeilReport:
    """Exhaustively check the three bounds over every admissible h.

    Family Q enumerates h modulo p^2 and is only run for s <= 2.
    """
    p, s = int(p), int(s)
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if s < 1:
        raise ValueError("s must be >= 1")
    for fam in families:
        if fam not in FAMILIES:
            raise BadFamily(f"unknown family {fam!r}")
    cost = weil_cost(p, s, families)
    if cost > budget:
        raise BudgetExceeded(cost, budget, "exhaustive Weil check")
    report = WeilReport(p, s, tol)
    for fam in families:
        if fam == "Q" and s > 2:
            continue
        H = admissible_vectors(p, s, p * p if fam == "Q" else p)
        mags = _magnitudes(fam, p, H, backend)
        bound = weil_bound(fam, p, s)
        ratios = np.array([_ratio(m, bound, tol) for m in mags])
        i = int(np.argmax(ratios))
        report.families[fam] = FamilyCheck(
            family=fam,
            s=s,
            checked=len(H),
            violations=int(np.sum(mags > bound + tol)),
            max_ratio=float(ratios[i]),
            max_magnitude=float(mags.max()),
            worst_h=tuple(int(x) for x in H[i]),
            bound=bound,
        )
    return report

"""Deterministic point-set families and seeded random sets.

Korobov-type p-sets are built from modular powers in exact integer
arithmetic; the division by the modulus is the only floating-point step, so
every coordinate is the correctly rounded value of an integer multiple of
1/p (or 1/p**2).

Random sets use numpy's PCG64 bit generator (``numpy.random.PCG64(seed)``),
one 64-bit draw per coordinate, filled row by row.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadBase,
    BadFamily,
    CenteredNeedsDim1,
    DegreeTooLarge,
    DimensionMismatch,
    MissingSeed,
    NotPrime,
)
from .ntheory import first_primes, is_prime
from .pointset import PointSet

PSET_FAMILIES = ("korobov-P", "korobov-Q", "huawang-R")
REFERENCE_FAMILIES = ("vdc", "halton", "random", "centered")
FAMILIES = PSET_FAMILIES + REFERENCE_FAMILIES

_PSET_ALIASES = {"P": "korobov-P", "Q": "korobov-Q", "R": "huawang-R"}


def _pset_family(family: str) -> str:
    name = _PSET_ALIASES.get(family, family)
    if name not in PSET_FAMILIES:
        raise BadFamily(f"unknown p-set family {family!r}")
    return name


def _power_table(base: np.ndarray, s: int, mod: int) -> np.ndarray:
    """Columns base**1 .. base**s reduced mod ``mod``, by iterated multiplication."""
    if (mod - 1) ** 2 >= 2 ** 63:
        base = base.astype(object)
    else:
        base = base.astype(np.int64)
    out = np.empty((base.shape[0], s), dtype=base.dtype)
    cur = base % mod
    out[:, 0] = cur
    for j in range(1, s):
        cur = (cur * base) % mod
        out[:, j] = cur
    return out


def modular_powers(base, s: int, mod: int) -> np.ndarray:
    """Integer table ``base[i]**j mod mod`` for j = 1..s (shape (len(base), s))."""
    return _power_table(np.asarray(base), s, mod)


def generate_pset(family: str, p: int, s: int) -> PointSet:
    """Korobov P (p points), Korobov Q (p**2 points) or Hua-Wang R (p**2 points).

    Parameters
    ----------
    family : {"P", "Q", "R"} or {"korobov-P", "korobov-Q", "huawang-R"}
    p : int
        Prime modulus.
    s : int
        Dimension, ``1 <= s < p``.
    """
    fam = _pset_family(family)
    p, s = int(p), int(s)
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if s < 1:
        raise ValueError("dimension s must be >= 1")
    if s >= p:
        raise DegreeTooLarge(f"need s < p, got s={s}, p={p}")

    if fam == "korobov-P":
        num = _power_table(np.arange(p), s, p)
        coords = num.astype(np.float64) / p
    elif fam == "korobov-Q":
        mod = p * p
        num = _power_table(np.arange(mod), s, mod)
        coords = num.astype(np.float64) / mod
    else:
        # rows ordered a-major: x_{a,k} for a = 0..p-1, k = 0..p-1
        a = np.repeat(np.arange(p), p)
        k = np.tile(np.arange(p), p)
        num = np.empty((p * p, s), dtype=np.int64)
        num[:, 0] = k
        if s > 1:
            apow = _power_table(np.arange(p), s - 1, p)[a]
            num[:, 1:] = (apow * k[:, None]) % p
        coords = num.astype(np.float64) / p
    return PointSet(coords)


def vdc_value(n: int, base: int = 2) -> float:
    """Radical inverse of n in the given base (n = 0 maps to 0)."""
    base = int(base)
    if base < 2:
        raise BadBase(f"base must be >= 2, got {base}")
    n = int(n)
    if n < 0:
        raise ValueError("n must be non-negative")
    num, den = 0, 1
    while n:
        n, d = divmod(n, base)
        num = num * base + d
        den *= base
    return num / den


def vdc_array(indices, base: int = 2) -> np.ndarray:
    """Vectorised radical inverse; exact integer digit reversal, one final division."""
    base = int(base)
    if base < 2:
        raise BadBase(f"base must be >= 2, got {base}")
    n = np.array(indices, dtype=np.int64)
    if n.size and n.min() < 0:
        raise ValueError("indices must be non-negative")
    num = np.zeros_like(n)
    den = np.ones_like(n)
    while np.any(n):
        live = n > 0
        d = n % base
        num = np.where(live, num * base + d, num)
        den = np.where(live, den * base, den)
        n = n // base
    return num / den


def halton(N: int, s: int) -> PointSet:
    """Points (phi_2(n), phi_3(n), phi_5(n), ...) for n = 1..N."""
    idx = np.arange(1, int(N) + 1)
    cols = [vdc_array(idx, b) for b in first_primes(int(s))]
    return PointSet(np.column_stack(cols))


def random_points(N: int, s: int, seed: int) -> PointSet:
    rng = np.random.Generator(np.random.PCG64(int(seed)))
    return PointSet(rng.random((int(N), int(s))))


def centered(N: int) -> PointSet:
    N = int(N)
    return PointSet((2.0 * np.arange(1, N + 1) - 1.0) / (2.0 * N))


def generate_reference(family: str, N: int, s: int, seed: int | None = None) -> PointSet:
    N, s = int(N), int(s)
    if N < 1 or s < 1:
        raise ValueError("N and s must be >= 1")
    if family == "halton":
        return halton(N, s)
    if family == "random":
        if seed is None:
            raise MissingSeed("random point sets need an explicit seed")
        return random_points(N, s, seed)
    if family == "centered":
        if s != 1:
            raise CenteredNeedsDim1(f"centered set is one-dimensional, got s={s}")
        return centered(N)
    raise BadFamily(f"unknown reference family {family!r}")


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for any named family; unused fields stay ``None``."""

    family: str
    s: int
    p: int | None = None
    N: int | None = None
    base: int = 2
    seed: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadFamily(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.family in PSET_FAMILIES:
            if self.p is None:
                raise ValueError(f"{self.family} needs a prime p")
            if not is_prime(self.p):
                raise NotPrime(f"p={self.p} is not prime")
        else:
            if self.N is None or self.N < 1:
                raise ValueError(f"{self.family} needs N >= 1")
        if self.base < 2:
            raise BadBase(f"base must be >= 2, got {self.base}")

    def build(self) -> PointSet:
        if self.family in PSET_FAMILIES:
            return generate_pset(self.family, self.p, self.s)
        if self.family == "vdc":
            if self.s != 1:
                raise DimensionMismatch("vdc point sets are one-dimensional; use halton for s > 1")
            return PointSet(vdc_array(np.arange(1, self.N + 1), self.base))
        return generate_reference(self.family, self.N, self.s, self.seed)


def generate(spec: GeneratorSpec) -> PointSet:
    return spec.build()

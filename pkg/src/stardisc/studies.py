"""Reproducible desk-scale studies; each returns rows sorted by cell key."""
from __future__ import annotations

import math

from .cud import Stream, blocks
from .discrepancy import DEFAULT_BUDGET, star_discrepancy_exact
from .generators import generate_pset, random_points

STUDY_KINDS = ("random-scaling", "pset-decay", "cud-vdc")

COLUMNS = {
    "random-scaling": ("s", "N", "seed", "dstar", "rate", "ratio"),
    "pset-decay": ("family", "p", "s", "N", "dstar", "rate", "ratio"),
    "cud-vdc": ("base", "s", "N", "dstar", "rate", "ratio"),
}


def random_scaling(dims=(2, 3), Ns=(50, 100, 200, 400), seeds=20, seed0=0, budget=DEFAULT_BUDGET, backend=None):
    """Exact D* of seeded random sets against sqrt(s/N)."""
    rows = []
    for s in dims:
        for N in Ns:
            rate = math.sqrt(s / N)
            for seed in range(seed0, seed0 + seeds):
                d = star_discrepancy_exact(random_points(N, s, seed), budget, backend).value
                rows.append({"s": s, "N": N, "seed": seed, "dstar": d, "rate": rate, "ratio": d / rate})
    return sorted(rows, key=lambda r: (r["s"], r["N"], r["seed"]))


def pset_decay(family="P", ps=(11, 23, 47, 97), s=2, budget=DEFAULT_BUDGET, backend=None):
    """Exact D* of a p-set family against s/sqrt(p) (P) or s/p (Q, R)."""
    fam = {"korobov-P": "P", "korobov-Q": "Q", "huawang-R": "R"}.get(family, family)
    rows = []
    for p in ps:
        P = generate_pset(fam, p, s)
        d = star_discrepancy_exact(P, budget, backend).value
        rate = s / math.sqrt(p) if fam == "P" else s / p
        rows.append({"family": fam, "p": p, "s": s, "N": P.N, "dstar": d, "rate": rate, "ratio": d / rate})
    return sorted(rows, key=lambda r: r["p"])


def cud_vdc(s=2, Ns=(16, 64, 256), base=2, budget=DEFAULT_BUDGET, backend=None):
    """Exact D* of van der Corput s-blocks against the random-like scale sqrt(s/N)."""
    rows = []
    for N in Ns:
        d = star_discrepancy_exact(blocks(Stream(f"vdc:{base}"), s, N), budget, backend).value
        rate = math.sqrt(s / N)
        rows.append({"base": base, "s": s, "N": N, "dstar": d, "rate": rate, "ratio": d / rate})
    return sorted(rows, key=lambda r: r["N"])

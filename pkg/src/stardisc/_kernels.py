"""Hot loops, each with a numba implementation and a pure-numpy twin.

All kernels work on integer *ranks*: coordinate j of point i is replaced by
its index in the sorted critical grid of dimension j. Dominance tests then
become exact integer comparisons.

Both twins visit grid corners in lexicographic order and keep the first
strict maximum, open side before closed side, so they return the same
witness.
"""
from itertools import product

import numpy as np

from ._accel import njit, prange, resolve_backend

OPEN, CLOSED = 0, 1


# ---------------------------------------------------------------- exact D*

@njit(parallel=True, cache=True)
def _exact_numba(ranks, grid, sizes, n_outer):
    N, s = ranks.shape
    last = s - 1
    G = sizes[last]
    best_val = np.empty(n_outer)
    best_b = np.zeros(n_outer, dtype=np.int64)
    best_side = np.zeros(n_outer, dtype=np.int64)
    for t in prange(n_outer):
        idx = np.empty(max(last, 1), dtype=np.int64)
        rem = np.int64(t) + 0
        for j in range(last - 1, -1, -1):
            idx[j] = rem % sizes[j]
            rem = rem // sizes[j]
        vol = 1.0
        for j in range(last):
            vol *= grid[j, idx[j]]
        h_open = np.zeros(G, dtype=np.int64)
        h_closed = np.zeros(G, dtype=np.int64)
        for i in range(N):
            is_open = True
            is_closed = True
            for j in range(last):
                r = ranks[i, j]
                if r > idx[j]:
                    is_open = False
                    is_closed = False
                    break
                if r == idx[j]:
                    is_open = False
            if is_closed:
                h_closed[ranks[i, last]] += 1
                if is_open:
                    h_open[ranks[i, last]] += 1
        c_open = 0
        c_closed = 0
        bv = -np.inf
        bb = 0
        bs = 0
        for b in range(G):
            c_closed += h_closed[b]
            v = vol * grid[last, b]
            d = v - c_open / N
            if d > bv:
                bv = d
                bb = b
                bs = 0
            d = c_closed / N - v
            if d > bv:
                bv = d
                bb = b
                bs = 1
            c_open += h_open[b]
        best_val[t] = bv
        best_b[t] = bb
        best_side[t] = bs
    return best_val, best_b, best_side


def _exact_numba_driver(ranks, grids):
    s = len(grids)
    sizes = np.array([len(g) for g in grids], dtype=np.int64)
    grid = np.zeros((s, sizes.max()))
    for j, g in enumerate(grids):
        grid[j, : len(g)] = g
    n_outer = int(np.prod(sizes[:-1])) if s > 1 else 1
    vals, bs, sides = _exact_numba(np.ascontiguousarray(ranks, dtype=np.int64), grid, sizes, n_outer)
    t = int(np.argmax(vals))
    idx = []
    rem = t
    for j in range(s - 2, -1, -1):
        idx.append(rem % sizes[j])
        rem //= sizes[j]
    idx = [int(i) for i in reversed(idx)] + [int(bs[t])]
    return float(vals[t]), tuple(idx), int(sides[t])


def _first_max_2d(d_open, d_closed):
    """Best (value, flat index, side) on one 2-D slab with the shared tie rule."""
    mo = d_open.max()
    mc = d_closed.max()
    m = max(mo, mc)
    io = int(np.argmax(d_open == m)) if mo == m else None
    ic = int(np.argmax(d_closed == m)) if mc == m else None
    if ic is None or (io is not None and io <= ic):
        return float(m), io, OPEN
    return float(m), ic, CLOSED


def _exact_numpy_driver(ranks, grids):
    N, s = ranks.shape
    if s == 1:
        g = grids[0]
        hist = np.bincount(ranks[:, 0], minlength=len(g))
        closed = np.cumsum(hist)
        opened = closed - hist
        val, i, side = _first_max_2d(g - opened / N, closed / N - g)
        return val, (i,), side

    ga, gb = grids[-2], grids[-1]
    A, B = len(ga), len(gb)
    ra, rb = ranks[:, -2], ranks[:, -1]
    outer_ranks = ranks[:, :-2]
    best = (-np.inf, None, OPEN)
    for prefix in product(*(range(len(g)) for g in grids[:-2])):
        vol = 1.0
        for j, k in enumerate(prefix):
            vol *= grids[j][k]
        if prefix:
            pre = np.asarray(prefix)
            m_closed = np.all(outer_ranks <= pre, axis=1)
            m_open = np.all(outer_ranks < pre, axis=1)
        else:
            m_closed = m_open = np.ones(N, dtype=bool)
        h_closed = np.zeros((A, B), dtype=np.int64)
        np.add.at(h_closed, (ra[m_closed], rb[m_closed]), 1)
        h_open = np.zeros((A, B), dtype=np.int64)
        np.add.at(h_open, (ra[m_open], rb[m_open]), 1)
        c_closed = h_closed.cumsum(0).cumsum(1)
        c_open = np.zeros((A, B), dtype=np.int64)
        c_open[1:, 1:] = h_open.cumsum(0).cumsum(1)[:-1, :-1]
        v = (vol * ga)[:, None] * gb[None, :]
        val, flat, side = _first_max_2d(v - c_open / N, c_closed / N - v)
        if val > best[0]:
            best = (val, tuple(prefix) + divmod(flat, B), side)
    val, idx, side = best
    return val, tuple(int(i) for i in idx), side


def exact_max_local(ranks, grids, backend=None):
    """Maximum of the two-sided local discrepancy over the critical grid.

    Returns ``(value, corner_index_tuple, side)`` with side 0 = open, 1 = closed.
    """
    if resolve_backend(backend) == "numba":
        return _exact_numba_driver(ranks, grids)
    return _exact_numpy_driver(ranks, grids)


# ---------------------------------------------------------------- line search

@njit(cache=True)
def _line_numba(ranks, cur, j, G):
    N, s = ranks.shape
    h_open = np.zeros(G, dtype=np.int64)
    h_closed = np.zeros(G, dtype=np.int64)
    for i in range(N):
        is_open = True
        is_closed = True
        for k in range(s):
            if k == j:
                continue
            r = ranks[i, k]
            if r > cur[k]:
                is_open = False
                is_closed = False
                break
            if r == cur[k]:
                is_open = False
        if is_closed:
            h_closed[ranks[i, j]] += 1
            if is_open:
                h_open[ranks[i, j]] += 1
    return h_open, h_closed


def line_counts(ranks, cur, j, G, backend=None):
    """Open/closed dominance histograms along coordinate j, others fixed at ``cur``.

    ``cumsum`` of the closed histogram gives closed counts for every value of
    coordinate j; open counts are the exclusive cumsum of the open histogram.
    """
    if resolve_backend(backend) == "numba":
        return _line_numba(ranks, np.asarray(cur, dtype=np.int64), j, G)
    others = np.delete(np.arange(ranks.shape[1]), j)
    cur = np.asarray(cur)
    ro = ranks[:, others]
    co = cur[others]
    m_closed = np.all(ro <= co, axis=1)
    m_open = np.all(ro < co, axis=1)
    return (np.bincount(ranks[m_open, j], minlength=G), np.bincount(ranks[m_closed, j], minlength=G))


# ---------------------------------------------------------------- exponential sums

@njit(parallel=True, cache=True)
def _poly_sums_numba(H, pows, mod, cos_t, sin_t):
    M, s = H.shape
    T = pows.shape[0]
    out = np.empty(M)
    for m in prange(M):
        re = 0.0
        im = 0.0
        for n in range(T):
            arg = 0
            for j in range(s):
                arg = (arg + H[m, j] * pows[n, j]) % mod
            re += cos_t[arg]
            im += sin_t[arg]
        out[m] = np.sqrt(re * re + im * im)
    return out


@njit(parallel=True, cache=True)
def _r_sums_numba(H, p, cos_t, sin_t):
    M, s = H.shape
    out = np.empty(M)
    for m in prange(M):
        re = 0.0
        im = 0.0
        for a in range(p):
            # Horner for h_1 + h_2 a + ... + h_s a^(s-1) mod p
            f = 0
            for j in range(s - 1, -1, -1):
                f = (f * a + H[m, j]) % p
            for k in range(p):
                arg = (k * f) % p
                re += cos_t[arg]
                im += sin_t[arg]
        out[m] = np.sqrt(re * re + im * im)
    return out


def _twiddles(mod):
    r = np.arange(mod)
    ang = 2.0 * np.pi * r / mod
    return np.cos(ang), np.sin(ang)


def poly_sum_magnitudes(H, mod, backend=None, chunk=4096):
    """|sum_{n<mod} e((h_1 n + ... + h_s n^s)/mod)| for every row h of H."""
    from .generators import modular_powers

    H = np.asarray(H, dtype=np.int64) % mod
    pows = np.ascontiguousarray(modular_powers(np.arange(mod), H.shape[1], mod), dtype=np.int64)
    cos_t, sin_t = _twiddles(mod)
    if resolve_backend(backend) == "numba":
        return _poly_sums_numba(np.ascontiguousarray(H), pows, mod, cos_t, sin_t)
    out = np.empty(H.shape[0])
    for lo in range(0, H.shape[0], chunk):
        # each product < mod**2, s terms: reduce termwise to stay in int64
        args = np.zeros((min(chunk, H.shape[0] - lo), mod), dtype=np.int64)
        for j in range(H.shape[1]):
            args = (args + np.outer(H[lo:lo + chunk, j], pows[:, j]) % mod) % mod
        out[lo:lo + chunk] = np.hypot(cos_t[args].sum(1), sin_t[args].sum(1))
    return out


def r_sum_magnitudes(H, p, backend=None, chunk=1024):
    """|sum_{a,k<p} e(k (h_1 + h_2 a + ... + h_s a^(s-1))/p)| for every row h."""
    H = np.asarray(H, dtype=np.int64) % p
    cos_t, sin_t = _twiddles(p)
    if resolve_backend(backend) == "numba":
        return _r_sums_numba(np.ascontiguousarray(H), p, cos_t, sin_t)
    a = np.arange(p, dtype=np.int64)
    k = np.arange(p, dtype=np.int64)
    out = np.empty(H.shape[0])
    for lo in range(0, H.shape[0], chunk):
        Hc = H[lo:lo + chunk]
        f = np.zeros((Hc.shape[0], p), dtype=np.int64)
        for j in range(H.shape[1] - 1, -1, -1):
            f = (f * a[None, :] + Hc[:, j:j + 1]) % p
        args = (f[:, :, None] * k[None, None, :]) % p
        out[lo:lo + chunk] = np.hypot(cos_t[args].sum((1, 2)), sin_t[args].sum((1, 2)))
    return out

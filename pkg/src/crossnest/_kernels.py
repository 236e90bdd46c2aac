"""Array kernels for the exhaustive sweeps.

Enumerating all 2^n * n! signed permutations of a rank and computing
statistics for each one is the only hot loop in this package.  The
kernels here work on int64 arc tables of shape (P, n, 2), arcs sorted
by start within each row, and exist in two flavours:

* numba-jitted loops (default when numba imports), and
* a pure numpy / python fallback.

Set CROSSNEST_PURE_NUMPY=1 before import to force the fallback; it is
also selected automatically when numba is missing.  Both flavours stay
importable so the benchmark and the parity tests can compare them.

The subset brute-force oracles in `statistics` are deliberately not
accelerated; they exist to check these kernels, not to race them.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:   # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


_FLAG = os.environ.get("CROSSNEST_PURE_NUMPY", "").strip().lower()
USE_NUMBA = HAVE_NUMBA and _FLAG not in {"1", "true", "yes"}


def upper_arcs_batch(values: np.ndarray) -> np.ndarray:
    """Arc tables for a batch of one-line arrays, sorted by start.

    values[p, i-1] = s(i); the arc for magnitude i starts at i when
    s(i) >= i and at -i otherwise.
    """
    values = np.asarray(values, dtype=np.int64)
    n = values.shape[1]
    idx = np.arange(1, n + 1, dtype=np.int64)
    keep = values >= idx
    starts = np.where(keep, idx, -idx)
    ends = np.where(keep, values, -values)
    arcs = np.stack([starts, ends], axis=-1)
    order = np.argsort(arcs[:, :, 0], axis=1)
    return np.take_along_axis(arcs, order[:, :, None], axis=1)


# --- pair statistics: cro, nes, wex, neg ---------------------------------

def pair_stats_batch_numpy(arcs: np.ndarray) -> np.ndarray:
    """(P, 4) table of (cro, nes, wex, neg), vectorised over pairs."""
    S = arcs[:, :, 0]
    E = arcs[:, :, 1]
    n = S.shape[1]
    v1 = E[:, :, None]           # earlier arc (smaller start) on axis 1
    u2 = S[:, None, :]
    v2 = E[:, None, :]
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)[None, :, :]
    shared = v1 == u2
    crossing = np.where(
        shared,
        u2 > 0,
        (u2 < v1) & (v2 > v1),
    )
    nesting = (~shared) & (u2 < v1) & (v2 < v1)
    cro = (crossing & upper).sum(axis=(1, 2))
    nes = (nesting & upper).sum(axis=(1, 2))
    wex = (S > 0).sum(axis=1)
    neg = ((S < 0) & (E > 0)).sum(axis=1)
    return np.stack([cro, nes, wex, neg], axis=1).astype(np.int64)


@njit(cache=True)
def _pair_stats_one(starts, ends):   # pragma: no cover - jitted
    n = starts.shape[0]
    cro = 0
    nes = 0
    wex = 0
    neg = 0
    for i in range(n):
        if starts[i] > 0:
            wex += 1
        if starts[i] < 0 and ends[i] > 0:
            neg += 1
        for j in range(i + 1, n):
            v1 = ends[i]
            u2 = starts[j]
            v2 = ends[j]
            if v1 == u2:
                if u2 > 0:
                    cro += 1
            elif u2 < v1:
                if v2 < v1:
                    nes += 1
                else:
                    cro += 1
    return cro, nes, wex, neg


@njit(cache=True)
def _pair_stats_batch_nb(arcs):   # pragma: no cover - jitted
    p = arcs.shape[0]
    out = np.empty((p, 4), dtype=np.int64)
    for r in range(p):
        cro, nes, wex, neg = _pair_stats_one(arcs[r, :, 0], arcs[r, :, 1])
        out[r, 0] = cro
        out[r, 1] = nes
        out[r, 2] = wex
        out[r, 3] = neg
    return out


def pair_stats_batch_numba(arcs: np.ndarray) -> np.ndarray:
    return _pair_stats_batch_nb(np.ascontiguousarray(arcs, dtype=np.int64))


# --- chain statistics: cro_star, nes_star --------------------------------

def _chain_stats_py(starts, ends) -> tuple[int, int]:
    """Reference loop version; also the fallback inner kernel."""
    m = len(starts)
    best_cross = 0
    for f in range(m):
        ef = ends[f]
        for l in range(f, m):
            sl = starts[l]
            if sl > ef or (sl == ef and f != l and sl < 0):
                continue
            if f == l:
                if best_cross < 1:
                    best_cross = 1
                continue
            el = ends[l]
            if el <= ef:
                continue
            window = [0] * (l - f + 1)
            window[0] = 1
            for g in range(f + 1, l + 1):
                eg = ends[g]
                if eg <= ef or eg > el:
                    continue
                reach = 0
                for h in range(f, g):
                    w = window[h - f]
                    if w > reach and ends[h] < eg:
                        reach = w
                if reach:
                    window[g - f] = reach + 1
            if window[l - f] > best_cross:
                best_cross = window[l - f]
    best_nest = 0
    depth = [1] * m
    for j in range(m):
        sj = starts[j]
        ej = ends[j]
        for i in range(j):
            if starts[i] < sj and ej < ends[i] and depth[i] + 1 > depth[j]:
                depth[j] = depth[i] + 1
        if depth[j] > best_nest:
            best_nest = depth[j]
    return best_cross, best_nest


def chain_stats_batch_python(arcs: np.ndarray) -> np.ndarray:
    p = arcs.shape[0]
    out = np.empty((p, 2), dtype=np.int64)
    for r in range(p):
        starts = arcs[r, :, 0].tolist()
        ends = arcs[r, :, 1].tolist()
        out[r] = _chain_stats_py(starts, ends)
    return out


@njit(cache=True)
def _chain_stats_one(starts, ends):   # pragma: no cover - jitted
    m = starts.shape[0]
    best_cross = 0
    window = np.empty(m, dtype=np.int64)
    for f in range(m):
        ef = ends[f]
        for l in range(f, m):
            sl = starts[l]
            if sl > ef or (sl == ef and f != l and sl < 0):
                continue
            if f == l:
                if best_cross < 1:
                    best_cross = 1
                continue
            el = ends[l]
            if el <= ef:
                continue
            for g in range(l - f + 1):
                window[g] = 0
            window[0] = 1
            for g in range(f + 1, l + 1):
                eg = ends[g]
                if eg <= ef or eg > el:
                    continue
                reach = 0
                for h in range(f, g):
                    w = window[h - f]
                    if w > reach and ends[h] < eg:
                        reach = w
                if reach:
                    window[g - f] = reach + 1
            if window[l - f] > best_cross:
                best_cross = window[l - f]
    best_nest = 0
    depth = np.ones(m, dtype=np.int64)
    for j in range(m):
        sj = starts[j]
        ej = ends[j]
        for i in range(j):
            if starts[i] < sj and ej < ends[i] and depth[i] + 1 > depth[j]:
                depth[j] = depth[i] + 1
        if depth[j] > best_nest:
            best_nest = depth[j]
    return best_cross, best_nest


@njit(cache=True)
def _chain_stats_batch_nb(arcs):   # pragma: no cover - jitted
    p = arcs.shape[0]
    out = np.empty((p, 2), dtype=np.int64)
    for r in range(p):
        c, ns = _chain_stats_one(arcs[r, :, 0], arcs[r, :, 1])
        out[r, 0] = c
        out[r, 1] = ns
    return out


def chain_stats_batch_numba(arcs: np.ndarray) -> np.ndarray:
    return _chain_stats_batch_nb(np.ascontiguousarray(arcs, dtype=np.int64))


# --- degree keys ----------------------------------------------------------

def degree_table_batch(arcs: np.ndarray) -> np.ndarray:
    """(P, 2n, 2) of per-vertex (indegree, outdegree), vertex order
    -n..-1,1..n.  Plain numpy on both paths; this is bookkeeping."""
    p, n, _ = arcs.shape
    starts = arcs[:, :, 0]
    ends = arcs[:, :, 1]

    def slot(v):
        return np.where(v < 0, v + n, v + n - 1)

    table = np.zeros((p, 2 * n, 2), dtype=np.int8)
    rows = np.repeat(np.arange(p), n)
    table[rows, slot(ends).ravel(), 0] = 1
    table[rows, slot(starts).ravel(), 1] = 1
    return table


# selected implementations

if USE_NUMBA:
    pair_stats_batch = pair_stats_batch_numba
    chain_stats_batch = chain_stats_batch_numba
else:
    pair_stats_batch = pair_stats_batch_numpy
    chain_stats_batch = chain_stats_batch_python


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"

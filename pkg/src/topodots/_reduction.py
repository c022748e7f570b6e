"""GF(2) boundary-matrix reduction kernel.

Standard left-to-right column reduction: columns are CSR-packed sorted index
lists, merged by symmetric difference until their lowest entry is a fresh
pivot or the column vanishes.  The 2-skeleton of a couple hundred dots runs
to ~2e6 columns and ~5e7 column additions, hence the JIT; the pure-Python
equivalent of this loop is kept as a cross-check in the test suite.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def reduce_boundary(col_data, col_ptr):  # pragma: no cover - exercised via persistence
    """Reduce CSR columns; return killer_of.

    killer_of[p] is the index of the column that kills the class created at
    position p, or -1 if that class survives (or p is itself a killer).
    """
    n_cols = col_ptr.shape[0] - 1
    pivot = np.full(n_cols, -1, dtype=np.int64)
    killer_of = np.full(n_cols, -1, dtype=np.int64)
    pool = np.empty(max(col_data.shape[0], 1024), dtype=np.int32)
    pool_top = 0
    st_start = np.zeros(n_cols, dtype=np.int64)
    st_len = np.zeros(n_cols, dtype=np.int32)
    cur = np.empty(4096, dtype=np.int32)
    scratch = np.empty(4096, dtype=np.int32)

    for j in range(n_cols):
        lo = col_ptr[j]
        cur_len = int(col_ptr[j + 1] - lo)
        for t in range(cur_len):
            cur[t] = col_data[lo + t]

        while cur_len > 0:
            low = cur[cur_len - 1]
            k = pivot[low]
            if k == -1:
                pivot[low] = j
                killer_of[low] = j
                if pool_top + cur_len > pool.shape[0]:
                    grown = np.empty(max(2 * pool.shape[0], pool_top + cur_len), dtype=np.int32)
                    grown[:pool_top] = pool[:pool_top]
                    pool = grown
                st_start[j] = pool_top
                st_len[j] = cur_len
                for t in range(cur_len):
                    pool[pool_top + t] = cur[t]
                pool_top += cur_len
                break

            # cur ^= stored column k (both sorted ascending)
            os_ = st_start[k]
            ol = int(st_len[k])
            need = cur_len + ol
            if need > scratch.shape[0]:
                scratch = np.empty(2 * need, dtype=np.int32)
            if need > cur.shape[0]:
                grown = np.empty(2 * need, dtype=np.int32)
                grown[:cur_len] = cur[:cur_len]
                cur = grown
            ai = 0
            bi = 0
            out = 0
            while ai < cur_len and bi < ol:
                x = cur[ai]
                y = pool[os_ + bi]
                if x == y:
                    ai += 1
                    bi += 1
                elif x < y:
                    scratch[out] = x
                    out += 1
                    ai += 1
                else:
                    scratch[out] = y
                    out += 1
                    bi += 1
            while ai < cur_len:
                scratch[out] = cur[ai]
                out += 1
                ai += 1
            while bi < ol:
                scratch[out] = pool[os_ + bi]
                out += 1
                bi += 1
            tmp = cur
            cur = scratch
            scratch = tmp
            cur_len = out

    return killer_of

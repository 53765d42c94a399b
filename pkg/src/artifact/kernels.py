"""Numeric kernels with an optional numba backend.

Set SW_NO_NUMBA=1 to force the pure-numpy versions.  Both backends expose
the same functions and are compared by benchmarks/bench_kernels.py.
"""

from __future__ import annotations

import os

import numpy as np

USE_NUMBA = os.environ.get("SW_NO_NUMBA", "") not in ("1", "true", "yes")

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

BACKEND = "numba" if USE_NUMBA else "numpy"


def _row_apply_py(vec, W, q, N):
    """One traced row of vertices applied to a state vector over N-bit masks.

    W[j, a_in, e_in, a_out, e_out] is the weight of column j+1; site j+1 is
    bit j of the mask.  The seam carries q**(aux value).
    """
    size = 1 << N
    out = np.zeros(size, dtype=np.complex128)
    masks = np.arange(size)
    for b in range(2):
        cur = np.zeros((2, size), dtype=np.complex128)
        cur[b, :] = vec * (q if b else 1.0)
        for j in range(N):
            bit = 1 << j
            nxt = np.zeros((2, size), dtype=np.complex128)
            for e in range(2):
                src = masks[((masks >> j) & 1) == e]
                base = src & ~bit
                for a in range(2):
                    c = cur[a, src]
                    for ao in range(2):
                        for eo in range(2):
                            w = W[j, a, e, ao, eo]
                            if w != 0:
                                nxt[ao, base | (eo << j)] += c * w
            cur = nxt
        out += cur[b]
    return out


def _bae_residuals_py(y, t, sign_q):
    out = np.empty(y.shape[0], dtype=np.complex128)
    for i in range(y.shape[0]):
        p = 1.0 + 0j
        for j in range(t.shape[0]):
            p *= y[i] - t[j]
        out[i] = p + sign_q
    return out


def _fac_schur_numeric_py(parts, xs, a):
    """Tableau-free evaluation: det-ratio with factorial powers (xs distinct)."""
    n = xs.shape[0]
    num = np.empty((n, n), dtype=np.complex128)
    den = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            p = 1.0 + 0j
            for r in range(parts[i] + n - 1 - i):
                p *= xs[j] - a[r]
            num[i, j] = p
            p = 1.0 + 0j
            for r in range(n - 1 - i):
                p *= xs[j] - a[r]
            den[i, j] = p
    return np.linalg.det(num) / np.linalg.det(den)


if USE_NUMBA:
    @njit(cache=True)
    def _row_apply_nb(vec, W, q, N):
        size = 1 << N
        out = np.zeros(size, dtype=np.complex128)
        for b in range(2):
            cur = np.zeros((2, size), dtype=np.complex128)
            for m in range(size):
                cur[b, m] = vec[m] * (q if b == 1 else 1.0)
            for j in range(N):
                bit = 1 << j
                nxt = np.zeros((2, size), dtype=np.complex128)
                for a in range(2):
                    for m in range(size):
                        c = cur[a, m]
                        if c == 0:
                            continue
                        e = (m >> j) & 1
                        base = m & ~bit
                        for ao in range(2):
                            for eo in range(2):
                                w = W[j, a, e, ao, eo]
                                if w != 0:
                                    nxt[ao, base | (eo << j)] += c * w
                cur = nxt
            for m in range(size):
                out[m] += cur[b, m]
        return out

    @njit(cache=True)
    def _bae_residuals_nb(y, t, sign_q):
        out = np.empty(y.shape[0], dtype=np.complex128)
        for i in range(y.shape[0]):
            p = 1.0 + 0j
            for j in range(t.shape[0]):
                p *= y[i] - t[j]
            out[i] = p + sign_q
        return out

    row_apply = _row_apply_nb
    bae_residuals = _bae_residuals_nb
else:
    row_apply = _row_apply_py
    bae_residuals = _bae_residuals_py

fac_schur_numeric = _fac_schur_numeric_py


def weights_array(kind, x, tvals):
    """Numeric W[j, a_in, e_in, a_out, e_out] for one row with spectral value x."""
    N = len(tvals)
    W = np.zeros((N, 2, 2, 2, 2), dtype=np.complex128)
    for j, t in enumerate(tvals):
        if kind == "vicious":
            W[j, 0, 0, 0, 0] = 1 - x * t
            W[j, 0, 1, 0, 1] = 1
            W[j, 1, 0, 0, 1] = x          # x sigma^+
            W[j, 0, 1, 1, 0] = 1          # sigma^-
            W[j, 1, 0, 1, 0] = x          # x P0
        elif kind == "osculating":
            W[j, 0, 0, 0, 0] = 1
            W[j, 0, 1, 0, 1] = 1 + x * t
            W[j, 1, 0, 0, 1] = x
            W[j, 0, 1, 1, 0] = 1
            W[j, 1, 1, 1, 1] = x          # x P1
        else:
            raise ValueError(f"unknown kind {kind!r}")
    return W

"""Exact integer convolution kernels.

Everything upstream (F_q[theta] polynomials, bivariate coefficients, truncated
u-series) reduces products to integer convolutions of nonnegative arrays.
Small convolutions go through numpy; large ones are Kronecker-packed into
4-byte windows and multiplied as GMP integers, which is exact as long as every
window stays below 2^32.
"""

from __future__ import annotations

import numpy as np
import gmpy2
from scipy.signal import convolve2d

# below this operand product, plain O(n*m) numpy convolution wins
_NP_CONV_LIMIT = 1 << 22

_WINDOW_BYTES = 4
_WINDOW_CAP = 1 << 32

_HAS_MPZ_FROM_BYTES = hasattr(gmpy2.mpz, "from_bytes")


def _pack(arr):
    buf = np.ascontiguousarray(arr, dtype="<u4").tobytes()
    if _HAS_MPZ_FROM_BYTES:
        return gmpy2.mpz.from_bytes(buf, "little")
    return gmpy2.mpz(int.from_bytes(buf, "little"))


def _unpack(x, n):
    buf = x.to_bytes(n * _WINDOW_BYTES, "little")
    return np.frombuffer(buf, dtype="<u4").astype(np.int64)


def conv_exact(a, b, maxval):
    """Exact convolution of nonnegative int64 arrays with entries <= maxval."""
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return np.zeros(0, dtype=np.int64)
    peak = maxval * maxval * min(n, m)
    if n * m <= _NP_CONV_LIMIT:
        assert peak < (1 << 62)
        return np.convolve(a, b)
    assert peak < _WINDOW_CAP, "packed convolution would overflow its windows"
    prod = _pack(a) * _pack(b)
    return _unpack(prod, n + m - 1)


def conv2d_exact(a, b, maxval):
    """Exact 2-D convolution, Kronecker-packed through conv_exact.

    Rows are the outer variable (e.g. u-exponent), columns the inner one
    (theta-exponent); column counts must already bound the product widths.
    """
    ra, ca = a.shape
    rb, cb = b.shape
    w = ca + cb - 1
    pa = np.zeros((ra, w), dtype=np.int64)
    pa[:, :ca] = a
    pb = np.zeros((rb, w), dtype=np.int64)
    pb[:, :cb] = b
    flat = conv_exact(pa.ravel(), pb.ravel(), maxval)
    rows = ra + rb - 1
    out = np.zeros(rows * w, dtype=np.int64)
    out[: len(flat)] = flat
    return out.reshape(rows, w)


def row_convolve(block, kernel, p):
    """Convolve each row of an int64 block with a 1-D kernel, mod p."""
    if block.size == 0 or len(kernel) == 0:
        return np.zeros((block.shape[0], 0), dtype=np.int64)
    out = convolve2d(block, kernel[None, :])
    return np.mod(out, p)


def trim(arr):
    """Strip trailing zeros; the zero polynomial becomes the empty array."""
    nz = np.nonzero(arr)[0]
    if len(nz) == 0:
        return np.zeros(0, dtype=np.int64)
    return np.ascontiguousarray(arr[: nz[-1] + 1], dtype=np.int64)


def sparse_unit_inverse(taps, n_terms, p):
    """Inverse of 1 + sum_k a_k * u^(e_k) as a u-series mod u^n_terms.

    taps: list of (e_k, theta-poly int64 array) with all e_k >= 1; coefficient
    arithmetic is over F_p[theta].  Returns a list of n_terms trimmed arrays.
    Coefficients are produced in blocks so the per-tap work is a single
    row convolution; the block length never exceeds the smallest tap offset,
    which keeps every block's inputs inside already-computed territory.
    """
    assert p >= 2
    out = [np.array([1], dtype=np.int64)]
    if n_terms <= 1 or not taps:
        return out + [np.zeros(0, dtype=np.int64)] * max(0, n_terms - 1)
    e_min = min(e for e, _ in taps)
    blk = max(1, min(256, e_min))
    n = 1
    while n < n_terms:
        b = min(blk, n_terms - n)
        width = 0
        for e, a in taps:
            lo = n - e
            if lo + b <= 0 or len(a) == 0:
                continue
            seg_w = max(
                (len(out[i]) for i in range(max(lo, 0), min(lo + b, n)) if len(out[i])),
                default=0,
            )
            if seg_w:
                width = max(width, seg_w + len(a) - 1)
        acc = np.zeros((b, max(width, 1)), dtype=np.int64)
        for e, a in taps:
            if len(a) == 0:
                continue
            lo = n - e
            if lo + b <= 0:
                continue
            seg = np.zeros((b, max(width - len(a) + 1, 1)), dtype=np.int64)
            filled = False
            for r in range(b):
                i = lo + r
                if 0 <= i < n and len(out[i]):
                    seg[r, : len(out[i])] = out[i]
                    filled = True
            if not filled:
                continue
            contrib = row_convolve(seg, a, p)
            acc[:, : contrib.shape[1]] += contrib
        acc = np.mod(-acc, p)
        for r in range(b):
            out.append(trim(acc[r]))
        n += b
    return out

"""Dense polynomials in theta over F_q, as trimmed int64 code arrays.

For prime q the codes are residues and products run through the exact
convolution kernel; for prime powers the same array layout is kept but
products fall back to schoolbook loops over the field tables (adequate for
the small sizes where non-prime q is exercised).
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import InvalidIndex, NonDivisibleExponent, UdeformError

ZERO = np.zeros(0, dtype=np.int64)


def tp(coeffs):
    return kernels.trim(np.asarray(list(coeffs), dtype=np.int64))


def tp_const(code):
    return tp([code]) if code else ZERO


def tp_theta_power(k, code=1):
    arr = np.zeros(k + 1, dtype=np.int64)
    arr[k] = code
    return arr


def deg(a):
    return len(a) - 1  # -1 for the zero polynomial


def tp_add(ctx, a, b):
    n = max(len(a), len(b))
    if n == 0:
        return ZERO
    out = np.zeros(n, dtype=np.int64)
    if ctx.e == 1:
        out[: len(a)] = a
        out[: len(b)] += b
        return kernels.trim(np.mod(out, ctx.p))
    p, e = ctx.p, ctx.e
    acc = np.zeros(n, dtype=np.int64)
    for k in range(e):
        pk = p**k
        da = (a // pk) % p if len(a) else a
        db = (b // pk) % p if len(b) else b
        dig = np.zeros(n, dtype=np.int64)
        dig[: len(a)] = da
        dig[: len(b)] += db
        acc += np.mod(dig, p) * pk
    return kernels.trim(acc)


def tp_neg(ctx, a):
    if len(a) == 0:
        return ZERO
    if ctx.e == 1:
        return np.mod(-a, ctx.p)
    p, e = ctx.p, ctx.e
    acc = np.zeros(len(a), dtype=np.int64)
    for k in range(e):
        pk = p**k
        acc += np.mod(-((a // pk) % p), p) * pk
    return kernels.trim(acc)


def tp_sub(ctx, a, b):
    return tp_add(ctx, a, tp_neg(ctx, b))


def tp_scalar_mul(ctx, a, code):
    if code == 0 or len(a) == 0:
        return ZERO
    if ctx.e == 1:
        return np.mod(a * code, ctx.p)
    return kernels.trim(
        np.array([ctx.mul(int(c), code) for c in a], dtype=np.int64)
    )


def tp_mul(ctx, a, b):
    if len(a) == 0 or len(b) == 0:
        return ZERO
    if ctx.e == 1:
        return kernels.trim(np.mod(kernels.conv_exact(a, b, ctx.p - 1), ctx.p))
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(int(ai), int(bj)))
    return kernels.trim(np.array(out, dtype=np.int64))


def tp_pow(ctx, a, n):
    out = tp_const(1)
    base = a
    while n:
        if n & 1:
            out = tp_mul(ctx, out, base)
        base = tp_mul(ctx, base, base)
        n >>= 1
    return out


def tp_divmod(ctx, a, b):
    """(quotient, remainder) with b != 0; exact over the field F_q."""
    if len(b) == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    r = a.copy()
    db = deg(b)
    da = deg(r)
    if da < db:
        return ZERO, kernels.trim(r)
    lead_inv = ctx.inv(int(b[-1]))
    q_arr = np.zeros(da - db + 1, dtype=np.int64)
    if ctx.e == 1:
        p = ctx.p
        bb = b
        for k in range(da - db, -1, -1):
            c = r[db + k] % p
            if c:
                c = (c * lead_inv) % p
                q_arr[k] = c
                r[k : k + db + 1] = (r[k : k + db + 1] - c * bb) % p
        return kernels.trim(q_arr), kernels.trim(r)
    for k in range(da - db, -1, -1):
        c = int(r[db + k])
        if c:
            c = ctx.mul(c, lead_inv)
            q_arr[k] = c
            for i in range(db + 1):
                r[k + i] = ctx.sub(int(r[k + i]), ctx.mul(c, int(b[i])))
    return kernels.trim(q_arr), kernels.trim(r)


def tp_divexact(ctx, a, b):
    q_arr, r = tp_divmod(ctx, a, b)
    if len(r):
        raise UdeformError("inexact polynomial division")
    return q_arr


def tp_gcd(ctx, a, b):
    a, b = kernels.trim(a), kernels.trim(b)
    while len(b):
        _, r = tp_divmod(ctx, a, b)
        a, b = b, r
    return tp_monic(ctx, a)


def tp_lcm(ctx, a, b):
    if len(a) == 0 or len(b) == 0:
        return ZERO
    g = tp_gcd(ctx, a, b)
    return tp_monic(ctx, tp_mul(ctx, a, tp_divexact(ctx, b, g)))


def tp_monic(ctx, a):
    if len(a) == 0 or a[-1] == 1:
        return a
    return tp_scalar_mul(ctx, a, ctx.inv(int(a[-1])))


def tp_twist(ctx, a, k):
    """tau^k on F_q[theta]: theta^j -> theta^(j*q^k); F_q scalars are fixed."""
    if k == 0 or len(a) == 0:
        return a
    qk = ctx.q**k
    out = np.zeros((len(a) - 1) * qk + 1, dtype=np.int64)
    out[:: qk] = a
    return out


def tp_untwist(ctx, a, k):
    """Inverse twist; every exponent must be divisible by q^k."""
    if k == 0 or len(a) == 0:
        return a
    qk = ctx.q**k
    nz = np.nonzero(a)[0]
    if len(nz) and np.any(nz % qk):
        raise NonDivisibleExponent(f"theta-exponent not divisible by q^{k}")
    return kernels.trim(a[::qk])


def tp_eval_code(ctx, a, code):
    """Evaluate at theta = an F_q element (Horner)."""
    acc = 0
    for c in a[::-1]:
        acc = ctx.add(ctx.mul(acc, code), int(c))
    return acc


def tp_bracket(ctx, i):
    """[i] = theta^(q^i) - theta."""
    if i <= 0:
        raise InvalidIndex("brackets [i] require i >= 1")
    arr = np.zeros(ctx.q**i + 1, dtype=np.int64)
    arr[ctx.q**i] = 1
    arr[1] = ctx.neg(1)
    return arr

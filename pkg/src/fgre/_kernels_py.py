"""Arithmetic kernels on raw cyclotomic coordinates, pure Python.

A raw scalar is a 9-tuple of ints ``(n0, ..., n7, den)`` representing the
element sum(n_k/den * z^k) of Q(zeta24) in the power basis 1, z, ..., z^7,
where z = zeta24 and powers are reduced mod Phi_24(x) = x^8 - x^4 + 1.
Canonical form: den >= 1 and gcd(n0, ..., n7, den) == 1, so raw tuples can
be compared and hashed directly.

fgre._kernels is the compiled twin; the two must stay in lockstep
(tests/test_kernels.py checks them against each other).
"""

from math import gcd

ZERO = (0, 0, 0, 0, 0, 0, 0, 0, 1)
ONE = (1, 0, 0, 0, 0, 0, 0, 0, 1)


def cyc_normalize(nums, den):
    """Canonical raw form of the 8 coordinates nums over denominator den."""
    if den < 0:
        den = -den
        nums = [-n for n in nums]
    g = den
    for n in nums:
        g = gcd(g, n)
        if g == 1:
            break
    if g > 1:
        den //= g
        nums = [n // g for n in nums]
    return (nums[0], nums[1], nums[2], nums[3], nums[4], nums[5], nums[6], nums[7], den)


def cyc_add(a, b):
    ad = a[8]
    bd = b[8]
    if ad == bd:
        return cyc_normalize([a[i] + b[i] for i in range(8)], ad)
    g = gcd(ad, bd)
    fa = bd // g
    fb = ad // g
    return cyc_normalize([a[i] * fa + b[i] * fb for i in range(8)], fa * ad)


def cyc_sub(a, b):
    ad = a[8]
    bd = b[8]
    if ad == bd:
        return cyc_normalize([a[i] - b[i] for i in range(8)], ad)
    g = gcd(ad, bd)
    fa = bd // g
    fb = ad // g
    return cyc_normalize([a[i] * fa - b[i] * fb for i in range(8)], fa * ad)


def cyc_neg(a):
    # canonical form is preserved by negating the numerators
    return (-a[0], -a[1], -a[2], -a[3], -a[4], -a[5], -a[6], -a[7], a[8])


def cyc_scale(a, num, den=1):
    """Multiply by the rational num/den (den nonzero)."""
    if num == 0:
        return ZERO
    return cyc_normalize([a[i] * num for i in range(8)], a[8] * den)


def _conv(a, b, c):
    """Accumulate the 15-term polynomial product of a and b into c."""
    for i in range(8):
        ai = a[i]
        if ai:
            for j in range(8):
                bj = b[j]
                if bj:
                    c[i + j] += ai * bj


def _reduce(c):
    """Fold degrees 8..14 down using x^8 = x^4 - 1."""
    for k in range(14, 7, -1):
        ck = c[k]
        if ck:
            c[k - 4] += ck
            c[k - 8] -= ck
            c[k] = 0


def cyc_mul(a, b):
    c = [0] * 15
    _conv(a, b, c)
    _reduce(c)
    return cyc_normalize(c[:8], a[8] * b[8])


def cyc_dot(avec, bvec):
    """Sum of pairwise products; the inner loop of matrix multiplication.

    Accumulates in unreduced convolution space over a running common
    denominator and normalizes once at the end.
    """
    c = [0] * 15
    den = 1
    for x, y in zip(avec, bvec):
        xd = x[8] * y[8]
        if xd == den:
            _conv(x, y, c)
        else:
            g = gcd(den, xd)
            fc = xd // g
            ft = den // g
            if fc != 1:
                for k in range(15):
                    c[k] *= fc
            if ft == 1:
                _conv(x, y, c)
            else:
                t = [0] * 15
                _conv(x, y, t)
                for k in range(15):
                    c[k] += t[k] * ft
            den *= fc
    _reduce(c)
    return cyc_normalize(c[:8], den)


def cyc_matmul(a, b, n, k, m):
    """Product of row-major raw-scalar matrices: (n x k) @ (k x m)."""
    cols = [[b[r * m + j] for r in range(k)] for j in range(m)]
    out = []
    for i in range(n):
        row = a[i * k : (i + 1) * k]
        for j in range(m):
            out.append(cyc_dot(row, cols[j]))
    return out

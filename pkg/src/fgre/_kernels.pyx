# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels on raw cyclotomic coordinates.

Twin of fgre._kernels_py (see there for the raw-tuple contract).  Small
coordinates run through a fixed-width C fast path; anything outside the
window falls back to Python-int arithmetic, so results are always exact
and identical to the pure twin.
"""

from math import gcd

ZERO = (0, 0, 0, 0, 0, 0, 0, 0, 1)
ONE = (1, 0, 0, 0, 0, 0, 0, 0, 1)

# Fast-path input windows.  For a single product |n|, den <= 2^26 keeps the
# convolution below 2^57.  Dot products accumulate and rescale, so they use
# the tighter 2^18 window plus dynamic pre-checks before every growth step;
# with den <= 2^20 and |acc| <= 2^60 no int64 operation can overflow.
DEF WINDOW = 67108864                 # 2^26
DEF DOT_WINDOW = 262144               # 2^18
DEF ACC_LIMIT = 1152921504606846976   # 2^60
DEF DEN_LIMIT = 1048576               # 2^20


cdef inline long long _llabs(long long x):
    return -x if x < 0 else x


cdef inline long long _llgcd(long long a, long long b):
    a = _llabs(a)
    b = _llabs(b)
    while b:
        a, b = b, a % b
    return a


cdef bint _load(tuple a, long long *out, long long window):
    """Extract 9 ints into C storage; False if any falls outside the window."""
    cdef int i
    cdef long long x
    cdef object v
    for i in range(9):
        v = a[i]
        try:
            x = v
        except OverflowError:
            return False
        if x > window or x < -window:
            return False
        out[i] = x
    return True


cdef tuple _pack(long long *c, long long den):
    """Canonical raw tuple from 8 C numerators over den (den > 0)."""
    cdef long long g = den
    cdef int i
    for i in range(8):
        g = _llgcd(g, c[i])
        if g == 1:
            break
    if g > 1:
        den //= g
        for i in range(8):
            c[i] //= g
    return (c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7], den)


cdef inline void _reduce_c(long long *c):
    # x^8 = x^4 - 1
    cdef int k
    cdef long long ck
    for k in range(14, 7, -1):
        ck = c[k]
        if ck:
            c[k - 4] += ck
            c[k - 8] -= ck
            c[k] = 0


cdef inline void _conv_c(long long *a, long long *b, long long *c):
    cdef int i, j
    cdef long long ai
    for i in range(8):
        ai = a[i]
        if ai:
            for j in range(8):
                if b[j]:
                    c[i + j] += ai * b[j]


# ---------------------------------------------------------------------------
# object-path helpers (identical algorithm to the pure twin)

def _normalize_obj(nums, den):
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


def _conv_obj(a, b, c):
    cdef int i, j
    for i in range(8):
        ai = a[i]
        if ai:
            for j in range(8):
                bj = b[j]
                if bj:
                    c[i + j] += ai * bj


def _reduce_obj(c):
    cdef int k
    for k in range(14, 7, -1):
        ck = c[k]
        if ck:
            c[k - 4] += ck
            c[k - 8] -= ck
            c[k] = 0


# ---------------------------------------------------------------------------
# public kernel API

def cyc_normalize(nums, den):
    """Canonical raw form of the 8 coordinates nums over denominator den."""
    return _normalize_obj(list(nums), den)


def cyc_add(tuple a, tuple b):
    cdef long long an[9]
    cdef long long bn[9]
    cdef long long c[8]
    cdef long long g, fa, fb
    cdef int i
    if _load(a, an, WINDOW) and _load(b, bn, WINDOW):
        if an[8] == bn[8]:
            for i in range(8):
                c[i] = an[i] + bn[i]
            return _pack(c, an[8])
        g = _llgcd(an[8], bn[8])
        fa = bn[8] // g
        fb = an[8] // g
        for i in range(8):
            c[i] = an[i] * fa + bn[i] * fb
        return _pack(c, fa * an[8])
    ad = a[8]
    bd = b[8]
    if ad == bd:
        return _normalize_obj([a[i] + b[i] for i in range(8)], ad)
    go = gcd(ad, bd)
    fao = bd // go
    fbo = ad // go
    return _normalize_obj([a[i] * fao + b[i] * fbo for i in range(8)], fao * ad)


def cyc_sub(tuple a, tuple b):
    return cyc_add(a, cyc_neg(b))


def cyc_neg(tuple a):
    return (-a[0], -a[1], -a[2], -a[3], -a[4], -a[5], -a[6], -a[7], a[8])


def cyc_scale(tuple a, num, den=1):
    """Multiply by the rational num/den (den nonzero)."""
    cdef long long an[9]
    cdef long long c[8]
    cdef long long n, d
    cdef int i
    if num == 0:
        return ZERO
    try:
        n = num
        d = den
    except OverflowError:
        return _normalize_obj([a[i] * num for i in range(8)], a[8] * den)
    if -WINDOW <= n <= WINDOW and -WINDOW <= d <= WINDOW and _load(a, an, WINDOW):
        for i in range(8):
            c[i] = an[i] * n
        d = an[8] * d
        if d < 0:
            d = -d
            for i in range(8):
                c[i] = -c[i]
        return _pack(c, d)
    return _normalize_obj([a[i] * num for i in range(8)], a[8] * den)


def cyc_mul(tuple a, tuple b):
    cdef long long an[9]
    cdef long long bn[9]
    cdef long long c[15]
    cdef int i
    if _load(a, an, WINDOW) and _load(b, bn, WINDOW):
        for i in range(15):
            c[i] = 0
        _conv_c(an, bn, c)
        _reduce_c(c)
        return _pack(c, an[8] * bn[8])
    co = [0] * 15
    _conv_obj(a, b, co)
    _reduce_obj(co)
    return _normalize_obj(co[:8], a[8] * b[8])


def _dot_obj(avec, bvec):
    c = [0] * 15
    den = 1
    for x, y in zip(avec, bvec):
        xd = x[8] * y[8]
        if xd == den:
            _conv_obj(x, y, c)
        else:
            g = gcd(den, xd)
            fc = xd // g
            ft = den // g
            if fc != 1:
                for k in range(15):
                    c[k] *= fc
            if ft == 1:
                _conv_obj(x, y, c)
            else:
                t = [0] * 15
                _conv_obj(x, y, t)
                for k in range(15):
                    c[k] += t[k] * ft
            den *= fc
    _reduce_obj(c)
    return _normalize_obj(c[:8], den)


cdef tuple _dot_fast(avec, bvec, Py_ssize_t length):
    """int64 dot attempt; returns None when any step leaves the window.

    Invariant between iterations: den <= DEN_LIMIT (2^20) and every |c[k]|
    <= ACC_LIMIT (2^60).  Inputs are within DOT_WINDOW (2^18), so one raw
    convolution is below 8 * 2^36 = 2^39 and t[k] * ft <= 2^59: all growth
    steps are pre-checked against those invariants before they execute.
    """
    cdef long long c[15]
    cdef long long xn[9]
    cdef long long yn[9]
    cdef long long t[15]
    cdef long long den = 1, xd, g, fc, ft, m = 0
    cdef Py_ssize_t idx
    cdef int k
    for k in range(15):
        c[k] = 0
    for idx in range(length):
        if not _load(avec[idx], xn, DOT_WINDOW) or not _load(bvec[idx], yn, DOT_WINDOW):
            return None
        xd = xn[8] * yn[8]
        if xd == den:
            _conv_c(xn, yn, c)
        else:
            g = _llgcd(den, xd)
            fc = xd // g
            ft = den // g
            if den > DEN_LIMIT // fc:
                return None
            if fc != 1:
                if m > ACC_LIMIT // fc:
                    return None
                for k in range(15):
                    c[k] *= fc
            for k in range(15):
                t[k] = 0
            _conv_c(xn, yn, t)
            if ft == 1:
                for k in range(15):
                    c[k] += t[k]
            else:
                for k in range(15):
                    c[k] += t[k] * ft
            den *= fc
        m = 0
        for k in range(15):
            if _llabs(c[k]) > m:
                m = _llabs(c[k])
        if m > ACC_LIMIT:
            return None
    _reduce_c(c)
    return _pack(c, den)


def cyc_dot(avec, bvec):
    """Sum of pairwise products; the inner loop of matrix multiplication."""
    cdef Py_ssize_t length = min(len(avec), len(bvec))
    result = _dot_fast(avec, bvec, length)
    if result is not None:
        return result
    return _dot_obj(avec, bvec)


def cyc_matmul(a, b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    """Product of row-major raw-scalar matrices: (n x k) @ (k x m)."""
    cdef Py_ssize_t i, j, r
    cols = [[b[r * m + j] for r in range(k)] for j in range(m)]
    out = []
    for i in range(n):
        row = a[i * k : (i + 1) * k]
        for j in range(m):
            res = _dot_fast(row, cols[j], k)
            if res is None:
                res = _dot_obj(row, cols[j])
            out.append(res)
    return out

"""Exact arithmetic in the cyclotomic field Q(zeta24) and dense linear
algebra over it.

zeta24 = e^(i*pi/12) has minimal polynomial Phi_24(x) = x^8 - x^4 + 1, so
the field has degree 8 over Q and contains i = z^6, the primitive cube
root of unity omega = z^8, sqrt(2) = z^3 + z^-3 and sqrt(3) = z^2 + z^-2.
Scalars are stored as 8 rational coordinates in the power basis and are
reduced eagerly, so equality is plain coordinate comparison.

Every value is immutable; all operations are pure functions.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from fgre import ratlin
from fgre.backend import kernels as _k

Rational = Fraction

_ZETA_RAW = (0, 1, 0, 0, 0, 0, 0, 0, 1)

# power table for zeta^k, k mod 24 (zeta^24 = 1)
_POW = [_k.ONE]
for _ in range(23):
    _POW.append(_k.cyc_mul(_POW[-1], _ZETA_RAW))


def _coords_to_raw(coords):
    fracs = [Fraction(c) for c in coords]
    den = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return _k.cyc_normalize([f.numerator * (den // f.denominator) for f in fracs], den)


class CycScalar:
    """An element of Q(zeta24), canonically reduced mod Phi_24."""

    __slots__ = ("raw",)

    def __init__(self, raw):
        self.raw = raw

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rational(cls, value) -> "CycScalar":
        f = Fraction(value)
        return cls(_k.cyc_normalize([f.numerator, 0, 0, 0, 0, 0, 0, 0], f.denominator))

    @classmethod
    def from_coords(cls, coords) -> "CycScalar":
        if len(coords) != 8:
            raise ValueError("need exactly 8 coordinates")
        return cls(_coords_to_raw(coords))

    @classmethod
    def zeta_pow(cls, k: int) -> "CycScalar":
        return cls(_POW[k % 24])

    @classmethod
    def from_strings(cls, strings) -> "CycScalar":
        return cls.from_coords([Fraction(s) for s in strings])

    # -- views ------------------------------------------------------------

    def coords(self) -> tuple:
        den = self.raw[8]
        return tuple(Fraction(self.raw[i], den) for i in range(8))

    def to_strings(self) -> list:
        return [str(c) for c in self.coords()]

    def is_zero(self) -> bool:
        return self.raw == _k.ZERO

    def is_rational(self) -> bool:
        return not any(self.raw[1:8])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.raw[0], self.raw[8])

    def gaussian_parts(self) -> tuple:
        """(real, imag) as Fractions, for elements of Q(i) only."""
        if any(self.raw[k] for k in (1, 2, 3, 4, 5, 7)):
            raise ValueError(f"{self!r} is not in Q(i)")
        den = self.raw[8]
        return Fraction(self.raw[0], den), Fraction(self.raw[6], den)

    def approx(self) -> complex:
        """Float embedding zeta -> exp(i*pi/12).  Display only; never used
        in any decision or comparison."""
        import cmath

        z = cmath.exp(1j * cmath.pi / 12)
        return sum(complex(c) * z**k for k, c in enumerate(self.coords()))

    def sort_key(self):
        return self.coords()

    # -- field operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else CycScalar(_k.cyc_add(self.raw, o.raw))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else CycScalar(_k.cyc_sub(self.raw, o.raw))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else CycScalar(_k.cyc_sub(o.raw, self.raw))

    def __mul__(self, other):
        if isinstance(other, CycScalar):
            return CycScalar(_k.cyc_mul(self.raw, other.raw))
        if isinstance(other, int):
            return CycScalar(_k.cyc_scale(self.raw, other))
        if isinstance(other, Fraction):
            return CycScalar(_k.cyc_scale(self.raw, other.numerator, other.denominator))
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return CycScalar(_k.cyc_neg(self.raw))

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = ONE
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def inverse(self) -> "CycScalar":
        """Multiplicative inverse, by solving the 8x8 rational system of
        the multiplication-by-self map in the power basis."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta24)")
        if self.is_rational():
            return CycScalar.from_rational(1 / self.rational_value())
        cols = [CycScalar(_k.cyc_mul(self.raw, _POW[j])).coords() for j in range(8)]
        mat = [[cols[j][i] for j in range(8)] for i in range(8)]
        rhs = [Fraction(int(i == 0)) for i in range(8)]
        sol = ratlin.rat_solve(mat, rhs)
        assert sol is not None, "nonzero field element must be invertible"
        return CycScalar.from_coords(sol)

    def galois(self, m: int) -> "CycScalar":
        """The field automorphism zeta -> zeta^m, for m coprime to 24."""
        from math import gcd

        if gcd(m, 24) != 1:
            raise ValueError("galois twist needs m coprime to 24")
        acc = _k.ZERO
        for kk in range(8):
            n = self.raw[kk]
            if n:
                acc = _k.cyc_add(acc, _k.cyc_scale(_POW[(kk * m) % 24], n))
        return CycScalar(_k.cyc_scale(acc, 1, self.raw[8]))

    def conjugate(self) -> "CycScalar":
        """Complex conjugation zeta -> zeta^-1 = zeta^23."""
        return self.galois(23)

    # -- comparison / misc ---------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self.raw == o.raw

    def __hash__(self):
        return hash(self.raw)

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return _pretty(self)

    def __repr__(self):
        return f"CycScalar({_pretty(self)!r})"


ZERO = CycScalar(_k.ZERO)
ONE = CycScalar(_k.ONE)
I = CycScalar.zeta_pow(6)
OMEGA = CycScalar.zeta_pow(8)
SQRT2 = CycScalar.zeta_pow(3) + CycScalar.zeta_pow(21)
SQRT3 = CycScalar.zeta_pow(2) + CycScalar.zeta_pow(22)
SQRT6 = SQRT2 * SQRT3

# Q-basis {1, sqrt2, sqrt3, sqrt6} x {1, i} of the field, used for display
_PRETTY_BASIS = [ONE, SQRT2, SQRT3, SQRT6, I, I * SQRT2, I * SQRT3, I * SQRT6]
_PRETTY_INV = ratlin.rat_inverse(
    [[_PRETTY_BASIS[j].coords()[i] for j in range(8)] for i in range(8)]
)
_PRETTY_SYMS = ["", "√2", "√3", "√6", "i", "√2i", "√3i", "√6i"]


def _pretty(a: CycScalar) -> str:
    if a.is_zero():
        return "0"
    comps = ratlin.rat_matvec(_PRETTY_INV, a.coords())
    parts = []
    for coef, sym in zip(comps, _PRETTY_SYMS):
        if not coef:
            continue
        mag = abs(coef)
        body = (str(mag) if mag != 1 or not sym else "") + sym
        parts.append(("-" if coef < 0 else ("+" if parts else "")) + body)
    return "".join(parts)


def parse_scalar(value) -> CycScalar:
    """Scalar from its textual form: a rational string 'p/q' (or 'p'), or
    an 8-element list of such strings."""
    if isinstance(value, str):
        return CycScalar.from_rational(Fraction(value))
    return CycScalar.from_strings(value)


def scalar_text(a: CycScalar):
    """Canonical textual form: 'p/q' for rational values, else the
    8-element coordinate array."""
    if a.is_rational():
        return str(a.rational_value())
    return a.to_strings()


def random_scalar(rng, span: int = 3) -> CycScalar:
    """Random element with small rational coordinates (for property tests)."""
    return CycScalar.from_coords(
        [Fraction(rng.randint(-span, span), rng.randint(1, span)) for _ in range(8)]
    )


# ---------------------------------------------------------------------------
# dense matrices over Q(zeta24)


class CycMatrix:
    """Immutable dense matrix of CycScalars (row-major)."""

    __slots__ = ("nrows", "ncols", "raws")

    def __init__(self, nrows: int, ncols: int, raws: tuple):
        if nrows * ncols != len(raws):
            raise ValueError("entry count does not match dimensions")
        self.nrows = nrows
        self.ncols = ncols
        self.raws = raws

    @classmethod
    def from_rows(cls, rows) -> "CycMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        raws = []
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for x in row:
                if isinstance(x, CycScalar):
                    raws.append(x.raw)
                elif isinstance(x, tuple) and len(x) == 9:
                    raws.append(x)
                else:
                    raws.append(CycScalar.from_rational(x).raw)
        return cls(nrows, ncols, tuple(raws))

    @classmethod
    def identity(cls, n: int) -> "CycMatrix":
        return cls(n, n, tuple(_k.ONE if i == j else _k.ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "CycMatrix":
        return cls(nrows, ncols, (_k.ZERO,) * (nrows * ncols))

    def entry(self, i: int, j: int) -> CycScalar:
        return CycScalar(self.raws[i * self.ncols + j])

    def row(self, i: int) -> list:
        return [CycScalar(r) for r in self.raws[i * self.ncols : (i + 1) * self.ncols]]

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.nrows)]

    def __mul__(self, other):
        if isinstance(other, CycMatrix):
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch")
            raws = _k.cyc_matmul(self.raws, other.raws, self.nrows, self.ncols, other.ncols)
            return CycMatrix(self.nrows, other.ncols, tuple(raws))
        if isinstance(other, (CycScalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CycScalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, s) -> "CycMatrix":
        if isinstance(s, CycScalar):
            return CycMatrix(
                self.nrows, self.ncols, tuple(_k.cyc_mul(r, s.raw) for r in self.raws)
            )
        f = Fraction(s)
        return CycMatrix(
            self.nrows,
            self.ncols,
            tuple(_k.cyc_scale(r, f.numerator, f.denominator) for r in self.raws),
        )

    def __add__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        self._same_shape(other)
        return CycMatrix(
            self.nrows,
            self.ncols,
            tuple(_k.cyc_add(a, b) for a, b in zip(self.raws, other.raws)),
        )

    def __sub__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        self._same_shape(other)
        return CycMatrix(
            self.nrows,
            self.ncols,
            tuple(_k.cyc_sub(a, b) for a, b in zip(self.raws, other.raws)),
        )

    def __neg__(self):
        return CycMatrix(self.nrows, self.ncols, tuple(_k.cyc_neg(r) for r in self.raws))

    def _same_shape(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def transpose(self) -> "CycMatrix":
        raws = tuple(
            self.raws[i * self.ncols + j] for j in range(self.ncols) for i in range(self.nrows)
        )
        return CycMatrix(self.ncols, self.nrows, raws)

    def conjugate(self) -> "CycMatrix":
        return CycMatrix(
            self.nrows, self.ncols, tuple(CycScalar(r).conjugate().raw for r in self.raws)
        )

    def trace(self) -> CycScalar:
        acc = _k.ZERO
        for i in range(min(self.nrows, self.ncols)):
            acc = _k.cyc_add(acc, self.raws[i * self.ncols + i])
        return CycScalar(acc)

    def kron(self, other: "CycMatrix") -> "CycMatrix":
        """Kronecker product: block (i, j) is self[i, j] * other."""
        raws = []
        for i in range(self.nrows):
            for r in range(other.nrows):
                for j in range(self.ncols):
                    s = self.raws[i * self.ncols + j]
                    for c in range(other.ncols):
                        raws.append(_k.cyc_mul(s, other.raws[r * other.ncols + c]))
        return CycMatrix(self.nrows * other.nrows, self.ncols * other.ncols, tuple(raws))

    def commutator(self, other: "CycMatrix") -> "CycMatrix":
        return self * other - other * self

    # -- elimination --------------------------------------------------------

    def rank(self) -> int:
        rows = [list(self.raws[i * self.ncols : (i + 1) * self.ncols]) for i in range(self.nrows)]
        return len(_raw_rref(rows, self.ncols))

    def solve(self, rhs: "CycMatrix"):
        """Exact x with self * x = rhs, or None if no solution exists."""
        if self.nrows != rhs.nrows:
            raise ValueError("rhs row count mismatch")
        n, w = self.ncols, rhs.ncols
        rows = [
            list(self.raws[i * n : (i + 1) * n]) + list(rhs.raws[i * w : (i + 1) * w])
            for i in range(self.nrows)
        ]
        pivots = _raw_rref(rows, n)
        for i in range(len(pivots), self.nrows):
            if any(r != _k.ZERO for r in rows[i][n:]):
                return None
        out = [[_k.ZERO] * w for _ in range(n)]
        for r, c in enumerate(pivots):
            out[c] = rows[r][n:]
        return CycMatrix(n, w, tuple(x for row in out for x in row))

    def inverse(self) -> "CycMatrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices invert")
        inv = self.solve(CycMatrix.identity(self.nrows))
        if inv is None or self.rank() != self.nrows:
            raise ZeroDivisionError("singular matrix")
        return inv

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    # -- misc ----------------------------------------------------------------

    def sort_key(self):
        return tuple(CycScalar(r).coords() for r in self.raws)

    def to_entry_lists(self) -> list:
        return [[scalar_text(e) for e in row] for row in self.to_rows()]

    @classmethod
    def from_entry_lists(cls, rows) -> "CycMatrix":
        return cls.from_rows([[parse_scalar(e) for e in row] for row in rows])

    def __eq__(self, other):
        return (
            isinstance(other, CycMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.raws == other.raws
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.raws))

    def __repr__(self):
        rows = "; ".join(
            ", ".join(str(e) for e in self.row(i)) for i in range(min(self.nrows, 6))
        )
        return f"CycMatrix({self.nrows}x{self.ncols}: {rows})"


def _raw_inverse(raw):
    return CycScalar(raw).inverse().raw


def _raw_rref(rows, ncols: int) -> list:
    """Gauss-Jordan on raw-scalar rows (in place, exact pivot tests).
    Only the first ncols columns are eligible as pivots; any extra columns
    ride along (for augmented systems).  Returns pivot columns."""
    nrows = len(rows)
    width = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c] != _k.ZERO), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        if rows[r][c] != _k.ONE:
            f = _raw_inverse(rows[r][c])
            rows[r] = [_k.cyc_mul(f, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != _k.ZERO:
                f = rows[i][c]
                rows[i] = [
                    _k.cyc_sub(x, _k.cyc_mul(f, y)) for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


# -- module-level operation surface -----------------------------------------


def scalar_mul(a: CycScalar, b: CycScalar) -> CycScalar:
    """Product in Q(zeta24), reduced mod Phi_24."""
    return a * b


def scalar_inverse(a: CycScalar) -> CycScalar:
    return a.inverse()


def complex_conjugate(a: CycScalar) -> CycScalar:
    return a.conjugate()


def matrix_rank(m: CycMatrix) -> int:
    return m.rank()


def matrix_solve(m: CycMatrix, rhs: CycMatrix):
    return m.solve(rhs)

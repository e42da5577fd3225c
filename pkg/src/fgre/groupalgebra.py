"""Group rings and group algebras over Z, Q and Q(zeta24): convolution
products, central idempotents, block dimensions, integrality checks, and
the quantum-number decomposition of the Q8 group algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from fgre import ratlin
from fgre.cycarith import CycMatrix, CycScalar
from fgre.chartheory import CharacterTable, complex_character_table
from fgre.errors import NotAbelian, NotIdempotent, WrongGroup
from fgre.groupcore import FiniteGroup, builtin_group

_RING_RANK = {"int": 0, "rat": 1, "cyc": 2}


def _coerce(value, ring):
    if ring == "int":
        return int(value)
    if ring == "rat":
        return value if isinstance(value, Fraction) else Fraction(value)
    if isinstance(value, CycScalar):
        return value
    return CycScalar.from_rational(value)


def _zero(ring):
    return {"int": 0, "rat": Fraction(0), "cyc": CycScalar.from_rational(0)}[ring]


class AlgebraElement:
    """A group-ring element: one coefficient per group element, multiplied
    by the convolution the Cayley table induces."""

    __slots__ = ("group", "ring", "coeffs")

    def __init__(self, group: FiniteGroup, ring: str, coeffs):
        if ring not in _RING_RANK:
            raise ValueError(f"unknown ring {ring!r}")
        if len(coeffs) != group.order:
            raise ValueError("need one coefficient per group element")
        self.group = group
        self.ring = ring
        self.coeffs = tuple(_coerce(c, ring) for c in coeffs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, group, ring="rat"):
        return cls(group, ring, [0] * group.order)

    @classmethod
    def basis(cls, group, index: int, ring="rat"):
        coeffs = [0] * group.order
        coeffs[index] = 1
        return cls(group, ring, coeffs)

    @classmethod
    def identity(cls, group, ring="rat"):
        return cls.basis(group, 0, ring)

    @classmethod
    def from_labels(cls, group, mapping, ring="rat"):
        coeffs = [0] * group.order
        for label, c in mapping.items():
            coeffs[group.index_of_label(label)] = c
        return cls(group, ring, coeffs)

    # -- ring structure --------------------------------------------------------

    def _join(self, other) -> str:
        if self.group is not other.group and self.group.cayley != other.group.cayley:
            raise ValueError("elements live over different groups")
        return max(self.ring, other.ring, key=_RING_RANK.get)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement.identity(self.group, self.ring) * other
        ring = self._join(other)
        return AlgebraElement(
            self.group,
            ring,
            [_coerce(a, ring) + _coerce(b, ring) for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.group, self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            ring = self.ring
            if isinstance(other, Fraction) and ring == "int":
                ring = "rat"
            if isinstance(other, CycScalar):
                ring = "cyc"
            return AlgebraElement(
                self.group, ring, [_coerce(c, ring) * _coerce(other, ring) for c in self.coeffs]
            )
        ring = self._join(other)
        table = self.group.cayley
        out = [_zero(ring)] * self.group.order
        a = [_coerce(c, ring) for c in self.coeffs]
        b = [_coerce(c, ring) for c in other.coeffs]
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = table[i]
            for j, bj in enumerate(b):
                if bj:
                    k = row[j]
                    out[k] = out[k] + ai * bj
        return AlgebraElement(self.group, ring, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * Fraction(1, scalar) if isinstance(scalar, int) else self * (1 / scalar)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.group.cayley == other.group.cayley
            and [_coerce(c, "cyc") for c in self.coeffs]
            == [_coerce(c, "cyc") for c in other.coeffs]
        )

    def __hash__(self):
        return hash(tuple(_coerce(c, "cyc").raw for c in self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def sort_key(self):
        return tuple(_coerce(c, "cyc").sort_key() for c in self.coeffs)

    def is_integral(self) -> bool:
        if self.ring == "int":
            return True
        if self.ring == "rat":
            return all(c.denominator == 1 for c in self.coeffs)
        return all(c.is_rational() and c.rational_value().denominator == 1 for c in self.coeffs)

    def as_ring(self, ring: str) -> "AlgebraElement":
        if ring == "int" and not self.is_integral():
            raise ValueError("coefficients are not integers")
        if ring == "rat" and self.ring == "cyc":
            return AlgebraElement(self.group, "rat", [c.rational_value() for c in self.coeffs])
        if ring == "int" and self.ring == "cyc":
            return AlgebraElement(
                self.group, "int", [int(c.rational_value()) for c in self.coeffs]
            )
        return AlgebraElement(self.group, ring, self.coeffs)

    def to_json(self) -> dict:
        if self.ring == "cyc":
            coeffs = [c.to_strings() for c in self.coeffs]
        else:
            coeffs = [str(c) for c in self.coeffs]
        return {"group": self.group.name, "ring": self.ring, "coeffs": coeffs}

    @classmethod
    def from_json(cls, data: dict, group: FiniteGroup = None) -> "AlgebraElement":
        if group is None:
            group = builtin_group(data["group"])
        ring = data["ring"]
        if ring == "cyc":
            coeffs = [CycScalar.from_strings(c) for c in data["coeffs"]]
        elif ring == "rat":
            coeffs = [Fraction(c) for c in data["coeffs"]]
        else:
            coeffs = [int(c) for c in data["coeffs"]]
        return cls(group, ring, coeffs)

    def format(self) -> str:
        parts = []
        for c, label in zip(self.coeffs, self.group.labels):
            if not c:
                continue
            cs = str(c)
            term = label if cs == "1" else ("-" + label if cs == "-1" else f"{cs}*{label}")
            parts.append(("+" if parts and not term.startswith("-") else "") + term)
        return "".join(parts) or "0"

    def __repr__(self):
        return f"AlgebraElement({self.group.name}, {self.ring}: {self.format()})"


def algebra_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution product in the group algebra."""
    return a * b


# ---------------------------------------------------------------------------
# idempotents


@dataclass(frozen=True)
class IdempotentReport:
    idempotent: bool
    central: bool


def verify_idempotent(a: AlgebraElement) -> IdempotentReport:
    """Exact check of a*a == a and of commutation with every basis element."""
    idem = a * a == a
    central = all(
        a * AlgebraElement.basis(a.group, g, a.ring)
        == AlgebraElement.basis(a.group, g, a.ring) * a
        for g in range(a.group.order)
    )
    return IdempotentReport(idem, central)


def central_idempotents(ct: CharacterTable) -> list:
    """Primitive central idempotents, one per table row.

    For a complex table these are the classical e_chi =
    (deg/|G|) sum over g of chi(g^-1) g, with coefficients in Q(zeta24).
    For a real table the conjugate pair of each complex-type row is summed,
    so every block idempotent has rational coefficients.
    """
    g = ct.group
    out = []
    for row in ct.rows:
        if ct.field == "complex":
            scale = Fraction(row.degree, g.order)
        else:
            # a real row's values are chi, chi + conj(chi) or 2*chi for
            # division R, C, H; the constituent degree and the doubling
            # both fold into degree / dim(division)
            m = {"R": 1, "C": 2, "H": 4}[row.division]
            scale = Fraction(row.degree, m * g.order)
        coeffs = [
            row.value_at_element(g.inverses[i]) * scale for i in range(g.order)
        ]
        elem = AlgebraElement(g, "cyc", coeffs)
        out.append(elem if ct.field == "complex" else elem.as_ring("rat"))
    return out


def block_dimension(a: AlgebraElement) -> int:
    """Rank of x -> a*x on the group algebra, over the fraction field of
    the element's coefficient ring."""
    report = verify_idempotent(a)
    if not report.idempotent:
        raise NotIdempotent(f"{a!r} is not idempotent")
    g = a.group
    cols = [(a * AlgebraElement.basis(g, j, a.ring)).coeffs for j in range(g.order)]
    if a.ring == "cyc":
        mat = CycMatrix.from_rows([[cols[j][i] for j in range(g.order)] for i in range(g.order)])
        return mat.rank()
    return ratlin.rat_rank([[Fraction(cols[j][i]) for j in range(g.order)] for i in range(g.order)])


def rational_block_idempotents(g: FiniteGroup) -> list:
    """Primitive central idempotents of the rational group algebra QG:
    one per Galois orbit of complex irreducibles."""
    ct = complex_character_table(g)
    twists = [m for m in range(1, 24) if __import__("math").gcd(m, 24) == 1]
    orbits = []
    used = set()
    for i, row in enumerate(ct.rows):
        if i in used:
            continue
        orbit = set()
        for m in twists:
            twisted = tuple(v.galois(m) for v in row.values)
            j = next(jj for jj, r in enumerate(ct.rows) if r.values == twisted)
            orbit.add(j)
        used |= orbit
        orbits.append(sorted(orbit))
    prims = central_idempotents(ct)
    out = []
    for orbit in orbits:
        total = AlgebraElement.zero(g, "cyc")
        for j in orbit:
            total = total + prims[j]
        out.append(total.as_ring("rat"))
    return sorted(out, key=AlgebraElement.sort_key)


def enumerate_idempotents_commutative(g: FiniteGroup) -> list:
    """All idempotents of QG for abelian g: the 2^b subset sums of the b
    primitive rational block idempotents."""
    if not g.is_abelian():
        raise NotAbelian(f"{g.name} is not abelian")
    prims = rational_block_idempotents(g)
    out = []
    for mask in range(1 << len(prims)):
        total = AlgebraElement.zero(g, "rat")
        for j, e in enumerate(prims):
            if mask >> j & 1:
                total = total + e
        out.append(total)
    return sorted(out, key=AlgebraElement.sort_key)


def integral_idempotent_check(g: FiniteGroup) -> list:
    """The idempotents of the integral group ring ZG (abelian g), i.e. the
    all-integer-coefficient members of the QG idempotent lattice."""
    return [
        e.as_ring("int") for e in enumerate_idempotents_commutative(g) if e.is_integral()
    ]


# ---------------------------------------------------------------------------
# the Q8 basis change and quantum numbers


@dataclass(frozen=True)
class QuantumNumbers:
    charge: Fraction
    weak_isospin: Fraction


# lambda_i, lambda_j sign pairs of the four 1-dimensional basis vectors
_LAMBDA_SIGNS = {"1a": (1, 1), "1b": (1, -1), "1c": (-1, 1), "1d": (-1, -1)}

Q8_QUANTUM_NUMBERS = {
    name: QuantumNumbers(Fraction(lj - li, 2), Fraction(lj, 2))
    for name, (li, lj) in _LAMBDA_SIGNS.items()
}

_Q8_BASIS_NAMES = ("1a", "1b", "1c", "1d", "t", "x", "y", "z")


def _q8_basis_vectors(g: FiniteGroup) -> dict:
    """The eight basis vectors as coefficient dicts keyed by element label."""
    vecs = {}
    for name, (li, lj) in _LAMBDA_SIGNS.items():
        lk = li * lj
        vecs[name] = {
            "1": 1, "-1": 1,
            "i": li, "-i": li, "j": lj, "-j": lj, "k": lk, "-k": lk,
        }
    vecs["t"] = {"1": 1, "-1": -1}
    vecs["x"] = {"i": 1, "-i": -1}
    vecs["y"] = {"j": 1, "-j": -1}
    vecs["z"] = {"k": 1, "-k": -1}
    return vecs


@dataclass(frozen=True)
class Q8Decomposition:
    names: tuple
    raw_coords: tuple         # w.r.t. the vectors exactly as written
    normalized_coords: tuple  # 1a..1d divided by 8, t..z divided by 2
    quantum_numbers: dict     # name -> QuantumNumbers for 1a..1d

    def one_dim_part(self) -> dict:
        return {n: c for n, c in zip(self.names, self.raw_coords) if n in _LAMBDA_SIGNS}


def _require_q8(g: FiniteGroup):
    from fgre.groupcore import QUAT_I, QUAT_J, QUAT_K, QUAT_ONE

    units = {QUAT_ONE, -QUAT_ONE, QUAT_I, -QUAT_I, QUAT_J, -QUAT_J, QUAT_K, -QUAT_K}
    if g.kind != "quaternion" or set(g.payloads) != units:
        raise WrongGroup("q8_decompose needs the quaternion group Q8")


def q8_basis_matrix(g: FiniteGroup, normalized: bool = False):
    """Columns are the eight basis vectors in canonical element order."""
    _require_q8(g)
    vecs = _q8_basis_vectors(g)
    cols = []
    for name in _Q8_BASIS_NAMES:
        col = [Fraction(0)] * 8
        for label, c in vecs[name].items():
            col[g.index_of_label(label)] = Fraction(c)
        if normalized:
            col = [x / (8 if name in _LAMBDA_SIGNS else 2) for x in col]
        cols.append(col)
    return [[cols[j][i] for j in range(8)] for i in range(8)]


def q8_decompose(a: AlgebraElement) -> Q8Decomposition:
    """Coordinates of a Q8 group-algebra element in the basis
    {1a, 1b, 1c, 1d, t, x, y, z}, plus the (charge, weak isospin) pair of
    each 1-dimensional component: charge (lambda_j - lambda_i)/2 and
    isospin lambda_j/2."""
    _require_q8(a.group)
    if a.ring == "cyc":
        a = a.as_ring("rat")
    target = [Fraction(c) for c in a.coeffs]
    raw = ratlin.rat_solve(q8_basis_matrix(a.group), target)
    assert raw is not None, "basis matrix is invertible by construction"
    norm = [c * (8 if n in _LAMBDA_SIGNS else 2) for n, c in zip(_Q8_BASIS_NAMES, raw)]
    return Q8Decomposition(
        _Q8_BASIS_NAMES, tuple(raw), tuple(norm), dict(Q8_QUANTUM_NUMBERS)
    )


def q8_recompose(g: FiniteGroup, raw_coords) -> AlgebraElement:
    """Inverse of q8_decompose (raw coordinates)."""
    _require_q8(g)
    coeffs = ratlin.rat_matvec(q8_basis_matrix(g), [Fraction(c) for c in raw_coords])
    return AlgebraElement(g, "rat", coeffs)

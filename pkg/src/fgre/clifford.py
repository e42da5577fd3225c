"""Operators on the four-dimensional space of 2x2 complex matrices given by
simultaneous left and right multiplication, X -> A X B: gamma operators
built from Pauli pairs, anticommutator verification, the finite group the
right factors generate, and real Lie-algebra closures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from fgre import ratlin
from fgre.cycarith import I, CycMatrix, CycScalar
from fgre.errors import NotClifford
from fgre.groupcore import FiniteGroup, group_from_matrices

SIGMA1 = CycMatrix.from_rows([[0, 1], [1, 0]])
SIGMA2 = CycMatrix.from_rows([[0, -I], [I, 0]])
SIGMA3 = CycMatrix.from_rows([[1, 0], [0, -1]])
ID2 = CycMatrix.identity(2)


class LROperator:
    """The map X -> left * X * right on 2x2 matrices, realized as a 4x4
    matrix on the standard basis E11, E12, E21, E22 (row-major flatten)."""

    __slots__ = ("left", "right", "realized")

    def __init__(self, left: CycMatrix, right: CycMatrix):
        if (left.nrows, left.ncols) != (2, 2) or (right.nrows, right.ncols) != (2, 2):
            raise ValueError("left and right factors must be 2x2")
        self.left = left
        self.right = right
        # flatten(A X B) = (A kron B^T) flatten(X) for row-major flattening
        self.realized = left.kron(right.transpose())

    def apply(self, x: CycMatrix) -> CycMatrix:
        return self.left * x * self.right

    def __mul__(self, other):
        if isinstance(other, LROperator):
            # (A1,B1)(A2,B2) applied to X is A1 A2 X B2 B1
            return LROperator(self.left * other.left, other.right * self.right)
        if isinstance(other, (CycScalar, int, Fraction)):
            return LROperator(self.left.scale(other), self.right)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CycScalar, int, Fraction)):
            return LROperator(self.left.scale(other), self.right)
        return NotImplemented

    def __neg__(self):
        return LROperator(-self.left, self.right)

    def __eq__(self, other):
        return isinstance(other, LROperator) and self.realized == other.realized

    def __hash__(self):
        return hash(self.realized)

    def to_json(self) -> dict:
        return {
            "left": self.left.to_entry_lists(),
            "right": self.right.to_entry_lists(),
            "realized": self.realized.to_entry_lists(),
        }

    def __repr__(self):
        return f"LROperator(left={self.left!r}, right={self.right!r})"


def lr_operator(left: CycMatrix, right: CycMatrix) -> LROperator:
    return LROperator(left, right)


@dataclass(frozen=True)
class GammaSet:
    gamma0: LROperator
    gamma1: LROperator
    gamma2: LROperator
    gamma3: LROperator

    def __iter__(self):
        return iter((self.gamma0, self.gamma1, self.gamma2, self.gamma3))

    def to_json(self) -> dict:
        return {f"gamma{i}": g.to_json() for i, g in enumerate(self)}


def paper_gammas() -> GammaSet:
    """gamma0 = (1, s1), gamma1 = (s1, i s2), gamma2 = (s2, i s2),
    gamma3 = (s3, i s2): each factor swaps the two columns of the spinor."""
    i_sigma2 = SIGMA2.scale(I)
    return GammaSet(
        LROperator(ID2, SIGMA1),
        LROperator(SIGMA1, i_sigma2),
        LROperator(SIGMA2, i_sigma2),
        LROperator(SIGMA3, i_sigma2),
    )


@dataclass(frozen=True)
class CliffordReport:
    signature: tuple  # +1 / -1 per gamma, from gamma^2 = +-identity


def clifford_verify(gs: GammaSet) -> CliffordReport:
    """Check all anticommutators on the realized matrices: off-diagonal
    pairs must vanish and each square must be +-identity.  Raises
    NotClifford (carrying the offending pair) otherwise."""
    gammas = list(gs)
    ident = CycMatrix.identity(4)
    signs = []
    for a in range(4):
        sq = gammas[a].realized * gammas[a].realized
        if sq == ident:
            signs.append(1)
        elif sq == -ident:
            signs.append(-1)
        else:
            raise NotClifford((a, a), f"gamma{a}^2 is not +-identity")
    for a in range(4):
        for b in range(a + 1, 4):
            anti = gammas[a].realized * gammas[b].realized + gammas[b].realized * gammas[a].realized
            if anti != CycMatrix.zeros(4, 4):
                raise NotClifford((a, b), f"gamma{a} and gamma{b} do not anticommute")
    return CliffordReport(tuple(signs))


def right_mult_operators(gs: GammaSet) -> tuple:
    """The pure right-multiplication operators i*gamma0 and
    i*gamma1*gamma2*gamma3 (their left factors cancel to the identity)."""
    a = I * gs.gamma0
    b = I * (gs.gamma1 * gs.gamma2 * gs.gamma3)
    return a, b


def right_mult_group(gs: GammaSet, cap: int = 10000) -> FiniteGroup:
    """Closure of the realized right-multiplication operators; for the
    stock gamma set this is a copy of the quaternion group Q8."""
    a, b = right_mult_operators(gs)
    return group_from_matrices([a.realized, b.realized], cap=cap, name="right-mult")


def gamma_products(gs: GammaSet) -> list:
    """The 16 realized products gamma_S over subsets S of {0,1,2,3}, in
    ascending-index order within each product, subsets in bitmask order."""
    gammas = list(gs)
    out = []
    for mask in range(16):
        acc = CycMatrix.identity(4)
        for idx in range(4):
            if mask >> idx & 1:
                acc = acc * gammas[idx].realized
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# rational Lie-algebra closures


def _matrix_to_qvector(m: CycMatrix) -> list:
    """Flatten a matrix over Q(zeta24) to a rational vector, 8 coordinates
    per entry (so spans are taken over Q, not over the field)."""
    out = []
    for raw in m.raws:
        den = raw[8]
        out.extend(Fraction(raw[k], den) for k in range(8))
    return out


class _QSpan:
    """A growing rational span with incremental row reduction."""

    def __init__(self, width: int):
        self.width = width
        self.rows = []   # reduced rows
        self.pivots = []

    def reduce(self, vec):
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert if independent; True when the span grew."""
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        f = v[p]
        v = [x / f for x in v]
        for i, (row, q) in enumerate(zip(self.rows, self.pivots)):
            if row[p]:
                g = row[p]
                self.rows[i] = [x - g * y for x, y in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def lie_closure(generators, include_imaginary_multiples: bool = False) -> list:
    """Basis (as matrices) of the smallest rational subspace containing
    the generators and closed under the commutator [a, b] = a b - b a.

    Spans are over Q via the 8-fold coordinate expansion of Q(zeta24)
    entries, matching real-Lie-algebra semantics.  With
    include_imaginary_multiples=True each generator g is accompanied by
    i*g, which computes the closure of the complex span instead (its
    length is then the complex span's real dimension).
    """
    gens = list(generators)
    if include_imaginary_multiples:
        gens = [m for g in gens for m in (g, g.scale(I))]
    if not gens:
        return []
    n = gens[0].nrows
    span = _QSpan(n * n * 8)
    basis = []
    for g in gens:
        if span.add(_matrix_to_qvector(g)):
            basis.append(g)
    frontier = list(basis)
    while frontier:
        new = []
        for a in basis:
            for b in frontier:
                if a is b:
                    continue
                br = a.commutator(b)
                if span.add(_matrix_to_qvector(br)):
                    new.append(br)
        basis.extend(new)
        frontier = new
    return basis


def lie_closure_dim(generators, include_imaginary_multiples: bool = False) -> int:
    return len(lie_closure(generators, include_imaginary_multiples))


def span_dim(matrices) -> int:
    """Rational dimension of the plain linear span (no bracket closure)."""
    mats = list(matrices)
    if not mats:
        return 0
    n = mats[0].nrows
    span = _QSpan(n * n * 8)
    for m in mats:
        span.add(_matrix_to_qvector(m))
    return span.dim


def left_generators(gs: GammaSet) -> list:
    """The realized operators i (as i*identity), gamma1*gamma2 and
    gamma2*gamma3: pure left multiplications."""
    return [
        LROperator(ID2.scale(I), ID2).realized,
        (gs.gamma1 * gs.gamma2).realized,
        (gs.gamma2 * gs.gamma3).realized,
    ]


def spin_generators(gs: GammaSet) -> list:
    """Realized gamma0*gamma1, gamma1*gamma2, gamma2*gamma3 (the
    relativistic spin generators)."""
    return [
        (gs.gamma0 * gs.gamma1).realized,
        (gs.gamma1 * gs.gamma2).realized,
        (gs.gamma2 * gs.gamma3).realized,
    ]

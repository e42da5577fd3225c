"""Complex and real character tables, Frobenius-Schur indicators, tensor
decompositions and Wedderburn block structures.

Complex tables are computed with Dixon's modular method: the class-sum
structure-constant matrices are simultaneously diagonalized over F_p for a
prime p = 1 (mod exponent), p > 2*sqrt(|G|); central characters are read
off the common eigenvectors, degrees recovered from the orthogonality
normalization, and each value lifted to an exact cyclotomic integer via
root-of-unity multiplicity counts.  The lifted table is then re-verified
against the orthogonality relations in exact arithmetic, independently of
anything done mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from fgre.cycarith import ONE as CYC_ONE
from fgre.cycarith import ZERO as CYC_ZERO
from fgre.cycarith import CycScalar
from fgre.errors import InternalInconsistency, NotAClassFunction, UnsupportedExponent
from fgre.groupcore import FiniteGroup

_DIVISION_DIM = {"R": 1, "C": 2, "H": 4}


@dataclass(frozen=True)
class TableClass:
    """A column of a character table; ``parts`` lists the underlying
    complex-class indices (two of them for a merged real column)."""

    rep: int
    members: tuple
    size: int
    element_order: int
    parts: tuple


class Character:
    """A class function: one exact value per table column."""

    def __init__(self, group, classes, values, label="", fs=None, division=None,
                 constituents=()):
        self.group = group
        self.classes = classes
        self.values = tuple(values)
        self.label = label
        self.fs = fs
        self.division = division
        self.constituents = tuple(constituents)
        self._elem_map = None

    @property
    def degree(self) -> int:
        v = self.values[0].rational_value()
        if v.denominator != 1:
            raise InternalInconsistency("character degree is not an integer")
        return int(v)

    def value_at_element(self, i: int) -> CycScalar:
        if self._elem_map is None:
            m = {}
            for cl, v in zip(self.classes, self.values):
                for e in cl.members:
                    m[e] = v
            self._elem_map = m
        return self._elem_map[i]

    def conjugated(self) -> "Character":
        return Character(self.group, self.classes, [v.conjugate() for v in self.values])

    def sort_key(self):
        return (self.degree, tuple(v.sort_key() for v in self.values))

    def __eq__(self, other):
        return isinstance(other, Character) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values)
        return f"Character({self.label or self.degree}: {vals})"


class CharacterTable:
    def __init__(self, group: FiniteGroup, field: str, classes, rows):
        self.group = group
        self.field = field
        self.classes = tuple(classes)
        self.rows = tuple(rows)

    def row_by_label(self, label: str) -> Character:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(f"no row labelled {label!r}")

    def labels(self) -> list:
        return [r.label for r in self.rows]

    def inner(self, avals, bvals) -> CycScalar:
        """Sum over columns of |C| * a(C) * conj(b(C))."""
        acc = CYC_ZERO
        for cl, x, y in zip(self.classes, avals, bvals):
            acc = acc + x * y.conjugate() * cl.size
        return acc

    def self_inner_int(self, row: Character) -> int:
        v = self.inner(row.values, row.values).rational_value()
        assert v.denominator == 1
        return int(v)

    def check_orthogonality(self):
        """Exact row and column orthogonality.  For a real table the row
        norm is |G| times the dimension of the endomorphism division ring
        (1, 2 or 4 for R, C, H); for a complex table it is |G|."""
        n = len(self.rows)
        order = self.group.order
        for i in range(n):
            for j in range(n):
                got = self.inner(self.rows[i].values, self.rows[j].values)
                if i != j:
                    want = CYC_ZERO
                elif self.field == "complex":
                    want = CycScalar.from_rational(order)
                else:
                    want = CycScalar.from_rational(order * _DIVISION_DIM[self.rows[i].division])
                if got != want:
                    raise InternalInconsistency(
                        f"row orthogonality failed at ({i}, {j}): {got} != {want}"
                    )
        if self.field == "complex":
            for a in range(len(self.classes)):
                for b in range(len(self.classes)):
                    acc = CYC_ZERO
                    for r in self.rows:
                        acc = acc + r.values[a] * r.values[b].conjugate()
                    want = (
                        CycScalar.from_rational(Fraction(order, self.classes[a].size))
                        if a == b
                        else CYC_ZERO
                    )
                    if acc != want:
                        raise InternalInconsistency(f"column orthogonality failed at ({a}, {b})")

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "field": self.field,
            "classes": [
                {
                    "rep": self.group.labels[c.rep],
                    "size": c.size,
                    "order": c.element_order,
                }
                for c in self.classes
            ],
            "rows": [
                {
                    "label": r.label,
                    "degree": r.degree,
                    "fs": r.fs if r.fs is not None else {"R": 1, "C": 0, "H": -1}[r.division],
                    "values": [v.to_strings() for v in r.values],
                }
                for r in self.rows
            ],
        }

    def __repr__(self):
        return f"CharacterTable({self.group.name}, {self.field}, {len(self.rows)} rows)"


# ---------------------------------------------------------------------------
# small number theory mod p (p < 100 here, so everything is brute force)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2*sqrt(order)."""
    p = max(2, 2 * isqrt(order))
    while True:
        p += 1
        if p % exponent == 1 and _is_prime(p):
            return p


def _primitive_root(p: int) -> int:
    factors = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise InternalInconsistency(f"no primitive root mod {p}")


def _rref_modp(rows, p):
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _nullspace_modp(mat, p):
    """Basis rows of the kernel of the square matrix mat over F_p."""
    n = len(mat)
    rows = [list(r) for r in mat]
    pivots = _rref_modp(rows, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-rows[r][f]) % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# Dixon's algorithm


def _structure_matrix(g: FiniteGroup, i: int):
    """M with M[j][k] = #{x in C_i : x^-1 z_k in C_j}, i.e. the matrix of
    multiplication by the class sum K_i on the center, acting on column
    vectors u_k = omega(K_k)."""
    n = len(g.classes)
    m = [[0] * n for _ in range(n)]
    for k in range(n):
        zk = g.classes[k].rep
        for x in g.classes[i].members:
            j = g.class_of[g.mul(g.inverses[x], zk)]
            m[j][k] += 1
    return m


def _split_space(rows, pivots, mat, p):
    """Refine an invariant subspace (RREF basis rows) into eigenspaces of
    mat, trying every residue as an eigenvalue."""
    dim = len(rows)
    if dim == 1:
        return [(rows, pivots)]
    n = len(rows[0])
    images = []
    for v in rows:
        images.append([sum(mat[j][k] * v[k] for k in range(n)) % p for j in range(n)])
    # coordinates of M * (sum_s w_s rows[s]) are w^T R, so eigenvectors of the
    # restriction come from the kernel of (R^T - lam) acting on columns
    restricted_t = [[images[r][pivots[c]] for r in range(dim)] for c in range(dim)]
    out = []
    found = 0
    for lam in range(p):
        shifted = [
            [(restricted_t[r][c] - (lam if r == c else 0)) % p for c in range(dim)]
            for r in range(dim)
        ]
        null = _nullspace_modp(shifted, p)
        if not null:
            continue
        sub = []
        for w in null:
            vec = [0] * n
            for s, ws in enumerate(w):
                if ws:
                    for c in range(n):
                        vec[c] = (vec[c] + ws * rows[s][c]) % p
            sub.append(vec)
        piv = _rref_modp(sub, p)
        out.append((sub, piv))
        found += len(sub)
        if found == dim:
            break
    if found != dim:
        raise InternalInconsistency("class matrix failed to split over F_p")
    return out


def _central_characters(g: FiniteGroup, p: int):
    """Common eigenvectors u (normalized u[identity class] = 1) of all
    class-sum matrices; u_k = omega(K_k) mod p."""
    n = len(g.classes)
    spaces = [([[int(r == c) for c in range(n)] for r in range(n)], list(range(n)))]
    for i in range(n):
        if all(len(rows) == 1 for rows, _ in spaces):
            break
        mat = _structure_matrix(g, i)
        spaces = [piece for sp in spaces for piece in _split_space(sp[0], sp[1], mat, p)]
    if len(spaces) != n:
        raise InternalInconsistency(
            f"expected {n} one-dimensional common eigenspaces, got {len(spaces)}"
        )
    out = []
    for rows, _ in spaces:
        u = rows[0]
        if u[0] == 0:
            raise InternalInconsistency("eigenvector vanishes on the identity class")
        scale = pow(u[0], p - 2, p)
        out.append([x * scale % p for x in u])
    return out


def _power_map(g: FiniteGroup):
    """pm[k][t] = class index of rep_k^t."""
    out = []
    for cl in g.classes:
        row = []
        x = 0
        for _ in range(cl.element_order):
            row.append(g.class_of[x])
            x = g.mul(x, cl.rep)
        out.append(row)
    return out


def complex_character_table(g: FiniteGroup) -> CharacterTable:
    exponent = g.exponent()
    if 24 % exponent:
        raise UnsupportedExponent(
            f"group exponent {exponent} does not divide 24; values would leave Q(zeta24)"
        )
    n = len(g.classes)
    p = dixon_prime(g.order, exponent)
    omegas = _central_characters(g, p)
    inv_class = [g.class_of[g.inverses[cl.rep]] for cl in g.classes]
    sizes = [cl.size for cl in g.classes]
    pm = _power_map(g)
    z_e = pow(_primitive_root(p), (p - 1) // exponent, p)

    rows = []
    for u in omegas:
        s = sum(u[k] * u[inv_class[k]] * pow(sizes[k], p - 2, p) for k in range(n)) % p
        d_sq = g.order * pow(s, p - 2, p) % p
        r = next((r for r in range(p) if r * r % p == d_sq), None)
        if r is None:
            raise InternalInconsistency("degree^2 has no square root mod p")
        d = min(r, p - r)
        theta = [d * u[k] * pow(sizes[k], p - 2, p) % p for k in range(n)]

        values = []
        for k in range(n):
            o = g.classes[k].element_order
            z_o = pow(z_e, exponent // o, p)
            o_inv = pow(o, p - 2, p)
            acc = CYC_ZERO
            total = 0
            for s_ in range(o):
                m = sum(theta[pm[k][t]] * pow(z_o, -t * s_ % (p - 1), p) for t in range(o))
                m = m * o_inv % p
                total += m
                if m:
                    acc = acc + m * CycScalar.zeta_pow((24 // o) * s_)
            if total != d:
                raise InternalInconsistency(
                    f"multiplicities sum to {total}, expected degree {d}"
                )
            values.append(acc)
        rows.append(values)

    chars = [Character(g, None, vals) for vals in rows]
    classes = tuple(
        TableClass(cl.rep, cl.members, cl.size, cl.element_order, (i,))
        for i, cl in enumerate(g.classes)
    )
    for c in chars:
        c.classes = classes
    chars.sort(key=Character.sort_key)
    by_degree = {}
    for c in chars:
        by_degree.setdefault(c.degree, []).append(c)
    for d, group_rows in by_degree.items():
        for idx, c in enumerate(group_rows):
            c.label = f"{d}{chr(ord('a') + idx)}" if len(group_rows) > 1 else str(d)
    table = CharacterTable(g, "complex", classes, chars)
    if sum(r.degree**2 for r in table.rows) != g.order:
        raise InternalInconsistency("sum of squared degrees differs from the group order")
    table.check_orthogonality()
    for c in chars:
        c.fs = fs_indicator(c)
    return table


def fs_indicator(chi: Character) -> int:
    """Frobenius-Schur indicator (1/|G|) sum over g of chi(g^2), by
    exhaustive enumeration: 1 real, 0 complex, -1 quaternionic type."""
    g = chi.group
    acc = CYC_ZERO
    for i in range(g.order):
        acc = acc + chi.value_at_element(g.mul(i, i))
    v = (acc * Fraction(1, g.order)).rational_value()
    if v not in (-1, 0, 1):
        raise InternalInconsistency(f"indicator {v} outside {{-1, 0, 1}}")
    return int(v)


# ---------------------------------------------------------------------------
# real tables


def real_character_table(ct: CharacterTable) -> CharacterTable:
    """Group complex irreducibles into conjugation orbits (chi for real
    type, chi + conj(chi) for complex type, 2*chi for quaternionic type)
    and merge every class with its inverse class."""
    if ct.field != "complex":
        raise ValueError("expected a complex character table")
    g = ct.group

    inv_class = [g.class_of[g.inverses[cl.rep]] for cl in ct.classes]
    merged = []
    done = set()
    for i in range(len(ct.classes)):
        if i in done:
            continue
        pair = sorted({i, inv_class[i]})
        done.update(pair)
        members = tuple(sorted(m for k in pair for m in ct.classes[k].members))
        merged.append(
            TableClass(
                members[0], members, len(members), ct.classes[pair[0]].element_order, tuple(pair)
            )
        )
    merged.sort(key=lambda c: (c.element_order, c.size, c.rep))
    merged = tuple(merged)

    def restrict(values):
        """Values of an inverse-symmetric class function on merged columns."""
        out = []
        for mc in merged:
            vals = {values[k].raw for k in mc.parts}
            if len(vals) != 1:
                raise InternalInconsistency("value not constant on a merged class")
            out.append(values[mc.parts[0]])
        return out

    rows = []
    used = set()
    for i, chi in enumerate(ct.rows):
        if i in used:
            continue
        used.add(i)
        if chi.fs == 1:
            rows.append(Character(g, merged, restrict(chi.values), fs=None,
                                  division="R", constituents=(i,)))
        elif chi.fs == -1:
            doubled = [v * 2 for v in chi.values]
            rows.append(Character(g, merged, restrict(doubled), fs=None,
                                  division="H", constituents=(i,)))
        else:
            conj_vals = tuple(v.conjugate() for v in chi.values)
            j = next(
                jj
                for jj, other in enumerate(ct.rows)
                if jj not in used and other.values == conj_vals
            )
            used.add(j)
            summed = [a + b for a, b in zip(chi.values, conj_vals)]
            rows.append(Character(g, merged, restrict(summed), fs=None,
                                  division="C", constituents=(i, j)))
    rows.sort(key=Character.sort_key)

    by_degree = {}
    for r in rows:
        by_degree.setdefault(r.degree, []).append(r)
    for d, group_rows in by_degree.items():
        if len(group_rows) == 1:
            group_rows[0].label = str(d)
        elif len({r.division for r in group_rows}) == len(group_rows):
            for r in group_rows:
                r.label = f"{d}{r.division}"
        else:
            for idx, r in enumerate(group_rows):
                r.label = f"{d}{chr(ord('a') + idx)}"
    table = CharacterTable(g, "real", merged, rows)
    table.check_orthogonality()
    return table


# ---------------------------------------------------------------------------
# tensor decompositions


@dataclass(frozen=True)
class TensorDecomposition:
    table: CharacterTable
    multiplicities: tuple  # one non-negative int per table row

    def as_multiset(self) -> list:
        out = []
        for m, row in zip(self.multiplicities, self.table.rows):
            out.extend([row.label] * m)
        return out

    def compact(self) -> str:
        return "".join(self.as_multiset())

    def total_degree(self) -> int:
        return sum(m * r.degree for m, r in zip(self.multiplicities, self.table.rows))

    def __eq__(self, other):
        return (
            isinstance(other, TensorDecomposition)
            and self.multiplicities == other.multiplicities
        )


def decompose_class_function(values, ct: CharacterTable) -> TensorDecomposition:
    """Write a class function as a non-negative integer combination of the
    table rows; multiplicity of row chi is <f, chi> / <chi, chi>."""
    if len(values) != len(ct.classes):
        raise NotAClassFunction("value count does not match the table's columns")
    mults = []
    for row in ct.rows:
        num = ct.inner(values, row.values)
        den = ct.self_inner_int(row)
        if not num.is_rational():
            raise NotAClassFunction(f"inner product with row {row.label} is irrational: {num}")
        q = num.rational_value() / den
        if q.denominator != 1 or q < 0:
            raise NotAClassFunction(
                f"multiplicity of row {row.label} is {q}, not a non-negative integer"
            )
        mults.append(int(q))
    recomposed = [CYC_ZERO] * len(ct.classes)
    for m, row in zip(mults, ct.rows):
        if m:
            recomposed = [acc + v * m for acc, v in zip(recomposed, row.values)]
    if any(a != b for a, b in zip(recomposed, values)):
        raise NotAClassFunction("values are not in the span of the table rows")
    return TensorDecomposition(ct, tuple(mults))


def tensor_decompose(a: Character, b: Character, ct: CharacterTable) -> TensorDecomposition:
    """Decompose the tensor product via the pointwise product of values."""
    if len(a.values) != len(ct.classes) or len(b.values) != len(ct.classes):
        raise NotAClassFunction("characters do not live on this table's columns")
    prod = [x * y for x, y in zip(a.values, b.values)]
    return decompose_class_function(prod, ct)


# ---------------------------------------------------------------------------
# Wedderburn structures


@dataclass(frozen=True)
class Block:
    size: int      # matrix size over the division ring
    division: str  # "R", "C" or "H"
    dim: int       # real dimension (real field) or complex dimension (complex field)

    def format(self) -> str:
        body = self.division if self.size == 1 else f"M{self.size}({self.division})"
        return body


@dataclass(frozen=True)
class WedderburnStructure:
    field: str
    blocks: tuple

    def dims(self) -> list:
        return [b.dim for b in self.blocks]

    def check(self, order: int) -> bool:
        return sum(self.dims()) == order

    def format(self) -> str:
        parts = []
        i = 0
        blocks = list(self.blocks)
        while i < len(blocks):
            j = i
            while j < len(blocks) and blocks[j] == blocks[i]:
                j += 1
            count = j - i
            parts.append((f"{count}" if count > 1 else "") + blocks[i].format())
            i = j
        return " + ".join(parts)

    def block_multiset(self) -> list:
        return sorted((b.size, b.division) for b in self.blocks)


def real_wedderburn(g: FiniteGroup) -> WedderburnStructure:
    """Block structure of the real group algebra, from the complex table
    and Frobenius-Schur indicators: FS 1 -> M_d(R), a conjugate FS 0 pair
    -> M_d(C), FS -1 -> M_(d/2)(H)."""
    ct = complex_character_table(g)
    blocks = []
    used = set()
    for i, chi in enumerate(ct.rows):
        if i in used:
            continue
        used.add(i)
        d = chi.degree
        if chi.fs == 1:
            blocks.append(Block(d, "R", d * d))
        elif chi.fs == -1:
            if d % 2:
                raise InternalInconsistency("quaternionic character of odd degree")
            blocks.append(Block(d // 2, "H", d * d))
        else:
            conj_vals = tuple(v.conjugate() for v in chi.values)
            j = next(
                jj for jj, o in enumerate(ct.rows) if jj not in used and o.values == conj_vals
            )
            used.add(j)
            blocks.append(Block(d, "C", 2 * d * d))
    blocks.sort(key=lambda b: (b.dim, b.division, b.size))
    ws = WedderburnStructure("real", tuple(blocks))
    if not ws.check(g.order):
        raise InternalInconsistency("real block dimensions do not sum to |G|")
    return ws


def complex_wedderburn(g: FiniteGroup) -> WedderburnStructure:
    """One M_d(C) block per complex irreducible."""
    ct = complex_character_table(g)
    blocks = sorted(
        (Block(r.degree, "C", r.degree**2) for r in ct.rows),
        key=lambda b: (b.dim, b.size),
    )
    ws = WedderburnStructure("complex", tuple(blocks))
    if not ws.check(g.order):
        raise InternalInconsistency("complex block dimensions do not sum to |G|")
    return ws

"""Finite groups from quaternion generators, permutations, Cayley tables or
matrix closures: canonical element order, conjugacy classes, centers,
automorphism groups.

Canonical element order is identity first, then ascending (element order,
payload key); payload keys are coordinate tuples for quaternions, image
tuples for permutations and flattened coordinate tuples for matrices.
Closure results are re-sorted into this order, so repeated runs produce
identical groups no matter how the worklist happened to be walked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from fgre.cycarith import SQRT2, CycMatrix, CycScalar
from fgre.errors import CapExceeded, NotInvertible, UnknownName

DEFAULT_CAP = 10000


# ---------------------------------------------------------------------------
# quaternions


class Quaternion:
    """a + bi + cj + dk with rational coordinates (ij = k, i^2 = -1)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    def __mul__(self, o: "Quaternion") -> "Quaternion":
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> Fraction:
        return self.a**2 + self.b**2 + self.c**2 + self.d**2

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("zero quaternion")
        c = self.conjugate()
        return Quaternion(c.a / n, c.b / n, c.c / n, c.d / n)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def key(self):
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def from_strings(cls, parts) -> "Quaternion":
        return cls(*(Fraction(p) for p in parts))

    def to_strings(self) -> list:
        return [str(x) for x in self.key()]

    def __eq__(self, o):
        return isinstance(o, Quaternion) and self.key() == o.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Quaternion({self})"

    def __str__(self):
        return quaternion_label(self)


QUAT_ONE = Quaternion(1, 0, 0, 0)
QUAT_I = Quaternion(0, 1, 0, 0)
QUAT_J = Quaternion(0, 0, 1, 0)
QUAT_K = Quaternion(0, 0, 0, 1)
QUAT_W = Quaternion(Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
QUAT_V = Quaternion(Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2))


def quaternion_label(q: Quaternion) -> str:
    """Compact display name: units as 1, -i, ...; half-units as
    (-1+i+j+k)/2; anything else in a+bi+cj+dk form."""
    units = {
        (1, 0, 0, 0): "1", (-1, 0, 0, 0): "-1",
        (0, 1, 0, 0): "i", (0, -1, 0, 0): "-i",
        (0, 0, 1, 0): "j", (0, 0, -1, 0): "-j",
        (0, 0, 0, 1): "k", (0, 0, 0, -1): "-k",
    }
    key = q.key()
    if key in units:
        return units[key]
    if all(abs(x) == Fraction(1, 2) for x in key):
        signs = "".join(
            ("+" if x > 0 else "-") + s for x, s in zip(key, ["1", "i", "j", "k"])
        ).lstrip("+")
        return f"({signs})/2"
    parts = []
    for x, s in zip(key, ["", "i", "j", "k"]):
        if x:
            mag = abs(x)
            body = ("" if mag == 1 and s else str(mag)) + s
            parts.append(("-" if x < 0 else ("+" if parts else "")) + body)
    return "".join(parts) or "0"


# ---------------------------------------------------------------------------
# the group container


@dataclass(frozen=True)
class ConjugacyClass:
    rep: int
    members: tuple
    size: int
    element_order: int


class FiniteGroup:
    """A finite group as a Cayley table over canonically ordered elements."""

    def __init__(self, name, kind, payloads, labels, cayley, generators, source):
        self.name = name
        self.kind = kind
        self.payloads = tuple(payloads)
        self.labels = tuple(labels)
        self.cayley = tuple(tuple(row) for row in cayley)
        self.generators = tuple(generators)
        self.source = source
        self.order = len(self.payloads)
        self.inverses = self._compute_inverses()
        self.element_orders = self._compute_orders()
        self.classes = self._compute_classes()
        self.class_of = {i: ci for ci, cl in enumerate(self.classes) for i in cl.members}
        if self.order <= 64:
            self._check_axioms()

    # -- construction-time checks and tables --------------------------------

    def _compute_inverses(self):
        inv = [None] * self.order
        for i in range(self.order):
            for j in range(self.order):
                if self.cayley[i][j] == 0:
                    inv[i] = j
                    break
            if inv[i] is None:
                raise ValueError(f"element {i} has no inverse; not a group table")
        return tuple(inv)

    def _compute_orders(self):
        orders = []
        for i in range(self.order):
            k, x = 1, i
            while x != 0:
                x = self.cayley[x][i]
                k += 1
            orders.append(k)
        return tuple(orders)

    def _compute_classes(self):
        seen = [False] * self.order
        classes = []
        for i in range(self.order):
            if seen[i]:
                continue
            orbit = {self.cayley[self.cayley[g][i]][self.inverses[g]] for g in range(self.order)}
            for x in orbit:
                seen[x] = True
            members = tuple(sorted(orbit))
            classes.append(
                ConjugacyClass(members[0], members, len(members), self.element_orders[members[0]])
            )
        classes.sort(key=lambda c: (c.element_order, c.size, c.rep))
        return tuple(classes)

    def _check_axioms(self):
        n = self.order
        table = self.cayley
        for i in range(n):
            if table[0][i] != i or table[i][0] != i:
                raise ValueError("index 0 is not a two-sided identity")
            if sorted(table[i]) != list(range(n)):
                raise ValueError("Cayley rows must be permutations")
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise ValueError("Cayley table is not associative")

    # -- queries -------------------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def power(self, i: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverses[i], -k)
        acc = 0
        for _ in range(k):
            acc = self.cayley[acc][i]
        return acc

    def conjugate(self, g: int, x: int) -> int:
        return self.cayley[self.cayley[g][x]][self.inverses[g]]

    def exponent(self) -> int:
        return lcm(*self.element_orders)

    def is_abelian(self) -> bool:
        return all(
            self.cayley[i][j] == self.cayley[j][i]
            for i in range(self.order)
            for j in range(i + 1, self.order)
        )

    def center(self) -> tuple:
        return tuple(
            z
            for z in range(self.order)
            if all(self.cayley[z][g] == self.cayley[g][z] for g in range(self.order))
        )

    def closure_of(self, seed) -> frozenset:
        """Subgroup generated by the given element indices."""
        out = {0}
        frontier = [0]
        gens = list(seed)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.cayley[x][g]
                if y not in out:
                    out.add(y)
                    frontier.append(y)
        return frozenset(out)

    def generating_set(self) -> tuple:
        """A small generating set, greedily picking high-order elements."""
        gens = []
        have = frozenset({0})
        for i in sorted(range(1, self.order), key=lambda i: (-self.element_orders[i], i)):
            if i not in have:
                gens.append(i)
                have = self.closure_of(gens)
                if len(have) == self.order:
                    break
        return tuple(gens)

    def element_words(self, gens) -> list:
        """One word over ``gens`` per element, via breadth-first search."""
        words = [None] * self.order
        words[0] = ()
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for pos, g in enumerate(gens):
                    y = self.cayley[x][g]
                    if words[y] is None:
                        words[y] = words[x] + (pos,)
                        nxt.append(y)
            frontier = nxt
        if any(w is None for w in words):
            raise ValueError("given elements do not generate the group")
        return words

    def index_of_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r} in {self.name}") from None

    def index_of_payload(self, payload) -> int:
        key = _payload_key(self.kind, payload)
        for i, p in enumerate(self.payloads):
            if _payload_key(self.kind, p) == key:
                return i
        raise KeyError(f"payload {payload!r} not in {self.name}")

    def to_json(self) -> dict:
        return {"kind": self.source["kind"], "generators": self.source["generators"], "name": self.name}

    def __repr__(self):
        return f"FiniteGroup({self.name}, order {self.order})"


# ---------------------------------------------------------------------------
# closure construction


def _payload_key(kind, payload):
    if kind == "quaternion":
        return payload.key()
    if kind == "matrix":
        return payload.sort_key()
    return payload  # permutations are tuples; cayley payloads are ints


def _close(generators, mul, identity, cap):
    elems = {identity: 0}
    order_list = [identity]
    frontier = [identity]
    gens = []
    for g in generators:
        if g not in elems:
            elems[g] = len(order_list)
            order_list.append(g)
            frontier.append(g)
        gens.append(g)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mul(x, g)
            if y not in elems:
                if len(order_list) >= cap:
                    raise CapExceeded(f"closure exceeded cap of {cap} elements")
                elems[y] = len(order_list)
                order_list.append(y)
                frontier.append(y)
    return order_list


def _payload_order(p, mul, identity, cap):
    k, x = 1, p
    while x != identity:
        x = mul(x, p)
        k += 1
        if k > cap:
            raise CapExceeded("element order exceeded cap; generators not of finite order?")
    return k


def _build_group(name, kind, generators, mul, identity, key, labeler, cap, source):
    closure = _close(generators, mul, identity, cap)
    orders = {key(p): _payload_order(p, mul, identity, cap) for p in closure}
    ordered = sorted(
        closure, key=lambda p: (0, ()) if p == identity else (orders[key(p)], key(p))
    )
    index = {key(p): i for i, p in enumerate(ordered)}
    cayley = [[index[key(mul(a, b))] for b in ordered] for a in ordered]
    labels = [labeler(p) for p in ordered]
    gen_indices = tuple(dict.fromkeys(index[key(g)] for g in generators))
    return FiniteGroup(name, kind, ordered, labels, cayley, gen_indices, source)


def group_from_quaternions(generators, cap: int = DEFAULT_CAP, name: str = "G",
                           label_overrides=None) -> FiniteGroup:
    """Multiplicative closure of nonzero quaternions."""
    gens = list(generators)
    if not gens:
        gens = [QUAT_ONE]
    if any(q.is_zero() for q in gens):
        raise ValueError("quaternion generators must be nonzero")
    overrides = label_overrides or {}

    def labeler(q):
        return overrides.get(q.key(), quaternion_label(q))

    source = {"kind": "quaternion", "generators": [q.to_strings() for q in gens]}
    return _build_group(
        name, "quaternion", gens, lambda a, b: a * b, QUAT_ONE, Quaternion.key, labeler, cap, source
    )


def _perm_mul(p, q):
    # (p * q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(p)))


def perm_label(p) -> str:
    """Cycle notation, 'e' for the identity."""
    seen = [False] * len(p)
    cycles = []
    for s in range(len(p)):
        if seen[s] or p[s] == s:
            seen[s] = True
            continue
        cyc = [s]
        seen[s] = True
        x = p[s]
        while x != s:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "e"


def group_from_permutations(generators, cap: int = DEFAULT_CAP, name: str = "G",
                            label_overrides=None) -> FiniteGroup:
    """Closure of bijections of {0..n-1} under composition."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("need at least one permutation")
    n = len(gens[0])
    for g in gens:
        if sorted(g) != list(range(n)):
            raise ValueError(f"{g} is not a permutation of 0..{n - 1}")
    overrides = label_overrides or {}
    identity = tuple(range(n))

    def labeler(p):
        return overrides.get(p, perm_label(p))

    source = {"kind": "permutation", "generators": [list(g) for g in gens]}
    return _build_group(
        name, "permutation", gens, _perm_mul, identity, lambda p: p, labeler, cap, source
    )


def group_from_cayley(table, name: str = "G", labels=None) -> FiniteGroup:
    """Group from an explicit Cayley table (row i, column j = index of
    element_i * element_j).  The identity is moved to index 0 and elements
    are re-sorted canonically by (order, original index)."""
    n = len(table)
    ident = next(
        (e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))),
        None,
    )
    if ident is None:
        raise ValueError("table has no two-sided identity")

    def mul(a, b):
        return table[a][b]

    given = labels or [f"g{i}" for i in range(n)]
    source = {"kind": "cayley", "generators": [list(r) for r in table]}
    return _build_group(
        name, "cayley", list(range(n)), mul, ident, lambda p: p, lambda p: given[p], DEFAULT_CAP + n, source
    )


# ---------------------------------------------------------------------------
# matrix closures


@dataclass(frozen=True)
class MatrixClosure:
    order: int
    elements: tuple


def matrix_group_closure(generators, cap: int = DEFAULT_CAP) -> MatrixClosure:
    """Multiplicative closure of invertible matrices over Q(zeta24), with
    exact equality testing.  Elements come back canonically sorted."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one matrix")
    n = gens[0].nrows
    for m in gens:
        if m.nrows != m.ncols or m.nrows != n:
            raise ValueError("generators must be square and of equal size")
        if not m.is_invertible():
            raise NotInvertible("singular generator matrix")
    closure = _close(gens, lambda a, b: a * b, CycMatrix.identity(n), cap)
    return MatrixClosure(len(closure), tuple(sorted(closure, key=CycMatrix.sort_key)))


def group_from_matrices(generators, cap: int = DEFAULT_CAP, name: str = "G") -> FiniteGroup:
    gens = list(generators)
    closure = matrix_group_closure(gens, cap)
    n = gens[0].nrows
    source = {
        "kind": "matrix",
        "generators": [m.to_entry_lists() for m in gens],
    }
    counter = itertools.count()

    def labeler(_m):
        return f"g{next(counter)}"

    return _build_group(
        name, "matrix", gens, lambda a, b: a * b, CycMatrix.identity(n),
        CycMatrix.sort_key, labeler, cap, source,
    )


def left_mult_matrix(q: Quaternion) -> CycMatrix:
    """x -> q*x on the basis 1, i, j, k (row-vector convention, so these
    matrices multiply in the same order as the quaternions)."""
    basis = [QUAT_ONE, QUAT_I, QUAT_J, QUAT_K]
    return CycMatrix.from_rows([[(q * b).key()[c] for c in range(4)] for b in basis]).transpose()


def right_mult_matrix(q: Quaternion) -> CycMatrix:
    """x -> x*q on the basis 1, i, j, k; row r holds the coordinates of
    basis_r * q, matching the convention of the built-in representation
    matrices."""
    basis = [QUAT_ONE, QUAT_I, QUAT_J, QUAT_K]
    return CycMatrix.from_rows([[(b * q).key()[c] for c in range(4)] for b in basis])


def conjugation_matrix(q: Quaternion) -> CycMatrix:
    """x -> q x q^-1 on the basis 1, i, j, k (scale-invariant in q)."""
    qi = q.inverse()
    basis = [QUAT_ONE, QUAT_I, QUAT_J, QUAT_K]
    return CycMatrix.from_rows([[(q * b * qi).key()[c] for c in range(4)] for b in basis])


def normalized_odd_unit_matrix(q: Quaternion, side: str) -> CycMatrix:
    """L or R multiplication by q/sqrt(N(q)) for norm-2 quaternions such as
    i+j or 1+i; the sqrt(2) lives in Q(zeta24), not in the quaternion."""
    if q.norm() != 2:
        raise ValueError("expected a quaternion of norm 2")
    m = left_mult_matrix(q) if side == "L" else right_mult_matrix(q)
    return m.scale(CycScalar.from_rational(Fraction(1, 2)) * SQRT2)


# ---------------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True)
class AutomorphismGroup:
    group: FiniteGroup
    automorphisms: tuple
    inner: frozenset

    @property
    def order(self) -> int:
        return len(self.automorphisms)

    def order_census(self) -> dict:
        census = {}
        for o in self.group.element_orders:
            census[o] = census.get(o, 0) + 1
        return census


def automorphisms(g: FiniteGroup) -> list:
    """All Cayley-preserving bijections, as image tuples, found by
    backtracking over generator images (pruned by element order and
    conjugacy-class size)."""
    n = g.order
    if n == 1:
        return [(0,)]
    gens = g.generating_set()
    words = g.element_words(gens)
    class_size = [g.classes[g.class_of[i]].size for i in range(n)]
    candidates = [
        [
            x
            for x in range(n)
            if g.element_orders[x] == g.element_orders[gen] and class_size[x] == class_size[gen]
        ]
        for gen in gens
    ]
    found = []
    for images in itertools.product(*candidates):
        phi = [0] * n
        ok = True
        for i in range(n):
            cur = 0
            for pos in words[i]:
                cur = g.cayley[cur][images[pos]]
            phi[i] = cur
        if len(set(phi)) != n:
            continue
        for a in range(n):
            row = g.cayley[a]
            pa = phi[a]
            for b in range(n):
                if phi[row[b]] != g.cayley[pa][phi[b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(phi))
    return sorted(found)


def inner_automorphisms(g: FiniteGroup) -> frozenset:
    return frozenset(
        tuple(g.conjugate(x, a) for a in range(g.order)) for x in range(g.order)
    )


def automorphism_group(g: FiniteGroup) -> AutomorphismGroup:
    auts = automorphisms(g)
    aut_grp = group_from_permutations(auts, cap=max(DEFAULT_CAP, len(auts) + 1), name=f"Aut({g.name})")
    assert aut_grp.order == len(auts), "automorphism set must already be closed"
    return AutomorphismGroup(aut_grp, tuple(auts), inner_automorphisms(g))


# ---------------------------------------------------------------------------
# built-in groups and the group-definition file format


def _tetrahedral_labels() -> dict:
    out = {}
    for q, base in [(QUAT_W, "w"), (QUAT_V, "v")]:
        for u, suffix in [(QUAT_ONE, ""), (QUAT_I, "i"), (QUAT_J, "j"), (QUAT_K, "k")]:
            out[(q * u).key()] = base + suffix
            out[(-(q * u)).key()] = "-" + base + suffix
    return out


_BUILTIN_SPECS = {
    "Q8": ("quaternion", [QUAT_I, QUAT_J], None),
    "2T": ("quaternion", [QUAT_I, QUAT_W], _tetrahedral_labels),
    "Z3": ("permutation", [(1, 2, 0)], lambda: {(0, 1, 2): "e", (1, 2, 0): "w", (2, 0, 1): "v"}),
    "Z4": ("permutation", [(1, 2, 3, 0)], lambda: {(0, 1, 2, 3): "e", (1, 2, 3, 0): "g",
                                                   (2, 3, 0, 1): "g2", (3, 0, 1, 2): "g3"}),
}


def builtin_group(name: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if name not in _BUILTIN_SPECS:
        raise UnknownName(f"no built-in group named {name!r}")
    kind, gens, labels = _BUILTIN_SPECS[name]
    overrides = labels() if labels else None
    if kind == "quaternion":
        return group_from_quaternions(gens, cap=cap, name=name, label_overrides=overrides)
    return group_from_permutations(gens, cap=cap, name=name, label_overrides=overrides)


def builtin_names() -> list:
    return sorted(_BUILTIN_SPECS)


def group_from_json(data: dict, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Group definition file: {"kind": "quaternion"|"permutation"|"cayley",
    "generators": [...], "name": str}.  Quaternion generators are 4-element
    rational-string arrays; for "cayley" the generators field holds the
    full table as a list of rows."""
    kind = data.get("kind")
    name = data.get("name", "G")
    gens = data.get("generators", [])
    if kind == "quaternion":
        return group_from_quaternions([Quaternion.from_strings(g) for g in gens], cap, name)
    if kind == "permutation":
        return group_from_permutations([tuple(g) for g in gens], cap, name)
    if kind == "cayley":
        return group_from_cayley([list(r) for r in gens], name)
    raise ValueError(f"unknown group kind {kind!r}")


# -- operation surface matching the rest of the package ---------------------


def conjugacy_data(g: FiniteGroup) -> tuple:
    """The conjugacy classes in canonical order (representative element
    order, class size, representative index)."""
    return g.classes


def center(g: FiniteGroup) -> tuple:
    return g.center()

"""Explicit matrix representations: built-in generator matrices for the
binary tetrahedral group, Cayley-consistent extension to all elements,
homomorphism verification, character extraction and equivalence tests.

Built-in matrices follow the row-vector convention (the right-multiplication
matrices of quaternions compose in group order under ordinary matrix
products), so a representation is simply a map with
image(g) * image(h) == image(g h).
"""

from __future__ import annotations

from fractions import Fraction

from fgre.cycarith import I, SQRT3, CycMatrix, CycScalar
from fgre.errors import NotAHomomorphism, UnknownName
from fgre.groupcore import (
    QUAT_I,
    QUAT_W,
    FiniteGroup,
    builtin_group,
    right_mult_matrix,
)
from fgre.chartheory import Character, CharacterTable


class MatrixRep:
    """A representation given by generator images, extended to every
    element through the Cayley table and cached."""

    def __init__(self, group: FiniteGroup, images: dict, name: str = ""):
        if not images and group.order > 1:
            raise ValueError("need images for the group's generators")
        self.group = group
        self.name = name
        self.gen_images = dict(images)
        dims = {m.nrows for m in images.values()} | {m.ncols for m in images.values()}
        if len(dims) > 1:
            raise ValueError("generator images must be square of equal size")
        self.dimension = dims.pop() if dims else 1
        self._element_images = None
        self._verified = None

    def element_images(self) -> list:
        """Image of every element, by breadth-first extension
        image(x * g) = image(x) * image(g) from the generators."""
        if self._element_images is not None:
            return self._element_images
        g = self.group
        gens = list(self.gen_images)
        images = [None] * g.order
        images[0] = CycMatrix.identity(self.dimension)
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for gen in gens:
                    y = g.mul(x, gen)
                    if images[y] is None:
                        images[y] = images[x] * self.gen_images[gen]
                        nxt.append(y)
            frontier = nxt
        if any(m is None for m in images):
            raise ValueError("generator set with images does not generate the group")
        self._element_images = images
        return images

    def image(self, i: int) -> CycMatrix:
        return self.element_images()[i]

    def is_homomorphism(self) -> bool:
        if self._verified is None:
            g = self.group
            images = self.element_images()
            self._verified = all(
                images[g.mul(a, b)] == images[a] * images[b]
                for a in range(g.order)
                for b in range(g.order)
            )
        return self._verified

    def character(self) -> Character:
        """Trace at each conjugacy-class representative (complex classes)."""
        if not self.is_homomorphism():
            raise NotAHomomorphism(f"{self.name or 'rep'} does not satisfy the relations")
        images = self.element_images()
        from fgre.chartheory import TableClass

        classes = tuple(
            TableClass(c.rep, c.members, c.size, c.element_order, (idx,))
            for idx, c in enumerate(self.group.classes)
        )
        values = [images[c.rep].trace() for c in self.group.classes]
        return Character(self.group, classes, values, label=self.name)

    def tensor(self, other: "MatrixRep") -> "MatrixRep":
        """Kronecker-product representation (generator images paired off)."""
        if self.group is not other.group and self.group.cayley != other.group.cayley:
            raise ValueError("representations live over different groups")
        gens = set(self.gen_images) | set(other.gen_images)
        a_imgs = self.element_images()
        b_imgs = other.element_images()
        images = {g: a_imgs[g].kron(b_imgs[g]) for g in gens}
        return MatrixRep(self.group, images, name=f"{self.name}x{other.name}")

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "dim": self.dimension,
            "generators": {
                self.group.labels[g]: [
                    [e.to_strings() for e in row] for row in m.to_rows()
                ]
                for g, m in sorted(self.gen_images.items())
            },
        }

    def __repr__(self):
        return f"MatrixRep({self.name or '?'}, dim {self.dimension} over {self.group.name})"


def verify_homomorphism(rep: MatrixRep) -> bool:
    """True iff the generator images satisfy every Cayley relation."""
    return rep.is_homomorphism()


def rep_character(rep: MatrixRep) -> Character:
    return rep.character()


def reps_equivalent(a: MatrixRep, b: MatrixRep) -> bool:
    """Equivalence test by classwise character comparison."""
    return a.character().values == b.character().values


def character_matches_row(rep: MatrixRep, table: CharacterTable, label: str) -> bool:
    """Does the rep's character equal the given table row?  For a real
    table the trace values are first restricted to the merged columns
    (they must be constant on each merged pair)."""
    chi = rep.character()
    row = table.row_by_label(label)
    if table.field == "complex":
        return chi.values == row.values
    for mc, want in zip(table.classes, row.values):
        vals = {chi.values[k].raw for k in mc.parts}
        if len(vals) != 1 or chi.values[mc.parts[0]] != want:
            return False
    return True


def regular_representation(g: FiniteGroup) -> MatrixRep:
    """Permutation matrices of right multiplication on the group algebra;
    row r of image(x) has its 1 in column r*x."""
    images = {}
    for gen in g.generators or (0,):
        rows = [[0] * g.order for _ in range(g.order)]
        for r in range(g.order):
            rows[r][g.mul(r, gen)] = 1
        images[gen] = CycMatrix.from_rows(rows)
    rep = MatrixRep(g, images, name=f"regular({g.name})")
    return rep


def realified(rep: MatrixRep) -> MatrixRep:
    """Real form of a complex representation: every entry a + b*i becomes
    the 2x2 block [[a, -b], [b, a]].  Entries must lie in Q(i)."""
    images = {}
    for gen, m in rep.gen_images.items():
        rows = [[None] * (2 * m.ncols) for _ in range(2 * m.nrows)]
        for r in range(m.nrows):
            for c in range(m.ncols):
                a, b = m.entry(r, c).gaussian_parts()
                rows[2 * r][2 * c] = a
                rows[2 * r][2 * c + 1] = -b
                rows[2 * r + 1][2 * c] = b
                rows[2 * r + 1][2 * c + 1] = a
        images[gen] = CycMatrix.from_rows(rows)
    return MatrixRep(rep.group, images, name=f"{rep.name}_real")


# ---------------------------------------------------------------------------
# built-in representations of the binary tetrahedral group


def _m(rows) -> CycMatrix:
    return CycMatrix.from_rows(rows)


def _half(rows) -> CycMatrix:
    return CycMatrix.from_rows(rows).scale(Fraction(1, 2))


def _builtin_matrices() -> dict:
    half = Fraction(1, 2)
    alpha = 1 + SQRT3
    beta = 1 - SQRT3
    i4 = _m(
        [[0, 1, 0, 0],
         [-1, 0, 0, 0],
         [0, 0, 0, -1],
         [0, 0, 1, 0]]
    )
    return {
        "2T.1": (_m([[1]]), _m([[1]])),
        "2T.2": (
            CycMatrix.identity(2),
            _m([[-half, half * SQRT3], [-half * SQRT3, -half]]),
        ),
        "2T.3": (
            _m([[1, 0, 0], [0, -1, 0], [0, 0, -1]]),
            _m([[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
        ),
        "2T.4H": (
            i4,
            _half([[-1, 1, 1, 1], [-1, -1, -1, 1], [-1, 1, -1, -1], [-1, -1, 1, -1]]),
        ),
        "2T.4H_complex": (
            _m([[I, 0], [0, -I]]),
            _half([[-1 + I, 1 + I], [-1 + I, -1 - I]]),
        ),
        "2T.4C": (
            i4,
            _m(
                [[alpha, -beta, -beta, -alpha],
                 [beta, alpha, alpha, -beta],
                 [alpha, -beta, beta, alpha],
                 [beta, alpha, -alpha, beta]]
            ).scale(Fraction(1, 4)),
        ),
    }


BUILTIN_REP_NAMES = ("2T.1", "2T.2", "2T.3", "2T.4H", "2T.4H_complex", "2T.4C")


def builtin_rep(name: str, group: FiniteGroup = None) -> MatrixRep:
    """One of the stock representations of 2T, keyed by the images of the
    generators i and w."""
    mats = _builtin_matrices()
    if name not in mats:
        raise UnknownName(f"no built-in representation named {name!r}")
    g = group if group is not None else builtin_group("2T")
    gi = g.index_of_payload(QUAT_I)
    gw = g.index_of_payload(QUAT_W)
    mi, mw = mats[name]
    return MatrixRep(g, {gi: mi, gw: mw}, name=name)


def quaternion_right_regular(g: FiniteGroup) -> MatrixRep:
    """Right multiplication of 2T on the quaternions (how 2T.4H arises)."""
    images = {gen: right_mult_matrix(g.payloads[gen]) for gen in g.generators}
    return MatrixRep(g, images, name="right-mult")

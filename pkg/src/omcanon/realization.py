"""Rational matrix realizations.

Columns are exact-rational linear functionals on V = Q^r, indexed by the
ground set.  The chirotope is the sign of the maximal minors; chambers are
located by evaluating the functionals; placing (beneath-beyond)
triangulations feed the triangulation evaluation of canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .chirotope import Chirotope
from .om import OrientedMatroid
from .signvec import SignVector, ground_positions


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class RationalMatrix:
    labels: tuple
    rows: tuple  # r rows, each a tuple of Fractions, one per label

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.labels):
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, labels, rows) -> "RationalMatrix":
        return cls(tuple(labels),
                   tuple(tuple(Fraction(x) for x in row) for row in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def column(self, label) -> list:
        j = ground_positions(self.labels)[label]
        return [row[j] for row in self.rows]

    def functional(self, label, point) -> Fraction:
        col = self.column(label)
        return sum((c * Fraction(p) for c, p in zip(col, point)), Fraction(0))

    def minor_det(self, labels) -> Fraction:
        cols = [self.column(e) for e in labels]
        return linalg.det([[col[i] for col in cols] for i in range(self.nrows)])

    def reorient(self, tope: SignVector) -> "RationalMatrix":
        """Negate the columns on the tope's negative part."""
        neg = tope.negative_part
        cols = {e: ([-x for x in self.column(e)] if e in neg else self.column(e))
                for e in self.labels}
        rows = tuple(tuple(cols[e][i] for e in self.labels)
                     for i in range(self.nrows))
        return RationalMatrix(self.labels, rows)


def chirotope_from_matrix(mat: RationalMatrix) -> Chirotope:
    r = mat.nrows
    for e in mat.labels:
        if not any(mat.column(e)):
            raise ValueError(f"zero column: {e!r}")
    values = {}
    some_nonzero = False
    for key in combinations(mat.labels, r):
        s = _sign(mat.minor_det(key))
        values[key] = s
        some_nonzero = some_nonzero or s != 0
    if not some_nonzero:
        raise ValueError("matrix is rank deficient")
    return Chirotope.from_map(mat.labels, r, values)


def chamber_of(mat: RationalMatrix, point) -> SignVector:
    """The tope of a point off all hyperplanes."""
    values = {}
    for e in mat.labels:
        v = mat.functional(e, point)
        if v == 0:
            raise ValueError(f"point lies on the hyperplane of {e!r}")
        values[e] = _sign(v)
    return SignVector.from_map(mat.labels, values)


def cocircuit_point(mat: RationalMatrix, cocircuit: SignVector) -> list:
    """An exact point of V realizing the given cocircuit's sign vector."""
    zero = sorted(cocircuit.zero_set, key=ground_positions(mat.labels).get)
    system = [mat.column(e) for e in zero]  # rows: <col_e, x> = 0
    if not system:
        system = [[Fraction(0)] * mat.nrows]
    kernel = linalg.nullspace(system)
    if len(kernel) != 1:
        raise ValueError("zero set does not span a hyperplane")
    x = kernel[0]
    for e in mat.labels:
        v = mat.functional(e, x)
        if v != 0:
            if _sign(v) != cocircuit.value(e):
                x = [-c for c in x]
            break
    got = {e: _sign(mat.functional(e, x)) for e in mat.labels}
    if any(got[e] != cocircuit.value(e) for e in mat.labels):
        raise ValueError("sign vector is not a cocircuit of the realization")
    return x


def interior_point(mat: RationalMatrix, om: OrientedMatroid,
                   tope: SignVector) -> list:
    """An exact interior point of the tope's chamber."""
    om.require_tope(tope)
    point = [Fraction(0)] * mat.nrows
    for y in om.cocircuits:
        if y.conforms_to(tope):
            x = cocircuit_point(mat, y)
            point = [a + b for a, b in zip(point, x)]
    if chamber_of(mat, point) != tope:
        raise RuntimeError("internal invariant violation: "
                           "interior point landed outside its chamber")
    return point


def acyclicity_witness(mat: RationalMatrix,
                       om: OrientedMatroid | None = None) -> list:
    """A point where every functional is strictly positive.

    Raises ValueError when the configuration is not acyclic.  The witness
    is certificate-checked before being returned.
    """
    om = om or OrientedMatroid(chirotope_from_matrix(mat), validate=False)
    plus = SignVector(mat.labels, (1,) * len(mat.labels))
    if plus not in om.topes:
        raise ValueError("configuration is not acyclic")
    return interior_point(mat, om, plus)


def in_cone(chi: Chirotope, basis: tuple, label) -> tuple:
    """Barycentric sign pattern of label over an ordered basis.

    Entry j is the sign of the coefficient of basis[j]; the point lies in
    the closed simplicial cone iff no entry opposes the basis orientation.
    """
    signs = []
    orient = chi.value(basis)
    for j in range(len(basis)):
        repl = basis[:j] + (label,) + basis[j + 1:]
        signs.append(chi.value(repl) * orient)
    return tuple(signs)


def placing_triangulation(mat: RationalMatrix,
                          insertion_order=None) -> list:
    """Beneath-beyond triangulation of an acyclic configuration.

    Returns a list of ascending bases whose cones triangulate the hull
    cone.  Different insertion orders may give different triangulations;
    all of them evaluate to the same canonical form.
    """
    chi = chirotope_from_matrix(mat)
    om = OrientedMatroid(chi, validate=False)
    acyclicity_witness(mat, om)
    order = list(insertion_order if insertion_order is not None else mat.labels)
    if sorted(order, key=ground_positions(mat.labels).get) != list(mat.labels):
        raise ValueError("insertion order must be a permutation of the labels")
    pos = ground_positions(mat.labels)
    r = mat.nrows

    if r == 1:
        return [(order[0],)]

    core: list = []
    deferred: list = []
    for e in order:
        if len(core) < r and om.underlying.rank_of(set(core) | {e}) > len(core):
            core.append(e)
        else:
            deferred.append(e)
    if len(core) < r:
        raise ValueError("matrix is rank deficient")
    simplices = [tuple(sorted(core, key=pos.get))]

    for p in deferred:
        facet_count: dict = {}
        facet_apex: dict = {}
        for simplex in simplices:
            for i in range(r):
                facet = simplex[:i] + simplex[i + 1:]
                facet_count[facet] = facet_count.get(facet, 0) + 1
                facet_apex[facet] = simplex[i]
        added = False
        for facet, count in facet_count.items():
            if count != 1:
                continue
            inner = chi.value(facet + (facet_apex[facet],))
            outer = chi.value(facet + (p,))
            if outer == -inner and outer != 0:
                simplices.append(tuple(sorted(facet + (p,), key=pos.get)))
                added = True
        if not added:
            covered = any(all(s >= 0 for s in in_cone(chi, b, p))
                          for b in simplices)
            if not covered:
                raise RuntimeError(
                    "degenerate placing: point beyond no facet yet outside "
                    "the hull; try another insertion order")
    return simplices

"""Walkthrough: five lines bounding a pentagon (rank 3, realizable).

Reads the oriented matroid off a 3x5 rational matrix, locates chambers by
evaluating the functionals, and computes the canonical form of the central
pentagon chamber twice: once through the residue recursion and once through
a placing triangulation of the dual point configuration.  The two paths
agree exactly, for every insertion order.
"""

import random

from omcanon import (OrientedMatroid, RationalMatrix, algebra_of,
                     canonical_form_from_triangulation, canonical_form_tope,
                     chamber_of, chirotope_from_matrix, placing_triangulation)

mat = RationalMatrix.from_rows((1, 2, 3, 4, 5), [
    [1, 0, -1, 0, -1],
    [0, 1, 0, -1, -1],
    [1, 1, 1, 1, 1],
])
chi = chirotope_from_matrix(mat)
om = OrientedMatroid(chi)
alg = algebra_of(om)

print("== pentagon arrangement ==")
print("functionals (columns):", [tuple(mat.column(e)) for e in mat.labels])
print(f"rank {om.rank}, {len(om.topes)} topes, beta = {om.underlying.beta()}")

print("\nsome chirotope values (signs of maximal minors):")
for key in ((1, 2, 5), (2, 3, 5), (1, 4, 5)):
    print(f"  chi{key} = {chi.value(key):+d}")

origin = (0, 0, 1)
plus = chamber_of(mat, origin)
print(f"\nthe origin lies in chamber {plus}")

form = canonical_form_tope(om, plus)
print(f"canonical form via the residue recursion:\n  {form}")

d = lambda key: alg.boundary(alg.monomial(key))
assert form == d((1, 2, 5)) + d((2, 3, 5)) - d((1, 4, 5))
print("  ... which equals  d e_125 + d e_235 - d e_145")

tri = placing_triangulation(mat)
print(f"\nplacing triangulation (insertion order 1..5): {tri}")
assert canonical_form_from_triangulation(chi, tri) == form
print("its alternating sum reproduces the same canonical form")

rng = random.Random(0)
for trial in range(3):
    order = list(mat.labels)
    rng.shuffle(order)
    tri = placing_triangulation(mat, order)
    value = canonical_form_from_triangulation(chi, tri)
    status = "agrees" if value == form else "DISAGREES"
    print(f"  insertion order {order}: {len(tri)} simplices, {status}")

print("\nthe same game for a different chamber:")
other = chamber_of(mat, (2, 0, 1))
print(f"  point (2,0,1) lies in {other}")
reoriented = mat.reorient(other)
tri = placing_triangulation(reoriented)
value = canonical_form_from_triangulation(chi.reorient(other), tri)
assert value == canonical_form_tope(om, other)
print(f"  canonical form (both paths): {value}")

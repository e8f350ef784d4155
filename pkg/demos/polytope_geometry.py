"""Dimension, vertices and the Ehrhart series of a GT polytope.

Run: python demos/polytope_geometry.py
"""
from gtw.core import format_rational
from gtw.polytope import build, dimension, ehrhart, generation_bound, krull_dimension, vertices

lam, mu = (2, 2, 2, 0, 0, 0), (1,) * 6
P = build(lam, mu)
print(f"GT({lam}, {mu}): {len(P.equalities)} equalities, {len(P.inequalities)} inequalities")
print("dimension:", dimension(P))

print("\nvertices (denominator, rows below the top):")
for v, q in vertices(P):
    print(f"  q={q}", " / ".join(" ".join(format_rational(x) for x in row) for row in v.rows[1:]))

rep = ehrhart(P)
print("\nlattice-point counts of dilates:", list(rep.counts))
print(f"series = ({' + '.join(f'{c} t^{k}' for k, c in enumerate(rep.numerator) if c)})"
      f" / (1 - t^{rep.period})^{rep.dim + 1}")
print("a-invariant:", rep.a_invariant)
print("Krull dimension:", krull_dimension(lam, mu), " generation bound:", generation_bound(lam, mu))

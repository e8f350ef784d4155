"""Semistandard tableaux and the GT patterns they correspond to.

Run: python demos/tableaux_and_patterns.py
"""
from gtw import tableaux
from gtw.polytope import build, lattice_points

shape, content = (3, 2, 1, 0), (2, 1, 2, 1)
ts = tableaux.enumerate_ssyt(shape, content)
print(f"{len(ts)} tableaux of shape {shape} and content {content}")

for t in ts:
    p = tableaux.phi(t)
    print()
    print("tableau rows:", [list(r) for r in t.rows])
    print(p)
    # row j of the pattern records how many boxes hold entries <= j in each row
    assert tableaux.phi_inverse(p) == t

# the images are exactly the integral points of the polytope
images = sorted(tableaux.phi(t).flat() for t in ts)
assert images == [p.flat() for p in lattice_points(build(shape, content), 1)]
print("\nphi maps the tableaux onto the lattice points of GT(shape, content)")

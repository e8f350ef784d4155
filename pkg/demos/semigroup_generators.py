"""Essential generators of the semigroup of integral GT patterns.

Run: python demos/semigroup_generators.py
"""
from gtw.semigroup import essential_generators

for lam, mu in [((2, 2, 0, 0), (1,) * 4), ((3, 3, 0, 0, 0, 0), (1,) * 6), ((2, 2, 2, 0, 0, 0), (1,) * 6)]:
    rep = essential_generators(lam, mu, 4)
    print(f"shape {lam}, content {mu}")
    for d in sorted(rep.generators):
        print(f"  degree {d}: {rep.level_sizes[d]:4d} points, {len(rep.generators[d])} essential")
    print("  largest essential degree up to 4:", rep.max_essential_degree)
    if rep.generators.get(2):
        print("  a degree-2 generator:")
        print("   ", str(rep.generators[2][0]).replace("\n", "\n    "))
    print()

"""A vertex of GT(k,k,k,0,...,0; 1,...,1) whose denominator grows like 2^(3k/2).

Run: python demos/exponential_witness.py
"""
from gtw.core import denominator
from gtw.witness import WitnessSpec, build_witness, t_sequences, tiling, verify_theorem2

t1, t2 = t_sequences(4, 6)
print("k = 4 sequences:")
print("  T1:", [str(x) for x in t1])
print("  T2:", [str(x) for x in t2])

p = build_witness(4)
print("\nk = 4 witness:")
print(p)
til = tiling(p)
print(f"\n{len(til.tiles)} tiles; values:", sorted(str(t.value) for t in til.tiles))

print("\n k   n   N  denominator  bound 2^(n/2-3)  vertex  rigid")
for k in range(2, 9):
    s = WitnessSpec(k)
    r = verify_theorem2(k, essential_up_to_k=2)
    assert r["pass"] and denominator(build_witness(k)) == 2 ** s.N
    print(f"{k:2d} {s.n:3d} {s.N:3d} {r['denominator']:12d}  {2 ** ((s.n - 6) / 2):15.2f}  "
          f"{r['is_vertex']!s:>6}  {r['rigid']!s:>5}")

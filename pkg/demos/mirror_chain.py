"""Eliminating the torus coordinates of f_tor for X_{2,6}.

Each z0_j comes out as the polynomial R_b(j), while the z1_j stay genuinely
rational.  The two leftover partials are the relations of the quantum ring.
"""

from grassblow.mirror import build_chain, f_tor_class, jacobi_ideal_isomorphism, verify_theorem62

n = 6
chain = build_chain(n)
for j in range(1, n - 1):
    print(f"z0_{j} = {chain.z0[j]}")
for j in range(1, n - 1):
    print(f"z1_{j} = {chain.z1[j]}")
print("A =", chain.A)

for name, ok in verify_theorem62(n).items():
    print(f"{'ok  ' if ok else 'FAIL'} {name}")

rep = jacobi_ideal_isomorphism(n)
print("ideals equal:", rep["equal"], "| rank", rep["rank"], "|", rep["certificate"])
print("[f_tor] =", f_tor_class(n)["class"])

"""The quantum ring of X_{2,3}, the blowup of P^2 at a point.

E * E picks up three pieces: the cup product -E Hbar, a q2 term from lines
in the class ell - e, and a q1 term from the exceptional curve itself.  The
last one is checked here against the two-point invariant <E, E>_e = 1.
"""

from grassblow import cohomology as co
from grassblow.gw import two_point, two_point_operator
from grassblow.quantum import presentation, qmul

n = 3
P = presentation(n)
print("ideal:", [str(g) for g in P.reduced_generators()])
print("standard monomials:", P.to_json()["standardMonomials"])

E, Hb = co.E(2, n, "B2"), co.Hbar(n)
print("E * E       =", qmul(E, E))
print("Hbar * Hbar =", qmul(Hb, Hb))
print("E * Hbar    =", qmul(E, Hb))

print("<E, E>_e =", two_point("e", E, E))
# divisor axiom: E.e = -1, so the q1 coefficient of E * E is -T_e(E)
print("-T_e(E)  =", -two_point_operator("e", E))

"""Walkthrough: when does reducing an arrangement mod p change its combinatorics?

Run with ``python demos/01_reduction_mod_p.py``.
"""

from hyparr import arrangement as arr
from hyparr.lattice import build_lattice, characteristic_polynomial, comb_equivalent
from hyparr.primescan import k_lucky_excluded, nongood_primes, prime_report, rho0

XYZ = ["x", "y", "z"]

# Five planes through the origin in Q^3
a = arr.from_polynomial("x*y*z*(x+y)*(x+2*y+z)", XYZ)
print(a)
print("essential:", a.is_essential())

# Triples of planes meeting only at the origin
frak = arr.frak_index_set(a)
print(len(frak), "of 10 triples are independent over Q")

# Mod 2 the triple x, z, x+2y+z collapses (its determinant is -2)
print("lost mod 2:", sorted(frak - arr.frak_index_set(a, 2)))

res = comb_equivalent(a, arr.reduce(a, 2))
print("same combinatorics mod 2?", res.equivalent, "witness", res.witness, "dims Q vs F_2", res.dims)

# No two planes collapse mod any prime, so every prime is good...
print("non-good primes:", sorted(nongood_primes(a)))
# ...but 2 divides a leading coefficient of a strong basis of some triple
print("primes that are not (sigma,3)-lucky:", sorted(k_lucky_excluded(a, 3)))

# the same primes divide the lcm-period
print("rho0 =", rho0(a))

# Characteristic polynomial survives for every other prime
chi = characteristic_polynomial(a)
print("chi(t) =", chi)
for p in (3, 5, 7):
    print(f"  over F_{p}:", characteristic_polynomial(arr.reduce(a, p)))
print("  over F_2:", characteristic_polynomial(build_lattice(arr.reduce(a, 2))))

rep = prime_report(a)
print(rep.to_json())

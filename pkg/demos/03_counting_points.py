"""Counting points off the hyperplanes over finite rings.

For good lucky primes the histogram of "how many hyperplanes contain P"
over F_p^l is the coboundary polynomial at x = p.  Over Z/qZ the complement
count is a quasi-polynomial in q.
"""

import numpy as np

from hyparr import arrangement as arr
from hyparr.enumpoly import (
    coboundary,
    coboundary_from_counts,
    count_complement,
    point_histogram,
    quasi_polynomial_fits,
    tutte,
)
from hyparr.lattice import characteristic_polynomial
from hyparr.polyring import format_poly

XYZ = ["x", "y", "z"]
a = arr.from_polynomial("x*y*z*(x+y)*(x+2*y+z)", XYZ)

print("Tutte:     ", format_poly(tutte(a), ["x", "y"]))
print("coboundary:", format_poly(coboundary(a), ["x", "y"]))

chi = characteristic_polynomial(a)
for p in (3, 5, 7, 11):
    hist = point_histogram(a, p)
    print(f"p={p:2d} histogram {hist}  complement {hist[0]} = chi({p}) = {chi(p)}")

print("interpolated:", format_poly(coboundary_from_counts(a, [3, 5, 7, 11]), ["x", "y"]))

# the period example: 2 is bad, rho0 = 16
b = arr.from_polynomial("z*(4*x+z)*(2*x+y)*(6*x+y+3*z)*(8*x+2*y+5*z)", XYZ)
qs = np.arange(2, 41)
counts = np.array([count_complement(b, int(q)) for q in qs])
print(np.column_stack([qs, counts])[:8])

fits = quasi_polynomial_fits(b, 16, 5, 17, 120)
for r in (0, 1, 2, 4, 8):
    print(f"q = {r:2d} mod 16:", [str(c) for c in fits[r].coefficients], "exact" if fits[r].exact else "")
print("distinct constituents:", len({f.coefficients for f in fits.values()}))

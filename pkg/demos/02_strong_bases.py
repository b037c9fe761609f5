"""Strong Groebner bases over the integers and the primes they exclude."""

from hyparr.polyring import DEGREVLEX, LEX, format_poly, parse_poly, reduce_mod_p
from hyparr.primescan import jacobian_generators, lemma61_check
from hyparr import arrangement as arr
from hyparr.strong_gb import g_polynomial, s_polynomial, strong_groebner, verify_strong_basis

V = ["x", "y", "z"]
f, g = parse_poly("x+y", V), parse_poly("x+3*y+z", V)

basis = strong_groebner([f, g], LEX, track_cofactors=True)
for p in basis:
    print("  ", format_poly(p, V))
print("leading coefficients", basis.leading_coefficients, "-> excluded", basis.excluded_primes())

# how 2y+z was written in terms of the inputs
for gen, cof in zip(basis, basis.cofactors):
    print(format_poly(gen, V), "=", " + ".join(f"({format_poly(c, V)})*({format_poly(h, V)})"
                                             for c, h in zip(cof, (f, g)) if c))

# the two pair polynomials of x+y and 2y+z
h = parse_poly("2*y+z", V)
print("S:", format_poly(s_polynomial(f, h), V), "  G:", format_poly(g_polynomial(f, h), V))

# 2 is excluded, yet the forms stay non-proportional mod 2
print(format_poly(reduce_mod_p(f, 2), V), "|", format_poly(reduce_mod_p(g, 2), V))
print(lemma61_check(arr.build([f, g], 3, V), 2).converse_counterexamples)

# A basis with a higher-degree element
b = strong_groebner([parse_poly("2*x+y", V), parse_poly("2*x-y", V)])
print([format_poly(p, V) for p in b])

# Jacobian ideal of the five-plane arrangement, under two orders
a = arr.from_polynomial("x*y*z*(x+y)*(x+2*y+z)", V)
gens = jacobian_generators(a)
for order in (DEGREVLEX, LEX):
    jb = strong_groebner(gens, order)
    print(order, len(jb), "elements, excluded", sorted(jb.excluded_primes()),
          "verified" if not verify_strong_basis(jb, gens) else "FAILED")

# Is every prime that is lucky for the Jacobian ideal also (sigma,l)-lucky?
# Only recorded here, nothing is claimed in general.
from hyparr.checks import random_corpus
from hyparr.primescan import jacobian_lucky_excluded, k_lucky_excluded

# random Jacobian ideals get expensive quickly, keep to small planar ones
small = [b for b in random_corpus(seed=0, count=30) if b.l == 2 and b.n <= 5]
rows = []
for b in [a, arr.from_polynomial("x*y*(x+y)*(x+3*y+z)", V)] + small:
    jac = jacobian_lucky_excluded(b, DEGREVLEX)
    kl = k_lucky_excluded(b, b.l)
    rows.append((b.n, sorted(jac), sorted(kl), kl <= jac))
for r in rows:
    print("n=%d  jacobian %-40s (sigma,l) %-8s contained: %s" % r)

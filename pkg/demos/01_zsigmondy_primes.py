"""Cyclotomic values and Zsigmondy primitive parts.

A prime r is a Zsigmondy (primitive) prime for (q, n) when r divides
q**n - 1 but no earlier q**k - 1.  Such primes divide the cyclotomic value
Phi_n(q), and the primitive part Phi*_n(q) is what survives of Phi_n(q)
after stripping everything visible at lower levels.  The classical theorem
says primitive primes exist for n > 2 except the lone exception (q, n) = (2, 6).
"""

from bvl.numtheory import cyclotomic_poly_eval, divisors, zsigmondy_part

print("Cyclotomic values Phi_n(2) and the divisor identity 2^n - 1 = prod Phi_d(2):")
for n in (1, 2, 3, 6, 12):
    parts = " * ".join(f"Phi_{d}(2)={cyclotomic_poly_eval(d, 2)}" for d in divisors(n))
    print(f"  2^{n} - 1 = {2**n - 1} = {parts}")

print()
print("Primitive parts for q = 2:")
for n in range(1, 13):
    r = zsigmondy_part(2, n)
    primes = sorted(r.primitive_primes) or "none"
    print(
        f"  n = {n:2d}: Phi_n(2) = {r.phi_value:5d}, "
        f"primitive part {r.primitive_part:5d}, primitive primes: {primes}"
    )

print()
print("The (2, 6) exception in detail: 2^6 - 1 = 63 = 3^2 * 7,")
print("but 3 | 2^2 - 1 and 7 | 2^3 - 1, so nothing is primitive at level 6.")

print()
print("Larger fields behave generically, e.g. q = 9:")
for n in (2, 3, 4, 6):
    r = zsigmondy_part(9, n)
    print(f"  n = {n}: primitive part {r.primitive_part}, primes {sorted(r.primitive_primes)}")

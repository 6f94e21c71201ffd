"""
Number fields and how rational primes split in them
===================================================

A field is selected by a compact label: ``Q`` for the rationals,
``quad:d`` for a quadratic field of squarefree parameter d, and
``cyclo:m`` for a cyclotomic field of level m.  For each prime p the
package reports the triple (e, f, g): ramification index, residue
degree, and the number of primes above p.  In the abelian fields
handled here e*f*g always equals the degree.
"""

from normvar import parse_field, split_type

for label in ("Q", "quad:-1", "quad:5", "cyclo:5", "cyclo:12"):
    field = parse_field(label)
    print(f"{field.label()}: degree {field.degree}, "
          f"discriminant {field.discriminant}, conductor {field.conductor}")

# The Gaussian integers, the classical example: 2 ramifies, primes that are
# 1 mod 4 split, primes that are 3 mod 4 stay inert.
gauss = parse_field("quad:-1")
print("\np   e f g   (quad:-1)")
for p in (2, 3, 5, 7, 11, 13, 17, 19):
    s = split_type(gauss, p)
    print(f"{p:<3} {s.e} {s.f} {s.g}")

# In a cyclotomic field the residue degree of an unramified prime is just
# the multiplicative order of p modulo the level.
level5 = parse_field("cyclo:5")
print("\np   e f g   (cyclo:5)")
for p in (2, 3, 5, 7, 11, 19, 31):
    s = split_type(level5, p)
    print(f"{p:<3} {s.e} {s.f} {s.g}")

# Sanity: e*f*g == degree, always.
for p in (2, 3, 5, 7, 11, 13):
    s = split_type(level5, p)
    assert s.e * s.f * s.g == level5.degree
print("\ne*f*g == degree checks out for cyclo:5")

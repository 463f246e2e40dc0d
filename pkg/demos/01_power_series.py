# Truncated power series with exact rational coefficients.
#
# Everything in kummer_euler is built on TruncatedSeries: a series known
# through a fixed order N. Nothing is ever silently extended or cut.

from fractions import Fraction

from kummer_euler.series import TruncatedSeries, exp, int_pow, inverse, log, product_form

N = 10

# The partition function as a product: prod_k 1/(1 - t^k)
euler = product_form(lambda k: 1, N)
print("partitions      :", [int(c) for c in euler])

# Plane partitions: prod_k (1 - t^k)^(-k)
macmahon = product_form(lambda k: k, N)
print("plane partitions:", [int(c) for c in macmahon])

# Taking logs turns products into divisor sums: [t^n] log(euler) = sigma_1(n)/n
print("n * [t^n] log   :", [int(n * log(euler)[n]) for n in range(1, N + 1)])
print("n * [t^n] log   :", [int(n * log(macmahon)[n]) for n in range(1, N + 1)], "(plane)")

# exp and log are exact inverses at a fixed order
f = TruncatedSeries([0, Fraction(1, 3), -2, Fraction(5, 7)], order=3)
assert log(exp(f)) == f
print("exp(f)          :", exp(f))

# integer powers, negative ones via the series inverse
g = TruncatedSeries([1, -1], order=5)
assert int_pow(g, -1) == inverse(g)
print("(1 - t)^-3      :", [int(c) for c in int_pow(g, -3)])

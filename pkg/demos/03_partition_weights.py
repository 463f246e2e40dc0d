# The partition weights e(alpha) and the two ways of going from b to a.
#
# e((n)) = n^2, and otherwise
#     e(alpha) = - sum over distinct part sizes i of n/(n-i) * e(alpha - i).
# These weights turn a sequence b_0 = 1, b_1, ... into a_n by a weighted sum
# over partitions, and the result always matches
#     exp(sum a_n / n^2 t^n) = sum b_k t^k.

import random

from kummer_euler.partitions import enumerate_partitions, pm_series
from kummer_euler.weights import a_from_b_partition_sum, a_from_b_series, e_weight

for n in range(1, 5):
    print(n, {str(a): int(e_weight(a)) for a in enumerate_partitions(n)})

# the two routes agree on arbitrary integer sequences
rng = random.Random(1)
b = [1] + [rng.randint(-3, 3) for _ in range(10)]
series_route = a_from_b_series(b, 10)
sum_route = [a_from_b_partition_sum(b, n) for n in range(1, 11)]
print("b            :", b)
print("series route :", [str(x) for x in series_route[1:]])
assert sum_route == series_route[1:]

# with b = partition counts the weighted sum gives n * sigma_1(n)
p = pm_series(2, 10).coeffs
print("n sigma_1(n) :", [int(a_from_b_partition_sum(p, n)) for n in range(1, 11)])

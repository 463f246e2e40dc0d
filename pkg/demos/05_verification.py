# Cross-route verification, and what a failure looks like.

from fractions import Fraction

from kummer_euler.verify import verify_all
from kummer_euler.weights import e_weight

report = verify_all(10)
print(report.format_text())
assert report.passed

# break the base case e((n)) = n^2 and watch the equivalence check fail at n=1
def broken(alpha, cache=None):
    if alpha.mult[alpha.n - 1] == 1:
        return Fraction(alpha.n**2 + 1)
    return e_weight(alpha, {})

bad = verify_all(6, ["weights"], weight=broken)
print()
print("\n".join(line for line in bad.format_text().splitlines() if "FAIL" in line))

# Euler characteristics of generalized Kummer schemes K_n(A x Y).
#
# Inputs are g = dim A, r = dim Y and the integer chi(Y).

from kummer_euler.kummer import (
    KummerParams,
    closed_form_g2,
    dt_degree_zero,
    kummer_euler_table,
    kummer_euler_via_w,
)

# generalized Kummer varieties: abelian surface, Y a point
t = kummer_euler_table(KummerParams(g=2, r=0, chi_y=1, order=8))
for n, chi, orb in t.rows():
    print(f"n={n}  chi(K_n)={chi:>8}  chi/n^4={orb}")
    assert chi == closed_form_g2(n)

# abelian 3-fold: degree-zero DT invariants
print("DT_{n,0}:", [str(dt_degree_zero(n)) for n in range(1, 7)])

# an abelian surface times a curve of genus 2 (chi = -2), computed two ways
p = KummerParams(g=2, r=1, chi_y=-2, order=6)
t = kummer_euler_table(p)
print("chi(K_n), g=2, r=1, chi(Y)=-2:", t.chi[1:])
assert all(kummer_euler_via_w(p, n) == t.chi[n] for n in range(1, 7))

# solid partitions enter at g + r = 4
print("chi(K_n), g=4, Y a point:", kummer_euler_table(KummerParams(4, 0, 1, 6)).chi[1:])

"""
Logarithmic-time evaluation with digit matrices
===============================================

S_b is b-regular: with V(n) = (S(n), S(bn), ..., S(bn+b-2)) there are b x b
integer matrices mu(s) with V(bn+s) = mu(s) V(n).  Reading the digits of n
gives S_b(n) after |rep_b(n)| matrix-vector products.
"""

import time

from subwords import build_linear_representation, s_fast, s_oracle, s_recurrence, solve_coefficients
from subwords.regular import verify_regularity

b = 3
co = solve_coefficients(b)
print("a_r   :", co.a)
print("c_r,s :", co.c)

lin = build_linear_representation(b, co)
for s, m in enumerate(lin.mu):
    print(f"mu({s}) =", m)

# every relation S(b^2 n + r) = a_r S(n) + sum_s c_r,s S(bn + s) checks out
print(verify_regularity(b, 200))

# three routes, one answer
n = 10**40 + 12345
print("n has", len(str(n)), "decimal digits")
for name, f in [("matrices", s_fast), ("recurrence", s_recurrence), ("direct count", s_oracle)]:
    t0 = time.perf_counter()
    v = f(b, n)
    print(f"{name:12s} {v}  ({1e3 * (time.perf_counter() - t0):.2f} ms)")

"""
The summatory function and its (2b-1)-decomposition
===================================================

A_b(n) = S_b(0) + ... + S_b(n-1).  Its leading-digit recurrences add
multiples of powers of 2b-1, so A_b(n) comes out as a short word of
coefficients over those powers.
"""

from subwords import a_fast, a_oracle, check_multiplicativity, decompose

print([a_fast(3, n) for n in range(16)])
print("A_3(150) =", a_fast(3, 150), "=", a_oracle(3, 150))

d = decompose(3, 150)
print("coefficients over 5^3, 5^2, 5, 1:", d.d)
print("reassembled:", d.value())

# scaling n by b multiplies A by 2b-1
print(check_multiplicativity(3, 2000))
print(a_fast(3, 3 * 150), "=", 5 * a_fast(3, 150))

# a 200-digit argument is no trouble
n = 7**235 + 1
print(len(str(a_fast(7, n))), "digits in A_7(7^235 + 1)")
print(decompose(7, n).d[:6], "...")

"""
S-matrices at levels 1 and 2
============================

"""

import numpy as np

from kacjac.numeric import M2_matrix, smatrix_level1, smatrix_level2, smatrix_level2_bruteforce, verify_sine_product

# at level 1 there is one integrable weight and a(L0, L0) = 1
print([smatrix_level1(l) for l in range(1, 7)])

# at level 2 the matrix is a real involution
for l in range(1, 5):
    m = smatrix_level2(l)
    print(l, np.abs(m @ m - np.eye(l + 1)).max(), np.linalg.det(m))

# closed form against the raw Weyl-group sum
print(np.abs(smatrix_level2(3) - smatrix_level2_bruteforce(3)).max())

# the cosine matrix squares to (2l+3)/4
m2 = M2_matrix(2)
print(np.round(m2 @ m2, 12))

# product of sines
print(verify_sine_product(40))

"""
Characters and the denominator identity
=======================================

"""

import kacjac
from kacjac.theta import character_product_level1, denominator_identity_check, denominator_product_series

d = kacjac.build_root_datum(1)

# the basic character, computed as a ratio of alternating theta sums
chi = kacjac.character_series(d, kacjac.fundamental_weight(d, 0), 8)
print(chi)

# same series from the product formula
print(chi == character_product_level1(d, 8))

# the Weyl-Kac denominator as a sum and as a product
print(kacjac.denominator_series(d, 6))
print(denominator_product_series(d, 6))
print(denominator_identity_check(d, 8))

# a level-2 character of rank 2; every coefficient is a W_f-invariant polynomial in x
d2 = kacjac.build_root_datum(2)
chi2 = kacjac.character_series(d2, kacjac.level2_weight(d2, 1), 3)
for e, c in chi2.items():
    print(e, c)

# numbers only: plug in tau and z
print(kacjac.qs_eval(chi, 1j, [0.1]))

"""
Jacobians of level-2 characters and Rogers-Ramanujan
====================================================

"""

import kacjac
from kacjac.jacobian import F_offset, predicted_F
from kacjac.modular import virasoro_character

# drop the i-th level-2 character, take the Jacobian in z of the rest, divide by A_rho
d = kacjac.build_root_datum(1)
for i in range(2):
    F = kacjac.extract_F(d, i, 12)
    print(i, F_offset(d, i), F)
    print(" predicted", predicted_F(d, i, 12))

# for l = 1 the quotients are the Rogers-Ramanujan products
for i in range(2):
    print(kacjac.verify_main_theorem(d, i, 12))

# for l = 2 they are eta times minimal model characters of M(2, 7)
d2 = kacjac.build_root_datum(2)
for i in range(3):
    r = kacjac.verify_main_theorem(d2, i, 12)
    print(i, r.constant, r.ok)
    print(" ", virasoro_character(2, i, 8))

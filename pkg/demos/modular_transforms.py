"""
Modular transformations, numerically
====================================

"""

import kacjac
from kacjac.numeric import (
    verify_character_transform,
    verify_denominator_transform,
    verify_F_transform,
    verify_theta_transform,
)

taus = [1j, 0.3 + 1.2j]
d = kacjac.build_root_datum(2)

# theta functions at levels 1 and 2 under tau -> -1/tau and tau -> tau + 2
for k in (1, 2):
    print(verify_theta_transform(d, k, 20, taus))

# characters mix through the S-matrix; A_rho picks up a simple factor
print(verify_character_transform(d, 2, 20, taus))
print(verify_denominator_transform(d, 20, taus))

# the weight-1/2 forms F_r^{(M)} transform among themselves
rep = verify_F_transform(7, 20, taus)
print(rep.residual, rep.details["measured_sign"])

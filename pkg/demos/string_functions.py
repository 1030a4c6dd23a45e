"""
String functions
================

"""

import kacjac
from kacjac.modular import eta_power
from kacjac.theta import check_string_expansion

d = kacjac.build_root_datum(2)

# one string function per theta class; the keys are minimal-norm class reps
L0 = kacjac.fundamental_weight(d, 0)
strings = kacjac.string_functions(d, L0, 10)
for cls, c in strings.items():
    print(cls, c)

# at level 1 there is a single class and c * eta^l = 1
c = strings[(0, 0)]
print(c * eta_power(2, 10))

# the character is recovered as sum over classes of c_lambda * theta_lambda
for spec in ["L0", "2L0", "L1"]:
    print(spec, check_string_expansion(d, kacjac.parse_weight(d, spec), 10))

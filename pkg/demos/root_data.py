"""
Root data of the twisted algebras A_{2l}^{(2)}
===============================================

"""

import kacjac
from kacjac.weyl import enumerate_wf

# the rank-2 datum: Cartan matrix, labels and the two Coxeter numbers
d = kacjac.build_root_datum(2)
for row in d.cartan:
    print(row)
print("labels", d.labels, "colabels", d.colabels)
print("h =", d.coxeter, " h^vee =", d.dual_coxeter)

# the finite Weyl group is the signed permutation group of order 2^l l!
for l in range(1, 5):
    print(l, len(enumerate_wf(l)))

# dominant weights of level 1 and 2, with their conformal anomalies
for spec in ["L0", "2L0", "L1", "L2"]:
    w = kacjac.parse_weight(d, spec)
    print(spec, w.level, [str(x) for x in w.eps_coords], kacjac.conformal_anomaly(d, w))

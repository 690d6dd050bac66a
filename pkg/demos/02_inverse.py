"""
Inverse as a rank one update
============================

Away from S(1,1) the inverse splits into a Laplacian-like part plus a
rank one correction built from eta.
"""

import numpy as np

from sqdist import Shape, squared_distance_matrix
from sqdist import closed_forms as cf
from sqdist import linalg as la

shape = Shape([3, 1, 1])
delta = la.as_rational(squared_distance_matrix(shape))
s = cf.scalar_invariants(shape)
print("alpha =", s.alpha, " beta =", s.beta, " lambda =", s.lambda_)

e = cf.eta(shape).entries
print("eta =", [str(x) for x in e])
print("delta @ eta =", [str(x) for x in delta @ e])

lap = cf.laplacian_like(shape)
print("row sums of L-hat:", [str(sum(r)) for r in lap.l_hat])

inv = cf.delta_inverse_closed(shape)
print("closed form equals Gauss-Jordan:", bool((inv == la.inverse(delta)).all()))
print("delta @ inverse is the identity:", bool((delta @ inv == la.identity(shape.n)).all()))

###############################################################################
# Every cofactor of L is the same number.

c = la.cofactor_matrix(lap.l)
print("distinct cofactors:", {str(x) for x in c.flat}, " expected", cf.cofactor_constant(shape))

# the path S(1,1) has no such decomposition
try:
    cf.eta(Shape([1, 1]))
except ValueError as exc:
    print("S(1,1):", exc)

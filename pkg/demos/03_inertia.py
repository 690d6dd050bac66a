"""
Inertia
=======

Delta has exactly one positive eigenvalue, and -1 shows up with
multiplicity n - 1 - b.  The Laplacian-like matrix need not be
positive semidefinite.
"""

import numpy as np

from sqdist import Shape, squared_distance_matrix
from sqdist import closed_forms as cf
from sqdist import linalg as la
from sqdist.checks import laplacian_inertia

shape = Shape([4, 2, 1])
delta = squared_distance_matrix(shape)

print("inertia by congruence:", la.inertia_congruence(delta))
print("inertia closed form  :", cf.inertia_delta_closed(shape))
print("eigenvalues (float)  :", np.round(np.linalg.eigvalsh(delta.astype(float)), 4))

basis = cf.minus_one_eigenbasis(shape)
print(len(basis), "eigenvectors for -1, e.g.", basis[0])
print(delta @ basis[0])

###############################################################################
# Laplacian-like inertia, recorded rather than assumed.

for parts in ([1, 1, 1], [2, 1], [3, 3], [4, 2, 1]):
    s = Shape(parts)
    print(f"{str(s):10s} a - 2b = {cf.scalar_invariants(s).a2b!s:>5}  In(L) = {tuple(laplacian_inertia(s))}")

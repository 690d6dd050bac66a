"""
Determinants and cofactor sums
==============================

Build the squared distance matrix of a starlike block graph and compare
the closed forms against plain elimination.
"""

import numpy as np

from sqdist import Shape, squared_distance_matrix
from sqdist import closed_forms as cf
from sqdist import linalg as la

# three triangles glued at one vertex, plus a pendant edge
shape = Shape([2, 2, 2, 1])
delta = squared_distance_matrix(shape)
print(shape, "has", shape.n, "vertices")
print(delta)

# the closed form only needs the block sizes
print("det closed   :", cf.det_delta_closed(shape))
print("det Bareiss  :", la.det_bareiss(delta))
print("det float    :", round(np.linalg.det(delta.astype(float)), 6))

# cofactor sum, two routes
print("cof closed   :", cf.cof_delta_closed(shape))
print("cof reduction:", la.cof_sum_reduction(delta))
print("cof adjugate :", la.cof_sum_adjugate(delta))

###############################################################################
# The cofactor sum vanishes only for the path on three vertices.

for parts in ([1, 1], [2, 1], [1, 1, 1], [5]):
    s = Shape(parts)
    print(f"{str(s):10s} cof = {cf.cof_delta_closed(s)}")

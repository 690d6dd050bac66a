"""
Spectral radius and extremal shapes
===================================

The spectral radius is isolated exactly by bisection on a small factor
of the characteristic polynomial, so comparisons between shapes are
certified by signs.
"""

from fractions import Fraction

import numpy as np

from sqdist import Shape, compare_rho, extremal_report, spectral_radius, squared_distance_matrix
from sqdist import spectral as sp

shape = Shape([1, 1, 1])
print("reduced factor:", sp.reduced_factor(shape))
br = spectral_radius(shape, Fraction(1, 10**12))
print("rho in", br.lo, "..", br.hi)
print("4 + sqrt(19) =", 4 + 19 ** 0.5, " midpoint =", float(br.midpoint))

# moving a vertex from a big block to a small one raises rho
a = Shape([4, 1])
b = sp.balancing_move(a, 0, 1)
print(a, compare_rho(a, b).value, b)
for s in (a, b):
    print(f"  {s}: {max(np.linalg.eigvalsh(squared_distance_matrix(s).astype(float))):.6f}")

###############################################################################
# Among all shapes with n vertices and b blocks, one big block with pendant
# edges minimises rho and the balanced shape maximises it.

rep = extremal_report(10, 3)
for s, r in rep.shapes:
    print(f"  {str(s):10s} {float(r.midpoint):.6f}")
print("min:", rep.argmin_shape, " max:", rep.argmax_shape, " as expected:", rep.matches_expected)

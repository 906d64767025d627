"""Harmonic functions in three variables from a harmonic frame.

With 1 + e_2^2 + e_3^2 = 0 every real and imaginary component of a monogenic
function solves the Laplace equation.  A frame that misses the identity gives
a visibly nonzero residual.
"""

import numpy as np

from monogen import HolomorphicFn, MonogenicFunction, PDESpec, VariableFrame, characteristic_sum, check_pde_residual
from monogen import fixtures

lap = PDESpec.laplace(3)
good = fixtures.harmonic_dual3_frame()
print("1 + e2^2 + e3^2 =", characteristic_sum(lap, good))

phi = MonogenicFunction(good, [HolomorphicFn.poly([0, 0, 0, 1])], [HolomorphicFn.exp(1j), HolomorphicFn.poly([0, 1])])
for x in ([0.1, 0.2, 0.3], [1.0, -0.5, 0.25]):
    for h in (1e-1, 5e-2):
        print(f"x={x}, h={h}: Laplace residual {check_pde_residual(phi, lap, x, h).residual:.2e}")

bad = VariableFrame(good.spec, [[2j, 0, 0], [0, 1, 0]])
print("off-harmonic frame char sum:", characteristic_sum(lap, bad))
psi = MonogenicFunction(bad, [HolomorphicFn.poly([0, 0, 1])], [HolomorphicFn.const(0)] * 2)
print("residual there:", check_pde_residual(psi, lap, [0.1, 0.2, 0.3]).residual)

"""Monogenic functions from holomorphic components, two ways, plus their derivatives."""

import numpy as np

from monogen import HolomorphicFn, MonogenicFunction, check_cauchy_riemann, eval_monogenic, eval_monogenic_contour
from monogen import fixtures
from monogen.monogenic import gateaux_derivative, gateaux_quotient_error

frame = fixtures.default_frame("mixed")
F = [HolomorphicFn.exp(0.5 + 0.2j), HolomorphicFn.poly([1, 0, -0.5, 0.25j])]
G = [HolomorphicFn.poly([0, 1j]), HolomorphicFn.exp(-0.3), HolomorphicFn.const(2)]
phi = MonogenicFunction(frame, F, G)

x = np.array([0.2, 0.6, -0.4])
closed = eval_monogenic(phi, x)
contour = eval_monogenic_contour(phi, x)
print("closed form :", np.round(closed, 6))
print("contour     :", np.round(contour, 6))
print("difference  :", np.max(np.abs(closed - contour)))

rep = check_cauchy_riemann(phi, x)
print("Cauchy-Riemann residuals (h=%.1e):" % rep.h, rep.residuals)

d = gateaux_derivative(phi, 1)
for eps in (1e-2, 1e-3, 1e-4):
    print(f"difference quotient error at eps={eps:.0e}:", gateaux_quotient_error(phi, x, [1, 0.5, -0.25], eps))
print("Phi'(zeta) =", np.round(eval_monogenic(d, x), 6))

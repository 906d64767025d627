"""Build a small algebra with a nilpotent part, check it, and invert an element.

Run: python3 demos/01_algebra_and_inverse.py
"""

import numpy as np

from monogen import AlgebraSpec, invert, validate_algebra

# one idempotent I_1 (the unit) and two radical vectors with I_2 * I_2 = I_3
spec = AlgebraSpec(1, 3, {(2, 2, 3): 1})
print("valid:", validate_algebra(spec).valid)

b = spec.element([2, 1, 0.5])
inv = invert(b, spec)
print("b        =", b)
print("b^-1     =", np.round(inv, 12))
print("b * b^-1 =", np.round(spec.mul(b, inv), 12))

# the same answer by brute force: solve M(b) x = 1
dense = np.linalg.solve(spec.multiplication_matrix(b), spec.unit())
print("dense solve agrees:", np.allclose(dense, inv, atol=1e-14))

# a broken table is caught, with the first offending triple
bad = AlgebraSpec(2, 4, {(3, 3, 4): 1}, {3: 1, 4: 2})
rep = validate_algebra(bad)
print("broken table valid:", rep.valid, "first violation:", rep.violations[0].as_dict())

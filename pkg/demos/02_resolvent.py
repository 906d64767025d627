"""The resolvent (t - zeta)^-1 on a frame, and the table behind it."""

import numpy as np

from monogen import VariableFrame, q_table, resolvent
from monogen import fixtures

frame = fixtures.default_frame("prop1_chain5")
spec = frame.spec
x = np.array([0.4, -0.3, 0.8])

table = q_table(frame, x)
print("radical coordinates T_s:", {s: complex(np.round(v, 4)) for s, v in table.T.items()})
print("nonzero orders per radical index:", {s: [r for r, _ in table.orders(s)] for s in spec.radical_indices})

t = 1.5 + 0.5j
R = resolvent(t, frame, x, table=table)
check = spec.mul(t * spec.unit() - frame.zeta(x), R)
print("(t - zeta) R - 1, max abs:", np.max(np.abs(check - spec.unit())))

# a hand-checkable case: zeta = I_2 in the algebra with I_2^2 = I_3
axis = VariableFrame(fixtures.dual3(), [[0, 1, 0], [0, 0, 1]])
print("(1 - I_2)^-1 =", resolvent(1, axis, [0, 1, 0]).real, "(expected 1 + I_2 + I_3)")

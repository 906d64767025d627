"""When a characteristic polynomial has no real roots, harmonic-type frames give onto maps."""

from monogen import PDESpec, p_nonvanishing_scan, theorem4_check
from monogen import fixtures
from monogen.acceptance import seventh_example

op = seventh_example()
scan = p_nonvanishing_scan(op, [(-10, 10)] * 3, 11)
print("third-order operator on R^4:", scan.verdict, "min P =", scan.min_value, "at", scan.argmin)

wave = PDESpec(2, {(2, 0): 1, (0, 2): -1})
print("wave operator:", p_nonvanishing_scan(wave, [(-2, 2)], 11).verdict)

rep = theorem4_check(PDESpec.laplace(3), fixtures.harmonic_bicomplex_frame())
print("hypotheses hold:", rep.hypotheses_hold, "| f_u onto:", rep.surjective, "| consistent:", rep.consistent)
print(rep.p_scan.note)

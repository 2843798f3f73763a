"""The cobracket on sl_m and the co-split identity.

Run: python demos/01_sl_cosplit.py
"""

# %% Build sl_3 and its cobracket
from fractions import Fraction

from cosplit import check_anticocommutativity, check_cojacobi, classify_cosplit, delta_sl, sl_basis
from cosplit.coalgebra import composite_matrix

alg = sl_basis(3)
delta = delta_sl(3)
print("sl_3 basis:", ", ".join(alg.labels))

# %% One image, written out
e13 = alg.labels.index("E1,3")
print("delta(E1,3) =", delta.images[e13])

# %% Both coalgebra axioms hold exactly
print("anti-cocommutative:", bool(check_anticocommutativity(delta)))
print("co-Jacobi:         ", bool(check_cojacobi(delta)))

# %% The composite [,] o delta is the identity matrix
C = composite_matrix(alg, delta)
print("composite is identity:", C == type(C).identity(alg.dim))
print("verdict:", classify_cosplit(alg, delta).kind.value)

# %% Rescaling keeps the diagonal shape, so the verdict turns weak
v = classify_cosplit(alg, delta.scale(Fraction(1, 3)))
print("scaled by 1/3:", v.kind.value, "with every diagonal entry", *{str(x) for x in v.diagonal})

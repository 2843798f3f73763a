"""Restricting the sl_m cobracket to so_m and sp_m.

Each classical algebra sits in sl_m through its defining representation,
with sl_m = rho(L) + M and M the trace-orthogonal complement. Projecting
delta onto rho(L) (x) rho(L) gives a cobracket whose composite with the
bracket is a scalar c. The script prints c from the composite and from the
root-system formula, then checks that delta_res / c is co-split.

Run: python demos/03_classical_restriction.py
"""

# %%
from cosplit import classify_cosplit, delta_res, embed_classical, scalar_report

for family, l in [("B", 1), ("B", 2), ("C", 2), ("C", 3), ("D", 3)]:
    e = embed_classical(family, l)
    d = delta_res(e)
    rep = scalar_report(e, d)
    kind = classify_cosplit(e.sub, d.cobracket.scale(1 / rep.c_direct)).kind.value
    print(
        f"{family}{l} in sl_{e.size}: dim {e.dim}, complement {e.complement_dim}, "
        f"containment {d.containment}, c = {rep.c_direct} (formula {rep.c_formula}), rescaled: {kind}"
    )

# %% Closed forms: c = (m - 2) / 2m for so_m, (m + 2) / 2m for sp_m
from fractions import Fraction

for family, l in [("B", 3), ("D", 4), ("C", 3)]:
    e = embed_classical(family, l)
    m = e.size
    closed = Fraction(m - 2, 2 * m) if family in "BD" else Fraction(m + 2, 2 * m)
    print(f"{family}{l}: c = {scalar_report(e).c_direct}, closed form {closed}")

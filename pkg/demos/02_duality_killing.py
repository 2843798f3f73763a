"""The dual algebra on (sl_m)*, the pairing B and the Killing form.

Run: python demos/02_duality_killing.py
"""

# %%
from cosplit import adjoint_factorization_check, form_B, iso_B_check, killing_form, proportionality, sl_basis
from cosplit.duality import dual_algebra, dual_jacobi_holds

for m in range(2, 6):
    alg = sl_basis(m)
    ratio = proportionality(form_B(m), killing_form(alg))
    print(
        f"m={m}: dual Jacobi {dual_jacobi_holds(m)}, B iso {iso_B_check(m)}, "
        f"(,)_B / Killing = {ratio}, adjoint factorization {adjoint_factorization_check(m)}"
    )

# %% Without the transpose, B is not a homomorphism
print("untransposed B is a homomorphism:", iso_B_check(2, transpose=False))

# %% A sample dual bracket, in the dual basis
d = dual_algebra(2)
print("[f12, f21] =", {d.labels[k]: str(v) for k, v in d.bracket_basis(0, 1).items()})

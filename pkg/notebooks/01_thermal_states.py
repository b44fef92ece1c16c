# %% [markdown]
# # Thermal states of the two-qubit XXZ chain with a DM term
#
# Two anisotropic Heisenberg spins coupled by J (in-plane) and J_z, plus a
# Dzyaloshinskii-Moriya interaction along z (model "Dz") or x (model "Dx").
# At temperature T the pair sits in the Gibbs state exp(-H/T)/Z. Both models
# have a closed-form density matrix; here we compare it against a brute
# eigendecomposition and look at what the state does as T moves.

# %%
import numpy as np

from xxzdiscord import ModelParams, gibbs_oracle, hamiltonian, thermal_state
from xxzdiscord.linalg import herm_eigen, partial_trace

np.set_printoptions(precision=4, suppress=True)

p = ModelParams("Dz", J=1.0, Jz=0.2, D=1.0, T=1.0)
print(hamiltonian(p))
print("levels:", herm_eigen(hamiltonian(p)).eigenvalues)

# %% [markdown]
# The Dz Hamiltonian only mixes |01> and |10>, so the spectrum is
# J_z (twice) and -J_z +/- 2 sqrt(J^2 + D^2). The DM term shows up as a
# complex phase on the off-diagonal coupling.

# %%
rho = thermal_state(p)
print(rho)
print("max deviation from the oracle:", np.abs(rho - gibbs_oracle(hamiltonian(p), p.T)).max())

# %% [markdown]
# Each qubit on its own is maximally mixed at every temperature. All the
# structure lives in the correlations.

# %%
for model in ("Dz", "Dx"):
    for T in (0.05, 1.0, 10.0):
        r = thermal_state(ModelParams(model, 1.0, 0.2, 1.0, T))
        print(model, T, np.round(partial_trace(r, "A").real, 12).tolist())

# %% [markdown]
# Cooling down projects onto the ground state, an entangled superposition
# of |01> and |10> with a relative phase set by D/J.

# %%
for T in (1.0, 0.3, 0.1, 0.03):
    r = thermal_state(p.with_T(T))
    print(f"T={T:<5} ground-state weight {herm_eigen(r).eigenvalues[0]:.6f}")

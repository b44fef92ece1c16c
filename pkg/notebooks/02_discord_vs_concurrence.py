# %% [markdown]
# # Discord outlives entanglement
#
# Concurrence measures entanglement and drops to exactly zero at a finite
# critical temperature. Quantum discord counts every non-classical
# correlation, obtained by optimizing a projective measurement on one qubit,
# and only fades asymptotically.

# %%
import numpy as np

from xxzdiscord import ModelParams, correlation_report, critical_temperature

base = ModelParams("Dz", J=1.0, Jz=0.2, D=1.0)
print(f"{'T':>5} {'MI':>8} {'classical':>10} {'discord':>8} {'concurrence':>12}")
for T in np.round(np.linspace(0.25, 6.0, 12), 3):
    rep = correlation_report(base.with_T(T))
    print(
        f"{T:5.2f} {rep.mutual_information:8.4f} {rep.classical_correlation:10.4f}"
        f" {rep.quantum_discord:8.4f} {rep.concurrence:12.4f}"
    )

# %% [markdown]
# Bisection on the raw Wootters expression pins the temperature where
# entanglement dies. A stronger DM coupling pushes it up.

# %%
for D in (0.5, 0.7, 1.0):
    t_c = critical_temperature(base.with_D(D), 10.0)
    after = correlation_report(base.with_D(D).with_T(t_c + 1.0))
    print(f"D={D}: T_c = {t_c:.6f}, discord one unit above T_c = {after.quantum_discord:.4f}")

# %% [markdown]
# The optimizer reports the measurement that extracts the most classical
# information. For these states the measured qubit is maximally mixed, so
# the best basis is set by the correlation structure alone.

# %%
rep = correlation_report(base.with_T(1.0))
print(rep.optimal_basis, "after", rep.optimizer_evals, "objective evaluations")

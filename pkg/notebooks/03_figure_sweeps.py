# %% [markdown]
# # Figure presets
#
# Every preset is a sweep over T (60 points in [0.05, 3]) for a small
# family of curves, or a T by D surface. The tables come back as plain rows
# so any plotting tool can take over from here.

# %%
import numpy as np

from xxzdiscord.sweep import FIGURE_IDS, figure_preset, figure_table

for fig in FIGURE_IDS:
    spec = figure_preset(fig)
    print(fig, spec.model, spec.fixed, spec.axis2.name, spec.quantities[0])

# %% [markdown]
# Raising the anisotropy J_z strengthens both discord and concurrence.

# %%
columns, rows = figure_table("2a")
arr = np.array(rows)
print(columns)
for row in arr[::10]:
    print(np.round(row, 4))

# %% [markdown]
# With J = J_z the Dz and Dx models are related by a local rotation, so
# their discord curves coincide.

# %%
_, dz = figure_table("1c")
_, dx = figure_table("5a")
print("largest difference:", np.abs(np.array(dz)[:, 1:] - np.array(dx)[:, 1:]).max())

# %% [markdown]
# The D_z curves of the first preset fan out up to T near 1 and then close
# in again. At T = 3 they are still further apart than at T = 0.5, where all
# three sit just below one bit.

# %%
_, rows = figure_table("1a")
arr = np.array(rows)
for T in (0.5, 1.0, 2.0, 3.0):
    i = np.argmin(abs(arr[:, 0] - T))
    print(f"T={arr[i, 0]:.3f} spread {np.ptp(arr[i, 1:]):.4f}")

"""Raise the step until the flow stops.

For fixed feed conditions the flow passes while the step stays below the
stagnation depth h_under and is blocked above it; the sweep shows the single
switch and how the selected upstream depth and energy production approach
the blocking point.  Writes demos/output/step_height_threshold.png.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from damstep import BedStep, DamProblem, NoFlow, State, solve_dam, stagnation_depth

h_l, u_l, g = 1.0, 1.0, 9.81
h_under = stagnation_depth(h_l, u_l, g)
print(f"stagnation depth h_under = {h_under:.6f}: steps above this block the flow")

b1s = np.linspace(0.05, 1.6, 120)
h0s, energies = [], []
for b1 in b1s:
    result = solve_dam(DamProblem(State(h_l, u_l), BedStep(0.0, float(b1), g)))
    if isinstance(result, NoFlow):
        h0s.append(np.nan)
        energies.append(np.nan)
    else:
        h0s.append(result.h0)
        energies.append(result.E_value)

first_blocked = b1s[int(np.flatnonzero(np.isnan(h0s))[0])]
print(f"first blocked step height in the sweep: {first_blocked:.4f}")

fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(8, 7), sharex=True)
ax1.plot(b1s, h0s, "C0")
ax1.axvline(h_under, color="C3", ls="--", label="h_under")
ax1.set_ylabel("selected upstream depth h0 [m]")
ax1.legend()
ax2.plot(b1s, energies, "C1")
ax2.axvline(h_under, color="C3", ls="--")
ax2.set_ylabel("energy production E")
ax2.set_xlabel("step height b1 - b0 [m]")
fig.suptitle("Flow over the step stops once the step reaches the stagnation depth")

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
fig.savefig(out / "step_height_threshold.png", dpi=130, bbox_inches="tight")
print(f"wrote {out / 'step_height_threshold.png'}")

"""Energy-production landscape over the feasible interval for a tall step.

With b1 = 0.8 the surface-drop condition fails on the lower part of the
interval, so the critical-outflow choice is only admissible above the
threshold depth while the saturated choice h1 = h0 - [b] opens a second
window below it.  Both candidate minima are computed; the critical-outflow
one wins.  Writes demos/output/energy_landscape.png.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from damstep import Branch, BedStep, DamProblem, State, solve_dam, total_energy_production

problem = DamProblem(State(1.0, 1.0), BedStep(0.0, 0.8, 9.81))
sol = solve_dam(problem)
h_hat = sol.interval.h_hat
print(f"interval [{sol.interval.h_tilde:.6f}, {sol.interval.h_under:.6f}], threshold {h_hat:.6f}")
print(f"M1 = {sol.m1:.6f}, M2 = {sol.m2:.6f}  ->  winner {sol.branch}")

hs = np.linspace(sol.interval.h_tilde, sol.interval.h_under, 800)
e_cube = np.array([total_energy_production(float(h), Branch.CUBE_ROOT, problem) for h in hs])
e_sat = np.full_like(hs, np.nan)
for i, h in enumerate(hs):
    if h <= h_hat and float(h) - 0.8 > 0:
        e_sat[i] = total_energy_production(float(h), Branch.ENTROPY_SATURATED, problem)

fig, ax = plt.subplots(figsize=(8, 5))
admissible = hs >= h_hat
ax.plot(hs[admissible], e_cube[admissible], "C0", label="critical outflow (admissible)")
ax.plot(hs[~admissible], e_cube[~admissible], "C0", ls=":", alpha=0.5, label="critical outflow (drop condition fails)")
ax.plot(hs, e_sat, "C1", label="saturated drop h1 = h0 - [b]")
ax.axvline(h_hat, color="0.6", lw=0.8)
ax.plot([sol.h0], [sol.E_value], "k*", ms=12, label=f"selected minimum ({sol.branch})")
ax.set_xlabel("upstream depth h0 [m]")
ax.set_ylabel("energy production E(h0)")
ax.set_title("Two candidate downstream choices, one admissible minimum")
ax.legend()

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
fig.savefig(out / "energy_landscape.png", dpi=130, bbox_inches="tight")
print(f"wrote {out / 'energy_landscape.png'}")

"""Plot the free surface and velocity of the reference solution at a few
times.  The backward shock steepens the surface on the left, the level drops
across the step, and the fan spreads toward the advancing dry front.

Writes demos/output/wave_profiles.png.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from damstep import BedStep, DamProblem, State, sample, solve_dam

problem = DamProblem(State(1.0, 1.0), BedStep(0.0, 0.2, 9.81))
sol = solve_dam(problem)

xs = np.linspace(-6.0, 8.0, 1500)
times = [0.5, 1.0, 1.5]

fig, (ax_h, ax_u) = plt.subplots(2, 1, figsize=(9, 7), sharex=True)
bed = np.where(xs < 0, 0.0, 0.2)
ax_h.fill_between(xs, 0.0, bed, color="0.75", label="bed")

for t in times:
    points = [sample(sol, float(x), t) for x in xs]
    surface = np.array([p.h + p.b for p in points])
    velocity = np.array([p.u for p in points])
    ax_h.plot(xs, surface, label=f"t = {t}")
    ax_u.plot(xs, velocity, label=f"t = {t}")

ax_h.set_ylabel("free surface h + b [m]")
ax_h.legend(loc="upper right")
ax_u.set_ylabel("velocity u [m/s]")
ax_u.set_xlabel("x [m]")
ax_u.legend(loc="upper left")
fig.suptitle("Dam break over a 0.2 m step: shock, standing strip, fan, dry front")

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
fig.savefig(out / "wave_profiles.png", dpi=130, bbox_inches="tight")
print(f"front positions at t=1: shock {sol.c1:.3f}, dry edge {sol.u_m:.3f}")
print(f"wrote {out / 'wave_profiles.png'}")

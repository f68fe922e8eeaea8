"""Walk through the reference dam break: water arriving at a step of height
0.2 m with h_l = 1 m, u_l = 1 m/s.

Prints the feasible depth interval, the selected upstream/downstream states,
and the resulting wave fan, then double-checks the minimum against the
brute-force grid referee.
"""

from damstep import (
    BedStep,
    DamProblem,
    State,
    check_solution,
    grid_min_E,
    region_speeds,
    solve_dam,
)

problem = DamProblem(State(h=1.0, u=1.0), BedStep(b0=0.0, b1=0.2, g=9.81))
sol = solve_dam(problem)

print("== reference dam break ==")
print(f"feasible upstream depths: [{sol.interval.h_tilde:.6f}, {sol.interval.h_under:.6f}]")
if sol.interval.h_hat is None:
    print("surface-drop condition holds on the whole interval (no threshold)")
else:
    print(f"surface-drop threshold: {sol.interval.h_hat:.6f}")

print(f"\nselected branch: {sol.branch} (E = {sol.E_value:.6f})")
print(f"upstream of the step : h0 = {sol.h0:.6f}, u0 = {sol.u0:.6f}")
print(f"downstream of the step: h1 = {sol.conn.right.h:.6f}, u1 = {sol.conn.right.u:.6f}")
print(f"strip depth chi = {sol.conn.chi:.6f}")

c1, foot, head = region_speeds(sol)
print("\nwave pattern (speeds):")
print(f"  backward shock   c1   = {c1:.6f}")
print(f"  standing strip   0")
print(f"  fan foot         {foot:.6f}")
print(f"  dry front        u_m  = {head:.6f} (single-sqrt variant {sol.u_m_alt:.6f})")

referee = grid_min_E(problem, 10_000)
print(f"\ngrid referee (10^4 points): h0 = {referee[0]:.6f}, E = {referee[1]:.6f}, {referee[2]}")
print(f"solver agrees within one cell: {abs(sol.h0 - referee[0]):.2e}")

report = check_solution(sol)
print(f"\nresidual report: ok = {report.ok}")
print(f"  mass flux defect       {report.mass_flux:.2e}")
print(f"  momentum+source defect {report.momentum_source:.2e}")
print(f"  shock jump defects     {report.rankine_hugoniot[0]:.2e}, {report.rankine_hugoniot[1]:.2e}")
print(f"  downstream Froude      {report.froude_right:.12f}")

"""
Searching over measurement schedules
====================================

The default schedule is only one choice.  Here the five preset schedules are
compared, then a grid-plus-simplex search looks for larger violations.
"""
from macroreal import Spin, evaluate, optimize_schedule, preset_schedules

spin = Spin.from_j(3)
for delta in (0.0, 0.55):
    print(f"j=3, delta={delta}")
    for name, sched in preset_schedules().items():
        r = evaluate(spin, sched, delta)
        print(f"  {name:>22}: K_LGI={r.k_lgi:+.3f}  K_WLGI={r.k_wlgi:+.3f}  "
              f"|K_NSIT|={r.k_nsit_magnitude:.3f}")

###############################################################################
# The search probes a 6x6x6 grid through the default schedule, then refines.
for objective in ("k_wlgi", "k_nsit_magnitude", "k_lgi"):
    res = optimize_schedule(spin, 0.55, objective, budget=500)
    angles = ", ".join(f"{a:.3f}" for a in res.schedule.as_tuple())
    print(f"best {objective} = {res.value:.4f} at ({angles}); "
          f"converged={res.converged} after {res.evaluations} evaluations")

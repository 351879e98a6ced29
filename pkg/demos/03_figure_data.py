"""
Witness magnitudes versus coarsening width
==========================================

Sweeps ``delta`` for several half-integer and integer spins and writes one CSV
per figure.  If matplotlib is installed the curves are also drawn.  At fixed
spin the violations shrink as ``delta`` grows; at fixed ``delta`` they grow
with the spin.
"""
import sys
from pathlib import Path

import numpy as np

from macroreal import Spin, sweep_grid
from macroreal.cli import serialize

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figure_data")
out.mkdir(exist_ok=True)

deltas = np.round(np.linspace(0.0, 1.0, 21), 3)
figures = {
    "half_integer": [Spin(tj) for tj in (3, 9, 15)],
    "integer": [Spin(tj) for tj in (6, 12, 18, 24)],
}

rows = {}
for name, spins in figures.items():
    rows[name] = sweep_grid(spins, deltas, workers=4)
    path = out / f"{name}.csv"
    path.write_bytes(serialize(rows[name], "csv"))
    print("wrote", path)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)

fig, axes = plt.subplots(2, 2, figsize=(9, 7), sharex=True)
for col, name in enumerate(figures):
    for tj in sorted({r.twice_j for r in rows[name]}):
        sel = [r for r in rows[name] if r.twice_j == tj]
        label = f"j={tj // 2}" if tj % 2 == 0 else f"j={tj}/2"
        axes[0, col].plot([r.delta for r in sel], [r.k_wlgi for r in sel], label=label)
        axes[1, col].plot([r.delta for r in sel], [r.k_nsit_magnitude for r in sel], label=label)
    axes[0, col].set_title(name.replace("_", "-") + " spins")
    axes[1, col].set_xlabel("delta (rad)")
    axes[0, col].legend()
axes[0, 0].set_ylabel("K_WLGI")
axes[1, 0].set_ylabel("|K_NSIT|")
fig.tight_layout()
fig.savefig(out / "witnesses_vs_delta.png", dpi=120)
print("wrote", out / "witnesses_vs_delta.png")
